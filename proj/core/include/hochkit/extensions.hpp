#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hochkit/algebra.hpp"

namespace hochkit {

/// A 2-cochain is an m x d^2 matrix; column i * d + j holds B(e_i, e_j).

/// First basis triple (i, j, l) where
/// e_i B(e_j, e_l) - B(e_i e_j, e_l) + B(e_i, e_j e_l) - B(e_i, e_j) e_l != 0.
[[nodiscard]] std::optional<std::array<std::size_t, 3>> two_cocycle_witness(const Bimodule& m, const Matrix& b);
[[nodiscard]] bool is_two_cocycle(const Bimodule& m, const Matrix& b);

/// Multiplication table of A + M with (a, x)(a', x') = (aa', a x' + x a' + B(a, a')),
/// basis: A's basis then M's. The unit (u, x0) is solved for; when no solution
/// exists x0 = 0. No validation is performed.
[[nodiscard]] AlgebraTable crossed_product_table(const Bimodule& m, const Matrix& b);
/// Validated crossed product; a non-cocycle is reported with the failing triple.
[[nodiscard]] FiniteAlgebra crossed_product(const Bimodule& m, const Matrix& b);

/// A k-split square-zero extension 0 -> M -> E -> A -> 0 with a chosen k-section.
struct ExtensionPresentation {
    FiniteAlgebra total;
    Bimodule module;
    /// d x rank(E)
    Matrix projection;
    /// rank(E) x m
    Matrix inclusion;
    /// rank(E) x d
    Matrix section;
};

/// Checks exactness, that projection is an algebra map, that the image of
/// inclusion is a square-zero ideal inducing the given bimodule structure, and
/// projection * section = id. Throws ValidationError naming the failed check.
void validate_extension(const ExtensionPresentation& e);

/// The crossed product by b with its canonical section a -> (a, 0).
[[nodiscard]] ExtensionPresentation crossed_product_extension(const Bimodule& m, const Matrix& b);
/// b = 0.
[[nodiscard]] ExtensionPresentation trivial_extension(const Bimodule& m);

/// B_s(a, a') = s(a) s(a') - s(aa'), pulled back along the inclusion.
[[nodiscard]] Matrix extension_class_from_section(const ExtensionPresentation& e);

/// zeta (m x d) with b^1 zeta = b1 - b2, if one exists over the ring. A returned
/// zeta has been checked to give an algebra isomorphism (a, x) -> (a, x + zeta(a))
/// between the two crossed products.
[[nodiscard]] std::optional<Matrix> cocycles_cohomologous(const Bimodule& m, const Matrix& b1, const Matrix& b2);

/// Matrix of (a, x) -> (a, x + zeta(a)) on A + M.
[[nodiscard]] Matrix equivalence_map(const Bimodule& m, const Matrix& zeta);

/// A multiplicative section s' = s - i zeta when the extension class vanishes.
[[nodiscard]] std::optional<Matrix> lift_exists(const ExtensionPresentation& e);
/// s(e_i e_j) = s(e_i) s(e_j) for all basis pairs.
[[nodiscard]] bool is_multiplicative(const ExtensionPresentation& e, const Matrix& section);

/// Largest cochain space enumerate_extension_classes accepts: p^(m d^2) <= 2^20.
inline constexpr std::size_t kEnumerationLimit = std::size_t(1) << 20;

/// One lexicographically least 2-cocycle per cohomology class, sorted.
/// Requires a prime field and p^(m d^2) <= kEnumerationLimit.
[[nodiscard]] std::vector<Matrix> enumerate_extension_classes(const Bimodule& m);

}  // namespace hochkit
