#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hochkit/matrix.hpp"

namespace hochkit {

/// Isomorphism type of a finitely generated k-module: k^free_rank plus
/// cyclic torsion k/t_1 + k/t_2 + ... with t_1 | t_2 | ... (only over Z).
struct KModuleInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    [[nodiscard]] bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
    /// "Z^2 + Z/2", "0", "F2^3", ...
    [[nodiscard]] std::string describe(const ScalarRing& ring) const;

    friend bool operator==(const KModuleInvariants&, const KModuleInvariants&) = default;
};

/// U * M * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... .
struct SmithForm {
    Matrix u;
    Matrix d;
    Matrix v;
    Matrix u_inverse;
    std::size_t rank = 0;
};

/// Invariants of span(Z) / span(B) together with generating representatives.
struct Subquotient {
    KModuleInvariants invariants;
    /// Columns generate the quotient: free generators first, then torsion
    /// generators in increasing invariant-factor order.
    Matrix generators;
};

[[nodiscard]] std::size_t rank(const Matrix& m);

/// Columns form a basis of ker(m). Over Z the basis spans the full (saturated)
/// kernel lattice. The basis is canonical: reduced echelon over a field,
/// Hermite normal form over Z.
[[nodiscard]] Matrix kernel_basis(const Matrix& m);

/// Columns form a canonical basis of the column span (column lattice over Z).
[[nodiscard]] Matrix image_basis(const Matrix& m);

/// Requires ring = Z.
[[nodiscard]] SmithForm smith_normal_form(const Matrix& m);

/// Solves m * x = rhs column by column; nullopt if some column has no
/// solution over the ring (integral solutions over Z).
[[nodiscard]] std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Requires every column of b to lie in the span of z; throws ValidationError
/// naming the first offending column otherwise.
[[nodiscard]] Subquotient subquotient(const Matrix& z, const Matrix& b);
[[nodiscard]] KModuleInvariants subquotient_invariants(const Matrix& z, const Matrix& b);

/// Invariants of the direct sum of the given modules (torsion re-normalized).
[[nodiscard]] KModuleInvariants direct_sum(const ScalarRing& ring, const std::vector<KModuleInvariants>& parts);

/// Invariants of k^rows / span(m).
[[nodiscard]] KModuleInvariants cokernel_invariants(const Matrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
[[nodiscard]] Scalar determinant(const Matrix& m);

}  // namespace hochkit
