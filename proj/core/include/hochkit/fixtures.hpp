#pragma once

#include <string>
#include <vector>

#include "hochkit/algebra.hpp"

namespace hochkit::fixtures {

/// k as a rank-one algebra.
[[nodiscard]] FiniteAlgebra base_ring(const ScalarRing& k);
/// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
[[nodiscard]] FiniteAlgebra truncated_polynomial(const ScalarRing& k, std::size_t n);
/// k[x]/(x^2).
[[nodiscard]] FiniteAlgebra dual_numbers(const ScalarRing& k);
/// k x k with the idempotent basis (1,0), (0,1); the unit is not a basis vector.
[[nodiscard]] FiniteAlgebra product_ring(const ScalarRing& k);
/// 2x2 matrices, basis E11, E12, E21, E22.
[[nodiscard]] FiniteAlgebra matrix_algebra(const ScalarRing& k);
/// Upper triangular 2x2 matrices, basis E11, E12, E22.
[[nodiscard]] FiniteAlgebra upper_triangular(const ScalarRing& k);
/// Free algebra on two letters modulo words of length 3.
[[nodiscard]] FiniteAlgebra truncated_free(const ScalarRing& k);

/// k as a module over a k-algebra with augmentation sending every
/// non-unit basis vector of a unital basis to zero.
[[nodiscard]] LeftModule trivial_module(const FiniteAlgebra& a);

struct NamedAlgebra {
    std::string name;
    FiniteAlgebra algebra;
};

/// The bundled corpus: scalar_ring (Q), scalar_f2, scalar_z, dual_numbers_{q,f2,Z},
/// zxz, m2_q, upper_triangular_q, free2_trunc2_q, cubic_z.
[[nodiscard]] std::vector<NamedAlgebra> corpus();
/// Looks up a corpus entry; throws ValidationError for unknown names.
[[nodiscard]] FiniteAlgebra by_name(const std::string& name);

}  // namespace hochkit::fixtures
