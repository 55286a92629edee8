#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "hochkit/algebra.hpp"

namespace hochkit {

/// Sparse column: (row, value) pairs with nonzero values, rows increasing.
using SparseColumn = std::vector<std::pair<std::size_t, Scalar>>;

/// Rank of the bar chain module at level n >= -1: d^(n+2), or d (d-1)^n d when
/// normalized (level -1 is A itself).
[[nodiscard]] std::size_t bar_rank(const FiniteAlgebra& a, long n, bool normalized = false);

/// b'_n : level n -> level n-1, the alternating sum of adjacent products.
/// b'_0 is the multiplication map. Cached per (algebra, n, normalized).
[[nodiscard]] std::shared_ptr<const Matrix> bar_differential(const FiniteAlgebra& a, long n, bool normalized = false);
/// Requires a unital basis (e_0 = 1).
[[nodiscard]] std::shared_ptr<const Matrix> normalized_bar_differential(const FiniteAlgebra& a, long n);
/// Column `col` of b'_n without materializing the matrix.
[[nodiscard]] SparseColumn bar_differential_column(const FiniteAlgebra& a, long n, bool normalized, std::size_t col);

/// s_n : level n -> level n+1, a_0 (x) ... -> 1 (x) a_0 (x) ... (normalized:
/// the class of a_0 in A/k1). Satisfies b'_{n+1} s_n + s_{n-1} b'_n = id.
[[nodiscard]] std::shared_ptr<const Matrix> contracting_homotopy(const FiniteAlgebra& a, long n,
                                                                 bool normalized = false);
/// Column `col` of s_n without materializing the matrix.
[[nodiscard]] SparseColumn contracting_homotopy_column(const FiniteAlgebra& a, long n, bool normalized, std::size_t col);

/// Level n with the outer action: a . (a_0 (x) ... (x) a_{n+1}) . b = a a_0 (x) ... (x) a_{n+1} b.
[[nodiscard]] Bimodule bar_chain_bimodule(const FiniteAlgebra& a, long n, bool normalized = false);

/// e_i x (right = false) or x e_i (right = true) on every column of x, a matrix
/// of level-n vectors; the same as multiplying by bar_chain_bimodule actions.
[[nodiscard]] Matrix bar_act(const FiniteAlgebra& a, long n, bool normalized, std::size_t i, bool right,
                             const Matrix& x);

/// Number of free A^e-generators 1 (x) t (x) 1 of level n (n >= 0): d^n or (d-1)^n.
[[nodiscard]] std::size_t bar_generators(const FiniteAlgebra& a, long n, bool normalized = false);
/// Level-n vector of the generator 1 (x) t (x) 1.
[[nodiscard]] Matrix bar_generator(const FiniteAlgebra& a, long n, bool normalized, std::size_t t);
/// The A^e-linear map from level n to a bimodule of level-`target` vectors with
/// 1 (x) t (x) 1 -> values.column(t); result has one column per level-n basis tensor.
[[nodiscard]] Matrix induced_map(const FiniteAlgebra& a, long n, long target, bool normalized, const Matrix& values);

/// Omega^n = ker(b'_{n-1}) inside level n-1, with the restricted bimodule
/// structure. Omega^0 = A.
struct SyzygyModule {
    long level = 0;
    bool normalized = false;
    /// Columns: basis of the kernel in level n-1 coordinates (saturated over Z).
    Matrix basis;
    Bimodule bimodule;
};

[[nodiscard]] SyzygyModule syzygy(const FiniteAlgebra& a, long n, bool normalized = false);

/// Coordinates of an element of level n-1 lying in Omega^n; throws if not in it.
[[nodiscard]] Matrix syzygy_coordinates(const SyzygyModule& omega, const Matrix& element);

/// d(a) = 1 (x) a - a (x) 1 as a rank(Omega^1) x d matrix in the coordinates of syzygy(a, 1).
[[nodiscard]] Matrix universal_derivation(const FiniteAlgebra& a);

/// The bimodule map f : Omega^1 -> M with f(sum a_i (x) b_i) = sum a_i D(b_i),
/// as an m x rank(Omega^1) matrix. d_map is m x d (column i = D(e_i)).
/// Throws ValidationError when D is not a derivation.
[[nodiscard]] Matrix derivation_factorization(const Bimodule& m, const Matrix& d_map);

/// Drops all cached differentials and homotopies.
void clear_bar_cache();

}  // namespace hochkit
