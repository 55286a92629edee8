#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hochkit/algebra.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

/// A k-linear map A^(x n) -> M (or (A/k1)^(x n) -> M when normalized), stored as
/// an m x D^n matrix whose column t is the value on the t-th basis tensor
/// (row-major, last factor fastest; D = d or d - 1).
struct Cochain {
    long degree = 0;
    bool normalized = false;
    Matrix values;

    /// Column vector of length m * D^n, entry (p, t) at index p * D^n + t.
    [[nodiscard]] Matrix vectorized() const;
    static Cochain from_vector(long degree, bool normalized, std::size_t m, const Matrix& v);
};

struct CohomologyReport {
    long degree = 0;
    bool normalized = false;
    KModuleInvariants invariants;
    /// One cocycle per generator: free generators first, then torsion.
    std::vector<Cochain> representatives;
};

/// Number of basis tensors of degree n: d^n, or (d-1)^n when normalized.
[[nodiscard]] std::size_t cochain_width(const FiniteAlgebra& a, long n, bool normalized);

/// b^n : C^n -> C^{n+1} with (b f)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(..a_i a_{i+1}..)
/// + (-1)^{n+1} f(a_1..a_n) a_{n+1}, on vectorized cochains.
[[nodiscard]] Matrix coboundary_matrix(const Bimodule& m, long n, bool normalized = false);
/// b^n applied to the columns of `cochains` without forming the matrix.
[[nodiscard]] Matrix apply_coboundary(const Bimodule& m, long n, bool normalized, const Matrix& cochains);

/// HH^n(A, M) = ker b^n / im b^{n-1}. Without representatives, a complex above
/// the size guard is split by weight (see hochschild_cohomology_by_weight).
[[nodiscard]] CohomologyReport hochschild_cohomology(const Bimodule& m, long n, bool normalized = false,
                                                     bool with_representatives = true);

/// Degrees in Z^rank for the basis vectors of A and M making every structure
/// constant, action entry and the unit homogeneous; the finest such grading.
struct DiagonalGrading {
    std::size_t rank = 0;
    std::vector<std::vector<long>> algebra;
    std::vector<std::vector<long>> module;
};

[[nodiscard]] DiagonalGrading diagonal_grading(const Bimodule& m);

/// HH^n(A, M) as the direct sum of its weight pieces under diagonal_grading. Only
/// the individual blocks are subject to the size guard.
[[nodiscard]] KModuleInvariants hochschild_cohomology_by_weight(const Bimodule& m, long n, bool normalized = false);

/// Columns: basis of {x in M : a x = x a for all a}.
[[nodiscard]] Matrix center(const Bimodule& m);

/// Columns: basis of Der_k(A, M), each an m x d map vectorized row-major.
[[nodiscard]] Matrix derivations(const Bimodule& m);
/// Columns: the inner derivations a -> a x - x a for each basis vector x of M.
[[nodiscard]] Matrix inner_derivations(const Bimodule& m);
/// Der / Inn.
[[nodiscard]] CohomologyReport hh1_report(const Bimodule& m);

/// First basis pair (i, j) with D(e_i e_j) != e_i D(e_j) + D(e_i) e_j.
[[nodiscard]] std::optional<std::array<std::size_t, 2>> derivation_witness(const Bimodule& m, const Matrix& d_map);
[[nodiscard]] bool is_derivation(const Bimodule& m, const Matrix& d_map);

/// Boundary C_n -> C_{n-1} on M (x) A^(x n), index q * d^n + t.
[[nodiscard]] Matrix hochschild_boundary_matrix(const Bimodule& m, long n);
/// HH_n(A, M) = ker b_n / im b_{n+1}.
[[nodiscard]] KModuleInvariants hochschild_homology(const Bimodule& m, long n);

/// Ext^n relative to k-split sequences, as HH^n(A, Hom_k(m, n)).
[[nodiscard]] KModuleInvariants relative_ext(const LeftModule& m, const LeftModule& n, long degree,
                                             bool normalized = false);
/// The same groups from the relative bar resolution of m:
/// Hom_k(A^(x n) (x) m, n) with the one-sided bar coboundary.
[[nodiscard]] KModuleInvariants relative_ext_via_bar(const LeftModule& m, const LeftModule& n, long degree);

}  // namespace hochkit
