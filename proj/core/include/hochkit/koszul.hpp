#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hochkit/algebra.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

[[nodiscard]] std::size_t binomial(std::size_t n, std::size_t k);

/// The C(d, n) subsets {i_1 < ... < i_n} of {0, ..., d-1} in lexicographic order.
struct ExteriorBasis {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> subsets;

    static ExteriorBasis make(std::size_t d, std::size_t n);
    [[nodiscard]] std::size_t size() const noexcept { return subsets.size(); }
    /// Position of a sorted subset; throws if absent.
    [[nodiscard]] std::size_t index_of(const std::vector<std::size_t>& subset) const;
};

/// Entry of d_n : K_n -> K_{n-1}: sign * x_variable at (row, col).
struct KoszulTerm {
    std::size_t row = 0;
    std::size_t col = 0;
    int sign = 1;
    std::size_t variable = 0;
};

/// e_{i_1} ^ ... ^ e_{i_n} -> sum_j (-1)^(j+1) x_{i_j} e_{i_1} ^ .. (omit i_j) .. ^ e_{i_n}.
/// Requires 1 <= n <= d.
[[nodiscard]] std::vector<KoszulTerm> koszul_pattern(std::size_t d, std::size_t n);

/// d_n of K(x_1..x_d) (x) M over a commutative algebra, as a matrix over k.
/// K_n (x) M = M^C(d,n), block s holding the subset with index s. Each x_i is a
/// d x 1 element of the algebra.
[[nodiscard]] Matrix koszul_differential(const LeftModule& m, const std::vector<Matrix>& sequence, std::size_t n);

/// Quotient of a free k-module with A-action by an A-stable submodule; over Z
/// this carries torsion such as Z/2.
class QuotientModule {
   public:
    /// Throws ValidationError when span(relations) is not A-stable.
    static QuotientModule create(LeftModule ambient, Matrix relations);
    static QuotientModule free(LeftModule ambient);

    [[nodiscard]] const LeftModule& ambient() const noexcept { return ambient_; }
    /// Columns span the submodule.
    [[nodiscard]] const Matrix& relations() const noexcept { return relations_; }
    [[nodiscard]] KModuleInvariants invariants() const;
    /// M / x M.
    [[nodiscard]] QuotientModule quotient_by(const Matrix& x) const;

   private:
    QuotientModule(LeftModule a, Matrix r) : ambient_(std::move(a)), relations_(std::move(r)) {}
    LeftModule ambient_;
    Matrix relations_;
};

struct RegularityVerdict {
    bool regular = false;
    bool injective = false;
    bool surjective = false;
    KModuleInvariants kernel;
    KModuleInvariants cokernel;
};

/// Multiplication by x on M: regular iff injective and not surjective.
[[nodiscard]] RegularityVerdict regular_element_check(const Matrix& x, const QuotientModule& m);

struct SequenceVerdict {
    bool regular = true;
    /// 1-based index of the first element failing on M / (x_1..x_{i-1}) M.
    std::optional<std::size_t> failing_index;
    std::vector<RegularityVerdict> steps;
};

[[nodiscard]] SequenceVerdict regular_sequence_check(const std::vector<Matrix>& sequence, const QuotientModule& m);

/// Tor_i for i = 0..d (tor[i]) and the largest i with Tor_i != 0.
struct TorReport {
    std::vector<KModuleInvariants> tor;
    std::optional<std::size_t> flat_dimension;
};

/// H_i(K(x) (x)_A M), i.e. Tor^A_i(A/(x), M), for a sequence regular on A.
/// Throws ValidationError("regular_sequence") otherwise.
[[nodiscard]] TorReport finite_koszul_tor(const std::vector<Matrix>& sequence, const QuotientModule& m);

/// Exponent vectors of total degree e in v variables, in decreasing degrevlex order.
[[nodiscard]] std::vector<std::vector<std::size_t>> monomials(std::size_t v, std::size_t e);

/// The graded pieces k[x_1..x_v]_e for e <= cap.
struct GradedPolyModule {
    std::size_t variables = 0;
    ScalarRing ring = ScalarRing::rationals();
    std::size_t cap = 0;
    std::vector<std::vector<std::vector<std::size_t>>> basis;

    static GradedPolyModule create(std::size_t v, ScalarRing ring, std::size_t cap);
    [[nodiscard]] std::size_t dimension(std::size_t e) const { return e <= cap ? basis[e].size() : 0; }
    /// Matrix of multiplication by x_i from degree e to degree e + 1 (requires e < cap).
    [[nodiscard]] Matrix multiplication(std::size_t i, std::size_t e) const;
};

struct GradedTorReport {
    std::size_t variables = 0;
    std::size_t cap = 0;
    /// by_degree[i][e] = Tor_i(k, k) in internal degree e, i = 0..v+1.
    std::vector<std::vector<KModuleInvariants>> by_degree;
    /// Direct sums over internal degrees <= cap.
    std::vector<KModuleInvariants> tor;
    /// H_i(K(x_1..x_v)) = 0 for i > 0 and H_0 = k, in every degree <= cap.
    bool resolution_exact = false;
    std::optional<std::size_t> flat_dimension;
};

/// Tor over k[x_1..x_v] of the residue module k with itself through the
/// Koszul resolution, degreewise up to the cap. Requires cap >= v.
[[nodiscard]] GradedTorReport graded_koszul_tor(std::size_t v, const ScalarRing& ring, std::size_t cap);

/// Global dimension of the supported base rings: 0 for fields, 1 for Z.
[[nodiscard]] long global_dimension(const ScalarRing& ring);

/// fd - D(k) - fd_k(A) <= HCdim(A).
struct DimensionBound {
    long flat_dimension = 0;
    long base_dimension = 0;
    long base_flat_dimension = 0;
    long lower = 0;
    bool not_quasi_free = false;
    std::string statement;
};

[[nodiscard]] DimensionBound dimension_bound(long flat_dimension, long base_dimension, long base_flat_dimension = 0);

}  // namespace hochkit
