#include <gtest/gtest.h>

#include "hochkit/bar_complex.hpp"
#include "hochkit/error.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/linalg.hpp"
#include "support/oracles.hpp"

using namespace hochkit;

namespace {

const ScalarRing Q = ScalarRing::rationals();
const ScalarRing Z = ScalarRing::integers();

Matrix unit_vector(const ScalarRing& k, std::size_t n, std::size_t i) {
    Matrix v(k, n, 1);
    v.set(i, 0, 1);
    return v;
}

Matrix dense(const SparseColumn& col, const ScalarRing& k, std::size_t rows) {
    Matrix v(k, rows, 1);
    for (const auto& [r, x] : col) v.set(r, 0, x);
    return v;
}

}  // namespace

TEST(BarDifferential, BaseFieldAlternates) {
    const FiniteAlgebra k = fixtures::base_ring(Q);
    for (long n = 0; n <= 5; ++n) {
        const Matrix& b = *bar_differential(k, n);
        ASSERT_EQ(b.rows(), 1u);
        ASSERT_EQ(b.cols(), 1u);
        EXPECT_EQ(b(0, 0), n % 2 == 0 ? 1 : 0) << "n = " << n;
    }
}

TEST(BarDifferential, LevelZeroIsMultiplication) {
    for (const auto& [name, a] : fixtures::corpus()) {
        EXPECT_EQ(*bar_differential(a, 0), a.multiplication_map()) << name;
    }
}

TEST(BarDifferential, DualNumbersLevelOne) {
    const FiniteAlgebra a = fixtures::dual_numbers(Q);
    // 1 (x) x (x) 1 is tensor (0, 1, 0), index 2; x (x) 1 is index 2 and 1 (x) x index 1 at level 0.
    const Matrix col = bar_differential(a, 1)->column(2);
    EXPECT_EQ(col, unit_vector(Q, 4, 2) - unit_vector(Q, 4, 1));
    EXPECT_EQ(dense(bar_differential_column(a, 1, false, 2), Q, 4), col);
}

TEST(NormalizedBar, Ranks) {
    const FiniteAlgebra k = fixtures::base_ring(Q);
    EXPECT_EQ(bar_rank(k, 0, true), 1u);
    EXPECT_EQ(bar_rank(k, 1, true), 0u);
    const FiniteAlgebra dual = fixtures::dual_numbers(Q);
    for (long n = 0; n <= 5; ++n) EXPECT_EQ(bar_rank(dual, n, true), 4u);
}

TEST(NormalizedBar, DualNumbersHandEvaluation) {
    const FiniteAlgebra a = fixtures::dual_numbers(Q);
    // 1 (x) xb (x) xb (x) 1 at level 2 maps to x (x) xb (x) 1 + 1 (x) xb (x) x; the middle term dies.
    const Matrix col = normalized_bar_differential(a, 2)->column(0);
    EXPECT_EQ(col, unit_vector(Q, 4, 2) + unit_vector(Q, 4, 1));
}

TEST(NormalizedBar, NeedsUnitalBasis) {
    EXPECT_THROW((void)normalized_bar_differential(fixtures::product_ring(Z), 1), ValidationError);
}

TEST(ContractingHomotopy, BaseField) {
    const FiniteAlgebra k = fixtures::base_ring(Q);
    for (long n = -1; n <= 4; ++n) {
        const Matrix& s = *contracting_homotopy(k, n);
        EXPECT_EQ(s, Matrix::identity(Q, 1));
    }
}

TEST(ContractingHomotopy, InjectiveAndIdentityOnDualNumbers) {
    const FiniteAlgebra a = fixtures::dual_numbers(Q);
    for (bool normalized : {false, true}) {
        for (long n = 0; n <= 1; ++n) {
            const Matrix& s = *contracting_homotopy(a, n, normalized);
            // Prepending 1 kills 1 (x) ... in the normalized complex.
            if (!normalized) EXPECT_EQ(rank(s), s.cols());
            const Matrix lhs = *bar_differential(a, n + 1, normalized) * s;
            const Matrix rhs = *contracting_homotopy(a, n - 1, normalized) * *bar_differential(a, n, normalized);
            EXPECT_TRUE((lhs + rhs).is_identity()) << "n = " << n << " normalized = " << normalized;
        }
    }
}

TEST(ContractingHomotopy, ColumnsMatchMatrix) {
    const FiniteAlgebra a = fixtures::upper_triangular(Q);
    const Matrix& s = *contracting_homotopy(a, 1);
    for (std::size_t c = 0; c < s.cols(); ++c) {
        EXPECT_EQ(dense(contracting_homotopy_column(a, 1, false, c), Q, s.rows()), s.column(c));
    }
}

TEST(BarChainBimodule, OuterAction) {
    const FiniteAlgebra a = fixtures::upper_triangular(Q);
    const Bimodule cb = bar_chain_bimodule(a, 1);
    const std::size_t d = a.rank();
    // e_i . (a0 (x) a1 (x) a2) . e_j = e_i a0 (x) a1 (x) a2 e_j.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t t = 0; t < d * d * d; ++t) {
                const std::size_t a0 = t / (d * d), a1 = (t / d) % d, a2 = t % d;
                const auto left = oracle::multiply(a, oracle::rows_of(a.basis_vector(i).transpose())[0],
                                                   oracle::rows_of(a.basis_vector(a0).transpose())[0]);
                const auto right = oracle::multiply(a, oracle::rows_of(a.basis_vector(a2).transpose())[0],
                                                    oracle::rows_of(a.basis_vector(j).transpose())[0]);
                Matrix expected(Q, d * d * d, 1);
                for (std::size_t x = 0; x < d; ++x) {
                    for (std::size_t y = 0; y < d; ++y) {
                        if (left[x] != 0 && right[y] != 0) expected.set((x * d + a1) * d + y, 0, left[x] * right[y]);
                    }
                }
                const Matrix got = cb.left(i) * cb.right(j) * unit_vector(Q, d * d * d, t);
                EXPECT_EQ(got, expected);
                EXPECT_EQ(bar_act(a, 1, false, j, true, bar_act(a, 1, false, i, false, unit_vector(Q, d * d * d, t))),
                          expected);
            }
        }
    }
}

TEST(Syzygy, Examples) {
    const FiniteAlgebra dual = fixtures::dual_numbers(Q);
    const SyzygyModule o0 = syzygy(dual, 0);
    EXPECT_EQ(o0.bimodule.left_actions(), Bimodule::regular(dual).left_actions());

    EXPECT_EQ(syzygy(fixtures::base_ring(Q), 1).basis.cols(), 0u);

    const SyzygyModule o1 = syzygy(dual, 1);
    ASSERT_EQ(o1.basis.cols(), 2u);
    // Oracle span: 1 (x) x - x (x) 1 (indices 1, 2) and x (x) x (index 3).
    const Matrix expected = hconcat(unit_vector(Q, 4, 1) - unit_vector(Q, 4, 2), unit_vector(Q, 4, 3));
    EXPECT_EQ(rank(hconcat(o1.basis, expected)), 2u);
    EXPECT_TRUE((*bar_differential(dual, 0) * o1.basis).is_zero());
}

TEST(Syzygy, OmegaOneGeneratedByUniversalDifferentials) {
    for (const auto& [name, a] : fixtures::corpus()) {
        if (a.rank() > 4) continue;
        const SyzygyModule o = syzygy(a, 1);
        const Matrix d = universal_derivation(a);
        // A^e-span of the columns of d.
        Matrix span(a.ring(), o.basis.cols(), 0);
        for (std::size_t i = 0; i < a.rank(); ++i) {
            for (std::size_t j = 0; j < a.rank(); ++j) span = hconcat(span, o.bimodule.left(i) * o.bimodule.right(j) * d);
        }
        const Matrix id = Matrix::identity(a.ring(), o.basis.cols());
        EXPECT_TRUE(solve(span, id).has_value()) << name;
    }
}

TEST(UniversalDerivation, LeibnizAndUnit) {
    for (const auto& [name, a] : fixtures::corpus()) {
        if (a.rank() > 4) continue;
        const SyzygyModule o = syzygy(a, 1);
        const Matrix d = universal_derivation(a);
        EXPECT_TRUE((d * a.unit()).is_zero()) << name;
        for (std::size_t i = 0; i < a.rank(); ++i) {
            for (std::size_t j = 0; j < a.rank(); ++j) {
                const Matrix lhs = d * a.product(a.basis_vector(i), a.basis_vector(j));
                const Matrix rhs = o.bimodule.left(i) * d.column(j) + o.bimodule.right(j) * d.column(i);
                EXPECT_EQ(lhs, rhs) << name << " " << i << " " << j;
            }
        }
    }
}

TEST(DerivationFactorization, Examples) {
    const FiniteAlgebra a = fixtures::dual_numbers(Q);
    const Bimodule reg = Bimodule::regular(a);
    const SyzygyModule o = syzygy(a, 1);

    EXPECT_TRUE(derivation_factorization(reg, Matrix(Q, 2, 2)).is_zero());

    // D(1) = 0, D(x) = x.
    const Matrix dx = Matrix::from_rows(Q, {{0, 0}, {0, 1}});
    const Matrix f = derivation_factorization(reg, dx);
    const Matrix g1 = syzygy_coordinates(o, unit_vector(Q, 4, 1) - unit_vector(Q, 4, 2));
    const Matrix g2 = syzygy_coordinates(o, unit_vector(Q, 4, 3));
    EXPECT_EQ(f * g1, unit_vector(Q, 2, 1));
    EXPECT_TRUE((f * g2).is_zero());
    EXPECT_EQ(f * universal_derivation(a), dx);

    EXPECT_TRUE(derivation_factorization(o.bimodule, universal_derivation(a)).is_identity());

    EXPECT_THROW((void)derivation_factorization(reg, Matrix::from_rows(Q, {{1, 0}, {0, 0}})), ValidationError);
}
