#include <gtest/gtest.h>

#include <random>

#include "hochkit/error.hpp"
#include "hochkit/linalg.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hochkit;

namespace {

const ScalarRing Z = ScalarRing::integers();
const ScalarRing Q = ScalarRing::rationals();
const ScalarRing F2 = ScalarRing::prime_field(2);

}  // namespace

TEST(ScalarRing, PrimeCheckAndCanonicalResidues) {
    EXPECT_THROW(ScalarRing::prime_field(4), ValidationError);
    EXPECT_THROW(ScalarRing::prime_field(1), ValidationError);
    const ScalarRing f7 = ScalarRing::prime_field(7);
    EXPECT_EQ(f7.reduce(Scalar(-1)), Scalar(6));
    EXPECT_EQ(f7.parse("-1/2"), Scalar(3));
    EXPECT_EQ(Q.parse("-1/2"), Scalar(-1, 2));
    EXPECT_EQ(Q.format(Scalar(-1, 2)), "-1/2");
    EXPECT_THROW((void)Z.parse("1/2"), ValidationError);
    EXPECT_TRUE(is_prime(18446744073709551557ULL));
    EXPECT_FALSE(is_prime(18446744073709551555ULL));
}

TEST(KernelBasis, ZeroMapOverQ) {
    const Matrix k = kernel_basis(Matrix::from_rows(Q, {{0}}));
    EXPECT_EQ(k, Matrix::identity(Q, 1));
}

TEST(KernelBasis, TwoFourOverZ) {
    const Matrix m = Matrix::from_rows(Z, {{2, 4}});
    const Matrix k = kernel_basis(m);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE((m * k).is_zero());
    // Oracle: the primitive kernel vectors of [2 4] with small entries are +-(2, -1).
    std::vector<std::pair<long, long>> found;
    for (long x = -5; x <= 5; ++x) {
        for (long y = -5; y <= 5; ++y) {
            if (2 * x + 4 * y == 0 && std::gcd(x, y) == 1) found.emplace_back(x, y);
        }
    }
    ASSERT_EQ(found.size(), 2u);
    const long x = k(0, 0).get_num().get_si(), y = k(1, 0).get_num().get_si();
    EXPECT_TRUE((x == 2 && y == -1) || (x == -2 && y == 1));
}

TEST(KernelBasis, IdentityOverF2IsEmpty) {
    const Matrix k = kernel_basis(Matrix::identity(F2, 3));
    EXPECT_EQ(k.rows(), 3u);
    EXPECT_EQ(k.cols(), 0u);
}

TEST(KernelBasis, SaturatedOverZ) {
    // ker [2 2] over Z is spanned by (1, -1), not 2 (1, -1).
    const Matrix k = kernel_basis(Matrix::from_rows(Z, {{2, 2}}));
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_EQ(abs(k(0, 0)), 1);
}

TEST(SmithNormalForm, Diag2And3) {
    const Matrix m = Matrix::from_rows(Z, {{2, 0}, {0, 3}});
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.d, Matrix::from_rows(Z, {{1, 0}, {0, 6}}));
    EXPECT_EQ(s.u * m * s.v, s.d);
    // Oracle: determinantal divisors.
    const auto f = oracle::invariant_factors(oracle::rows_of(m));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], 1);
    EXPECT_EQ(f[1], 6);
}

TEST(SmithNormalForm, ZeroAndOne) {
    const Matrix zero(Z, 2, 3);
    const SmithForm s = smith_normal_form(zero);
    EXPECT_TRUE(s.d.is_zero());
    EXPECT_TRUE(s.u.is_identity());
    EXPECT_TRUE(s.v.is_identity());
    EXPECT_EQ(smith_normal_form(Matrix::from_rows(Z, {{1}})).d, Matrix::from_rows(Z, {{1}}));
}

TEST(SmithNormalForm, RejectsFields) { EXPECT_THROW((void)smith_normal_form(Matrix::identity(Q, 2)), Error); }

TEST(Subquotient, ZOverTwoZ) {
    const auto inv = subquotient_invariants(Matrix::identity(Z, 1), Matrix::from_rows(Z, {{2}}));
    EXPECT_EQ(inv.free_rank, 0u);
    ASSERT_EQ(inv.torsion.size(), 1u);
    EXPECT_EQ(inv.torsion[0], 2);
    EXPECT_EQ(inv.describe(Z), "Z/2");
}

TEST(Subquotient, EqualSpansGiveZero) {
    const Matrix z = Matrix::from_rows(Z, {{1, 2}, {3, 4}, {5, 6}});
    EXPECT_TRUE(subquotient_invariants(z, z).is_zero());
}

TEST(Subquotient, RankArithmeticOverQ) {
    const Matrix z = Matrix::identity(Q, 3);
    const Matrix b = Matrix::from_rows(Q, {{1}, {1}, {0}});
    EXPECT_EQ(subquotient_invariants(z, b).free_rank, 2u);
}

TEST(Subquotient, ContainmentViolationNamesColumn) {
    const Matrix z = Matrix::from_rows(Q, {{1}, {0}});
    const Matrix b = Matrix::from_rows(Q, {{1, 0}, {0, 1}});
    try {
        (void)subquotient(z, b);
        FAIL() << "expected a containment error";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.witness(), "column 1");
    }
}

TEST(Subquotient, GeneratorsFreeThenTorsion) {
    // span(e1, e2) / span(2 e2): Z + Z/2, free generator first.
    const Subquotient s = subquotient(Matrix::identity(Z, 2), Matrix::from_rows(Z, {{0}, {2}}));
    EXPECT_EQ(s.invariants.free_rank, 1u);
    ASSERT_EQ(s.generators.cols(), 2u);
    EXPECT_EQ(s.generators.column(1), Matrix::from_rows(Z, {{0}, {1}}));
}

TEST(Solve, Examples) {
    const auto x = solve(Matrix::from_rows(Z, {{2}}), Matrix::from_rows(Z, {{4}}));
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)(0, 0), 2);
    EXPECT_FALSE(solve(Matrix::from_rows(Z, {{2}}), Matrix::from_rows(Z, {{3}})));
    const auto y = solve(Matrix::from_rows(Q, {{2}}), Matrix::from_rows(Q, {{3}}));
    ASSERT_TRUE(y);
    EXPECT_EQ((*y)(0, 0), Scalar(3, 2));
}

TEST(DirectSum, RenormalizesTorsion) {
    KModuleInvariants a{1, {2}}, b{0, {3}};
    const auto s = direct_sum(Z, {a, b});
    EXPECT_EQ(s.free_rank, 1u);
    ASSERT_EQ(s.torsion.size(), 1u);
    EXPECT_EQ(s.torsion[0], 6);
}

TEST(Determinant, MatchesBareissOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = gen::random_matrix(Z, 4, 4, rng);
        std::vector<std::vector<mpz_class>> rows(4, std::vector<mpz_class>(4));
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) rows[r][c] = m(r, c).get_num();
        }
        EXPECT_EQ(determinant(m), Scalar(oracle::determinant(rows)));
    }
}

TEST(GuardTest, RefusesOversizedMatrices) {
    const std::size_t saved = entry_limit();
    set_entry_limit(100);
    EXPECT_THROW(Matrix(Q, 11, 10), SizeGuardError);
    EXPECT_NO_THROW(Matrix(Q, 10, 10));
    set_entry_limit(saved);
}
