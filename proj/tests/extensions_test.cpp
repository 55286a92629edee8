#include <gtest/gtest.h>

#include <random>

#include "hochkit/error.hpp"
#include "hochkit/extensions.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/hochschild.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hochkit;

namespace {

const ScalarRing Q = ScalarRing::rationals();
const ScalarRing F2 = ScalarRing::prime_field(2);

// B(x, x) = 1 on the dual numbers with M = A.
Matrix xx_cocycle(const ScalarRing& k) {
    Matrix b(k, 2, 4);
    b.set(0, 3, 1);
    return b;
}

Matrix b1(const Bimodule& m, const Matrix& zeta) {
    const std::size_t d = m.algebra().rank();
    Matrix v(m.algebra().ring(), m.rank() * d, 1);
    for (std::size_t p = 0; p < m.rank(); ++p) {
        for (std::size_t x = 0; x < d; ++x) v.set(p * d + x, 0, zeta(p, x));
    }
    return Cochain::from_vector(2, false, m.rank(), coboundary_matrix(m, 1) * v).values;
}

Bimodule trivial_k(const FiniteAlgebra& k) {
    const std::vector<Matrix> act{Matrix::identity(k.ring(), 1)};
    return Bimodule::create(k, 1, act, act);
}

}  // namespace

TEST(TwoCocycle, Examples) {
    const FiniteAlgebra a = fixtures::dual_numbers(F2);
    const Bimodule reg = Bimodule::regular(a);
    EXPECT_TRUE(is_two_cocycle(reg, Matrix(F2, 2, 4)));

    std::mt19937 rng(3);
    const Bimodule q = Bimodule::regular(fixtures::upper_triangular(Q));
    for (int i = 0; i < 5; ++i) {
        const Matrix zeta = gen::random_matrix(Q, 3, 3, rng);
        EXPECT_TRUE(is_two_cocycle(q, b1(q, zeta)));
    }

    const Matrix b = xx_cocycle(F2);
    EXPECT_TRUE(is_two_cocycle(reg, b));
    EXPECT_TRUE(oracle::naive_is_cocycle(reg, oracle::rows_of(b)));
    EXPECT_FALSE(cocycles_cohomologous(reg, b, Matrix(F2, 2, 4)).has_value());
}

TEST(TwoCocycle, WitnessMatchesNaiveDefect) {
    const Bimodule reg = Bimodule::regular(fixtures::dual_numbers(Q));
    // B(1, 1) = 1 alone is not a cocycle.
    Matrix b(Q, 2, 4);
    b.set(0, 0, 1);
    const auto w = two_cocycle_witness(reg, b);
    ASSERT_TRUE(w);
    const auto defect = oracle::cocycle_defect(reg, oracle::rows_of(b), (*w)[0], (*w)[1], (*w)[2]);
    EXPECT_TRUE(std::any_of(defect.begin(), defect.end(), [](const mpq_class& x) { return x != 0; }));
}

TEST(CrossedProduct, TrivialExtensionOfField) {
    const FiniteAlgebra k = fixtures::base_ring(Q);
    const FiniteAlgebra t = crossed_product(trivial_k(k), Matrix(Q, 1, 1));
    EXPECT_EQ(t.table().mul, fixtures::dual_numbers(Q).table().mul);
}

TEST(CrossedProduct, FieldWithNonzeroCocycle) {
    const FiniteAlgebra k = fixtures::base_ring(F2);
    const Matrix b = Matrix::from_rows(F2, {{1}});
    const FiniteAlgebra t = crossed_product(trivial_k(k), b);
    EXPECT_EQ(t.rank(), 2u);
    // (1, m0) (a, x) = (a, x) forces m0 = -B(1, 1) = 1 over F2.
    EXPECT_EQ(t.unit(), Matrix::from_rows(F2, {{1}, {1}}));
}

TEST(CrossedProduct, NontrivialDualNumbers) {
    const Bimodule reg = Bimodule::regular(fixtures::dual_numbers(F2));
    const FiniteAlgebra t = crossed_product(reg, xx_cocycle(F2));
    EXPECT_EQ(t.rank(), 4u);
}

TEST(CrossedProduct, NonCocycleRejectedWithWitness) {
    const Bimodule reg = Bimodule::regular(fixtures::dual_numbers(Q));
    Matrix b(Q, 2, 4);
    b.set(0, 0, 1);
    const auto w = two_cocycle_witness(reg, b);
    ASSERT_TRUE(w);
    try {
        (void)crossed_product(reg, b);
        FAIL() << "expected a cocycle error";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.witness(),
                  "(" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
    }
}

TEST(ExtensionClass, Examples) {
    const Bimodule reg = Bimodule::regular(fixtures::dual_numbers(Q));
    EXPECT_TRUE(extension_class_from_section(trivial_extension(reg)).is_zero());

    const Matrix b = xx_cocycle(Q);
    const ExtensionPresentation e = crossed_product_extension(reg, b);
    EXPECT_EQ(extension_class_from_section(e), b);

    // s' = s + i zeta gives B + b^1 zeta.
    const Matrix zeta = Matrix::from_rows(Q, {{1, 2}, {-1, 3}});
    ExtensionPresentation moved = e;
    moved.section = e.section + e.inclusion * zeta;
    validate_extension(moved);
    EXPECT_EQ(extension_class_from_section(moved), b + b1(reg, zeta));
}

TEST(ExtensionClass, RejectsNonSection) {
    const Bimodule reg = Bimodule::regular(fixtures::dual_numbers(Q));
    ExtensionPresentation e = trivial_extension(reg);
    e.section = Matrix(Q, 4, 2);
    EXPECT_THROW(validate_extension(e), ValidationError);
}

TEST(Cohomologous, Examples) {
    const Bimodule reg = Bimodule::regular(fixtures::dual_numbers(Q));
    const Matrix b = xx_cocycle(Q);
    const auto same = cocycles_cohomologous(reg, b, b);
    ASSERT_TRUE(same);
    EXPECT_TRUE(b1(reg, *same).is_zero());

    const Matrix zeta0 = Matrix::from_rows(Q, {{0, 1}, {2, 0}});
    const auto found = cocycles_cohomologous(reg, b + b1(reg, zeta0), b);
    ASSERT_TRUE(found);
    EXPECT_EQ(b1(reg, *found), b1(reg, zeta0));

    const Bimodule f2 = Bimodule::regular(fixtures::dual_numbers(F2));
    EXPECT_FALSE(cocycles_cohomologous(f2, xx_cocycle(F2), Matrix(F2, 2, 4)));
}

TEST(Lift, Examples) {
    const Bimodule f2 = Bimodule::regular(fixtures::dual_numbers(F2));
    const ExtensionPresentation triv = trivial_extension(f2);
    const auto s = lift_exists(triv);
    ASSERT_TRUE(s);
    EXPECT_TRUE(is_multiplicative(triv, *s));

    EXPECT_FALSE(lift_exists(crossed_product_extension(f2, xx_cocycle(F2))));

    const Bimodule q = Bimodule::regular(fixtures::dual_numbers(Q));
    const Matrix zeta = Matrix::from_rows(Q, {{3, -1}, {1, 1}});
    const ExtensionPresentation e = crossed_product_extension(q, b1(q, zeta));
    const auto lift = lift_exists(e);
    ASSERT_TRUE(lift);
    EXPECT_TRUE(is_multiplicative(e, *lift));
}

TEST(Enumerate, Examples) {
    const FiniteAlgebra k = fixtures::base_ring(F2);
    EXPECT_EQ(enumerate_extension_classes(trivial_k(k)).size(), 1u);

    const FiniteAlgebra a = fixtures::dual_numbers(F2);
    const auto classes = enumerate_extension_classes(Bimodule::regular(a));
    EXPECT_EQ(classes.size(), 4u);
    EXPECT_EQ(classes.size(), std::size_t(1) << hochschild_cohomology(Bimodule::regular(a), 2).invariants.free_rank);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            EXPECT_FALSE(cocycles_cohomologous(Bimodule::regular(a), classes[i], classes[j]));
        }
    }

    EXPECT_EQ(enumerate_extension_classes(Bimodule::zero(a)).size(), 1u);
}

TEST(Enumerate, RefusesNonFiniteFields) {
    EXPECT_THROW((void)enumerate_extension_classes(Bimodule::regular(fixtures::dual_numbers(Q))), Error);
}
