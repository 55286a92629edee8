#pragma once

// Hand-rolled random generators for property tests. Everything is driven by an
// explicit std::mt19937 so failures reproduce from the printed seed.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "hochkit/algebra.hpp"

namespace gen {

using hochkit::Matrix;
using hochkit::Scalar;
using hochkit::ScalarRing;

inline long small(std::mt19937& rng, long lo = -2, long hi = 2) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Matrix random_matrix(const ScalarRing& ring, std::size_t rows, std::size_t cols, std::mt19937& rng, long lo = -3,
                            long hi = 3) {
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, ring.reduce(Scalar(small(rng, lo, hi))));
    }
    return m;
}

// Rank-deficient matrix as a product of two thin random factors.
inline Matrix random_low_rank(const ScalarRing& ring, std::size_t rows, std::size_t cols, std::size_t rk,
                              std::mt19937& rng) {
    return random_matrix(ring, rows, rk, rng) * random_matrix(ring, rk, cols, rng);
}

// A unimodular matrix P and its inverse, built from elementary column
// operations with coefficients +-1 (so it is invertible over Z as well).
// With keep_first, column 0 stays the first standard basis vector.
struct Invertible {
    Matrix p;
    Matrix inverse;
};

inline Invertible random_invertible(const ScalarRing& ring, std::size_t n, std::mt19937& rng, bool keep_first = false,
                                    int steps = 6) {
    Matrix p = Matrix::identity(ring, n), inv = Matrix::identity(ring, n);
    if (n < 2) return {p, inv};
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < steps; ++s) {
        std::size_t target = pick(rng), source = pick(rng);
        if (target == source || (keep_first && target == 0)) continue;
        const Scalar k = ring.reduce(Scalar(rng() % 2 ? 1 : -1));
        // P <- P E with E = I + k E_{source,target}: column target += k column source.
        // inv <- E^{-1} inv: row source -= k row target.
        for (std::size_t r = 0; r < n; ++r) p.set(r, target, ring.add(p(r, target), ring.mul(k, p(r, source))));
        for (std::size_t c = 0; c < n; ++c) inv.set(source, c, ring.sub(inv(source, c), ring.mul(k, inv(target, c))));
    }
    return {p, inv};
}

// The same algebra in the basis f_i = sum_a P(a, i) e_a.
inline hochkit::FiniteAlgebra rebase(const hochkit::FiniteAlgebra& a, const Invertible& change) {
    const ScalarRing& ring = a.ring();
    const std::size_t d = a.rank();
    hochkit::AlgebraTable t;
    t.ring = ring;
    for (std::size_t i = 0; i < d; ++i) t.basis.push_back("f" + std::to_string(i));
    const Matrix u = change.inverse * a.unit();
    for (std::size_t i = 0; i < d; ++i) t.unit.push_back(u(i, 0));
    t.mul.assign(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix prod = change.inverse * a.product(change.p.column(i), change.p.column(j));
            for (std::size_t k = 0; k < d; ++k) t.mul[(i * d + j) * d + k] = prod(k, 0);
        }
    }
    return hochkit::validate_algebra(std::move(t));
}

// Transports m to the rebased algebra, also changing the module basis by q.
inline hochkit::Bimodule rebase(const hochkit::Bimodule& m, const hochkit::FiniteAlgebra& rebased,
                                const Invertible& change, const Invertible& q) {
    const ScalarRing& ring = m.algebra().ring();
    const std::size_t d = m.algebra().rank(), r = m.rank();
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix l(ring, r, r), rr(ring, r, r);
        for (std::size_t a = 0; a < d; ++a) {
            if (change.p(a, i) == 0) continue;
            l = l + change.p(a, i) * m.left(a);
            rr = rr + change.p(a, i) * m.right(a);
        }
        left.push_back(q.inverse * l * q.p);
        right.push_back(q.inverse * rr * q.p);
    }
    return hochkit::Bimodule::create(rebased, r, std::move(left), std::move(right));
}

}  // namespace gen
