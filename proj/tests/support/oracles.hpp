#pragma once

// Naive reference computations used to cross-check the library. They share no
// code with hochkit's linear algebra: plain vectors of mpq_class, schoolbook
// elimination, determinantal divisors and direct evaluation of formulas.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "hochkit/algebra.hpp"

namespace oracle {

using Rows = std::vector<std::vector<mpq_class>>;

inline Rows zeros(std::size_t r, std::size_t c) { return Rows(r, std::vector<mpq_class>(c, 0)); }

inline Rows rows_of(const hochkit::Matrix& m) {
    Rows out = zeros(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    }
    return out;
}

inline mpq_class mod_p(const mpq_class& x, std::uint64_t p) {
    mpz_class num = x.get_num(), den = x.get_den(), pp = static_cast<unsigned long>(p), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    mpz_class r = (num * inv) % pp;
    if (r < 0) r += pp;
    return mpq_class(r);
}

// Rank over Q (p = 0) or F_p. Over Z the rank equals the rank over Q.
inline std::size_t rank(Rows m, std::uint64_t p = 0) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    if (p != 0) {
        for (auto& row : m) {
            for (auto& x : row) x = mod_p(x, p);
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        mpq_class inv = p ? mod_p(mpq_class(1) / m[r][c], p) : mpq_class(1) / m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
                if (p) m[i][j] = mod_p(m[i][j], p);
            }
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const hochkit::Matrix& m) { return rank(rows_of(m), m.ring().characteristic()); }

// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[s], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Invariant factors s_1 | s_2 | ... of an integer matrix from determinantal
// divisors (gcd of all k x k minors). Exponential; small matrices only.
inline std::vector<mpz_class> invariant_factors(const Rows& m) {
    std::vector<mpz_class> out;
    if (m.empty() || m[0].empty()) return out;
    const std::size_t rows = m.size(), cols = m[0].size();
    // Drop zero rows and columns first; they contribute no nonzero minors.
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < rows; ++r) {
        if (std::any_of(m[r].begin(), m[r].end(), [](const mpq_class& x) { return x != 0; })) rs.push_back(r);
    }
    for (std::size_t c = 0; c < cols; ++c) {
        if (std::any_of(rs.begin(), rs.end(), [&](std::size_t r) { return m[r][c] != 0; })) cs.push_back(c);
    }
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= std::min(rs.size(), cs.size()); ++k) {
        mpz_class g = 0;
        combinations(rs.size(), k, [&](const std::vector<std::size_t>& ri) {
            if (g == 1) return;
            combinations(cs.size(), k, [&](const std::vector<std::size_t>& ci) {
                if (g == 1) return;
                std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[ri[i]]][cs[ci[j]]].get_num();
                }
                mpz_class det = determinant(std::move(sub));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            });
        });
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Naive Hochschild coboundary b^n : C^n -> C^{n+1} evaluated term by term from
// the defining formula. Cochain basis E_{p, t}: the tuple t goes to e_p.
// Normalized cochains vanish whenever an argument is the unit e_0.
struct NaiveCochains {
    std::size_t d, m, base, shift;

    std::size_t width(long n) const {
        std::size_t w = 1;
        for (long i = 0; i < n; ++i) w *= base;
        return w;
    }
    std::vector<std::size_t> tuple(std::size_t t, long n) const {
        std::vector<std::size_t> out(static_cast<std::size_t>(n));
        for (long i = n - 1; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = t % base + shift;
            t /= base;
        }
        return out;
    }
    // Index of a tuple of algebra basis indices, or -1 when normalized and some entry is e_0.
    long index(const std::vector<std::size_t>& u) const {
        std::size_t t = 0;
        for (std::size_t x : u) {
            if (x < shift) return -1;
            t = t * base + (x - shift);
        }
        return static_cast<long>(t);
    }
};

inline Rows naive_coboundary(const hochkit::Bimodule& mod, long n, bool normalized) {
    const hochkit::FiniteAlgebra& a = mod.algebra();
    const NaiveCochains nc{a.rank(), mod.rank(), normalized ? a.rank() - 1 : a.rank(), normalized ? 1u : 0u};
    const std::size_t wn = nc.width(n), wn1 = nc.width(n + 1), m = nc.m;
    Rows out = zeros(m * wn1, m * wn);
    const std::uint64_t p = a.ring().characteristic();
    for (std::size_t ut = 0; ut < wn1; ++ut) {
        const auto u = nc.tuple(ut, n + 1);
        // a_1 f(a_2, ..., a_{n+1})
        std::vector<std::size_t> tail(u.begin() + 1, u.end());
        const long ti = nc.index(tail);
        // f(a_1, ..., a_n) a_{n+1}
        std::vector<std::size_t> head(u.begin(), u.end() - 1);
        const long hi = nc.index(head);
        const mpq_class last = (n + 1) % 2 == 0 ? 1 : -1;
        for (std::size_t q = 0; q < m; ++q) {
            for (std::size_t pp = 0; pp < m; ++pp) {
                if (ti >= 0) out[q * wn1 + ut][pp * wn + static_cast<std::size_t>(ti)] += mod.left(u.front())(q, pp);
                if (hi >= 0) out[q * wn1 + ut][pp * wn + static_cast<std::size_t>(hi)] += last * mod.right(u.back())(q, pp);
            }
        }
        for (long i = 1; i <= n; ++i) {
            const mpq_class sign = i % 2 == 0 ? 1 : -1;
            for (std::size_t k = 0; k < nc.d; ++k) {
                const mpq_class c = a.c(u[static_cast<std::size_t>(i - 1)], u[static_cast<std::size_t>(i)], k);
                if (c == 0) continue;
                std::vector<std::size_t> merged;
                for (long s = 0; s < i - 1; ++s) merged.push_back(u[static_cast<std::size_t>(s)]);
                merged.push_back(k);
                for (long s = i + 1; s <= n; ++s) merged.push_back(u[static_cast<std::size_t>(s)]);
                const long mi = nc.index(merged);
                if (mi < 0) continue;
                for (std::size_t q = 0; q < m; ++q) out[q * wn1 + ut][q * wn + static_cast<std::size_t>(mi)] += sign * c;
            }
        }
    }
    if (p) {
        for (auto& row : out) {
            for (auto& x : row) x = mod_p(x, p);
        }
    }
    return out;
}

struct NaiveInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;
};

// HH^n from naive coboundaries: over a field dim C^n - rk b^n - rk b^{n-1}; over Z
// the torsion is that of coker b^{n-1} (ker b^n is saturated).
inline NaiveInvariants naive_hh(const hochkit::Bimodule& mod, long n, bool normalized) {
    const hochkit::FiniteAlgebra& a = mod.algebra();
    const std::uint64_t p = a.ring().characteristic();
    const Rows out = naive_coboundary(mod, n, normalized);
    const NaiveCochains nc{a.rank(), mod.rank(), normalized ? a.rank() - 1 : a.rank(), normalized ? 1u : 0u};
    // Counted from the shape, since b^n may have no rows.
    const std::size_t cn = nc.m * nc.width(n);
    const std::size_t rk_out = rank(out, p);
    std::size_t rk_in = 0;
    Rows in;
    if (n > 0) {
        in = naive_coboundary(mod, n - 1, normalized);
        rk_in = rank(in, p);
    }
    NaiveInvariants inv;
    inv.free_rank = cn - rk_out - rk_in;
    if (!a.ring().is_field() && n > 0) {
        for (const auto& f : invariant_factors(in)) {
            if (f != 1) inv.torsion.push_back(f);
        }
    }
    return inv;
}

// dim of {x : a x = x a for all a} from the stacked system L_i - R_i.
inline std::size_t naive_center_dim(const hochkit::Bimodule& mod) {
    const std::size_t m = mod.rank(), d = mod.algebra().rank();
    Rows sys;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<mpq_class> row(m);
            for (std::size_t c = 0; c < m; ++c) row[c] = mpq_class(mod.left(i)(r, c)) - mod.right(i)(r, c);
            sys.push_back(row);
        }
    }
    return m - rank(sys, mod.algebra().ring().characteristic());
}

// dim Hom_A(M, N) from f L^M_i = L^N_i f, unknowns f row-major (rank N x rank M).
inline std::size_t naive_hom_dim(const hochkit::LeftModule& mm, const hochkit::LeftModule& nn) {
    const std::size_t r = mm.rank(), s = nn.rank(), d = mm.algebra().rank();
    Rows sys;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = 0; b < r; ++b) {
                std::vector<mpq_class> row(s * r, 0);
                // (f L^M)(a, b) = sum_c f(a, c) L^M(c, b); (L^N f)(a, b) = sum_c L^N(a, c) f(c, b).
                for (std::size_t c = 0; c < r; ++c) row[a * r + c] += mm.action(i)(c, b);
                for (std::size_t c = 0; c < s; ++c) row[c * r + b] -= nn.action(i)(a, c);
                sys.push_back(row);
            }
        }
    }
    return s * r - rank(sys, mm.algebra().ring().characteristic());
}

// Naive value of the 2-cocycle identity on (e_i, e_j, e_l):
// e_i B(e_j, e_l) - B(e_i e_j, e_l) + B(e_i, e_j e_l) - B(e_i, e_j) e_l.
inline std::vector<mpq_class> cocycle_defect(const hochkit::Bimodule& mod, const Rows& b, std::size_t i, std::size_t j,
                                             std::size_t l) {
    const hochkit::FiniteAlgebra& a = mod.algebra();
    const std::size_t d = a.rank(), m = mod.rank();
    std::vector<mpq_class> out(m, 0);
    for (std::size_t q = 0; q < m; ++q) {
        for (std::size_t p = 0; p < m; ++p) {
            out[q] += mpq_class(mod.left(i)(q, p)) * b[p][j * d + l];
            out[q] -= mpq_class(mod.right(l)(q, p)) * b[p][i * d + j];
        }
        for (std::size_t k = 0; k < d; ++k) {
            out[q] -= mpq_class(a.c(i, j, k)) * b[q][k * d + l];
            out[q] += mpq_class(a.c(j, l, k)) * b[q][i * d + k];
        }
    }
    if (auto p = a.ring().characteristic()) {
        for (auto& x : out) x = mod_p(x, p);
    }
    return out;
}

inline bool naive_is_cocycle(const hochkit::Bimodule& mod, const Rows& b) {
    const std::size_t d = mod.algebra().rank();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                const auto v = cocycle_defect(mod, b, i, j, l);
                if (std::any_of(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; })) return false;
            }
        }
    }
    return true;
}

// Over F_2: number of 2-cocycles and of 2-coboundaries by exhaustive search.
struct CocycleCount {
    std::size_t cocycles = 0;
    std::size_t coboundaries = 0;
};

inline CocycleCount brute_force_f2(const hochkit::Bimodule& mod) {
    const hochkit::FiniteAlgebra& a = mod.algebra();
    const std::size_t d = a.rank(), m = mod.rank(), bits = m * d * d;
    CocycleCount out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << bits); ++mask) {
        Rows b = zeros(m, d * d);
        for (std::size_t k = 0; k < bits; ++k) b[k / (d * d)][k % (d * d)] = (mask >> k) & 1;
        if (naive_is_cocycle(mod, b)) ++out.cocycles;
    }
    // b^1 zeta (a, a') = a zeta(a') - zeta(a a') + zeta(a) a'.
    std::set<std::vector<int>> images;
    const std::size_t zbits = m * d;
    for (std::size_t mask = 0; mask < (std::size_t(1) << zbits); ++mask) {
        std::vector<int> img(m * d * d, 0);
        auto zeta = [&](std::size_t p, std::size_t x) { return static_cast<int>((mask >> (p * d + x)) & 1); };
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t q = 0; q < m; ++q) {
                    int v = 0;
                    for (std::size_t p = 0; p < m; ++p) {
                        v += static_cast<int>(mod.left(i)(q, p).get_num().get_si()) * zeta(p, j);
                        v += static_cast<int>(mod.right(j)(q, p).get_num().get_si()) * zeta(p, i);
                    }
                    for (std::size_t k = 0; k < d; ++k) v -= static_cast<int>(a.c(i, j, k).get_num().get_si()) * zeta(q, k);
                    img[q * d * d + i * d + j] = ((v % 2) + 2) % 2;
                }
            }
        }
        images.insert(img);
    }
    out.coboundaries = images.size();
    return out;
}

// Product of two elements given by coordinate vectors, straight from c(i, j, k).
inline std::vector<mpq_class> multiply(const hochkit::FiniteAlgebra& a, const std::vector<mpq_class>& x,
                                       const std::vector<mpq_class>& y) {
    const std::size_t d = a.rank();
    std::vector<mpq_class> out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j] == 0) continue;
            for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * mpq_class(a.c(i, j, k));
        }
    }
    if (auto p = a.ring().characteristic()) {
        for (auto& v : out) v = mod_p(v, p);
    }
    return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    // Pascal's triangle.
    std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return k <= n ? t[n][k] : 0;
}

}  // namespace oracle
