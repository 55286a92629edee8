#include "hochkit/hochschild.hpp"

#include <map>
#include <set>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

std::size_t power(std::size_t base, long exp) {
    std::size_t r = 1;
    for (long i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::size_t(1) << 62) / base) {
            throw SizeGuardError("size_guard", "tensor power overflows", std::to_string(exp));
        }
        r *= base;
    }
    return r;
}

std::vector<std::size_t> digits(std::size_t idx, std::size_t base, std::size_t count) {
    std::vector<std::size_t> dg(count);
    for (std::size_t s = count; s-- > 0;) {
        dg[s] = idx % base;
        idx /= base;
    }
    return dg;
}

std::size_t undigits(const std::vector<std::size_t>& dg, std::size_t base) {
    std::size_t idx = 0;
    for (std::size_t x : dg) idx = idx * base + x;
    return idx;
}

void require_unital(const FiniteAlgebra& a) {
    if (!a.has_unital_basis()) {
        throw ValidationError("unital_basis",
                              "normalized complex needs the unit as first basis vector; canonicalize the basis first");
    }
}

Matrix empty_columns(const ScalarRing& ring, std::size_t rows) { return Matrix(ring, rows, 0); }

}  // namespace

Matrix Cochain::vectorized() const {
    Matrix v(values.ring(), values.rows() * values.cols(), 1);
    for (std::size_t p = 0; p < values.rows(); ++p) {
        for (std::size_t t = 0; t < values.cols(); ++t) v.set(p * values.cols() + t, 0, values(p, t));
    }
    return v;
}

Cochain Cochain::from_vector(long degree, bool normalized, std::size_t m, const Matrix& v) {
    const std::size_t width = m == 0 ? 0 : v.rows() / m;
    Matrix values(v.ring(), m, width);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t t = 0; t < width; ++t) values.set(p, t, v(p * width + t, 0));
    }
    return Cochain{degree, normalized, std::move(values)};
}

std::size_t cochain_width(const FiniteAlgebra& a, long n, bool normalized) {
    if (n < 0) throw ValidationError("degree", "cochain degree must be nonnegative");
    return power(normalized ? a.rank() - 1 : a.rank(), n);
}

namespace {

// Shape data of b^n : C^n -> C^{n+1}.
struct CoboundaryShape {
    std::size_t d, base, shift, wn, wn1, mr;
    long n;
};

CoboundaryShape coboundary_shape(const Bimodule& m, long n, bool normalized) {
    const FiniteAlgebra& a = m.algebra();
    if (normalized) require_unital(a);
    const std::size_t d = a.rank();
    return CoboundaryShape{d,
                           normalized ? d - 1 : d,
                           normalized ? std::size_t(1) : std::size_t(0),
                           cochain_width(a, n, normalized),
                           cochain_width(a, n + 1, normalized),
                           m.rank(),
                           n};
}

// Calls emit(col, value) for the entries of row p * wn1 + t of b^n (columns may repeat).
template <class Emit>
void coboundary_row(const Bimodule& m, const CoboundaryShape& sh, std::size_t p, std::size_t t, Emit&& emit) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t len = static_cast<std::size_t>(sh.n) + 1;
    const auto dg = digits(t, sh.base, len);
    const Matrix& left = m.left(dg.front() + sh.shift);
    const Matrix& right = m.right(dg.back() + sh.shift);
    const std::size_t tail = t % sh.wn;
    const std::size_t head = t / sh.base;
    const int last_sign = (sh.n + 1) % 2 == 0 ? 1 : -1;
    for (std::size_t q = 0; q < sh.mr; ++q) {
        if (left(p, q) != 0) emit(q * sh.wn + tail, Scalar(left(p, q)));
        if (right(p, q) != 0) emit(q * sh.wn + head, Scalar(last_sign * right(p, q)));
    }
    std::vector<std::size_t> merged(static_cast<std::size_t>(sh.n));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(sh.n); ++i) {
        const int sign = i % 2 == 0 ? 1 : -1;
        for (std::size_t s = 0; s + 1 < i; ++s) merged[s] = dg[s];
        for (std::size_t s = i + 1; s < len; ++s) merged[s - 1] = dg[s];
        const std::size_t x = dg[i - 1] + sh.shift, y = dg[i] + sh.shift;
        for (std::size_t k = sh.shift; k < sh.d; ++k) {
            const Scalar& c = a.c(x, y, k);
            if (c == 0) continue;
            merged[i - 1] = k - sh.shift;
            emit(p * sh.wn + undigits(merged, sh.base), Scalar(sign * c));
        }
    }
}

}  // namespace

Matrix coboundary_matrix(const Bimodule& m, long n, bool normalized) {
    const CoboundaryShape sh = coboundary_shape(m, n, normalized);
    check_entry_limit(sh.mr * sh.wn1, sh.mr * sh.wn, "coboundary b^" + std::to_string(n));
    Matrix out(m.algebra().ring(), sh.mr * sh.wn1, sh.mr * sh.wn);
    for (std::size_t t = 0; t < sh.wn1; ++t) {
        for (std::size_t p = 0; p < sh.mr; ++p) {
            coboundary_row(m, sh, p, t, [&](std::size_t col, const Scalar& v) { out.add_to(p * sh.wn1 + t, col, v); });
        }
    }
    return out;
}

Matrix apply_coboundary(const Bimodule& m, long n, bool normalized, const Matrix& cochains) {
    const CoboundaryShape sh = coboundary_shape(m, n, normalized);
    if (cochains.rows() != sh.mr * sh.wn) throw ValidationError("shape", "cochains have the wrong length");
    check_entry_limit(sh.mr * sh.wn1, cochains.cols(), "image under b^" + std::to_string(n));
    Matrix out(m.algebra().ring(), sh.mr * sh.wn1, cochains.cols());
    for (std::size_t t = 0; t < sh.wn1; ++t) {
        for (std::size_t p = 0; p < sh.mr; ++p) {
            coboundary_row(m, sh, p, t, [&](std::size_t col, const Scalar& v) {
                for (std::size_t c = 0; c < cochains.cols(); ++c) {
                    if (cochains(col, c) != 0) out.add_to(p * sh.wn1 + t, c, v * cochains(col, c));
                }
            });
        }
    }
    return out;
}

DiagonalGrading diagonal_grading(const Bimodule& m) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank(), r = m.rank(), vars = d + r;
    // Each constraint: deg(target) - deg(x) - deg(y) = 0 over variables (A then M).
    std::set<std::vector<long>> rows;
    auto add = [&](std::size_t target, std::size_t x, std::size_t y) {
        std::vector<long> row(vars, 0);
        row[target] += 1;
        row[x] -= 1;
        row[y] -= 1;
        rows.insert(row);
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (a.c(i, j, k) != 0) add(k, i, j);
            }
        }
        for (std::size_t p = 0; p < r; ++p) {
            for (std::size_t q = 0; q < r; ++q) {
                if (m.left(i)(p, q) != 0) add(d + p, i, d + q);
                if (m.right(i)(p, q) != 0) add(d + p, d + q, i);
            }
        }
        if (a.unit()(i, 0) != 0) {
            std::vector<long> row(vars, 0);
            row[i] = 1;
            rows.insert(row);
        }
    }
    const ScalarRing z = ScalarRing::integers();
    Matrix sys(z, rows.size(), vars);
    std::size_t at = 0;
    for (const auto& row : rows) {
        for (std::size_t v = 0; v < vars; ++v) sys.set(at, v, Scalar(row[v]));
        ++at;
    }
    const Matrix basis = rows.empty() ? Matrix::identity(z, vars) : kernel_basis(sys);
    DiagonalGrading g;
    g.rank = basis.cols();
    for (std::size_t v = 0; v < vars; ++v) {
        std::vector<long> deg(g.rank);
        for (std::size_t c = 0; c < g.rank; ++c) deg[c] = basis(v, c).get_num().get_si();
        (v < d ? g.algebra : g.module).push_back(std::move(deg));
    }
    return g;
}

namespace {

using Weight = std::vector<long>;

// Weight classes of the basis cochains of C^n: index -> (class id, position in class).
struct WeightClasses {
    std::map<Weight, std::vector<std::size_t>> members;
    std::vector<std::size_t> position;
    std::vector<const Weight*> weight_of;
};

WeightClasses weight_classes(const Bimodule& m, const DiagonalGrading& g, long n, bool normalized) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t base = normalized ? a.rank() - 1 : a.rank(), shift = normalized ? 1 : 0;
    const std::size_t wn = cochain_width(a, n, normalized), mr = m.rank();
    check_entry_limit(mr, wn, "cochain space C^" + std::to_string(n));
    std::vector<Weight> tuple_weight(wn, Weight(g.rank, 0));
    for (std::size_t t = 0; t < wn; ++t) {
        for (std::size_t x : digits(t, base, static_cast<std::size_t>(n))) {
            for (std::size_t c = 0; c < g.rank; ++c) tuple_weight[t][c] += g.algebra[x + shift][c];
        }
    }
    WeightClasses wc;
    wc.position.resize(mr * wn);
    wc.weight_of.resize(mr * wn);
    for (std::size_t p = 0; p < mr; ++p) {
        for (std::size_t t = 0; t < wn; ++t) {
            Weight w = g.module[p];
            for (std::size_t c = 0; c < g.rank; ++c) w[c] -= tuple_weight[t][c];
            auto& list = wc.members[w];
            wc.position[p * wn + t] = list.size();
            list.push_back(p * wn + t);
        }
    }
    for (const auto& [w, list] : wc.members) {
        for (std::size_t idx : list) wc.weight_of[idx] = &w;
    }
    return wc;
}

// Block of b^n from weight w in C^n to weight w in C^{n+1}.
Matrix coboundary_block(const Bimodule& m, long n, bool normalized, const WeightClasses& src,
                        const WeightClasses& dst, const Weight& w) {
    const ScalarRing& ring = m.algebra().ring();
    const auto s = src.members.find(w);
    const auto t = dst.members.find(w);
    const std::size_t cols = s == src.members.end() ? 0 : s->second.size();
    const std::size_t rows = t == dst.members.end() ? 0 : t->second.size();
    check_entry_limit(rows, cols, "weight block of b^" + std::to_string(n));
    Matrix out(ring, rows, cols);
    if (rows == 0 || cols == 0) return out;
    const CoboundaryShape sh = coboundary_shape(m, n, normalized);
    for (std::size_t local = 0; local < rows; ++local) {
        const std::size_t row = t->second[local];
        coboundary_row(m, sh, row / sh.wn1, row % sh.wn1, [&](std::size_t col, const Scalar& v) {
            if (*src.weight_of[col] != w) throw Error("internal", "coboundary is not homogeneous for the grading");
            out.add_to(local, src.position[col], v);
        });
    }
    return out;
}

}  // namespace

KModuleInvariants hochschild_cohomology_by_weight(const Bimodule& m, long n, bool normalized) {
    if (n < 0) throw ValidationError("degree", "cohomological degree must be nonnegative");
    if (normalized) require_unital(m.algebra());
    const DiagonalGrading g = diagonal_grading(m);
    const WeightClasses here = weight_classes(m, g, n, normalized);
    const WeightClasses next = weight_classes(m, g, n + 1, normalized);
    std::optional<WeightClasses> prev;
    if (n > 0) prev = weight_classes(m, g, n - 1, normalized);
    const ScalarRing& ring = m.algebra().ring();
    std::vector<KModuleInvariants> parts;
    for (const auto& [w, list] : here.members) {
        const Matrix out = coboundary_block(m, n, normalized, here, next, w);
        const Matrix z = out.rows() == 0 ? Matrix::identity(ring, list.size()) : kernel_basis(out);
        const Matrix b = prev ? coboundary_block(m, n - 1, normalized, *prev, here, w) : empty_columns(ring, list.size());
        parts.push_back(subquotient_invariants(z, b));
    }
    return direct_sum(ring, parts);
}

CohomologyReport hochschild_cohomology(const Bimodule& m, long n, bool normalized, bool with_representatives) {
    if (n < 0) throw ValidationError("degree", "cohomological degree must be nonnegative");
    const FiniteAlgebra& a = m.algebra();
    if (!with_representatives) {
        const std::size_t mr = m.rank(), wn = cochain_width(a, n, normalized);
        const std::size_t wn1 = cochain_width(a, n + 1, normalized);
        const bool fits = mr * wn == 0 || (mr * wn1 <= entry_limit() / (mr * wn) &&
                                           (n == 0 || mr * cochain_width(a, n - 1, normalized) <= entry_limit() / (mr * wn)));
        if (!fits) return CohomologyReport{n, normalized, hochschild_cohomology_by_weight(m, n, normalized), {}};
    }
    const Matrix z = kernel_basis(coboundary_matrix(m, n, normalized));
    const Matrix b =
        n == 0 ? empty_columns(a.ring(), z.rows()) : coboundary_matrix(m, n - 1, normalized);
    CohomologyReport report{n, normalized, {}, {}};
    if (with_representatives) {
        Subquotient sq = subquotient(z, b);
        report.invariants = sq.invariants;
        for (std::size_t c = 0; c < sq.generators.cols(); ++c) {
            report.representatives.push_back(Cochain::from_vector(n, normalized, m.rank(), sq.generators.column(c)));
        }
    } else {
        report.invariants = subquotient_invariants(z, b);
    }
    return report;
}

Matrix center(const Bimodule& m) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t mr = m.rank();
    Matrix sys(a.ring(), a.rank() * mr, mr);
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const Matrix diff = m.left(i) - m.right(i);
        for (std::size_t p = 0; p < mr; ++p) {
            for (std::size_t q = 0; q < mr; ++q) sys.set(i * mr + p, q, diff(p, q));
        }
    }
    return kernel_basis(sys);
}

Matrix derivations(const Bimodule& m) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank(), mr = m.rank();
    // Unknown D(e_t)_p at index p * d + t. Row (i, j, p):
    // D(e_i e_j)_p - (L_i D(e_j))_p - (R_j D(e_i))_p = 0.
    Matrix sys(a.ring(), d * d * mr, mr * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t p = 0; p < mr; ++p) {
                const std::size_t row = (i * d + j) * mr + p;
                for (std::size_t k = 0; k < d; ++k) sys.add_to(row, p * d + k, a.c(i, j, k));
                for (std::size_t q = 0; q < mr; ++q) {
                    sys.add_to(row, q * d + j, -m.left(i)(p, q));
                    sys.add_to(row, q * d + i, -m.right(j)(p, q));
                }
            }
        }
    }
    return kernel_basis(sys);
}

Matrix inner_derivations(const Bimodule& m) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank(), mr = m.rank();
    Matrix out(a.ring(), mr * d, mr);
    for (std::size_t x = 0; x < mr; ++x) {
        for (std::size_t t = 0; t < d; ++t) {
            for (std::size_t p = 0; p < mr; ++p) out.set(p * d + t, x, m.left(t)(p, x) - m.right(t)(p, x));
        }
    }
    return out;
}

CohomologyReport hh1_report(const Bimodule& m) {
    Subquotient sq = subquotient(derivations(m), inner_derivations(m));
    CohomologyReport report{1, false, sq.invariants, {}};
    for (std::size_t c = 0; c < sq.generators.cols(); ++c) {
        report.representatives.push_back(Cochain::from_vector(1, false, m.rank(), sq.generators.column(c)));
    }
    return report;
}

std::optional<std::array<std::size_t, 2>> derivation_witness(const Bimodule& m, const Matrix& d_map) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank();
    if (d_map.rows() != m.rank() || d_map.cols() != d) {
        throw ValidationError("shape", "derivation must be an m x d matrix");
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Matrix prod(a.ring(), d, 1);
            for (std::size_t k = 0; k < d; ++k) prod.set(k, 0, a.c(i, j, k));
            const Matrix lhs = d_map * prod;
            const Matrix rhs = m.left(i) * d_map.column(j) + m.right(j) * d_map.column(i);
            if (lhs != rhs) return std::array<std::size_t, 2>{i, j};
        }
    }
    return std::nullopt;
}

bool is_derivation(const Bimodule& m, const Matrix& d_map) { return !derivation_witness(m, d_map).has_value(); }

Matrix hochschild_boundary_matrix(const Bimodule& m, long n) {
    if (n < 1) throw ValidationError("degree", "boundary b_n needs n >= 1");
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank(), mr = m.rank();
    const std::size_t wn = power(d, n), wn1 = power(d, n - 1);
    check_entry_limit(mr * wn1, mr * wn, "Hochschild boundary b_" + std::to_string(n));
    Matrix out(a.ring(), mr * wn1, mr * wn);
    const std::size_t len = static_cast<std::size_t>(n);
    std::vector<std::size_t> merged(len - 1);
    for (std::size_t t = 0; t < wn; ++t) {
        const auto dg = digits(t, d, len);
        const Matrix& right = m.right(dg.front());
        const Matrix& left = m.left(dg.back());
        const std::size_t tail = t % wn1;
        const std::size_t head = t / d;
        const int last_sign = n % 2 == 0 ? 1 : -1;
        for (std::size_t q = 0; q < mr; ++q) {
            const std::size_t col = q * wn + t;
            for (std::size_t p = 0; p < mr; ++p) {
                // m a_1 (x) a_2 .. a_n  and  (-1)^n a_n m (x) a_1 .. a_{n-1}
                out.add_to(p * wn1 + tail, col, right(p, q));
                out.add_to(p * wn1 + head, col, last_sign * left(p, q));
            }
            for (std::size_t i = 1; i < len; ++i) {
                const int sign = i % 2 == 0 ? 1 : -1;
                for (std::size_t s = 0; s + 1 < i; ++s) merged[s] = dg[s];
                for (std::size_t s = i + 1; s < len; ++s) merged[s - 1] = dg[s];
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& c = a.c(dg[i - 1], dg[i], k);
                    if (c == 0) continue;
                    merged[i - 1] = k;
                    out.add_to(q * wn1 + undigits(merged, d), col, sign * c);
                }
            }
        }
    }
    return out;
}

KModuleInvariants hochschild_homology(const Bimodule& m, long n) {
    if (n < 0) throw ValidationError("degree", "homological degree must be nonnegative");
    const FiniteAlgebra& a = m.algebra();
    const Matrix z = n == 0 ? Matrix::identity(a.ring(), m.rank()) : kernel_basis(hochschild_boundary_matrix(m, n));
    return subquotient_invariants(z, hochschild_boundary_matrix(m, n + 1));
}

KModuleInvariants relative_ext(const LeftModule& m, const LeftModule& n, long degree, bool normalized) {
    return hochschild_cohomology(hom_bimodule(m, n), degree, normalized, false).invariants;
}

namespace {

// delta^k : Hom_k(A^(x k) (x) M, N) -> Hom_k(A^(x k+1) (x) M, N), functions stored
// as rank(N) x (d^k rank(M)) matrices vectorized row-major.
Matrix one_sided_coboundary(const LeftModule& m, const LeftModule& n, long k) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank(), rm = m.rank(), rn = n.rank();
    const std::size_t wk = power(d, k) * rm, wk1 = power(d, k + 1) * rm;
    check_entry_limit(rn * wk1, rn * wk, "relative bar coboundary");
    Matrix out(a.ring(), rn * wk1, rn * wk);
    const std::size_t len = static_cast<std::size_t>(k) + 1;
    std::vector<std::size_t> merged(len - 1);
    for (std::size_t t = 0; t < wk1; ++t) {
        const std::size_t x = t % rm;
        const std::size_t tensor = t / rm;
        const auto dg = digits(tensor, d, len);
        const std::size_t tail = t % wk;
        const std::size_t head = tensor / d;
        const int last_sign = (k + 1) % 2 == 0 ? 1 : -1;
        const Matrix& act_m = m.action(dg.back());
        const Matrix& act_n = n.action(dg.front());
        for (std::size_t p = 0; p < rn; ++p) {
            const std::size_t row = p * wk1 + t;
            // a_1 f(a_2 .. , x)
            for (std::size_t q = 0; q < rn; ++q) out.add_to(row, q * wk + tail, act_n(p, q));
            // (-1)^{k+1} f(a_1 .. a_k, a_{k+1} x)
            for (std::size_t y = 0; y < rm; ++y) out.add_to(row, p * wk + head * rm + y, last_sign * act_m(y, x));
            for (std::size_t i = 1; i < len; ++i) {
                const int sign = i % 2 == 0 ? 1 : -1;
                for (std::size_t s = 0; s + 1 < i; ++s) merged[s] = dg[s];
                for (std::size_t s = i + 1; s < len; ++s) merged[s - 1] = dg[s];
                for (std::size_t c = 0; c < d; ++c) {
                    const Scalar& v = a.c(dg[i - 1], dg[i], c);
                    if (v == 0) continue;
                    merged[i - 1] = c;
                    out.add_to(row, p * wk + undigits(merged, d) * rm + x, sign * v);
                }
            }
        }
    }
    return out;
}

}  // namespace

KModuleInvariants relative_ext_via_bar(const LeftModule& m, const LeftModule& n, long degree) {
    if (degree < 0) throw ValidationError("degree", "Ext degree must be nonnegative");
    if (!(m.algebra() == n.algebra())) throw ValidationError("algebra", "modules over different algebras");
    const Matrix z = kernel_basis(one_sided_coboundary(m, n, degree));
    const Matrix b = degree == 0 ? Matrix(m.algebra().ring(), z.rows(), 0) : one_sided_coboundary(m, n, degree - 1);
    return subquotient_invariants(z, b);
}

}  // namespace hochkit
