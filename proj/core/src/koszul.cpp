#include "hochkit/koszul.hpp"

#include <algorithm>
#include <map>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

Matrix block_diagonal(const Matrix& r, std::size_t copies) {
    return kronecker(Matrix::identity(r.ring(), copies), r);
}

// Homology at C_i of a complex of quotients F_j / R_j: out = d_i, in = d_{i+1},
// rel_out and rel_here the relation spans of C_{i-1} and C_i.
KModuleInvariants homology(const ScalarRing& ring, std::size_t dim, const Matrix& out, const Matrix& in,
                           const Matrix& rel_out, const Matrix& rel_here) {
    if (dim == 0) return {};
    Matrix z = Matrix::identity(ring, dim);
    if (out.rows() > 0) {
        const Matrix k = kernel_basis(hconcat(out, -rel_out));
        z = k.block(0, 0, dim, k.cols());
    }
    const Matrix b = hconcat(in, rel_here);
    return subquotient_invariants(hconcat(z, b), b);
}

void require_commutative(const FiniteAlgebra& a) {
    if (!a.is_commutative()) throw ValidationError("commutativity", "Koszul complexes require a commutative algebra");
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ExteriorBasis ExteriorBasis::make(std::size_t d, std::size_t n) {
    ExteriorBasis b{d, n, {}};
    if (n > d) return b;
    std::vector<std::size_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i;
    while (true) {
        b.subsets.push_back(s);
        std::size_t i = n;
        while (i > 0 && s[i - 1] == d - n + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < n; ++j) s[j] = s[j - 1] + 1;
    }
    return b;
}

std::size_t ExteriorBasis::index_of(const std::vector<std::size_t>& subset) const {
    const auto it = std::lower_bound(subsets.begin(), subsets.end(), subset);
    if (it == subsets.end() || *it != subset) throw ValidationError("exterior_basis", "subset not in the basis");
    return static_cast<std::size_t>(it - subsets.begin());
}

std::vector<KoszulTerm> koszul_pattern(std::size_t d, std::size_t n) {
    if (n < 1 || n > d) throw ValidationError("degree", "Koszul degree must satisfy 1 <= n <= d");
    const ExteriorBasis src = ExteriorBasis::make(d, n), dst = ExteriorBasis::make(d, n - 1);
    std::vector<KoszulTerm> terms;
    for (std::size_t col = 0; col < src.size(); ++col) {
        const auto& s = src.subsets[col];
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> face = s;
            face.erase(face.begin() + static_cast<long>(j));
            terms.push_back({dst.index_of(face), col, j % 2 == 0 ? 1 : -1, s[j]});
        }
    }
    return terms;
}

Matrix koszul_differential(const LeftModule& m, const std::vector<Matrix>& sequence, std::size_t n) {
    require_commutative(m.algebra());
    const std::size_t d = sequence.size();
    const std::vector<KoszulTerm> terms = koszul_pattern(d, n);
    std::vector<Matrix> acts;
    for (const auto& x : sequence) acts.push_back(m.act(x));
    const std::size_t r = m.rank();
    Matrix out(m.algebra().ring(), binomial(d, n - 1) * r, binomial(d, n) * r);
    for (const auto& t : terms) {
        const Matrix& act = acts[t.variable];
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                if (act(i, j) != 0) out.add_to(t.row * r + i, t.col * r + j, t.sign * act(i, j));
            }
        }
    }
    return out;
}

QuotientModule QuotientModule::create(LeftModule ambient, Matrix relations) {
    if (relations.rows() != ambient.rank() || relations.ring() != ambient.algebra().ring()) {
        throw ValidationError("shape", "relations must be columns in the ambient module");
    }
    if (relations.cols() > 0) {
        for (std::size_t i = 0; i < ambient.algebra().rank(); ++i) {
            if (!solve(relations, ambient.action(i) * relations)) {
                throw ValidationError("submodule", "relation span is not stable under the action", std::to_string(i));
            }
        }
    }
    return QuotientModule(std::move(ambient), std::move(relations));
}

QuotientModule QuotientModule::free(LeftModule ambient) {
    Matrix rel(ambient.algebra().ring(), ambient.rank(), 0);
    return QuotientModule(std::move(ambient), std::move(rel));
}

KModuleInvariants QuotientModule::invariants() const { return cokernel_invariants(relations_); }

QuotientModule QuotientModule::quotient_by(const Matrix& x) const {
    return QuotientModule(ambient_, hconcat(relations_, ambient_.act(x)));
}

RegularityVerdict regular_element_check(const Matrix& x, const QuotientModule& m) {
    const Matrix act = m.ambient().act(x);
    const Matrix& rel = m.relations();
    RegularityVerdict v;
    v.kernel = homology(act.ring(), act.cols(), act, Matrix(act.ring(), act.cols(), 0), rel, rel);
    v.cokernel = cokernel_invariants(hconcat(act, rel));
    v.injective = v.kernel.is_zero();
    v.surjective = v.cokernel.is_zero();
    v.regular = v.injective && !v.surjective;
    return v;
}

SequenceVerdict regular_sequence_check(const std::vector<Matrix>& sequence, const QuotientModule& m) {
    SequenceVerdict out;
    QuotientModule current = m;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        out.steps.push_back(regular_element_check(sequence[i], current));
        if (!out.steps.back().regular) {
            out.regular = false;
            out.failing_index = i + 1;
            return out;
        }
        current = current.quotient_by(sequence[i]);
    }
    return out;
}

TorReport finite_koszul_tor(const std::vector<Matrix>& sequence, const QuotientModule& m) {
    const FiniteAlgebra& a = m.ambient().algebra();
    require_commutative(a);
    const SequenceVerdict on_a = regular_sequence_check(sequence, QuotientModule::free(LeftModule::regular(a)));
    if (!on_a.regular) {
        throw ValidationError("regular_sequence", "sequence is not regular on the algebra",
                              std::to_string(*on_a.failing_index));
    }
    const std::size_t d = sequence.size(), r = m.ambient().rank();
    const ScalarRing& ring = a.ring();
    std::vector<Matrix> diff(d + 2);
    for (std::size_t n = 1; n <= d; ++n) diff[n] = koszul_differential(m.ambient(), sequence, n);
    TorReport report;
    for (std::size_t i = 0; i <= d; ++i) {
        const std::size_t dim = binomial(d, i) * r;
        const Matrix out = i == 0 ? Matrix(ring, 0, dim) : diff[i];
        const Matrix in = i == d ? Matrix(ring, dim, 0) : diff[i + 1];
        const Matrix rel_out = i == 0 ? Matrix(ring, 0, 0) : block_diagonal(m.relations(), binomial(d, i - 1));
        report.tor.push_back(homology(ring, dim, out, in, rel_out, block_diagonal(m.relations(), binomial(d, i))));
        if (!report.tor.back().is_zero()) report.flat_dimension = i;
    }
    return report;
}

std::vector<std::vector<std::size_t>> monomials(std::size_t v, std::size_t e) {
    std::vector<std::vector<std::size_t>> out;
    if (v == 0) {
        if (e == 0) out.emplace_back();
        return out;
    }
    std::vector<std::size_t> cur(v, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == v) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::size_t k = 0; k <= left; ++k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, e);
    // degrevlex: a > b iff the last nonzero entry of a - b is negative.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    return out;
}

GradedPolyModule GradedPolyModule::create(std::size_t v, ScalarRing ring, std::size_t cap) {
    GradedPolyModule m{v, std::move(ring), cap, {}};
    for (std::size_t e = 0; e <= cap; ++e) m.basis.push_back(monomials(v, e));
    return m;
}

Matrix GradedPolyModule::multiplication(std::size_t i, std::size_t e) const {
    if (e >= cap || i >= variables) throw ValidationError("degree", "multiplication beyond the degree cap");
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < basis[e + 1].size(); ++k) index[basis[e + 1][k]] = k;
    Matrix out(ring, basis[e + 1].size(), basis[e].size());
    for (std::size_t c = 0; c < basis[e].size(); ++c) {
        auto mono = basis[e][c];
        ++mono[i];
        out.set(index.at(mono), c, 1);
    }
    return out;
}

GradedTorReport graded_koszul_tor(std::size_t v, const ScalarRing& ring, std::size_t cap) {
    if (cap < v) throw ValidationError("cap", "degree cap must be at least the number of variables");
    const GradedPolyModule poly = GradedPolyModule::create(v, ring, cap);
    GradedTorReport report;
    report.variables = v;
    report.cap = cap;
    report.resolution_exact = true;
    report.by_degree.assign(v + 2, {});

    for (std::size_t e = 0; e <= cap; ++e) {
        // (K_i)_e = R_{e-i}^C(v,i); diff[i] : (K_i)_e -> (K_{i-1})_e.
        auto dim = [&](std::size_t i) { return i <= v && i <= e ? binomial(v, i) * poly.dimension(e - i) : 0; };
        std::vector<Matrix> diff(v + 2);
        for (std::size_t i = 1; i <= v + 1; ++i) {
            diff[i] = Matrix(ring, dim(i - 1), dim(i));
            if (i > v || i > e) continue;
            const std::size_t src = poly.dimension(e - i), dst = poly.dimension(e - i + 1);
            for (const auto& t : koszul_pattern(v, i)) {
                const Matrix mul = poly.multiplication(t.variable, e - i);
                for (std::size_t r = 0; r < dst; ++r) {
                    for (std::size_t c = 0; c < src; ++c) {
                        if (mul(r, c) != 0) diff[i].add_to(t.row * dst + r, t.col * src + c, t.sign * mul(r, c));
                    }
                }
            }
        }
        for (std::size_t i = 0; i <= v; ++i) {
            const Matrix out = i == 0 ? Matrix(ring, 0, dim(0)) : diff[i];
            const KModuleInvariants h = homology(ring, dim(i), out, diff[i + 1], Matrix(ring, out.rows(), 0),
                                                 Matrix(ring, dim(i), 0));
            const KModuleInvariants expected = i == 0 && e == 0 ? KModuleInvariants{1, {}} : KModuleInvariants{};
            if (h != expected) report.resolution_exact = false;
        }
        // Tensoring with the residue module k = R/(x): (K_i (x) k)_e = k^C(v,i) when
        // e = i and 0 otherwise; every x_j acts by zero on k.
        for (std::size_t i = 0; i <= v + 1; ++i) {
            const std::size_t here = i <= v && e == i ? binomial(v, i) : 0;
            const std::size_t below = i >= 1 && e == i - 1 ? binomial(v, i - 1) : 0;
            const std::size_t above = i + 1 <= v && e == i + 1 ? binomial(v, i + 1) : 0;
            const Matrix out = i == 0 ? Matrix(ring, 0, here) : Matrix(ring, below, here);
            report.by_degree[i].push_back(homology(ring, here, out, Matrix(ring, here, above),
                                                   Matrix(ring, out.rows(), 0), Matrix(ring, here, 0)));
        }
    }
    for (std::size_t i = 0; i <= v + 1; ++i) {
        report.tor.push_back(direct_sum(ring, report.by_degree[i]));
        if (report.resolution_exact && !report.tor.back().is_zero()) report.flat_dimension = i;
    }
    return report;
}

long global_dimension(const ScalarRing& ring) { return ring.is_field() ? 0 : 1; }

DimensionBound dimension_bound(long flat_dimension, long base_dimension, long base_flat_dimension) {
    if (flat_dimension < 0 || base_dimension < 0 || base_flat_dimension < 0) {
        throw ValidationError("bound", "dimensions must be nonnegative");
    }
    DimensionBound b{flat_dimension, base_dimension, base_flat_dimension, 0, false, {}};
    b.lower = std::max(0L, flat_dimension - base_dimension - base_flat_dimension);
    b.not_quasi_free = b.lower >= 2;
    b.statement = std::to_string(flat_dimension) + " - " + std::to_string(base_dimension) + " - " +
                  std::to_string(base_flat_dimension) + " <= HCdim, so HCdim >= " + std::to_string(b.lower);
    if (b.not_quasi_free) b.statement += "; not quasi-free";
    return b;
}

}  // namespace hochkit
