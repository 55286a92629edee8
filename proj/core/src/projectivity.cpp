#include "hochkit/projectivity.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <tuple>

#include "hochkit/bar_complex.hpp"
#include "hochkit/error.hpp"
#include "hochkit/extensions.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

namespace {

// rho(1 (x) t (x) 1) for every generator t of level m, as level-m vectors.
struct Split {
    long level = 0;
    Matrix values;
};

struct DirectResult {
    std::optional<Split> split;
    bool rational_only = false;
};

std::size_t omega_rank(const FiniteAlgebra& a, long n, bool normalized) {
    std::size_t r = a.rank();
    for (long j = 0; j < n; ++j) r = bar_rank(a, j, normalized) - r;
    return r;
}

Matrix omega_basis(const FiniteAlgebra& a, long n, bool normalized) {
    if (n == 0) return Matrix::identity(a.ring(), a.rank());
    return syzygy(a, n, normalized).basis;
}

Matrix generators(const FiniteAlgebra& a, long n, bool normalized) {
    const std::size_t v = bar_generators(a, n, normalized);
    Matrix g(a.ring(), bar_rank(a, n, normalized), v);
    for (std::size_t t = 0; t < v; ++t) {
        const Matrix col = bar_generator(a, n, normalized, t);
        for (std::size_t r = 0; r < col.rows(); ++r) {
            if (col(r, 0) != 0) g.set(r, t, col(r, 0));
        }
    }
    return g;
}

bool fits(std::size_t rows, std::size_t cols) { return cols == 0 || rows <= entry_limit() / cols; }

bool direct_fits(const FiniteAlgebra& a, long m, bool normalized) {
    const std::size_t r = omega_rank(a, m + 1, normalized);
    const std::size_t v = bar_generators(a, m, normalized), w = bar_generators(a, m + 1, normalized);
    const std::size_t level = bar_rank(a, m + 1, normalized);
    return fits(w * r, v * r) && fits(bar_rank(a, m, normalized), level);
}

// Solves rho(b'_{m+1}(1 (x) t' (x) 1)) = b'_{m+1}(1 (x) t' (x) 1) for an A^e-linear
// rho : CB_m -> Omega^{m+1} parametrized by y_t = rho(1 (x) t (x) 1).
DirectResult direct_split(const FiniteAlgebra& a, long m, bool normalized) {
    const std::size_t d = a.rank();
    const SyzygyModule omega = syzygy(a, m + 1, normalized);
    const std::size_t r = omega.basis.cols();
    const std::size_t v = bar_generators(a, m, normalized), w = bar_generators(a, m + 1, normalized);
    const std::size_t level = bar_rank(a, m, normalized);
    if (r == 0) return DirectResult{Split{m, Matrix(a.ring(), level, v)}, false};
    check_entry_limit(w * r, v * r, "splitting system at level " + std::to_string(m));

    std::vector<Matrix> pab(d * d);
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) pab[p * d + q] = omega.bimodule.left(p) * omega.bimodule.right(q);
    }
    const Matrix g = *bar_differential(a, m + 1, normalized) * generators(a, m + 1, normalized);
    const Matrix target = syzygy_coordinates(omega, g);
    Matrix sys(a.ring(), w * r, v * r), rhs(a.ring(), w * r, 1);
    for (std::size_t tp = 0; tp < w; ++tp) {
        for (std::size_t c = 0; c < r; ++c) rhs.set(tp * r + c, 0, target(c, tp));
        for (std::size_t idx = 0; idx < level; ++idx) {
            const Scalar& val = g(idx, tp);
            if (val == 0) continue;
            const std::size_t p = idx / (v * d), t = (idx / d) % v, q = idx % d;
            const Matrix& block = pab[p * d + q];
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    if (block(i, j) != 0) sys.add_to(tp * r + i, t * r + j, val * block(i, j));
                }
            }
        }
    }
    auto sol = solve(sys, rhs);
    if (!sol) {
        bool rational = false;
        if (!a.ring().is_field()) {
            const ScalarRing q = ScalarRing::rationals();
            rational = solve(sys.over(q), rhs.over(q)).has_value();
        }
        return DirectResult{std::nullopt, rational};
    }
    Matrix y(a.ring(), r, v);
    for (std::size_t t = 0; t < v; ++t) {
        for (std::size_t c = 0; c < r; ++c) y.set(c, t, (*sol)(t * r + c, 0));
    }
    return DirectResult{Split{m, omega.basis * y}, false};
}

// sigma = (id - i rho) s_{m-1} on Omega^m.
Matrix section_from_split(const FiniteAlgebra& a, const Split& split, bool normalized) {
    const long m = split.level;
    const Matrix x = *contracting_homotopy(a, m - 1, normalized) * omega_basis(a, m, normalized);
    const Matrix psi = induced_map(a, m, m, normalized, split.values);
    return x - psi * x;
}

// A splitting at level m gives one at level m + 1: Omega^{m+1} is a summand of
// the free module CB_m, so 1 (x) t (x) 1 -> s_m(y_t) induces a section.
std::pair<Split, Matrix> propagate(const FiniteAlgebra& a, const Split& split, bool normalized) {
    const long m = split.level;
    const Matrix lifted = *contracting_homotopy(a, m, normalized) * split.values;
    const Matrix phi = induced_map(a, m, m + 1, normalized, lifted);
    const SyzygyModule omega = syzygy(a, m + 1, normalized);
    const Matrix sigma = phi * omega.basis;
    const Matrix gens = generators(a, m + 1, normalized);
    const Matrix coords = syzygy_coordinates(omega, *bar_differential(a, m + 1, normalized) * gens);
    return {Split{m + 1, gens - sigma * coords}, sigma};
}

ProjectivityCertificate from_split(const FiniteAlgebra& a, long n, bool normalized, const Split& split, Matrix sigma,
                                   std::string method) {
    ProjectivityCertificate cert;
    cert.level = n;
    cert.normalized = normalized;
    cert.projective = true;
    cert.section = std::move(sigma);
    cert.retraction = split.values;
    cert.method = std::move(method);
    if (!verify_section(a, cert)) throw Error("internal", "computed section fails verification");
    return cert;
}

std::optional<std::string> cohomology_witness(const FiniteAlgebra& a, long degree, bool normalized) {
    std::vector<std::pair<std::string, std::function<Bimodule()>>> probes = {
        {"A", [&] { return Bimodule::regular(a); }},
        {"A^e", [&] { return bar_chain_bimodule(a, 0, normalized); }},
    };
    if (auto k = augmentation_bimodule(a)) probes.emplace_back("k", [k] { return *k; });
    for (const auto& [name, make] : probes) {
        for (bool norm : {normalized, !normalized}) {
            if (norm && !a.has_unital_basis()) continue;
            try {
                if (!hochschild_cohomology(make(), degree, norm, false).invariants.is_zero()) return name;
                break;
            } catch (const SizeGuardError&) {
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Matrix> separability_idempotent(const FiniteAlgebra& a) {
    const std::size_t d = a.rank();
    const Matrix mu = a.multiplication_map();
    Matrix sys(a.ring(), d + d * d * d, d * d), rhs(a.ring(), d + d * d * d, 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < d * d; ++c) sys.set(i, c, mu(i, c));
        rhs.set(i, 0, a.unit()(i, 0));
    }
    const Matrix id = Matrix::identity(a.ring(), d * d);
    for (std::size_t i = 0; i < d; ++i) {
        const Matrix diff = bar_act(a, 0, false, i, false, id) - bar_act(a, 0, false, i, true, id);
        for (std::size_t r = 0; r < d * d; ++r) {
            for (std::size_t c = 0; c < d * d; ++c) sys.set(d + i * d * d + r, c, diff(r, c));
        }
    }
    return solve(sys, rhs);
}

std::optional<Bimodule> augmentation_bimodule(const FiniteAlgebra& a) {
    if (!a.has_unital_basis()) return std::nullopt;
    const std::size_t d = a.rank();
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t j = 1; j < d; ++j) {
            if (a.c(i, j, 0) != 0) return std::nullopt;
        }
    }
    std::vector<Matrix> act(d, Matrix(a.ring(), 1, 1));
    act[0].set(0, 0, 1);
    return Bimodule::create(a, 1, act, act);
}

ProjectivityCertificate omega_is_projective(const FiniteAlgebra& a, long n, bool normalized) {
    if (n < 0) throw ValidationError("level", "syzygy level must be nonnegative");
    ProjectivityCertificate cert;
    cert.level = n;
    cert.normalized = normalized;
    std::optional<DirectResult> here;
    if (direct_fits(a, n, normalized)) {
        here = direct_split(a, n, normalized);
        if (here->split) {
            Matrix sigma = section_from_split(a, *here->split, normalized);
            return from_split(a, n, normalized, *here->split, std::move(sigma), "direct");
        }
        cert.method = "direct";
        cert.obstruction = here->rational_only
                               ? "torsion obstruction: the sequence splits over Q but not over Z"
                               : "no A^e-linear splitting of 0 -> Omega^" + std::to_string(n + 1) + " -> CB_" +
                                     std::to_string(n) + " -> Omega^" + std::to_string(n) + " -> 0";
        return cert;
    }
    for (long m = n - 1; m >= 0; --m) {
        if (!direct_fits(a, m, normalized)) continue;
        DirectResult lower = direct_split(a, m, normalized);
        if (!lower.split) break;
        Split split = *lower.split;
        Matrix sigma;
        while (split.level < n) std::tie(split, sigma) = propagate(a, split, normalized);
        return from_split(a, n, normalized, split, std::move(sigma), "propagated from level " + std::to_string(m));
    }
    if (auto probe = cohomology_witness(a, n + 1, normalized)) {
        cert.method = "cohomology witness";
        cert.obstruction = "HH^" + std::to_string(n + 1) + "(A, " + *probe + ") is nonzero";
        return cert;
    }
    throw SizeGuardError("size_guard",
                         "splitting system at level " + std::to_string(n) +
                             " exceeds the size guard and no lower level or cohomology witness decides it",
                         std::to_string(n));
}

bool verify_section(const FiniteAlgebra& a, const ProjectivityCertificate& cert) {
    if (!cert.section) return false;
    const long n = cert.level;
    const bool norm = cert.normalized;
    const Matrix& sigma = *cert.section;
    const std::size_t level = bar_rank(a, n, norm);
    const SyzygyModule omega =
        n == 0 ? SyzygyModule{0, norm, Matrix::identity(a.ring(), a.rank()), Bimodule::regular(a)}
               : syzygy(a, n, norm);
    if (sigma.rows() != level || sigma.cols() != omega.basis.cols()) return false;
    if (*bar_differential(a, n, norm) * sigma != omega.basis) return false;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        if (sigma * omega.bimodule.left(i) != bar_act(a, n, norm, i, false, sigma)) return false;
        if (sigma * omega.bimodule.right(i) != bar_act(a, n, norm, i, true, sigma)) return false;
    }
    return true;
}

std::optional<UnitalBasis> unital_form(const FiniteAlgebra& a) {
    try {
        return canonicalize_unital_basis(a);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

QuasiFreeReport is_quasi_free(const FiniteAlgebra& original, unsigned seed) {
    const auto form = unital_form(original);
    const FiniteAlgebra a = form ? form->algebra : original;
    const bool norm = form.has_value();
    QuasiFreeReport report;
    report.certificate = omega_is_projective(a, 1, norm);
    report.quasi_free = report.certificate.projective;
    const Bimodule regular = Bimodule::regular(a);
    if (report.quasi_free) {
        std::vector<ExtensionPresentation> battery{trivial_extension(regular),
                                                   trivial_extension(bar_chain_bimodule(a, 0))};
        const Matrix cocycles = kernel_basis(coboundary_matrix(regular, 2));
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (int round = 0; round < 3 && cocycles.cols() > 0; ++round) {
            Matrix combo(a.ring(), cocycles.rows(), 1);
            for (std::size_t c = 0; c < cocycles.cols(); ++c) {
                const Scalar k = coeff(rng);
                for (std::size_t r = 0; r < cocycles.rows(); ++r) combo.add_to(r, 0, k * cocycles(r, c));
            }
            battery.push_back(crossed_product_extension(regular, Cochain::from_vector(2, false, a.rank(), combo).values));
        }
        for (const auto& ext : battery) {
            if (!lift_exists(ext)) throw Error("internal", "quasi-free verdict contradicted by an extension without a lift");
            ++report.lifts_checked;
        }
        return report;
    }
    std::vector<std::pair<std::string, std::function<Bimodule()>>> probes = {
        {"A", [&] { return regular; }},
        {"A^e", [&] { return bar_chain_bimodule(a, 0, norm); }},
        {"Omega^1", [&] { return syzygy(a, 1, norm).bimodule; }},
    };
    if (auto k = augmentation_bimodule(a)) probes.emplace_back("k", [k] { return *k; });
    for (const auto& [name, make] : probes) {
        try {
            CohomologyReport hh2 = hochschild_cohomology(make(), 2, norm);
            if (!hh2.invariants.is_zero()) {
                report.witness_probe = name;
                report.witness = hh2.representatives.front();
                break;
            }
        } catch (const SizeGuardError&) {
        }
    }
    return report;
}

HcdimReport hcdim_scan(const FiniteAlgebra& original, long cap,
                       const std::vector<std::pair<std::string, Bimodule>>& extra) {
    if (cap < 0) throw ValidationError("cap", "cap must be nonnegative");
    const auto form = unital_form(original);
    const FiniteAlgebra a = form ? form->algebra : original;
    const bool norm = form.has_value();
    HcdimReport report;
    report.cap = cap;
    for (long n = 0; n <= cap; ++n) {
        try {
            if (omega_is_projective(a, n, norm).projective) {
                report.proved_upper = n;
                break;
            }
        } catch (const SizeGuardError&) {
            report.skipped_levels.push_back(n);
        }
    }
    const long top = report.proved_upper ? std::min(cap + 1, *report.proved_upper) : cap + 1;

    std::vector<std::pair<std::string, std::function<Bimodule()>>> makers = {
        {"A", [&] { return Bimodule::regular(a); }},
        {"A^e", [&] { return bar_chain_bimodule(a, 0, norm); }},
        {"Omega^1", [&] { return syzygy(a, 1, norm).bimodule; }},
        {"Omega^2", [&] { return syzygy(a, 2, norm).bimodule; }},
        {"Hom_k(A,A)", [&] { return hom_bimodule(LeftModule::regular(a), LeftModule::regular(a)); }},
    };
    if (auto k = augmentation_bimodule(a)) makers.emplace_back("k", [k] { return *k; });
    for (const auto& [name, m] : extra) {
        makers.emplace_back(name, [&, m = m] { return form ? transport(m, *form) : m; });
    }
    std::sort(makers.begin(), makers.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    report.witnessed_lower = 0;
    for (const auto& [name, make] : makers) {
        ProbeResult probe{name, {}};
        std::optional<Bimodule> m;
        try {
            m = make();
        } catch (const SizeGuardError&) {
        }
        for (long n = 0; n <= top; ++n) {
            std::optional<KModuleInvariants> inv;
            if (m) {
                try {
                    inv = hochschild_cohomology(*m, n, norm, false).invariants;
                } catch (const SizeGuardError&) {
                }
            }
            if (inv && !inv->is_zero() && n > report.witnessed_lower) {
                report.witnessed_lower = n;
                report.lower_witness = name;
            }
            if (inv && !inv->is_zero() && n == 0 && report.lower_witness.empty()) report.lower_witness = name;
            probe.invariants.push_back(std::move(inv));
        }
        report.probes.push_back(std::move(probe));
    }
    return report;
}

}  // namespace hochkit
