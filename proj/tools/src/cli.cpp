#include "hochkit_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

#include "hochkit/bar_complex.hpp"
#include "hochkit/error.hpp"
#include "hochkit/extensions.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/koszul.hpp"
#include "hochkit/projectivity.hpp"

namespace hochkit::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

struct GuardScope {
    std::size_t saved = entry_limit();
    explicit GuardScope(std::optional<std::size_t> limit) {
        if (limit) set_entry_limit(*limit);
    }
    ~GuardScope() { set_entry_limit(saved); }
};

struct Options {
    std::string output;
    std::optional<std::size_t> guard;

    std::string algebra;
    std::string bimodule;
    long degree = 0;
    bool normalized = false;
    bool unnormalized = false;
    bool homology = false;
    bool representatives = false;

    long cap = 3;
    unsigned seed = 1;

    bool enumerate = false;
    std::string cocycle;
    std::string extension;

    std::size_t vars = 0;
    std::string ring = "Z";
    std::size_t tor_cap = 0;
    std::string sequence;
    std::string module;

    long fd = 0;
    std::optional<long> dk;
    long fdk = 0;

    std::string fixture;
    bool all = false;
    bool list = false;
    std::string dir = "fixtures";
};

ScalarRing ring_from_name(const std::string& name) {
    if (name == "Z") return ScalarRing::integers();
    if (name == "Q") return ScalarRing::rationals();
    if (name.size() > 1 && name[0] == 'F') return ScalarRing::prime_field(std::stoull(name.substr(1)));
    throw ValidationError("ring", "unknown ring " + name + " (use Z, Q or F<p>)");
}

Json inv_json(const KModuleInvariants& inv, const ScalarRing& ring) {
    Json j = io::invariants_to_json(inv);
    j["description"] = inv.describe(ring);
    return j;
}

Json opt_matrix(const std::optional<Matrix>& m) { return m ? io::matrix_to_json(*m) : Json(nullptr); }

Json column_json(const Matrix& v) {
    Json out = Json::array();
    for (std::size_t r = 0; r < v.rows(); ++r) out.push_back(v.ring().format(v(r, 0)));
    return out;
}

void require_same_algebra(const FiniteAlgebra& a, const Bimodule& m) {
    if (!(m.algebra() == a)) throw ValidationError("algebra_mismatch", "bimodule is defined over a different algebra");
}

Json cmd_hh(const Options& o) {
    const FiniteAlgebra a = io::load_algebra(o.algebra);
    Bimodule m = Bimodule::regular(a);
    if (!o.bimodule.empty()) {
        m = io::load_bimodule(o.bimodule);
        require_same_algebra(a, m);
    }
    if (o.degree < 0) throw ValidationError("degree", "degree must be nonnegative");
    Json out{{"command", "hh"}, {"kind", o.homology ? "homology" : "cohomology"}, {"degree", o.degree}};
    if (o.homology) {
        const KModuleInvariants inv = hochschild_homology(m, o.degree);
        out["complex"] = "unnormalized";
        out.update(inv_json(inv, a.ring()));
        return out;
    }
    bool normalized = !o.unnormalized;
    std::optional<UnitalBasis> form;
    if (normalized && !a.has_unital_basis()) {
        form = unital_form(a);
        if (form) {
            m = transport(m, *form);
        } else {
            normalized = false;
        }
    }
    const CohomologyReport report = hochschild_cohomology(m, o.degree, normalized, o.representatives);
    out["complex"] = normalized ? "normalized" : "unnormalized";
    out.update(inv_json(report.invariants, a.ring()));
    if (o.representatives) {
        Json reps = Json::array();
        for (const auto& c : report.representatives) reps.push_back(io::matrix_to_json(c.values));
        out["representatives"] = reps;
        if (form) out["unital_basis"] = io::matrix_to_json(form->to_old);
    }
    return out;
}

Json cmd_analyze(const Options& o) {
    const FiniteAlgebra a = io::load_algebra(o.algebra);
    const Bimodule reg = Bimodule::regular(a);
    Json out{{"command", "analyze"},
             {"center_dim", center(reg).cols()},
             {"der_dim", derivations(reg).cols()},
             {"inn_dim", rank(inner_derivations(reg))},
             {"hh1", inv_json(hh1_report(reg).invariants, a.ring())}};

    const auto idem = separability_idempotent(a);
    out["separability"] = Json{{"separable", idem.has_value()}, {"idempotent", idem ? column_json(*idem) : Json(nullptr)}};

    const QuasiFreeReport qf = is_quasi_free(a, o.seed);
    Json q{{"quasi_free", qf.quasi_free},
           {"method", qf.certificate.method},
           {"normalized", qf.certificate.normalized},
           {"section", opt_matrix(qf.certificate.section)},
           {"obstruction", qf.certificate.obstruction},
           {"lifts_checked", qf.lifts_checked},
           {"witness_probe", qf.witness_probe},
           {"witness", qf.witness ? io::matrix_to_json(qf.witness->values) : Json(nullptr)}};
    if (!a.has_unital_basis()) {
        if (auto form = unital_form(a)) q["unital_basis"] = io::matrix_to_json(form->to_old);
    }
    out["quasi_free"] = q;

    const HcdimReport hc = hcdim_scan(a, o.cap);
    Json probes = Json::array();
    for (const auto& p : hc.probes) {
        Json hh = Json::array();
        for (const auto& inv : p.invariants) hh.push_back(inv ? Json(inv->describe(a.ring())) : Json(nullptr));
        probes.push_back(Json{{"name", p.name}, {"hh", hh}});
    }
    out["hcdim"] = Json{{"cap", hc.cap},
                        {"proved_upper", hc.proved_upper ? Json(*hc.proved_upper) : Json(nullptr)},
                        {"witnessed_lower", hc.witnessed_lower},
                        {"lower_witness", hc.lower_witness},
                        {"skipped_levels", hc.skipped_levels},
                        {"probes", probes}};
    return out;
}

Json cmd_extensions(const Options& o) {
    const FiniteAlgebra a = io::load_algebra(o.algebra);
    const Bimodule m = io::load_bimodule(o.bimodule);
    require_same_algebra(a, m);
    Json out{{"command", "extensions"}};
    if (o.enumerate) {
        const auto classes = enumerate_extension_classes(m);
        Json reps = Json::array();
        for (const auto& b : classes) reps.push_back(io::matrix_to_json(b));
        out["classes"] = classes.size();
        out["hh2"] = inv_json(hochschild_cohomology(m, 2, false, false).invariants, a.ring());
        out["representatives"] = reps;
    } else if (!o.cocycle.empty()) {
        const Matrix b = io::cocycle_from_json(io::read_json(o.cocycle), m);
        const auto witness = two_cocycle_witness(m, b);
        out["is_cocycle"] = !witness.has_value();
        if (witness) {
            out["witness"] = Json{(*witness)[0], (*witness)[1], (*witness)[2]};
            return out;
        }
        const auto zeta = cocycles_cohomologous(m, b, Matrix(a.ring(), m.rank(), a.rank() * a.rank()));
        out["cohomologous_to_zero"] = zeta.has_value();
        out["zeta"] = opt_matrix(zeta);
    } else if (!o.extension.empty()) {
        const ExtensionPresentation e = io::load_extension(o.extension);
        require_same_algebra(a, e.module);
        const auto section = lift_exists(e);
        out["lift"] = section.has_value();
        out["section"] = opt_matrix(section);
        out["class"] = io::matrix_to_json(extension_class_from_section(e));
    } else {
        throw ValidationError("usage", "one of --enumerate, --class or --lift is required");
    }
    return out;
}

Json tor_json(const std::vector<KModuleInvariants>& tor, const ScalarRing& ring) {
    Json out = Json::array();
    for (std::size_t i = 0; i < tor.size(); ++i) {
        Json t{{"i", i}};
        t.update(inv_json(tor[i], ring));
        out.push_back(t);
    }
    return out;
}

std::vector<Matrix> sequence_from(const std::string& arg, const FiniteAlgebra& a) {
    const Json j = !arg.empty() && arg.front() == '[' ? Json::parse(arg) : io::read_json(arg).at("sequence");
    if (!j.is_array()) throw ValidationError("parse", "sequence must be a list of elements");
    std::vector<Matrix> out;
    for (const auto& x : j) {
        Json col = Json::array();
        for (const auto& c : x) col.push_back(Json::array({c}));
        out.push_back(io::matrix_from_json(a.ring(), col, a.rank(), 1, "sequence element"));
    }
    return out;
}

Json cmd_koszul(const Options& o) {
    Json out{{"command", "koszul"}};
    if (o.algebra.empty()) {
        const ScalarRing ring = ring_from_name(o.ring);
        const GradedTorReport r = graded_koszul_tor(o.vars, ring, o.tor_cap);
        out["mode"] = "graded";
        out["variables"] = o.vars;
        out["ring"] = io::ring_to_json(ring);
        out["cap"] = o.tor_cap;
        out["resolution_exact"] = r.resolution_exact;
        Json tor = tor_json(r.tor, ring);
        for (std::size_t i = 0; i < tor.size(); ++i) {
            Json by = Json::array();
            for (const auto& inv : r.by_degree[i]) by.push_back(inv.describe(ring));
            tor[i]["by_internal_degree"] = by;
        }
        out["tor"] = tor;
        out["flat_dimension"] = r.flat_dimension ? Json(*r.flat_dimension) : Json(nullptr);
        return out;
    }
    const FiniteAlgebra a = io::load_algebra(o.algebra);
    const std::vector<Matrix> seq = sequence_from(o.sequence, a);
    QuotientModule m = QuotientModule::free(LeftModule::regular(a));
    if (!o.module.empty()) {
        m = io::load_module(o.module);
        if (!(m.ambient().algebra() == a)) throw ValidationError("algebra_mismatch", "module is over a different algebra");
    }
    const SequenceVerdict on_m = regular_sequence_check(seq, m);
    const TorReport r = finite_koszul_tor(seq, m);
    out["mode"] = "finite";
    out["regular_on_module"] = on_m.regular;
    out["failing_index"] = on_m.failing_index ? Json(*on_m.failing_index) : Json(nullptr);
    out["tor"] = tor_json(r.tor, a.ring());
    out["flat_dimension"] = r.flat_dimension ? Json(*r.flat_dimension) : Json(nullptr);
    return out;
}

Json cmd_bound(const Options& o) {
    long dk = 0;
    std::string dk_source = "user";
    if (o.dk) {
        dk = *o.dk;
    } else {
        dk = global_dimension(ring_from_name(o.ring));
        dk_source = "table (" + o.ring + ")";
    }
    const DimensionBound b = dimension_bound(o.fd, dk, o.fdk);
    return Json{{"command", "bound"},
                {"fd", b.flat_dimension},
                {"Dk", b.base_dimension},
                {"Dk_source", dk_source},
                {"fdk", b.base_flat_dimension},
                {"lower_bound", b.lower},
                {"not_quasi_free", b.not_quasi_free},
                {"statement", b.statement}};
}

}  // namespace

std::vector<std::pair<std::string, Json>> fixture_files() {
    std::vector<std::pair<std::string, Json>> out;
    for (const auto& [name, a] : fixtures::corpus()) out.emplace_back(name + ".json", io::algebra_to_json(a));

    for (const std::string name : {"dual_numbers_f2", "dual_numbers_q"}) {
        const FiniteAlgebra a = fixtures::by_name(name);
        const Bimodule reg = Bimodule::regular(a);
        const Json ref = name + ".json";
        out.emplace_back(name + "_regular.json", io::bimodule_to_json(reg, ref));
        out.emplace_back(name + "_trivial_ext.json",
                         io::extension_to_json(trivial_extension(reg), name + "_regular.json"));
        // B(x, x) = 1, all other basis pairs 0.
        Matrix b(a.ring(), 2, 4);
        b.set(0, 3, 1);
        out.emplace_back(name + "_xx_cocycle.json", io::cocycle_to_json(b));
        out.emplace_back(name + "_xx_ext.json",
                         io::extension_to_json(crossed_product_extension(reg, b), name + "_regular.json"));
        // b^1 of zeta(x) = 1; zeta vectorized at p * d + t.
        Matrix z(a.ring(), 4, 1);
        z.set(1, 0, 1);
        out.emplace_back(name + "_coboundary.json",
                         io::cocycle_to_json(Cochain::from_vector(2, false, 2, coboundary_matrix(reg, 1) * z).values));
    }

    const FiniteAlgebra z = fixtures::by_name("scalar_z");
    const LeftModule zreg = LeftModule::regular(z);
    out.emplace_back("z_mod_2.json",
                     io::module_to_json(QuotientModule::create(zreg, Matrix::from_rows(z.ring(), {{2}})), "scalar_z.json"));
    out.emplace_back("z_mod_4.json",
                     io::module_to_json(QuotientModule::create(zreg, Matrix::from_rows(z.ring(), {{4}})), "scalar_z.json"));
    out.emplace_back("z_seq_2.json", Json{{"sequence", Json::array({Json::array({"2"})})}});
    out.emplace_back("z_seq_6.json", Json{{"sequence", Json::array({Json::array({"6"})})}});
    out.emplace_back("z_seq_2_3.json", Json{{"sequence", Json::array({Json::array({"2"}), Json::array({"3"})})}});
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Hochschild cohomology and homology of finite-rank algebras", "hochkit"};
    app.require_subcommand(1);
    app.add_option("--output", o.output, "Write the report to this file");
    app.add_option("--guard", o.guard, "Maximum entries per dense matrix");

    auto* hh = app.add_subcommand("hh", "Hochschild (co)homology of an algebra with coefficients");
    hh->add_option("algebra", o.algebra, "Algebra file")->required();
    hh->add_option("--bimodule", o.bimodule, "Bimodule file (default: the algebra itself)");
    hh->add_option("--degree", o.degree, "Degree n")->required();
    auto* norm = hh->add_flag("--normalized", o.normalized, "Normalized complex (default when possible)");
    hh->add_flag("--unnormalized", o.unnormalized, "Raw bar cocomplex")->excludes(norm);
    hh->add_flag("--homology", o.homology, "Hochschild homology HH_n");
    hh->add_flag("--representatives", o.representatives, "Attach cocycle representatives");

    auto* analyze = app.add_subcommand("analyze", "Center, derivations, separability, quasi-freeness, HCdim");
    analyze->add_option("algebra", o.algebra, "Algebra file")->required();
    analyze->add_option("--cap", o.cap, "Largest syzygy level examined")->capture_default_str();
    analyze->add_option("--seed", o.seed, "Seed for random lifting checks")->capture_default_str();

    auto* ext = app.add_subcommand("extensions", "Square-zero extensions and 2-cocycles");
    ext->add_option("algebra", o.algebra, "Algebra file")->required();
    ext->add_option("bimodule", o.bimodule, "Bimodule file")->required();
    auto* en = ext->add_flag("--enumerate", o.enumerate, "List one cocycle per class (prime fields)");
    auto* cl = ext->add_option("--class", o.cocycle, "Decide whether a 2-cocycle is a coboundary");
    auto* li = ext->add_option("--lift", o.extension, "Decide whether an extension has a multiplicative section");
    en->excludes(cl, li);
    cl->excludes(li);

    auto* kz = app.add_subcommand("koszul", "Koszul complexes, regular sequences and Tor");
    kz->add_option("--vars", o.vars, "Number of polynomial variables");
    kz->add_option("--ring", o.ring, "Z, Q or F<p>")->capture_default_str();
    kz->add_option("--cap", o.tor_cap, "Internal degree cap");
    kz->add_option("--algebra", o.algebra, "Commutative algebra file");
    kz->add_option("--sequence", o.sequence, "Sequence file or inline JSON list of elements");
    kz->add_option("--module", o.module, "Module file (default: the algebra)");

    auto* bd = app.add_subcommand("bound", "Lower bound fd - D(k) - fd_k <= HCdim");
    bd->add_option("--fd", o.fd, "Flat dimension input")->required();
    auto* dk = bd->add_option("--Dk", o.dk, "Global dimension of k");
    bd->add_option("--ring", o.ring, "Take D(k) from the built-in table (Z or a field)")->excludes(dk);
    bd->add_option("--fdk", o.fdk, "Flat dimension of A over k")->capture_default_str();

    auto* fx = app.add_subcommand("fixture", "Print or write the bundled fixtures");
    fx->add_option("name", o.fixture, "Fixture file name, e.g. m2_q.json");
    fx->add_flag("--all", o.all, "Write every fixture into --dir");
    fx->add_flag("--list", o.list, "List fixture names");
    fx->add_option("--dir", o.dir, "Target directory for --all")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kValidation;
    }

    auto emit = [&](const Json& j) {
        const std::string text = io::dump(j);
        if (o.output.empty()) {
            out << text;
        } else {
            io::write_text(o.output, text);
        }
    };
    auto fail = [&](const Error& e, int code) {
        emit(Json{{"error", {{"stage", e.stage()}, {"message", e.what()}, {"witness", e.witness()}}}});
        return code;
    };

    try {
        GuardScope guard(o.guard);
        if (hh->parsed()) {
            emit(cmd_hh(o));
        } else if (analyze->parsed()) {
            emit(cmd_analyze(o));
        } else if (ext->parsed()) {
            emit(cmd_extensions(o));
        } else if (kz->parsed()) {
            emit(cmd_koszul(o));
        } else if (bd->parsed()) {
            emit(cmd_bound(o));
        } else if (fx->parsed()) {
            const auto files = fixture_files();
            if (o.list) {
                Json names = Json::array();
                for (const auto& f : files) names.push_back(f.first);
                emit(Json{{"fixtures", names}});
            } else if (o.all) {
                fs::create_directories(o.dir);
                for (const auto& [name, j] : files) io::write_text(fs::path(o.dir) / name, io::dump(j));
                emit(Json{{"written", files.size()}, {"dir", o.dir}});
            } else {
                const auto it = std::find_if(files.begin(), files.end(), [&](const auto& f) { return f.first == o.fixture; });
                if (it == files.end()) throw ValidationError("fixture", "unknown fixture " + o.fixture);
                emit(it->second);
            }
        }
        return kOk;
    } catch (const ValidationError& e) {
        return fail(e, kValidation);
    } catch (const SizeGuardError& e) {
        return fail(e, kSizeGuard);
    } catch (const Error& e) {
        return fail(e, kInternal);
    } catch (const Json::exception& e) {
        return fail(ValidationError("parse", e.what()), kValidation);
    } catch (const std::exception& e) {
        return fail(Error("internal", e.what()), kInternal);
    }
}

}  // namespace hochkit::cli
