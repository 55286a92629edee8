#include "hochkit/io.hpp"

#include <algorithm>
#include <fstream>

#include "hochkit/error.hpp"

namespace hochkit::io {

namespace {

bool is_primitive(const Json& j) { return !j.is_object() && !j.is_array(); }

void dump_into(std::string& out, const Json& j, std::size_t indent) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += inner + Json(key).dump() + ": ";
            dump_into(out, value, indent + 2);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (std::all_of(j.begin(), j.end(), is_primitive)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner;
            dump_into(out, j[i], indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

template <class F>
auto parsing(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ValidationError("parse", what + ": " + e.what());
    }
}

Scalar scalar_from_json(const ScalarRing& ring, const Json& j) {
    if (j.is_string()) return ring.parse(j.get<std::string>());
    if (j.is_number_integer()) return ring.reduce(Scalar(mpz_class(std::to_string(j.get<long long>()))));
    throw ValidationError("parse", "scalars must be decimal strings");
}

std::vector<Scalar> scalars_from_json(const ScalarRing& ring, const Json& j, std::size_t n, const std::string& what) {
    if (!j.is_array() || j.size() != n) {
        throw ValidationError("shape", what + ": expected " + std::to_string(n) + " entries");
    }
    std::vector<Scalar> out;
    for (const auto& x : j) out.push_back(scalar_from_json(ring, x));
    return out;
}

std::vector<Matrix> matrices_from_json(const ScalarRing& ring, const Json& j, std::size_t count, std::size_t rows,
                                       std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != count) {
        throw ValidationError("shape", what + ": expected " + std::to_string(count) + " matrices");
    }
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(matrix_from_json(ring, j[i], rows, cols, what + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(matrix_to_json(m));
    return out;
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    dump_into(out, j, 0);
    out += "\n";
    return out;
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("parse", "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ValidationError("parse", path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("io", "cannot write " + path.string());
    out << text;
}

Json ring_to_json(const ScalarRing& ring) {
    switch (ring.kind()) {
        case ScalarRing::Kind::Integers:
            return "Z";
        case ScalarRing::Kind::Rationals:
            return "Q";
        case ScalarRing::Kind::PrimeField:
            return Json{{"Fp", ring.characteristic()}};
    }
    return nullptr;
}

ScalarRing ring_from_json(const Json& j) {
    if (j == "Z") return ScalarRing::integers();
    if (j == "Q") return ScalarRing::rationals();
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer() && j["Fp"].get<long long>() > 0) {
        return ScalarRing::prime_field(j["Fp"].get<std::uint64_t>());
    }
    throw ValidationError("parse", "scalars must be \"Z\", \"Q\" or {\"Fp\": p}");
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.ring().format(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const ScalarRing& ring, const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& what) {
    if (!j.is_array() || j.size() != rows) {
        throw ValidationError("shape", what + ": expected " + std::to_string(rows) + " rows");
    }
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto row = scalars_from_json(ring, j[r], cols, what + " row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row[c]);
    }
    return m;
}

Json invariants_to_json(const KModuleInvariants& inv) {
    Json torsion = Json::array();
    for (const auto& t : inv.torsion) torsion.push_back(t.get_str());
    return Json{{"free_rank", inv.free_rank}, {"torsion", torsion}};
}

Json algebra_to_json(const FiniteAlgebra& a) {
    const ScalarRing& ring = a.ring();
    const std::size_t d = a.rank();
    Json unit = Json::array();
    for (std::size_t i = 0; i < d; ++i) unit.push_back(ring.format(a.unit()(i, 0)));
    Json mul = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < d; ++j) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < d; ++k) cell.push_back(ring.format(a.c(i, j, k)));
            row.push_back(std::move(cell));
        }
        mul.push_back(std::move(row));
    }
    return Json{{"scalars", ring_to_json(ring)}, {"rank", d}, {"basis", a.basis_names()}, {"unit", unit}, {"mul", mul}};
}

FiniteAlgebra algebra_from_json(const Json& j) {
    return parsing("algebra", [&] {
        AlgebraTable t;
        t.ring = ring_from_json(j.at("scalars"));
        const std::size_t d = j.at("rank").get<std::size_t>();
        if (d == 0) throw ValidationError("shape", "rank must be positive");
        if (j.contains("basis")) {
            t.basis = j.at("basis").get<std::vector<std::string>>();
            if (t.basis.size() != d) throw ValidationError("shape", "basis: expected " + std::to_string(d) + " names");
        } else {
            for (std::size_t i = 0; i < d; ++i) t.basis.push_back("e" + std::to_string(i));
        }
        t.unit = scalars_from_json(t.ring, j.at("unit"), d, "unit");
        const Json& mul = j.at("mul");
        if (!mul.is_array() || mul.size() != d) throw ValidationError("shape", "mul: expected d x d x d entries");
        for (std::size_t i = 0; i < d; ++i) {
            if (!mul[i].is_array() || mul[i].size() != d) throw ValidationError("shape", "mul: expected d x d x d entries");
            for (std::size_t b = 0; b < d; ++b) {
                const auto cell = scalars_from_json(t.ring, mul[i][b], d, "mul");
                t.mul.insert(t.mul.end(), cell.begin(), cell.end());
            }
        }
        return FiniteAlgebra::create(std::move(t));
    });
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) { return algebra_from_json(read_json(path)); }

FiniteAlgebra algebra_ref(const Json& j, const std::filesystem::path& base) {
    if (j.is_string()) return load_algebra(base / j.get<std::string>());
    return algebra_from_json(j);
}

Json bimodule_to_json(const Bimodule& m, const Json& algebra) {
    return Json{{"algebra", algebra},
                {"rank", m.rank()},
                {"left", matrices_to_json(m.left_actions())},
                {"right", matrices_to_json(m.right_actions())}};
}

Bimodule bimodule_from_json(const Json& j, const std::filesystem::path& base) {
    return parsing("bimodule", [&] {
        FiniteAlgebra a = algebra_ref(j.at("algebra"), base);
        const std::size_t r = j.at("rank").get<std::size_t>(), d = a.rank();
        auto left = matrices_from_json(a.ring(), j.at("left"), d, r, r, "left");
        auto right = matrices_from_json(a.ring(), j.at("right"), d, r, r, "right");
        return Bimodule::create(std::move(a), r, std::move(left), std::move(right));
    });
}

Bimodule load_bimodule(const std::filesystem::path& path) {
    return bimodule_from_json(read_json(path), path.parent_path());
}

Json module_to_json(const QuotientModule& m, const Json& algebra) {
    Json out{{"algebra", algebra},
             {"rank", m.ambient().rank()},
             {"actions", matrices_to_json(m.ambient().actions())}};
    if (m.relations().cols() > 0) out["relations"] = matrix_to_json(m.relations().transpose());
    return out;
}

QuotientModule module_from_json(const Json& j, const std::filesystem::path& base) {
    return parsing("module", [&] {
        FiniteAlgebra a = algebra_ref(j.at("algebra"), base);
        const std::size_t r = j.at("rank").get<std::size_t>();
        auto actions = matrices_from_json(a.ring(), j.at("actions"), a.rank(), r, r, "actions");
        LeftModule lm = LeftModule::create(a, r, std::move(actions));
        if (!j.contains("relations")) return QuotientModule::free(std::move(lm));
        const Json& rel = j.at("relations");
        if (!rel.is_array()) throw ValidationError("shape", "relations: expected a list of vectors");
        const Matrix rows = matrix_from_json(a.ring(), rel, rel.size(), r, "relations");
        return QuotientModule::create(std::move(lm), rows.transpose());
    });
}

QuotientModule load_module(const std::filesystem::path& path) {
    return module_from_json(read_json(path), path.parent_path());
}

Json extension_to_json(const ExtensionPresentation& e, const Json& module) {
    return Json{{"module", module},
                {"total", algebra_to_json(e.total)},
                {"projection", matrix_to_json(e.projection)},
                {"inclusion", matrix_to_json(e.inclusion)},
                {"section", matrix_to_json(e.section)}};
}

ExtensionPresentation extension_from_json(const Json& j, const std::filesystem::path& base) {
    return parsing("extension", [&] {
        const Json& mj = j.at("module");
        Bimodule m = mj.is_string() ? load_bimodule(base / mj.get<std::string>()) : bimodule_from_json(mj, base);
        FiniteAlgebra total = algebra_ref(j.at("total"), base);
        const ScalarRing& ring = total.ring();
        const std::size_t d = m.algebra().rank(), n = total.rank(), r = m.rank();
        ExtensionPresentation e{total, m, matrix_from_json(ring, j.at("projection"), d, n, "projection"),
                                matrix_from_json(ring, j.at("inclusion"), n, r, "inclusion"),
                                matrix_from_json(ring, j.at("section"), n, d, "section")};
        validate_extension(e);
        return e;
    });
}

ExtensionPresentation load_extension(const std::filesystem::path& path) {
    return extension_from_json(read_json(path), path.parent_path());
}

Json cocycle_to_json(const Matrix& b) { return Json{{"cocycle", matrix_to_json(b)}}; }

Matrix cocycle_from_json(const Json& j, const Bimodule& m) {
    return parsing("cocycle", [&] {
        const std::size_t d = m.algebra().rank();
        return matrix_from_json(m.algebra().ring(), j.at("cocycle"), m.rank(), d * d, "cocycle");
    });
}

}  // namespace hochkit::io
