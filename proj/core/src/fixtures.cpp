#include "hochkit/fixtures.hpp"

#include "hochkit/error.hpp"

namespace hochkit::fixtures {

namespace {

AlgebraTable empty_table(const ScalarRing& k, std::vector<std::string> names) {
    AlgebraTable t;
    t.ring = k;
    t.basis = std::move(names);
    const std::size_t d = t.basis.size();
    t.unit.assign(d, 0);
    t.mul.assign(d * d * d, 0);
    return t;
}

void set(AlgebraTable& t, std::size_t i, std::size_t j, std::size_t k, long v = 1) {
    const std::size_t d = t.rank();
    t.mul[(i * d + j) * d + k] = v;
}

// Matrix-unit algebra on the given (row, col) pairs of 2x2 units.
FiniteAlgebra matrix_units(const ScalarRing& k, const std::vector<std::pair<int, int>>& units) {
    std::vector<std::string> names;
    for (auto [r, c] : units) names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
    AlgebraTable t = empty_table(k, names);
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (units[i].first == units[i].second) t.unit[i] = 1;
        for (std::size_t j = 0; j < units.size(); ++j) {
            if (units[i].second != units[j].first) continue;
            for (std::size_t l = 0; l < units.size(); ++l) {
                if (units[l].first == units[i].first && units[l].second == units[j].second) set(t, i, j, l);
            }
        }
    }
    return FiniteAlgebra::create(std::move(t));
}

}  // namespace

FiniteAlgebra base_ring(const ScalarRing& k) {
    AlgebraTable t = empty_table(k, {"1"});
    t.unit[0] = 1;
    set(t, 0, 0, 0);
    return FiniteAlgebra::create(std::move(t));
}

FiniteAlgebra truncated_polynomial(const ScalarRing& k, std::size_t n) {
    if (n == 0) throw ValidationError("shape", "truncation degree must be positive");
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i < n; ++i) names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    AlgebraTable t = empty_table(k, names);
    t.unit[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) set(t, i, j, i + j);
    }
    return FiniteAlgebra::create(std::move(t));
}

FiniteAlgebra dual_numbers(const ScalarRing& k) { return truncated_polynomial(k, 2); }

FiniteAlgebra product_ring(const ScalarRing& k) {
    AlgebraTable t = empty_table(k, {"p", "q"});
    t.unit = {1, 1};
    set(t, 0, 0, 0);
    set(t, 1, 1, 1);
    return FiniteAlgebra::create(std::move(t));
}

FiniteAlgebra matrix_algebra(const ScalarRing& k) { return matrix_units(k, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

FiniteAlgebra upper_triangular(const ScalarRing& k) { return matrix_units(k, {{0, 0}, {0, 1}, {1, 1}}); }

FiniteAlgebra truncated_free(const ScalarRing& k) {
    const FiniteAlgebra kk = base_ring(k);
    std::vector<Matrix> act(1, Matrix::identity(k, 2));
    const Bimodule m = Bimodule::create(kk, 2, act, act);
    return truncated_tensor_algebra(kk, m, 2);
}

LeftModule trivial_module(const FiniteAlgebra& a) {
    if (!a.has_unital_basis()) throw ValidationError("unital_basis", "trivial module needs a unital basis");
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        Matrix m(a.ring(), 1, 1);
        m.set(0, 0, i == 0 ? 1 : 0);
        act.push_back(std::move(m));
    }
    return LeftModule::create(a, 1, std::move(act));
}

std::vector<NamedAlgebra> corpus() {
    const ScalarRing q = ScalarRing::rationals(), z = ScalarRing::integers(), f2 = ScalarRing::prime_field(2);
    return {
        {"scalar_ring", base_ring(q)},
        {"scalar_f2", base_ring(f2)},
        {"scalar_z", base_ring(z)},
        {"dual_numbers_q", dual_numbers(q)},
        {"dual_numbers_f2", dual_numbers(f2)},
        {"dual_numbers_Z", dual_numbers(z)},
        {"zxz", product_ring(z)},
        {"m2_q", matrix_algebra(q)},
        {"upper_triangular_q", upper_triangular(q)},
        {"free2_trunc2_q", truncated_free(q)},
        {"cubic_z", truncated_polynomial(z, 3)},
    };
}

FiniteAlgebra by_name(const std::string& name) {
    for (auto& entry : corpus()) {
        if (entry.name == name) return entry.algebra;
    }
    throw ValidationError("fixture", "unknown fixture " + name, name);
}

}  // namespace hochkit::fixtures
