#include "hochkit/bar_complex.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "hochkit/error.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

namespace {

enum class Kind { Differential, Homotopy };

using CacheKey = std::tuple<std::string, long, bool, Kind>;

std::mutex g_cache_mutex;
std::map<CacheKey, std::shared_ptr<const Matrix>> g_cache;

void require_unital(const FiniteAlgebra& a) {
    if (!a.has_unital_basis()) {
        throw ValidationError("unital_basis",
                              "normalized complex needs the unit as first basis vector; canonicalize the basis first");
    }
}

// Slot sizes of level n (n + 2 slots; level -1 has the single slot A).
std::vector<std::size_t> slot_sizes(const FiniteAlgebra& a, long n, bool normalized) {
    const std::size_t d = a.rank();
    if (n < 0) return {d};
    const std::size_t slots = static_cast<std::size_t>(n) + 2;
    std::vector<std::size_t> s(slots, normalized ? d - 1 : d);
    s.front() = d;
    s.back() = d;
    return s;
}

std::size_t product_checked(const std::vector<std::size_t>& sizes) {
    std::size_t r = 1;
    for (std::size_t s : sizes) {
        if (s != 0 && r > (std::size_t(1) << 62) / s) {
            throw SizeGuardError("size_guard", "bar chain module rank overflows", std::to_string(sizes.size()));
        }
        r *= s;
    }
    return r;
}

std::vector<std::size_t> digits_of(std::size_t idx, const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> dg(sizes.size());
    for (std::size_t s = sizes.size(); s-- > 0;) {
        dg[s] = idx % sizes[s];
        idx /= sizes[s];
    }
    return dg;
}

std::size_t index_of(const std::vector<std::size_t>& dg, const std::vector<std::size_t>& sizes) {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < sizes.size(); ++s) idx = idx * sizes[s] + dg[s];
    return idx;
}

SparseColumn finish(std::map<std::size_t, Scalar>& acc, const ScalarRing& ring) {
    SparseColumn out;
    for (auto& [row, v] : acc) {
        Scalar r = ring.reduce(v);
        if (r != 0) out.emplace_back(row, std::move(r));
    }
    return out;
}

SparseColumn homotopy_column_impl(const FiniteAlgebra& a, long n, bool normalized, std::size_t col) {
    const auto in = slot_sizes(a, n, normalized);
    const auto out = slot_sizes(a, n + 1, normalized);
    const auto dg = digits_of(col, in);
    std::map<std::size_t, Scalar> acc;
    std::vector<std::size_t> od(out.size());
    for (std::size_t s = 0; s < dg.size(); ++s) od[s + 1] = dg[s];
    if (normalized && n >= 0) {
        // 1 (x) class of a_0; e_0 = 1 has class zero.
        if (dg[0] == 0) return {};
        od[0] = 0;
        od[1] = dg[0] - 1;
        acc[index_of(od, out)] = 1;
    } else {
        for (std::size_t p = 0; p < a.rank(); ++p) {
            const Scalar& u = a.unit()(p, 0);
            if (u == 0) continue;
            od[0] = p;
            acc[index_of(od, out)] += u;
        }
    }
    return finish(acc, a.ring());
}

std::shared_ptr<const Matrix> dense_from_columns(const FiniteAlgebra& a, std::size_t rows, std::size_t cols,
                                                 const std::function<SparseColumn(std::size_t)>& column) {
    auto m = std::make_shared<Matrix>(a.ring(), rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [r, v] : column(c)) m->set(r, c, v);
    }
    return m;
}

std::shared_ptr<const Matrix> cached(const FiniteAlgebra& a, long n, bool normalized, Kind kind,
                                     const std::function<std::shared_ptr<const Matrix>()>& build) {
    CacheKey key{a.fingerprint(), n, normalized, kind};
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    auto value = build();
    std::lock_guard lock(g_cache_mutex);
    g_cache[key] = value;
    return value;
}

// Coordinates of vectors in the column span of a basis. Uses rows where the
// basis restricts to the identity when available (echelon kernels), else solve().
Matrix coordinates_in(const Matrix& basis, const Matrix& vectors, bool trusted = false) {
    const std::size_t r = basis.cols();
    std::vector<std::size_t> pick(r, basis.rows());
    for (std::size_t row = 0; row < basis.rows(); ++row) {
        std::size_t hit = r;
        bool unit_row = true;
        for (std::size_t c = 0; c < r && unit_row; ++c) {
            const Scalar& x = basis(row, c);
            if (x == 0) continue;
            if (x == 1 && hit == r) {
                hit = c;
            } else {
                unit_row = false;
            }
        }
        if (unit_row && hit < r && pick[hit] == basis.rows()) pick[hit] = row;
    }
    bool all = true;
    for (std::size_t p : pick) all = all && p < basis.rows();
    if (all) {
        Matrix coords(basis.ring(), r, vectors.cols());
        for (std::size_t c = 0; c < r; ++c) {
            for (std::size_t j = 0; j < vectors.cols(); ++j) coords.set(c, j, vectors(pick[c], j));
        }
        if (trusted || basis * coords == vectors) return coords;
        throw ValidationError("containment", "vector does not lie in the submodule");
    }
    auto sol = solve(basis, vectors);
    if (!sol) throw ValidationError("containment", "vector does not lie in the submodule");
    return std::move(*sol);
}

}  // namespace

std::size_t bar_rank(const FiniteAlgebra& a, long n, bool normalized) {
    if (n < -1) throw ValidationError("level", "bar level must be at least -1");
    return product_checked(slot_sizes(a, n, normalized));
}

SparseColumn bar_differential_column(const FiniteAlgebra& a, long n, bool normalized, std::size_t col) {
    if (n < 0) throw ValidationError("level", "bar differential needs n >= 0");
    if (normalized) require_unital(a);
    const auto in = slot_sizes(a, n, normalized);
    const auto out = slot_sizes(a, n - 1, normalized);
    const auto dg = digits_of(col, in);
    const std::size_t d = a.rank();
    const std::size_t last = in.size() - 1;
    auto actual = [&](std::size_t s) {
        const bool middle = normalized && s != 0 && s != last;
        return middle ? dg[s] + 1 : dg[s];
    };
    std::map<std::size_t, Scalar> acc;
    std::vector<std::size_t> od(out.size());
    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
        const int sign = i % 2 == 0 ? 1 : -1;
        for (std::size_t s = 0; s < i; ++s) od[s] = dg[s];
        for (std::size_t s = i + 2; s < in.size(); ++s) od[s - 1] = dg[s];
        const std::size_t x = actual(i), y = actual(i + 1);
        const bool middle = normalized && i != 0 && i != out.size() - 1;
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar& c = a.c(x, y, k);
            if (c == 0) continue;
            if (middle) {
                if (k == 0) continue;
                od[i] = k - 1;
            } else {
                od[i] = k;
            }
            acc[index_of(od, out)] += sign * c;
        }
    }
    return finish(acc, a.ring());
}

std::shared_ptr<const Matrix> bar_differential(const FiniteAlgebra& a, long n, bool normalized) {
    if (n < 0) throw ValidationError("level", "bar differential needs n >= 0");
    if (normalized) require_unital(a);
    return cached(a, n, normalized, Kind::Differential, [&] {
        const std::size_t rows = bar_rank(a, n - 1, normalized), cols = bar_rank(a, n, normalized);
        check_entry_limit(rows, cols, "bar differential b'_" + std::to_string(n));
        return dense_from_columns(a, rows, cols,
                                  [&](std::size_t c) { return bar_differential_column(a, n, normalized, c); });
    });
}

std::shared_ptr<const Matrix> normalized_bar_differential(const FiniteAlgebra& a, long n) {
    return bar_differential(a, n, true);
}

SparseColumn contracting_homotopy_column(const FiniteAlgebra& a, long n, bool normalized, std::size_t col) {
    if (n < -1) throw ValidationError("level", "homotopy needs n >= -1");
    if (normalized) require_unital(a);
    if (col >= bar_rank(a, n, normalized)) throw ValidationError("index", "column out of range");
    return homotopy_column_impl(a, n, normalized, col);
}

std::shared_ptr<const Matrix> contracting_homotopy(const FiniteAlgebra& a, long n, bool normalized) {
    if (n < -1) throw ValidationError("level", "homotopy needs n >= -1");
    if (normalized) require_unital(a);
    return cached(a, n, normalized, Kind::Homotopy, [&] {
        const std::size_t rows = bar_rank(a, n + 1, normalized), cols = bar_rank(a, n, normalized);
        check_entry_limit(rows, cols, "contracting homotopy s_" + std::to_string(n));
        return dense_from_columns(a, rows, cols,
                                  [&](std::size_t c) { return homotopy_column_impl(a, n, normalized, c); });
    });
}

Bimodule bar_chain_bimodule(const FiniteAlgebra& a, long n, bool normalized) {
    if (normalized) require_unital(a);
    if (n < 0) return Bimodule::regular(a);
    const std::size_t rank = bar_rank(a, n, normalized);
    const std::size_t rest = rank / a.rank();
    check_entry_limit(rank, rank, "bar chain module action");
    const Matrix id = Matrix::identity(a.ring(), rest);
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        l.push_back(kronecker(a.left_mul(i), id));
        r.push_back(kronecker(id, a.right_mul(i)));
    }
    return Bimodule::trusted(a, rank, std::move(l), std::move(r));
}

Matrix bar_act(const FiniteAlgebra& a, long n, bool normalized, std::size_t i, bool right, const Matrix& x) {
    const std::size_t d = a.rank();
    const std::size_t rows = bar_rank(a, n, normalized);
    if (x.rows() != rows) throw ValidationError("shape", "vectors do not belong to bar level " + std::to_string(n));
    if (n < 0) return (right ? a.right_mul(i) : a.left_mul(i)) * x;
    const std::size_t rest = rows / d;
    const Matrix& mul = right ? a.right_mul(i) : a.left_mul(i);
    Matrix out(a.ring(), rows, x.cols());
    for (std::size_t f = 0; f < d; ++f) {
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar& c = mul(k, f);
            if (c == 0) continue;
            for (std::size_t r = 0; r < rest; ++r) {
                const std::size_t src = right ? r * d + f : f * rest + r;
                const std::size_t dst = right ? r * d + k : k * rest + r;
                for (std::size_t col = 0; col < x.cols(); ++col) {
                    const Scalar& v = x(src, col);
                    if (v != 0) out.add_to(dst, col, c * v);
                }
            }
        }
    }
    return out;
}

std::size_t bar_generators(const FiniteAlgebra& a, long n, bool normalized) {
    if (n < 0) throw ValidationError("level", "generators exist for levels n >= 0");
    const std::size_t d = a.rank();
    return bar_rank(a, n, normalized) / (d * d);
}

Matrix bar_generator(const FiniteAlgebra& a, long n, bool normalized, std::size_t t) {
    const std::size_t d = a.rank();
    const std::size_t v = bar_generators(a, n, normalized);
    Matrix out(a.ring(), bar_rank(a, n, normalized), 1);
    for (std::size_t p = 0; p < d; ++p) {
        const Scalar& up = a.unit()(p, 0);
        if (up == 0) continue;
        for (std::size_t q = 0; q < d; ++q) {
            const Scalar& uq = a.unit()(q, 0);
            if (uq != 0) out.add_to((p * v + t) * d + q, 0, up * uq);
        }
    }
    return out;
}

Matrix induced_map(const FiniteAlgebra& a, long n, long target, bool normalized, const Matrix& values) {
    const std::size_t d = a.rank();
    const std::size_t v = bar_generators(a, n, normalized);
    const std::size_t rows = bar_rank(a, target, normalized);
    if (values.rows() != rows || values.cols() != v) {
        throw ValidationError("shape", "induced map needs one level-" + std::to_string(target) +
                                           " vector per generator of level " + std::to_string(n));
    }
    check_entry_limit(rows, bar_rank(a, n, normalized), "induced map");
    Matrix out(a.ring(), rows, bar_rank(a, n, normalized));
    for (std::size_t p = 0; p < d; ++p) {
        const Matrix left = bar_act(a, target, normalized, p, false, values);
        for (std::size_t q = 0; q < d; ++q) {
            const Matrix both = bar_act(a, target, normalized, q, true, left);
            for (std::size_t t = 0; t < v; ++t) {
                const std::size_t col = (p * v + t) * d + q;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (both(r, t) != 0) out.set(r, col, both(r, t));
                }
            }
        }
    }
    return out;
}

SyzygyModule syzygy(const FiniteAlgebra& a, long n, bool normalized) {
    if (n < 0) throw ValidationError("level", "syzygy level must be at least 0");
    if (normalized) require_unital(a);
    if (n == 0) return SyzygyModule{0, normalized, Matrix::identity(a.ring(), a.rank()), Bimodule::regular(a)};
    const Matrix basis = kernel_basis(*bar_differential(a, n - 1, normalized));
    // ker b' is a sub-bimodule, so the restricted actions need no containment check.
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        l.push_back(coordinates_in(basis, bar_act(a, n - 1, normalized, i, false, basis), true));
        r.push_back(coordinates_in(basis, bar_act(a, n - 1, normalized, i, true, basis), true));
    }
    return SyzygyModule{n, normalized, basis, Bimodule::trusted(a, basis.cols(), std::move(l), std::move(r))};
}

Matrix syzygy_coordinates(const SyzygyModule& omega, const Matrix& element) {
    return coordinates_in(omega.basis, element);
}

Matrix universal_derivation(const FiniteAlgebra& a) {
    const std::size_t d = a.rank();
    const SyzygyModule omega = syzygy(a, 1);
    Matrix vecs(a.ring(), d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t p = 0; p < d; ++p) {
            const Scalar& u = a.unit()(p, 0);
            if (u == 0) continue;
            vecs.add_to(p * d + i, i, u);
            vecs.add_to(i * d + p, i, -u);
        }
    }
    return syzygy_coordinates(omega, vecs);
}

Matrix derivation_factorization(const Bimodule& m, const Matrix& d_map) {
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank();
    if (d_map.rows() != m.rank() || d_map.cols() != d) {
        throw ValidationError("shape", "derivation must be an m x d matrix");
    }
    if (auto w = derivation_witness(m, d_map)) {
        throw ValidationError("derivation", "map is not a derivation at basis pair (" + std::to_string((*w)[0]) + "," +
                                                std::to_string((*w)[1]) + ")",
                              "(" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + ")");
    }
    const SyzygyModule omega = syzygy(a, 1);
    Matrix f_full(a.ring(), m.rank(), d * d);
    for (std::size_t p = 0; p < d; ++p) {
        const Matrix img = m.left(p) * d_map;
        for (std::size_t q = 0; q < d; ++q) {
            for (std::size_t r = 0; r < m.rank(); ++r) f_full.set(r, p * d + q, img(r, q));
        }
    }
    Matrix f = f_full * omega.basis;
    for (std::size_t i = 0; i < d; ++i) {
        if (f * omega.bimodule.left(i) != m.left(i) * f || f * omega.bimodule.right(i) != m.right(i) * f) {
            throw Error("internal", "factorization of a derivation is not a bimodule map");
        }
    }
    return f;
}

void clear_bar_cache() {
    std::lock_guard lock(g_cache_mutex);
    g_cache.clear();
}

}  // namespace hochkit
