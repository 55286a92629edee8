#include "hochkit/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

// ---------------------------------------------------------------------------
// Field engines. Elimination runs on plain value arrays: mpq for Q and 64-bit
// residues for F_p.

struct RationalField {
    using T = mpq_class;
    static bool is_zero(const T& x) { return x == 0; }
    static T from(const Scalar& s) { return s; }
    static Scalar to(const T& x) { return x; }
    static T inv(const T& x) { return T(1) / x; }
    static void mul_assign(T& a, const T& b) { a *= b; }
    // a -= f * b
    static void sub_mul(T& a, const T& f, const T& b) { a -= f * b; }
};

struct ResidueField {
    using T = std::uint64_t;
    __extension__ typedef unsigned __int128 u128;
    std::uint64_t p;

    [[nodiscard]] bool is_zero(T x) const { return x == 0; }
    [[nodiscard]] T from(const Scalar& s) const { return mpz_fdiv_ui(s.get_num_mpz_t(), p); }
    [[nodiscard]] static Scalar to(T x) { return Scalar(static_cast<unsigned long>(x)); }
    [[nodiscard]] T mul(T a, T b) const { return static_cast<T>(static_cast<u128>(a) * b % p); }
    [[nodiscard]] T inv(T x) const {
        T result = 1;
        T base = x;
        T e = p - 2;
        while (e != 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }
    void mul_assign(T& a, T b) const { a = mul(a, b); }
    void sub_mul(T& a, T f, T b) const {
        const T prod = mul(f, b);
        a = a >= prod ? a - prod : a + (p - prod);
    }
};

template <class F>
struct Dense {
    std::vector<typename F::T> a;
    std::size_t rows = 0;
    std::size_t cols = 0;
    typename F::T& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const typename F::T& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <class F>
Dense<F> load(const F& f, const Matrix& m) {
    Dense<F> d;
    d.rows = m.rows();
    d.cols = m.cols();
    d.a.reserve(m.entries().size());
    for (const auto& x : m.entries()) d.a.push_back(f.from(x));
    return d;
}

// Gauss-Jordan elimination restricted to pivots in columns [0, pivot_limit).
// With reduce == false only rows below the pivot are cleared.
template <class F>
std::vector<std::size_t> eliminate(const F& f, Dense<F>& d, std::size_t pivot_limit, bool reduce) {
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < d.rows; ++c) {
        std::size_t pr = d.rows;
        for (std::size_t i = r; i < d.rows; ++i) {
            if (!f.is_zero(d.at(i, c))) {
                pr = i;
                break;
            }
        }
        if (pr == d.rows) continue;
        if (pr != r) {
            for (std::size_t j = c; j < d.cols; ++j) std::swap(d.at(pr, j), d.at(r, j));
        }
        const auto inv = f.inv(d.at(r, c));
        support.clear();
        for (std::size_t j = c; j < d.cols; ++j) {
            if (!f.is_zero(d.at(r, j))) {
                f.mul_assign(d.at(r, j), inv);
                support.push_back(j);
            }
        }
        const std::size_t start = reduce ? 0 : r + 1;
        for (std::size_t i = start; i < d.rows; ++i) {
            if (i == r || f.is_zero(d.at(i, c))) continue;
            const auto factor = d.at(i, c);
            for (std::size_t j : support) f.sub_mul(d.at(i, j), factor, d.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
Matrix field_kernel(const F& f, const Matrix& m) {
    Dense<F> d = load(f, m);
    const auto pivots = eliminate(f, d, d.cols, true);
    std::vector<bool> is_pivot(d.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    const std::size_t nullity = d.cols - pivots.size();
    Matrix k(m.ring(), d.cols, nullity);
    std::size_t col = 0;
    for (std::size_t free = 0; free < d.cols; ++free) {
        if (is_pivot[free]) continue;
        k.set(free, col, Scalar(1));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (!f.is_zero(d.at(r, free))) k.set(pivots[r], col, -f.to(d.at(r, free)));
        }
        ++col;
    }
    return k;
}

template <class F>
std::optional<Matrix> field_solve(const F& f, const Matrix& m, const Matrix& rhs) {
    Dense<F> d;
    d.rows = m.rows();
    d.cols = m.cols() + rhs.cols();
    d.a.resize(d.rows * d.cols);
    for (std::size_t r = 0; r < d.rows; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) d.at(r, c) = f.from(m(r, c));
        for (std::size_t c = 0; c < rhs.cols(); ++c) d.at(r, m.cols() + c) = f.from(rhs(r, c));
    }
    const auto pivots = eliminate(f, d, m.cols(), true);
    for (std::size_t r = pivots.size(); r < d.rows; ++r) {
        for (std::size_t c = m.cols(); c < d.cols; ++c) {
            if (!f.is_zero(d.at(r, c))) return std::nullopt;
        }
    }
    Matrix x(m.ring(), m.cols(), rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (std::size_t c = 0; c < rhs.cols(); ++c) x.set(pivots[r], c, f.to(d.at(r, m.cols() + c)));
    }
    return x;
}

template <class F>
std::vector<std::size_t> field_pivots(const F& f, const Matrix& m, bool reduce) {
    Dense<F> d = load(f, m);
    return eliminate(f, d, d.cols, reduce);
}

template <class Fn>
decltype(auto) with_field(const ScalarRing& ring, Fn&& fn) {
    if (ring.kind() == ScalarRing::Kind::PrimeField) return fn(ResidueField{ring.characteristic()});
    return fn(RationalField{});
}

// ---------------------------------------------------------------------------
// Integer engine.

struct IntDense {
    std::vector<mpz_class> a;
    std::size_t rows = 0;
    std::size_t cols = 0;
    mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols; ++c) {
            if (at(j, c) != 0) at(i, c) -= q * at(j, c);
        }
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows; ++r) {
            if (at(r, j) != 0) at(r, i) -= q * at(r, j);
        }
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) at(i, c) = -at(i, c);
    }
    void negate_col(std::size_t i) {
        for (std::size_t r = 0; r < rows; ++r) at(r, i) = -at(r, i);
    }
};

IntDense int_load(const Matrix& m) {
    if (m.ring().kind() != ScalarRing::Kind::Integers) {
        throw ValidationError("ring", "integer routine called on a matrix over " + m.ring().name());
    }
    IntDense d;
    d.rows = m.rows();
    d.cols = m.cols();
    d.a.reserve(m.entries().size());
    for (const auto& x : m.entries()) d.a.push_back(x.get_num());
    return d;
}

IntDense int_identity(std::size_t n) {
    IntDense d;
    d.rows = d.cols = n;
    d.a.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 1;
    return d;
}

Matrix int_store(const IntDense& d) {
    Matrix m(ScalarRing::integers(), d.rows, d.cols);
    for (std::size_t r = 0; r < d.rows; ++r) {
        for (std::size_t c = 0; c < d.cols; ++c) m.set(r, c, Scalar(d.at(r, c)));
    }
    return m;
}

// Integer row echelon form on columns [0, pivot_limit) using smallest-pivot
// Euclidean reduction; rows carry any trailing augmentation. Returns pivot
// columns; rows >= pivots.size() are zero on [0, pivot_limit).
std::vector<std::size_t> int_row_echelon(IntDense& d, std::size_t pivot_limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < d.rows; ++c) {
        while (true) {
            std::size_t best = d.rows;
            for (std::size_t i = r; i < d.rows; ++i) {
                if (d.at(i, c) == 0) continue;
                if (best == d.rows || abs(d.at(i, c)) < abs(d.at(best, c))) best = i;
            }
            if (best == d.rows) break;
            d.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < d.rows; ++i) {
                if (d.at(i, c) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d.at(i, c).get_mpz_t(), d.at(r, c).get_mpz_t());
                d.row_sub(i, r, q);
                if (d.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < d.rows && d.at(r, c) != 0) {
            pivots.push_back(c);
            ++r;
        }
    }
    return pivots;
}

// Brings an echelon form to Hermite normal form: positive pivots, entries above
// each pivot reduced into [0, pivot).
void int_hermite_reduce(IntDense& d, const std::vector<std::size_t>& pivots) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::size_t c = pivots[r];
        if (d.at(r, c) < 0) d.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), d.at(i, c).get_mpz_t(), d.at(r, c).get_mpz_t());
            d.row_sub(i, r, q);
        }
    }
}

// Rows of `rows` (count x n) -> Hermite basis of their row lattice, as columns.
Matrix int_lattice_basis_from_rows(IntDense rows) {
    const auto pivots = int_row_echelon(rows, rows.cols);
    int_hermite_reduce(rows, pivots);
    Matrix out(ScalarRing::integers(), rows.cols, pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (std::size_t c = 0; c < rows.cols; ++c) out.set(c, r, Scalar(rows.at(r, c)));
    }
    return out;
}

IntDense int_transpose(const IntDense& d) {
    IntDense t;
    t.rows = d.cols;
    t.cols = d.rows;
    t.a.resize(d.a.size());
    for (std::size_t r = 0; r < d.rows; ++r) {
        for (std::size_t c = 0; c < d.cols; ++c) t.at(c, r) = d.at(r, c);
    }
    return t;
}

Matrix int_kernel(const Matrix& m) {
    // Row-reduce [M^T | I]; rows whose left block vanishes span the kernel lattice.
    const IntDense mt = int_transpose(int_load(m));
    IntDense aug;
    aug.rows = mt.rows;
    aug.cols = mt.cols + mt.rows;
    aug.a.resize(aug.rows * aug.cols);
    for (std::size_t r = 0; r < mt.rows; ++r) {
        for (std::size_t c = 0; c < mt.cols; ++c) aug.at(r, c) = mt.at(r, c);
        aug.at(r, mt.cols + r) = 1;
    }
    const auto pivots = int_row_echelon(aug, mt.cols);
    IntDense kernel_rows;
    kernel_rows.rows = aug.rows - pivots.size();
    kernel_rows.cols = mt.rows;
    kernel_rows.a.resize(kernel_rows.rows * kernel_rows.cols);
    for (std::size_t r = pivots.size(); r < aug.rows; ++r) {
        for (std::size_t c = 0; c < mt.rows; ++c) kernel_rows.at(r - pivots.size(), c) = aug.at(r, mt.cols + c);
    }
    Matrix basis = int_lattice_basis_from_rows(std::move(kernel_rows));
    if (basis.cols() == 0) return Matrix(ScalarRing::integers(), m.cols(), 0);
    return basis;
}

struct IntSmith {
    IntDense d, u, v, u_inv;
    std::size_t rank = 0;
};

IntSmith int_smith(IntDense a) {
    IntSmith s;
    s.u = int_identity(a.rows);
    s.u_inv = int_identity(a.rows);
    s.v = int_identity(a.cols);
    const std::size_t limit = std::min(a.rows, a.cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        s.u.swap_rows(i, j);
        s.u_inv.swap_cols(i, j);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        s.v.swap_cols(i, j);
    };
    auto row_sub = [&](std::size_t i, std::size_t j, const mpz_class& q) {
        a.row_sub(i, j, q);
        s.u.row_sub(i, j, q);
        // (E U)^-1 = U^-1 E^-1; E^-1 adds q * row_j back, i.e. col_j += q * col_i.
        s.u_inv.col_sub(j, i, -q);
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const mpz_class& q) {
        a.col_sub(i, j, q);
        s.v.col_sub(i, j, q);
    };

    std::size_t t = 0;
    for (; t < limit; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t br = a.rows, bc = a.cols;
        for (std::size_t i = t; i < a.rows; ++i) {
            for (std::size_t j = t; j < a.cols; ++j) {
                if (a.at(i, j) == 0) continue;
                if (br == a.rows || abs(a.at(i, j)) < abs(a.at(br, bc))) {
                    br = i;
                    bc = j;
                }
            }
        }
        if (br == a.rows) break;
        swap_rows(t, br);
        swap_cols(t, bc);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows; ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                row_sub(i, t, q);
                if (a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols; ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                col_sub(j, t, q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; promote it.
                std::size_t br2 = t, bc2 = t;
                for (std::size_t i = t + 1; i < a.rows; ++i) {
                    if (a.at(i, t) != 0 && abs(a.at(i, t)) < abs(a.at(br2, bc2))) {
                        br2 = i;
                        bc2 = t;
                    }
                }
                for (std::size_t j = t + 1; j < a.cols; ++j) {
                    if (a.at(t, j) != 0 && abs(a.at(t, j)) < abs(a.at(br2, bc2))) {
                        br2 = t;
                        bc2 = j;
                    }
                }
                swap_rows(t, br2);
                swap_cols(t, bc2);
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            std::size_t bad_row = a.rows;
            for (std::size_t i = t + 1; i < a.rows && bad_row == a.rows; ++i) {
                for (std::size_t j = t + 1; j < a.cols; ++j) {
                    if (a.at(i, j) != 0 && !mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row == a.rows) break;
            row_sub(t, bad_row, mpz_class(-1));
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            s.u.negate_row(t);
            s.u_inv.negate_col(t);
        }
    }
    s.rank = t;
    s.d = std::move(a);
    return s;
}

std::optional<Matrix> int_solve(const Matrix& m, const Matrix& rhs) {
    IntSmith s = int_smith(int_load(m));
    const IntDense b = int_load(rhs);
    Matrix x(ScalarRing::integers(), m.cols(), rhs.cols());
    std::vector<mpz_class> ub(m.rows());
    std::vector<mpz_class> y(m.cols());
    for (std::size_t col = 0; col < rhs.cols(); ++col) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            mpz_class acc = 0;
            for (std::size_t k = 0; k < m.rows(); ++k) {
                if (s.u.at(i, k) != 0 && b.at(k, col) != 0) acc += s.u.at(i, k) * b.at(k, col);
            }
            ub[i] = acc;
        }
        for (std::size_t i = 0; i < m.cols(); ++i) y[i] = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i < s.rank) {
                if (!mpz_divisible_p(ub[i].get_mpz_t(), s.d.at(i, i).get_mpz_t())) return std::nullopt;
                y[i] = ub[i] / s.d.at(i, i);
            } else if (ub[i] != 0) {
                return std::nullopt;
            }
        }
        for (std::size_t i = 0; i < m.cols(); ++i) {
            mpz_class acc = 0;
            for (std::size_t k = 0; k < s.rank; ++k) {
                if (s.v.at(i, k) != 0 && y[k] != 0) acc += s.v.at(i, k) * y[k];
            }
            x.set(i, col, Scalar(acc));
        }
    }
    return x;
}

std::string column_witness(std::size_t c) { return "column " + std::to_string(c); }

}  // namespace

std::string KModuleInvariants::describe(const ScalarRing& ring) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << ring.name();
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

std::size_t rank(const Matrix& m) {
    if (m.ring().kind() == ScalarRing::Kind::Integers) {
        IntDense d = int_load(m);
        return int_row_echelon(d, d.cols).size();
    }
    return with_field(m.ring(), [&](const auto& f) { return field_pivots(f, m, false).size(); });
}

Matrix kernel_basis(const Matrix& m) {
    if (m.ring().kind() == ScalarRing::Kind::Integers) return int_kernel(m);
    return with_field(m.ring(), [&](const auto& f) { return field_kernel(f, m); });
}

Matrix image_basis(const Matrix& m) {
    if (m.ring().kind() == ScalarRing::Kind::Integers) {
        Matrix basis = int_lattice_basis_from_rows(int_transpose(int_load(m)));
        if (basis.cols() == 0) return Matrix(m.ring(), m.rows(), 0);
        return basis;
    }
    // Reduced row echelon of m^T gives a canonical basis of the column space.
    const Matrix t = m.transpose();
    return with_field(m.ring(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        Dense<F> d = load(f, t);
        const auto pivots = eliminate(f, d, d.cols, true);
        Matrix out(m.ring(), m.rows(), pivots.size());
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            for (std::size_t c = 0; c < d.cols; ++c) {
                if (!f.is_zero(d.at(r, c))) out.set(c, r, f.to(d.at(r, c)));
            }
        }
        return out;
    });
}

SmithForm smith_normal_form(const Matrix& m) {
    IntSmith s = int_smith(int_load(m));
    SmithForm out;
    out.d = int_store(s.d);
    out.u = int_store(s.u);
    out.v = int_store(s.v);
    out.u_inverse = int_store(s.u_inv);
    out.rank = s.rank;
    return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    if (m.ring() != rhs.ring()) throw ValidationError("ring", "solve: ring mismatch");
    if (m.rows() != rhs.rows()) throw ValidationError("shape", "solve: row count mismatch");
    if (m.ring().kind() == ScalarRing::Kind::Integers) return int_solve(m, rhs);
    return with_field(m.ring(), [&](const auto& f) { return field_solve(f, m, rhs); });
}

Subquotient subquotient(const Matrix& z, const Matrix& b) {
    if (z.ring() != b.ring()) throw ValidationError("ring", "subquotient: ring mismatch");
    if (z.rows() != b.rows()) throw ValidationError("shape", "subquotient: ambient dimension mismatch");
    const ScalarRing& ring = z.ring();
    Subquotient out;

    if (ring.kind() == ScalarRing::Kind::Integers) {
        const Matrix basis = image_basis(z);
        const std::size_t r = basis.cols();
        Matrix coords(ring, r, b.cols());
        if (b.cols() > 0) {
            auto solved = solve(basis, b);
            if (!solved) {
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    if (!solve(basis, b.column(c))) {
                        throw ValidationError("containment", "subquotient: column not in the span of Z",
                                              column_witness(c));
                    }
                }
            }
            coords = *solved;
        }
        const SmithForm snf = smith_normal_form(coords);
        const Matrix gens = basis * snf.u_inverse;
        std::vector<std::size_t> order;
        for (std::size_t i = snf.rank; i < r; ++i) order.push_back(i);
        for (std::size_t i = 0; i < snf.rank; ++i) {
            const Scalar& di = snf.d(i, i);
            if (di != 1) {
                out.invariants.torsion.push_back(di.get_num());
                order.push_back(i);
            }
        }
        out.invariants.free_rank = r - snf.rank;
        out.generators = gens.select_columns(order);
        return out;
    }

    // Field: containment check via pivots of [Z | B], generators via pivots of [B | Z].
    const Matrix zb = hconcat(z, b);
    const auto zb_pivots = with_field(ring, [&](const auto& f) { return field_pivots(f, zb, false); });
    std::size_t rank_z = 0;
    for (auto p : zb_pivots) {
        if (p >= z.cols()) throw ValidationError("containment", "subquotient: column not in the span of Z",
                                                 column_witness(p - z.cols()));
        ++rank_z;
    }
    const Matrix bz = hconcat(b, z);
    const auto bz_pivots = with_field(ring, [&](const auto& f) { return field_pivots(f, bz, false); });
    std::vector<std::size_t> gen_cols;
    for (auto p : bz_pivots) {
        if (p >= b.cols()) gen_cols.push_back(p - b.cols());
    }
    out.invariants.free_rank = gen_cols.size();
    (void)rank_z;
    out.generators = z.select_columns(gen_cols);
    return out;
}

KModuleInvariants subquotient_invariants(const Matrix& z, const Matrix& b) { return subquotient(z, b).invariants; }

KModuleInvariants direct_sum(const ScalarRing& ring, const std::vector<KModuleInvariants>& parts) {
    KModuleInvariants out;
    std::vector<mpz_class> torsion;
    for (const auto& p : parts) {
        out.free_rank += p.free_rank;
        torsion.insert(torsion.end(), p.torsion.begin(), p.torsion.end());
    }
    if (torsion.empty()) return out;
    Matrix diag(ring, torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) diag.set(i, i, Scalar(torsion[i]));
    out.torsion = cokernel_invariants(diag).torsion;
    return out;
}

KModuleInvariants cokernel_invariants(const Matrix& m) {
    return subquotient_invariants(Matrix::identity(m.ring(), m.rows()), m);
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("shape", "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (m.ring().kind() == ScalarRing::Kind::PrimeField) {
        ResidueField f{m.ring().characteristic()};
        Dense<ResidueField> d = load(f, m);
        std::uint64_t det = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t pr = n;
            for (std::size_t i = c; i < n; ++i) {
                if (d.at(i, c) != 0) {
                    pr = i;
                    break;
                }
            }
            if (pr == n) return Scalar(0);
            if (pr != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(d.at(pr, j), d.at(c, j));
                det = f.p - det;
                if (det == f.p) det = 0;
            }
            det = f.mul(det, d.at(c, c));
            const auto inv = f.inv(d.at(c, c));
            for (std::size_t i = c + 1; i < n; ++i) {
                if (d.at(i, c) == 0) continue;
                const auto factor = f.mul(d.at(i, c), inv);
                for (std::size_t j = c; j < n; ++j) f.sub_mul(d.at(i, j), factor, d.at(c, j));
            }
        }
        return ResidueField::to(det);
    }
    // Bareiss over Q (after clearing denominators row by row).
    std::vector<mpz_class> a(n * n);
    mpq_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale /= lcm;
        for (std::size_t c = 0; c < n; ++c) {
            mpq_class v = m(r, c) * lcm;
            a[r * n + c] = v.get_num();
        }
    }
    if (n == 0) return Scalar(1);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t pr = n;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i * n + k] != 0) {
                    pr = i;
                    break;
                }
            }
            if (pr == n) return Scalar(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pr * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = a[k * n + k];
    }
    Scalar det(a[(n - 1) * n + (n - 1)] * sign);
    det *= scale;
    det.canonicalize();
    return m.ring().reduce(det);
}

}  // namespace hochkit
