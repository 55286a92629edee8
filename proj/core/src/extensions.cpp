#include "hochkit/extensions.hpp"

#include <map>

#include "hochkit/error.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

namespace {

void check_cochain_shape(const Bimodule& m, const Matrix& b) {
    const std::size_t d = m.algebra().rank();
    if (b.rows() != m.rank() || b.cols() != d * d) {
        throw ValidationError("shape", "2-cochain must be " + std::to_string(m.rank()) + "x" + std::to_string(d * d));
    }
    if (b.ring() != m.algebra().ring()) throw ValidationError("ring", "2-cochain is over " + b.ring().name());
}

std::string triple(const std::array<std::size_t, 3>& w) {
    return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
}

// Column holding the product e_i e_j in basis coordinates.
Matrix product_column(const FiniteAlgebra& a, std::size_t i, std::size_t j) {
    Matrix v(a.ring(), a.rank(), 1);
    for (std::size_t k = 0; k < a.rank(); ++k) v.set(k, 0, a.c(i, j, k));
    return v;
}

Matrix vectorize(const Matrix& values) { return Cochain{0, false, values}.vectorized(); }

Matrix unvectorize(const Matrix& v, std::size_t rows) { return Cochain::from_vector(0, false, rows, v).values; }

// B(x, y) for arbitrary elements x, y of A.
Matrix apply2(const Matrix& b, const Matrix& x, const Matrix& y) {
    const std::size_t d = x.rows();
    Matrix out(b.ring(), b.rows(), 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (x(i, 0) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar c = x(i, 0) * y(j, 0);
            if (c == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p) out.add_to(p, 0, c * b(p, i * d + j));
        }
    }
    return out;
}

}  // namespace

std::optional<std::array<std::size_t, 3>> two_cocycle_witness(const Bimodule& m, const Matrix& b) {
    check_cochain_shape(m, b);
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix ij = product_column(a, i, j);
            for (std::size_t l = 0; l < d; ++l) {
                const Matrix jl = product_column(a, j, l);
                const Matrix value = m.left(i) * b.column(j * d + l) - apply2(b, ij, a.basis_vector(l)) +
                                     apply2(b, a.basis_vector(i), jl) - m.right(l) * b.column(i * d + j);
                if (!value.is_zero()) return std::array<std::size_t, 3>{i, j, l};
            }
        }
    }
    return std::nullopt;
}

bool is_two_cocycle(const Bimodule& m, const Matrix& b) { return !two_cocycle_witness(m, b).has_value(); }

AlgebraTable crossed_product_table(const Bimodule& m, const Matrix& b) {
    check_cochain_shape(m, b);
    const FiniteAlgebra& a = m.algebra();
    const std::size_t d = a.rank(), r = m.rank(), e = d + r;
    AlgebraTable t;
    t.ring = a.ring();
    t.basis = a.basis_names();
    for (std::size_t x = 0; x < r; ++x) t.basis.push_back("m" + std::to_string(x));
    t.mul.assign(e * e * e, 0);
    auto at = [&](std::size_t x, std::size_t y, std::size_t z) -> Scalar& { return t.mul[(x * e + y) * e + z]; };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) at(i, j, k) = a.c(i, j, k);
            for (std::size_t p = 0; p < r; ++p) at(i, j, d + p) = b(p, i * d + j);
        }
        for (std::size_t x = 0; x < r; ++x) {
            for (std::size_t p = 0; p < r; ++p) {
                at(i, d + x, d + p) = m.left(i)(p, x);
                at(d + x, i, d + p) = m.right(i)(p, x);
            }
        }
    }
    // Unit (u, x0): x0 e_j = -B(u, e_j) and e_j x0 = -B(e_j, u).
    const Matrix& u = a.unit();
    Matrix sys(a.ring(), 2 * d * r, r), rhs(a.ring(), 2 * d * r, 1);
    for (std::size_t j = 0; j < d; ++j) {
        const Matrix bu_j = apply2(b, u, a.basis_vector(j));
        const Matrix bj_u = apply2(b, a.basis_vector(j), u);
        for (std::size_t p = 0; p < r; ++p) {
            for (std::size_t q = 0; q < r; ++q) {
                sys.set(j * r + p, q, m.right(j)(p, q));
                sys.set((d + j) * r + p, q, m.left(j)(p, q));
            }
            rhs.set(j * r + p, 0, -bu_j(p, 0));
            rhs.set((d + j) * r + p, 0, -bj_u(p, 0));
        }
    }
    t.unit.assign(e, 0);
    for (std::size_t i = 0; i < d; ++i) t.unit[i] = u(i, 0);
    if (r > 0) {
        if (auto x0 = solve(sys, rhs)) {
            for (std::size_t p = 0; p < r; ++p) t.unit[d + p] = (*x0)(p, 0);
        }
    }
    return t;
}

FiniteAlgebra crossed_product(const Bimodule& m, const Matrix& b) {
    if (auto w = two_cocycle_witness(m, b)) {
        throw ValidationError("associativity", "cochain is not a 2-cocycle; crossed product fails associativity at " +
                                                   triple(*w),
                              triple(*w));
    }
    return FiniteAlgebra::create(crossed_product_table(m, b));
}

void validate_extension(const ExtensionPresentation& ext) {
    const FiniteAlgebra& e = ext.total;
    const FiniteAlgebra& a = ext.module.algebra();
    const std::size_t d = a.rank(), r = ext.module.rank(), n = e.rank();
    const ScalarRing& ring = a.ring();
    if (e.ring() != ring) throw ValidationError("ring", "extension and base algebra over different rings");
    if (ext.projection.rows() != d || ext.projection.cols() != n || ext.inclusion.rows() != n ||
        ext.inclusion.cols() != r || ext.section.rows() != n || ext.section.cols() != d) {
        throw ValidationError("shape", "projection, inclusion or section has the wrong shape");
    }
    if (!(ext.projection * ext.inclusion).is_zero()) {
        throw ValidationError("exactness", "projection does not kill the inclusion");
    }
    if (!(ext.projection * ext.section).is_identity()) {
        throw ValidationError("section", "projection * section is not the identity");
    }
    if (rank(ext.inclusion) != r || !subquotient_invariants(kernel_basis(ext.projection), ext.inclusion).is_zero()) {
        throw ValidationError("exactness", "inclusion is not a kernel of the projection");
    }
    if (ext.projection * e.unit() != a.unit()) throw ValidationError("projection", "projection does not keep the unit");
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Matrix lhs = ext.projection * product_column(e, x, y);
            const Matrix rhs = a.product(ext.projection.column(x), ext.projection.column(y));
            if (lhs != rhs) {
                throw ValidationError("projection", "projection is not multiplicative",
                                      "(" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    }
    for (std::size_t x = 0; x < r; ++x) {
        const Matrix ix = ext.inclusion.column(x);
        for (std::size_t y = 0; y < r; ++y) {
            if (!e.product(ix, ext.inclusion.column(y)).is_zero()) {
                throw ValidationError("square_zero", "the ideal does not square to zero",
                                      "(" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
        for (std::size_t i = 0; i < d; ++i) {
            const Matrix si = ext.section.column(i);
            if (e.product(si, ix) != ext.inclusion * ext.module.left(i).column(x) ||
                e.product(ix, si) != ext.inclusion * ext.module.right(i).column(x)) {
                throw ValidationError("bimodule", "the ideal does not carry the given bimodule structure",
                                      "(" + std::to_string(i) + "," + std::to_string(x) + ")");
            }
        }
    }
}

ExtensionPresentation crossed_product_extension(const Bimodule& m, const Matrix& b) {
    const FiniteAlgebra total = crossed_product(m, b);
    const std::size_t d = m.algebra().rank(), r = m.rank();
    const ScalarRing& ring = m.algebra().ring();
    Matrix pi(ring, d, d + r), iota(ring, d + r, r), s(ring, d + r, d);
    for (std::size_t i = 0; i < d; ++i) {
        pi.set(i, i, 1);
        s.set(i, i, 1);
    }
    for (std::size_t x = 0; x < r; ++x) iota.set(d + x, x, 1);
    return ExtensionPresentation{total, m, pi, iota, s};
}

ExtensionPresentation trivial_extension(const Bimodule& m) {
    const std::size_t d = m.algebra().rank();
    return crossed_product_extension(m, Matrix(m.algebra().ring(), m.rank(), d * d));
}

Matrix extension_class_from_section(const ExtensionPresentation& e) {
    const FiniteAlgebra& a = e.module.algebra();
    const std::size_t d = a.rank();
    if (!(e.projection * e.section).is_identity()) {
        throw ValidationError("section", "projection * section is not the identity");
    }
    Matrix values(a.ring(), e.total.rank(), d * d);
    for (std::size_t i = 0; i < d; ++i) {
        const Matrix si = e.section.column(i);
        const Matrix left = e.total.left_multiplication(si);
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix v = left * e.section.column(j) - e.section * product_column(a, i, j);
            for (std::size_t k = 0; k < v.rows(); ++k) values.set(k, i * d + j, v(k, 0));
        }
    }
    auto coords = solve(e.inclusion, values);
    if (!coords) throw ValidationError("section", "s(a)s(a') - s(aa') does not lie in the ideal");
    return std::move(*coords);
}

Matrix equivalence_map(const Bimodule& m, const Matrix& zeta) {
    const std::size_t d = m.algebra().rank(), r = m.rank();
    Matrix phi = Matrix::identity(m.algebra().ring(), d + r);
    for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t i = 0; i < d; ++i) phi.set(d + p, i, zeta(p, i));
    }
    return phi;
}

std::optional<Matrix> cocycles_cohomologous(const Bimodule& m, const Matrix& b1, const Matrix& b2) {
    check_cochain_shape(m, b1);
    check_cochain_shape(m, b2);
    auto sol = solve(coboundary_matrix(m, 1), vectorize(b1 - b2));
    if (!sol) return std::nullopt;
    Matrix zeta = unvectorize(*sol, m.rank());
    const FiniteAlgebra e1 = FiniteAlgebra::create(crossed_product_table(m, b1));
    const FiniteAlgebra e2 = FiniteAlgebra::create(crossed_product_table(m, b2));
    const Matrix phi = equivalence_map(m, zeta);
    for (std::size_t x = 0; x < e1.rank(); ++x) {
        for (std::size_t y = 0; y < e1.rank(); ++y) {
            if (phi * product_column(e1, x, y) != e2.product(phi.column(x), phi.column(y))) {
                throw Error("internal", "equivalence map of cohomologous cocycles is not multiplicative");
            }
        }
    }
    return zeta;
}

bool is_multiplicative(const ExtensionPresentation& e, const Matrix& section) {
    const FiniteAlgebra& a = e.module.algebra();
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < a.rank(); ++j) {
            if (section * product_column(a, i, j) != e.total.product(section.column(i), section.column(j))) return false;
        }
    }
    return true;
}

std::optional<Matrix> lift_exists(const ExtensionPresentation& e) {
    const Matrix b = extension_class_from_section(e);
    auto sol = solve(coboundary_matrix(e.module, 1), vectorize(b));
    if (!sol) return std::nullopt;
    const Matrix zeta = unvectorize(*sol, e.module.rank());
    Matrix lifted = e.section - e.inclusion * zeta;
    if (!is_multiplicative(e, lifted)) throw Error("internal", "corrected section is not multiplicative");
    return lifted;
}

std::vector<Matrix> enumerate_extension_classes(const Bimodule& m) {
    const FiniteAlgebra& a = m.algebra();
    const ScalarRing& ring = a.ring();
    if (ring.kind() != ScalarRing::Kind::PrimeField) {
        throw ValidationError("ring", "enumeration needs a prime field");
    }
    const std::uint64_t p = ring.characteristic();
    const std::size_t d = a.rank(), r = m.rank(), len = r * d * d;
    std::size_t space = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (space > kEnumerationLimit / p) {
            throw SizeGuardError("enumeration_guard",
                                 "cochain space p^" + std::to_string(len) + " exceeds 2^20 elements",
                                 std::to_string(len));
        }
        space *= p;
    }
    auto to_u64 = [](const Scalar& x) { return static_cast<std::uint64_t>(x.get_num().get_ui()); };

    // Cocycle test: sparse rows of b^2.
    const Matrix b2 = coboundary_matrix(m, 2);
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows(b2.rows());
    for (std::size_t i = 0; i < b2.rows(); ++i) {
        for (std::size_t j = 0; j < b2.cols(); ++j) {
            if (b2(i, j) != 0) rows[i].emplace_back(j, to_u64(b2(i, j)));
        }
    }
    // Reduced echelon rows spanning the coboundaries.
    const Matrix im = image_basis(coboundary_matrix(m, 1));
    std::vector<std::vector<std::uint64_t>> echelon;
    std::vector<std::size_t> pivots;
    auto inv = [&](std::uint64_t x) { return to_u64(*ring.inverse(Scalar(static_cast<unsigned long>(x)))); };
    auto reduce = [&](std::vector<std::uint64_t>& v) {
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const std::uint64_t f = v[pivots[k]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < len; ++j) v[j] = (v[j] + (p - f) * echelon[k][j]) % p;
        }
    };
    for (std::size_t c = 0; c < im.cols(); ++c) {
        std::vector<std::uint64_t> v(len);
        for (std::size_t j = 0; j < len; ++j) v[j] = to_u64(im(j, c));
        reduce(v);
        std::size_t piv = 0;
        while (piv < len && v[piv] == 0) ++piv;
        if (piv == len) continue;
        const std::uint64_t s = inv(v[piv]);
        for (auto& x : v) x = x * s % p;
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const std::uint64_t f = echelon[k][piv];
            if (f == 0) continue;
            for (std::size_t j = 0; j < len; ++j) echelon[k][j] = (echelon[k][j] + (p - f) * v[j]) % p;
        }
        echelon.push_back(std::move(v));
        pivots.push_back(piv);
    }

    std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> classes;
    std::vector<std::vector<std::uint64_t>> order;
    std::vector<std::uint64_t> v(len, 0);
    for (std::size_t count = 0; count < space; ++count) {
        if (count > 0) {
            // Next vector in lexicographic order, index 0 most significant.
            for (std::size_t j = len; j-- > 0;) {
                if (++v[j] < p) break;
                v[j] = 0;
            }
        }
        bool cocycle = true;
        for (const auto& row : rows) {
            std::uint64_t acc = 0;
            for (const auto& [j, x] : row) acc = (acc + x * v[j]) % p;
            if (acc != 0) {
                cocycle = false;
                break;
            }
        }
        if (!cocycle) continue;
        std::vector<std::uint64_t> key = v;
        reduce(key);
        if (classes.emplace(key, v).second) order.push_back(key);
    }
    std::vector<Matrix> out;
    for (const auto& key : order) {
        const auto& rep = classes[key];
        Matrix b(ring, r, d * d);
        for (std::size_t j = 0; j < len; ++j) b.set(j / (d * d), j % (d * d), Scalar(static_cast<unsigned long>(rep[j])));
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace hochkit
