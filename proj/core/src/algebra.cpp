#include "hochkit/algebra.hpp"

#include <sstream>

#include "hochkit/error.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t l) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
}

std::string pair(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void check_square(const Matrix& m, std::size_t n, const ScalarRing& ring, const std::string& what) {
    if (m.rows() != n || m.cols() != n) {
        throw ValidationError("shape", what + " must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (m.ring() != ring) throw ValidationError("ring", what + " is over " + m.ring().name());
}

// sum_i coeffs[i] * mats[i]
Matrix combine(const std::vector<Matrix>& mats, const Matrix& coeffs, std::size_t size, const ScalarRing& ring) {
    Matrix out(ring, size, size);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const Scalar& c = coeffs(i, 0);
        if (c == 0) continue;
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t s = 0; s < size; ++s) {
                if (mats[i](r, s) != 0) out.add_to(r, s, c * mats[i](r, s));
            }
        }
    }
    return out;
}

// Checks that actions[i] * actions[j] = sum_k c(i,j,k) actions[k] (or the
// reversed order for right actions) and that the unit acts trivially.
void check_action(const FiniteAlgebra& a, const std::vector<Matrix>& actions, std::size_t m, bool right,
                  const std::string& side) {
    const std::size_t d = a.rank();
    if (actions.size() != d) {
        throw ValidationError("shape", side + " action needs " + std::to_string(d) + " matrices, got " +
                                           std::to_string(actions.size()));
    }
    for (std::size_t i = 0; i < d; ++i) check_square(actions[i], m, a.ring(), side + " action matrix " + std::to_string(i));
    if (!combine(actions, a.unit(), m, a.ring()).is_identity()) {
        throw ValidationError(side + "_unit", "unit does not act as the identity on the " + side);
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = right ? actions[j] * actions[i] : actions[i] * actions[j];
            Matrix prod(a.ring(), d, 1);
            for (std::size_t k = 0; k < d; ++k) prod.set(k, 0, a.c(i, j, k));
            if (lhs != combine(actions, prod, m, a.ring())) {
                throw ValidationError(side + "_associativity",
                                      side + " action is not associative at basis pair " + pair(i, j), pair(i, j));
            }
        }
    }
}

}  // namespace

std::optional<std::array<std::size_t, 3>> associativity_witness(const AlgebraTable& t) {
    const std::size_t d = t.rank();
    std::vector<Scalar> lhs(d), rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                for (std::size_t q = 0; q < d; ++q) {
                    lhs[q] = 0;
                    rhs[q] = 0;
                }
                for (std::size_t p = 0; p < d; ++p) {
                    const Scalar& cij = t.c(i, j, p);
                    const Scalar& cjl = t.c(j, l, p);
                    for (std::size_t q = 0; q < d; ++q) {
                        if (cij != 0) lhs[q] += cij * t.c(p, l, q);
                        if (cjl != 0) rhs[q] += cjl * t.c(i, p, q);
                    }
                }
                for (std::size_t q = 0; q < d; ++q) {
                    if (t.ring.reduce(lhs[q] - rhs[q]) != 0) return std::array<std::size_t, 3>{i, j, l};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> unit_witness(const AlgebraTable& t) {
    const std::size_t d = t.rank();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t q = 0; q < d; ++q) {
            Scalar left = 0, right = 0;
            for (std::size_t p = 0; p < d; ++p) {
                if (t.unit[p] == 0) continue;
                left += t.unit[p] * t.c(p, i, q);
                right += t.unit[p] * t.c(i, p, q);
            }
            const Scalar expect = q == i ? 1 : 0;
            if (t.ring.reduce(left) != expect || t.ring.reduce(right) != expect) return i;
        }
    }
    return std::nullopt;
}

FiniteAlgebra FiniteAlgebra::create(AlgebraTable table) {
    const std::size_t d = table.rank();
    if (d == 0) throw ValidationError("shape", "algebra rank must be at least 1");
    check_entry_limit(d * d, d, "structure constants");
    if (table.unit.size() != d) {
        throw ValidationError("shape", "unit has " + std::to_string(table.unit.size()) + " coordinates, expected " +
                                           std::to_string(d));
    }
    if (table.mul.size() != d * d * d) {
        throw ValidationError("shape", "structure constants have " + std::to_string(table.mul.size()) +
                                           " entries, expected " + std::to_string(d * d * d));
    }
    for (auto& x : table.unit) x = table.ring.reduce(x);
    for (auto& x : table.mul) x = table.ring.reduce(x);
    if (auto w = associativity_witness(table)) {
        const auto [i, j, l] = *w;
        throw ValidationError("associativity", "(e_i e_j) e_l != e_i (e_j e_l) at " + triple(i, j, l),
                              triple(i, j, l));
    }
    if (auto w = unit_witness(table)) {
        throw ValidationError("unit", "unit law fails at basis index " + std::to_string(*w), std::to_string(*w));
    }

    auto data = std::make_shared<Data>();
    data->table = std::move(table);
    const AlgebraTable& t = data->table;
    data->unit = Matrix::column_vector(t.ring, t.unit);
    data->left.reserve(d);
    data->right.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix l(t.ring, d, d), r(t.ring, d, d);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                l.set(k, j, t.c(i, j, k));
                r.set(k, j, t.c(j, i, k));
            }
        }
        data->left.push_back(std::move(l));
        data->right.push_back(std::move(r));
    }
    std::ostringstream fp;
    fp << t.ring.name() << '|' << d << '|';
    for (const auto& x : t.unit) fp << x.get_str() << ',';
    fp << '|';
    for (const auto& x : t.mul) fp << x.get_str() << ',';
    data->fingerprint = fp.str();
    return FiniteAlgebra(std::move(data));
}

Matrix FiniteAlgebra::multiplication_map() const {
    const std::size_t d = rank();
    Matrix m(ring(), d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) m.set(k, i * d + j, c(i, j, k));
        }
    }
    return m;
}

Matrix FiniteAlgebra::basis_vector(std::size_t i) const {
    Matrix v(ring(), rank(), 1);
    v.set(i, 0, 1);
    return v;
}

Matrix FiniteAlgebra::left_multiplication(const Matrix& a) const { return combine(data_->left, a, rank(), ring()); }

Matrix FiniteAlgebra::product(const Matrix& a, const Matrix& b) const { return left_multiplication(a) * b; }

bool FiniteAlgebra::has_unital_basis() const { return unit() == basis_vector(0); }

bool FiniteAlgebra::is_commutative() const {
    const std::size_t d = rank();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (c(i, j, k) != c(j, i, k)) return false;
            }
        }
    }
    return true;
}

LeftModule LeftModule::create(FiniteAlgebra algebra, std::size_t rank, std::vector<Matrix> actions) {
    check_action(algebra, actions, rank, false, "left");
    return LeftModule(std::move(algebra), rank, std::move(actions));
}

LeftModule LeftModule::regular(const FiniteAlgebra& a) {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a.rank(); ++i) act.push_back(a.left_mul(i));
    return LeftModule(a, a.rank(), std::move(act));
}

Matrix LeftModule::act(const Matrix& a) const { return combine(actions_, a, rank_, algebra_.ring()); }

Bimodule Bimodule::create(FiniteAlgebra algebra, std::size_t rank, std::vector<Matrix> left,
                          std::vector<Matrix> right) {
    check_action(algebra, left, rank, false, "left");
    check_action(algebra, right, rank, true, "right");
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (left[i] * right[j] != right[j] * left[i]) {
                throw ValidationError("bimodule_compatibility",
                                      "left and right actions do not commute at basis pair " + pair(i, j), pair(i, j));
            }
        }
    }
    return Bimodule(std::move(algebra), rank, std::move(left), std::move(right));
}

Bimodule Bimodule::regular(const FiniteAlgebra& a) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        l.push_back(a.left_mul(i));
        r.push_back(a.right_mul(i));
    }
    return Bimodule(a, a.rank(), std::move(l), std::move(r));
}

Bimodule Bimodule::zero(const FiniteAlgebra& a) {
    std::vector<Matrix> l(a.rank(), Matrix(a.ring(), 0, 0));
    return Bimodule(a, 0, l, l);
}

Bimodule Bimodule::symmetric(const LeftModule& m) {
    if (!m.algebra().is_commutative()) {
        throw ValidationError("commutativity", "symmetric bimodule needs a commutative algebra");
    }
    return Bimodule(m.algebra(), m.rank(), m.actions(), m.actions());
}

Matrix Bimodule::left_act(const Matrix& a) const { return combine(left_, a, rank_, algebra_.ring()); }
Matrix Bimodule::right_act(const Matrix& a) const { return combine(right_, a, rank_, algebra_.ring()); }

LeftModule Bimodule::left_module() const { return LeftModule::create(algebra_, rank_, left_); }

FiniteAlgebra validate_algebra(AlgebraTable table) { return FiniteAlgebra::create(std::move(table)); }

FiniteAlgebra opposite(const FiniteAlgebra& a) {
    AlgebraTable t = a.table();
    const std::size_t d = a.rank();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) t.mul[(i * d + j) * d + k] = a.c(j, i, k);
        }
    }
    return FiniteAlgebra::create(std::move(t));
}

FiniteAlgebra enveloping(const FiniteAlgebra& a) {
    const std::size_t d = a.rank();
    const std::size_t e = d * d;
    check_entry_limit(e * e, e, "enveloping algebra structure constants");
    AlgebraTable t;
    t.ring = a.ring();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) t.basis.push_back(a.basis_names()[i] + "@" + a.basis_names()[j]);
    }
    t.unit.assign(e, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) t.unit[i * d + j] = a.unit()(i, 0) * a.unit()(j, 0);
    }
    t.mul.assign(e * e * e, 0);
    // (e_i (x) e_j)(e_k (x) e_l) = e_i e_k (x) e_l e_j
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    const std::size_t x = i * d + j, y = k * d + l;
                    for (std::size_t p = 0; p < d; ++p) {
                        const Scalar& c1 = a.c(i, k, p);
                        if (c1 == 0) continue;
                        for (std::size_t q = 0; q < d; ++q) {
                            const Scalar& c2 = a.c(l, j, q);
                            if (c2 != 0) t.mul[(x * e + y) * e + p * d + q] += c1 * c2;
                        }
                    }
                }
            }
        }
    }
    return FiniteAlgebra::create(std::move(t));
}

LeftModule ae_from_bimodule(const Bimodule& m) {
    const FiniteAlgebra env = enveloping(m.algebra());
    const std::size_t d = m.algebra().rank();
    std::vector<Matrix> act;
    act.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) act.push_back(m.left(i) * m.right(j));
    }
    return LeftModule::create(env, m.rank(), std::move(act));
}

Bimodule bimodule_from_ae(const FiniteAlgebra& a, const LeftModule& env_module) {
    const FiniteAlgebra env = enveloping(a);
    if (!(env_module.algebra() == env)) {
        throw ValidationError("algebra", "module is not over the enveloping algebra of the given algebra");
    }
    const std::size_t d = a.rank();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix ei_one(a.ring(), d * d, 1), one_ei(a.ring(), d * d, 1);
        for (std::size_t p = 0; p < d; ++p) {
            ei_one.set(i * d + p, 0, a.unit()(p, 0));
            one_ei.set(p * d + i, 0, a.unit()(p, 0));
        }
        l.push_back(env_module.act(ei_one));
        r.push_back(env_module.act(one_ei));
    }
    return Bimodule::create(a, env_module.rank(), std::move(l), std::move(r));
}

std::vector<Matrix> ae_right_action(const Bimodule& m) {
    const std::size_t d = m.algebra().rank();
    std::vector<Matrix> out;
    out.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) out.push_back(m.left(j) * m.right(i));
    }
    return out;
}

Bimodule hom_bimodule(const LeftModule& n, const LeftModule& m) {
    if (!(n.algebra() == m.algebra())) throw ValidationError("algebra", "modules over different algebras");
    const FiniteAlgebra& a = n.algebra();
    const Matrix in = Matrix::identity(a.ring(), n.rank());
    const Matrix im = Matrix::identity(a.ring(), m.rank());
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        // E_pq -> L^M E_pq, E_pq -> E_pq L^N
        l.push_back(kronecker(m.action(i), in));
        r.push_back(kronecker(im, n.action(i).transpose()));
    }
    return Bimodule::create(a, n.rank() * m.rank(), std::move(l), std::move(r));
}

Matrix module_homomorphisms(const LeftModule& m, const LeftModule& n) {
    if (!(n.algebra() == m.algebra())) throw ValidationError("algebra", "modules over different algebras");
    const FiniteAlgebra& a = m.algebra();
    const std::size_t rm = m.rank(), rn = n.rank();
    const std::size_t vars = rn * rm;
    Matrix sys(a.ring(), a.rank() * vars, vars);
    // f L^M_i - L^N_i f = 0, f stored row-major rn x rm.
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const Matrix& lm = m.action(i);
        const Matrix& ln = n.action(i);
        for (std::size_t p = 0; p < rn; ++p) {
            for (std::size_t q = 0; q < rm; ++q) {
                const std::size_t row = i * vars + p * rm + q;
                for (std::size_t s = 0; s < rm; ++s) sys.add_to(row, p * rm + s, lm(s, q));
                for (std::size_t s = 0; s < rn; ++s) sys.add_to(row, s * rm + q, -ln(p, s));
            }
        }
    }
    return kernel_basis(sys);
}

FiniteAlgebra truncated_tensor_algebra(const FiniteAlgebra& b, const Bimodule& m, std::size_t cap) {
    if (cap < 1) throw ValidationError("degree_cap", "degree cap must be at least 1");
    if (!(m.algebra() == b)) throw ValidationError("algebra", "bimodule is not over the base algebra");
    const ScalarRing& ring = b.ring();
    const std::size_t d = b.rank(), r = m.rank();
    if (r == 0) return b;

    // Degree n piece = M^(x_k n) / (balancing relations), presented by a
    // quotient map q[n] and a k-linear lift lift[n].
    std::vector<std::size_t> raw(cap + 1, 1);
    for (std::size_t n = 1; n <= cap; ++n) {
        if (raw[n - 1] > entry_limit() / r) {
            throw SizeGuardError("size_guard", "truncated tensor algebra too large", std::to_string(n));
        }
        raw[n] = raw[n - 1] * r;
    }
    std::vector<Matrix> q(cap + 1), lift(cap + 1);
    std::vector<std::size_t> dim(cap + 1, 0);
    dim[0] = d;
    for (std::size_t n = 1; n <= cap; ++n) {
        std::vector<std::vector<Scalar>> rels;
        const std::size_t total = raw[n];
        for (std::size_t pos = 0; pos + 1 < n; ++pos) {
            const std::size_t before = raw[pos];
            const std::size_t after = raw[n - pos - 2];
            for (std::size_t bi = 0; bi < d; ++bi) {
                const Matrix& rb = m.right(bi);
                const Matrix& lb = m.left(bi);
                for (std::size_t pre = 0; pre < before; ++pre) {
                    for (std::size_t u = 0; u < r; ++u) {
                        for (std::size_t v = 0; v < r; ++v) {
                            for (std::size_t post = 0; post < after; ++post) {
                                // (.. m_u b (x) m_v ..) - (.. m_u (x) b m_v ..)
                                std::vector<Scalar> vec(total);
                                bool nonzero = false;
                                for (std::size_t w = 0; w < r; ++w) {
                                    const Scalar& x = rb(w, u);
                                    if (x != 0) {
                                        vec[((pre * r + w) * r + v) * after + post] += x;
                                    }
                                    const Scalar& y = lb(w, v);
                                    if (y != 0) {
                                        vec[((pre * r + u) * r + w) * after + post] -= y;
                                    }
                                }
                                for (auto& x : vec) {
                                    x = ring.reduce(x);
                                    if (x != 0) nonzero = true;
                                }
                                if (nonzero) rels.push_back(std::move(vec));
                            }
                        }
                    }
                }
            }
        }
        if (rels.empty()) {
            q[n] = Matrix::identity(ring, total);
            lift[n] = q[n];
        } else {
            Matrix rel(ring, total, rels.size());
            for (std::size_t c = 0; c < rels.size(); ++c) {
                for (std::size_t i = 0; i < total; ++i) rel.set(i, c, rels[c][i]);
            }
            if (!cokernel_invariants(rel).torsion.empty()) {
                throw ValidationError("tensor_torsion", "tensor power of degree " + std::to_string(n) +
                                                           " has torsion, so it is not free over the base ring");
            }
            q[n] = kernel_basis(rel.transpose()).transpose();
            auto l = solve(q[n], Matrix::identity(ring, q[n].rows()));
            if (!l) throw Error("internal", "quotient map of a tensor power has no section");
            lift[n] = std::move(*l);
        }
        dim[n] = q[n].rows();
    }

    std::vector<std::size_t> offset(cap + 2, 0);
    for (std::size_t n = 0; n <= cap; ++n) offset[n + 1] = offset[n] + dim[n];
    const std::size_t total = offset[cap + 1];
    check_entry_limit(total * total, total, "truncated tensor algebra structure constants");

    AlgebraTable t;
    t.ring = ring;
    t.basis = b.basis_names();
    for (std::size_t n = 1; n <= cap; ++n) {
        for (std::size_t i = 0; i < dim[n]; ++i) {
            if (q[n].is_identity()) {
                std::string name;
                std::size_t idx = i;
                std::vector<std::size_t> letters(n);
                for (std::size_t s = n; s-- > 0;) {
                    letters[s] = idx % r;
                    idx /= r;
                }
                for (std::size_t s = 0; s < n; ++s) name += (s ? "." : "") + std::string("m") + std::to_string(letters[s]);
                t.basis.push_back(name);
            } else {
                t.basis.push_back("t" + std::to_string(n) + "_" + std::to_string(i));
            }
        }
    }
    t.unit.assign(total, 0);
    for (std::size_t i = 0; i < d; ++i) t.unit[i] = b.unit()(i, 0);
    t.mul.assign(total * total * total, 0);
    auto put = [&](std::size_t x, std::size_t y, std::size_t off, const Matrix& col) {
        for (std::size_t k = 0; k < col.rows(); ++k) t.mul[(x * total + y) * total + off + k] = col(k, 0);
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) t.mul[(i * total + j) * total + k] = b.c(i, j, k);
        }
    }
    for (std::size_t n = 1; n <= cap; ++n) {
        const std::size_t rest = raw[n - 1];
        const Matrix id_rest = Matrix::identity(ring, rest);
        for (std::size_t bi = 0; bi < d; ++bi) {
            const Matrix lb = q[n] * kronecker(m.left(bi), id_rest) * lift[n];
            const Matrix rb = q[n] * kronecker(id_rest, m.right(bi)) * lift[n];
            for (std::size_t x = 0; x < dim[n]; ++x) {
                put(bi, offset[n] + x, offset[n], lb.column(x));
                put(offset[n] + x, bi, offset[n], rb.column(x));
            }
        }
    }
    for (std::size_t i = 1; i <= cap; ++i) {
        for (std::size_t j = 1; i + j <= cap; ++j) {
            for (std::size_t x = 0; x < dim[i]; ++x) {
                const Matrix lx = lift[i].column(x);
                for (std::size_t y = 0; y < dim[j]; ++y) {
                    const Matrix col = q[i + j] * kronecker(lx, lift[j].column(y));
                    put(offset[i] + x, offset[j] + y, offset[i + j], col);
                }
            }
        }
    }
    return FiniteAlgebra::create(std::move(t));
}

UnitalBasis canonicalize_unital_basis(const FiniteAlgebra& a) {
    const std::size_t d = a.rank();
    const ScalarRing& ring = a.ring();
    if (a.has_unital_basis()) {
        return UnitalBasis{a, Matrix::identity(ring, d), Matrix::identity(ring, d)};
    }
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < d && !pivot; ++i) {
        if (ring.is_unit(a.unit()(i, 0))) pivot = i;
    }
    if (!pivot) {
        throw ValidationError("unital_basis", "no unit coordinate is invertible, so A/k1 is not free");
    }
    Matrix to_old(ring, d, d);
    for (std::size_t i = 0; i < d; ++i) to_old.set(i, 0, a.unit()(i, 0));
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < d; ++i) {
        if (i != *pivot) others.push_back(i);
    }
    for (std::size_t t = 0; t < others.size(); ++t) to_old.set(others[t], t + 1, 1);
    auto inv = solve(to_old, Matrix::identity(ring, d));
    if (!inv) throw Error("internal", "unital basis change is not invertible");

    bool pure = true;
    for (std::size_t i = 0; i < d; ++i) {
        if (a.unit()(i, 0) != (i == *pivot ? 1 : 0)) pure = false;
    }
    AlgebraTable t;
    t.ring = ring;
    t.basis.push_back(pure ? a.basis_names()[*pivot] : std::string("1"));
    for (std::size_t i : others) t.basis.push_back(a.basis_names()[i]);
    t.unit.assign(d, 0);
    t.unit[0] = 1;
    t.mul.assign(d * d * d, 0);
    for (std::size_t x = 0; x < d; ++x) {
        const Matrix fx = a.left_multiplication(to_old.column(x));
        for (std::size_t y = 0; y < d; ++y) {
            const Matrix coords = *inv * (fx * to_old.column(y));
            for (std::size_t k = 0; k < d; ++k) t.mul[(x * d + y) * d + k] = coords(k, 0);
        }
    }
    return UnitalBasis{FiniteAlgebra::create(std::move(t)), to_old, std::move(*inv)};
}

namespace {

std::vector<Matrix> transport_actions(const std::vector<Matrix>& acts, const UnitalBasis& basis, std::size_t m,
                                      const ScalarRing& ring) {
    std::vector<Matrix> out;
    for (std::size_t a = 0; a < basis.to_old.cols(); ++a) out.push_back(combine(acts, basis.to_old.column(a), m, ring));
    return out;
}

}  // namespace

Bimodule transport(const Bimodule& m, const UnitalBasis& basis) {
    const ScalarRing& ring = basis.algebra.ring();
    return Bimodule::create(basis.algebra, m.rank(), transport_actions(m.left_actions(), basis, m.rank(), ring),
                            transport_actions(m.right_actions(), basis, m.rank(), ring));
}

LeftModule transport(const LeftModule& m, const UnitalBasis& basis) {
    const ScalarRing& ring = basis.algebra.ring();
    return LeftModule::create(basis.algebra, m.rank(), transport_actions(m.actions(), basis, m.rank(), ring));
}

}  // namespace hochkit
