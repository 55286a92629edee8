#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hochkit/matrix.hpp"

namespace hochkit {

/// Unvalidated description of a finite-rank algebra: e_i * e_j = sum_k mul[(i*d + j)*d + k] e_k.
struct AlgebraTable {
    ScalarRing ring = ScalarRing::rationals();
    std::vector<std::string> basis;
    std::vector<Scalar> unit;
    std::vector<Scalar> mul;

    [[nodiscard]] std::size_t rank() const noexcept { return basis.size(); }
    [[nodiscard]] const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t d = rank();
        return mul[(i * d + j) * d + k];
    }
};

/// First basis triple (i, j, l) with (e_i e_j) e_l != e_i (e_j e_l), scanning
/// lexicographically.
[[nodiscard]] std::optional<std::array<std::size_t, 3>> associativity_witness(const AlgebraTable& t);
/// First basis index i with 1 * e_i != e_i or e_i * 1 != e_i.
[[nodiscard]] std::optional<std::size_t> unit_witness(const AlgebraTable& t);

/// A unital associative algebra, free of finite rank over its base ring.
/// Immutable; copies share storage.
class FiniteAlgebra {
   public:
    /// Checks shapes, associativity and the unit laws; throws ValidationError
    /// with the first failing triple or unit index as witness.
    static FiniteAlgebra create(AlgebraTable table);

    [[nodiscard]] const ScalarRing& ring() const noexcept { return data_->table.ring; }
    [[nodiscard]] std::size_t rank() const noexcept { return data_->table.rank(); }
    [[nodiscard]] const std::vector<std::string>& basis_names() const noexcept { return data_->table.basis; }
    [[nodiscard]] const AlgebraTable& table() const noexcept { return data_->table; }
    [[nodiscard]] const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return data_->table.c(i, j, k); }

    /// Unit as a d x 1 column.
    [[nodiscard]] const Matrix& unit() const noexcept { return data_->unit; }
    /// Matrix of x -> e_i x.
    [[nodiscard]] const Matrix& left_mul(std::size_t i) const { return data_->left[i]; }
    /// Matrix of x -> x e_i.
    [[nodiscard]] const Matrix& right_mul(std::size_t i) const { return data_->right[i]; }
    /// The multiplication map A (x) A -> A as a d x d^2 matrix.
    [[nodiscard]] Matrix multiplication_map() const;

    [[nodiscard]] Matrix basis_vector(std::size_t i) const;
    [[nodiscard]] Matrix product(const Matrix& a, const Matrix& b) const;
    /// Matrix of x -> a x for an element a.
    [[nodiscard]] Matrix left_multiplication(const Matrix& a) const;

    /// True when the unit is the first basis vector.
    [[nodiscard]] bool has_unital_basis() const;
    [[nodiscard]] bool is_commutative() const;
    /// Stable text key of the structure (ring, unit, constants).
    [[nodiscard]] const std::string& fingerprint() const noexcept { return data_->fingerprint; }

    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
        return a.data_ == b.data_ || a.fingerprint() == b.fingerprint();
    }

   private:
    struct Data {
        AlgebraTable table;
        Matrix unit;
        std::vector<Matrix> left;
        std::vector<Matrix> right;
        std::string fingerprint;
    };
    explicit FiniteAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

/// Left A-module, free of finite rank over k; actions[i] is the matrix of m -> e_i m.
class LeftModule {
   public:
    static LeftModule create(FiniteAlgebra algebra, std::size_t rank, std::vector<Matrix> actions);
    static LeftModule regular(const FiniteAlgebra& a);

    [[nodiscard]] const FiniteAlgebra& algebra() const noexcept { return algebra_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] const Matrix& action(std::size_t i) const { return actions_[i]; }
    [[nodiscard]] const std::vector<Matrix>& actions() const noexcept { return actions_; }
    /// Matrix of m -> a m for an element a.
    [[nodiscard]] Matrix act(const Matrix& a) const;

   private:
    LeftModule(FiniteAlgebra a, std::size_t r, std::vector<Matrix> act)
        : algebra_(std::move(a)), rank_(r), actions_(std::move(act)) {}
    FiniteAlgebra algebra_;
    std::size_t rank_;
    std::vector<Matrix> actions_;
};

/// (A, A)-bimodule, free of finite rank m over k. left(i): m -> e_i m,
/// right(i): m -> m e_i.
class Bimodule {
   public:
    /// Validates unit, associativity of both actions and L_i R_j = R_j L_i.
    static Bimodule create(FiniteAlgebra algebra, std::size_t rank, std::vector<Matrix> left,
                           std::vector<Matrix> right);
    static Bimodule regular(const FiniteAlgebra& a);
    static Bimodule zero(const FiniteAlgebra& a);
    /// Right action equal to the left one; requires a commutative algebra.
    static Bimodule symmetric(const LeftModule& m);
    /// Skips validation; for structures that are bimodules by construction.
    static Bimodule trusted(FiniteAlgebra algebra, std::size_t rank, std::vector<Matrix> left,
                            std::vector<Matrix> right) {
        return Bimodule(std::move(algebra), rank, std::move(left), std::move(right));
    }

    [[nodiscard]] const FiniteAlgebra& algebra() const noexcept { return algebra_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] const Matrix& left(std::size_t i) const { return left_[i]; }
    [[nodiscard]] const Matrix& right(std::size_t i) const { return right_[i]; }
    [[nodiscard]] const std::vector<Matrix>& left_actions() const noexcept { return left_; }
    [[nodiscard]] const std::vector<Matrix>& right_actions() const noexcept { return right_; }
    [[nodiscard]] Matrix left_act(const Matrix& a) const;
    [[nodiscard]] Matrix right_act(const Matrix& a) const;
    /// Forgets the right action.
    [[nodiscard]] LeftModule left_module() const;

   private:
    Bimodule(FiniteAlgebra a, std::size_t r, std::vector<Matrix> l, std::vector<Matrix> rr)
        : algebra_(std::move(a)), rank_(r), left_(std::move(l)), right_(std::move(rr)) {}
    FiniteAlgebra algebra_;
    std::size_t rank_;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
};

[[nodiscard]] FiniteAlgebra validate_algebra(AlgebraTable table);

[[nodiscard]] FiniteAlgebra opposite(const FiniteAlgebra& a);
/// A (x) A^op with basis (i, j) at index i * d + j.
[[nodiscard]] FiniteAlgebra enveloping(const FiniteAlgebra& a);

/// The left A^e-module with (e_i (x) e_j) . m = e_i m e_j.
[[nodiscard]] LeftModule ae_from_bimodule(const Bimodule& m);
/// Inverse of ae_from_bimodule; env_module must be a module over enveloping(a).
[[nodiscard]] Bimodule bimodule_from_ae(const FiniteAlgebra& a, const LeftModule& env_module);
/// Right A^e-action m . (a (x) b) = b m a, as matrices indexed like enveloping(a).
[[nodiscard]] std::vector<Matrix> ae_right_action(const Bimodule& m);

/// Hom_k(n, m) with ((a, a') . f)(x) = a f(a' x). Basis E_pq (x_q -> y_p) at
/// index p * rank(n) + q.
[[nodiscard]] Bimodule hom_bimodule(const LeftModule& n, const LeftModule& m);

/// Basis of Hom_A(m, n); column = row-major vectorised rank(n) x rank(m) matrix.
[[nodiscard]] Matrix module_homomorphisms(const LeftModule& m, const LeftModule& n);

/// B + M + M^(x_B 2) + ... + M^(x_B cap), products beyond degree cap vanish.
[[nodiscard]] FiniteAlgebra truncated_tensor_algebra(const FiniteAlgebra& b, const Bimodule& m, std::size_t cap);

/// Change to a basis whose first vector is the unit.
struct UnitalBasis {
    FiniteAlgebra algebra;
    /// Columns: new basis vectors in old coordinates.
    Matrix to_old;
    /// Inverse of to_old.
    Matrix to_new;
};

/// Replaces the first basis vector whose unit coordinate is invertible by the
/// unit and moves it to the front. Throws ValidationError when no unit
/// coordinate is invertible (possible over Z).
[[nodiscard]] UnitalBasis canonicalize_unital_basis(const FiniteAlgebra& a);
/// Re-expresses a bimodule over the canonicalized algebra.
[[nodiscard]] Bimodule transport(const Bimodule& m, const UnitalBasis& basis);
[[nodiscard]] LeftModule transport(const LeftModule& m, const UnitalBasis& basis);

}  // namespace hochkit
