#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hochkit {

/// Exact scalar. Integers and residues are stored with denominator 1.
using Scalar = mpq_class;

/// The base ring k: the integers, the rationals, or a prime field F_p.
///
/// Elements are plain Scalars; every arithmetic helper returns the canonical
/// representative (reduced fraction, or residue in [0, p)).
class ScalarRing {
   public:
    enum class Kind { Integers, Rationals, PrimeField };

    static ScalarRing integers() noexcept { return ScalarRing(Kind::Integers, 0); }
    static ScalarRing rationals() noexcept { return ScalarRing(Kind::Rationals, 0); }
    /// Throws ValidationError unless p is prime.
    static ScalarRing prime_field(std::uint64_t p);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::uint64_t characteristic() const noexcept { return p_; }
    [[nodiscard]] bool is_field() const noexcept { return kind_ != Kind::Integers; }
    [[nodiscard]] std::string name() const;

    /// Maps an arbitrary rational to its canonical element of this ring.
    /// Throws ValidationError if the value does not belong to the ring
    /// (non-integer over Z, denominator divisible by p over F_p).
    [[nodiscard]] Scalar reduce(const Scalar& x) const;
    [[nodiscard]] bool contains(const Scalar& x) const;

    [[nodiscard]] Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    [[nodiscard]] Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    [[nodiscard]] Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    [[nodiscard]] Scalar neg(const Scalar& a) const { return reduce(-a); }
    [[nodiscard]] bool is_unit(const Scalar& a) const;
    [[nodiscard]] std::optional<Scalar> inverse(const Scalar& a) const;

    /// Parses "3", "-1/2", ... and reduces into the ring.
    [[nodiscard]] Scalar parse(std::string_view text) const;
    [[nodiscard]] std::string format(const Scalar& x) const;

    friend bool operator==(const ScalarRing&, const ScalarRing&) = default;

   private:
    ScalarRing(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

}  // namespace hochkit
