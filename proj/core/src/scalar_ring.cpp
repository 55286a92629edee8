#include "hochkit/scalar_ring.hpp"

#include <array>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

mpz_class to_mpz(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return z;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t odd = n - 1;
    int twos = 0;
    while ((odd & 1U) == 0) {
        odd >>= 1U;
        ++twos;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t a : bases) {
        std::uint64_t x = pow_mod(a, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < twos; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ScalarRing ScalarRing::prime_field(std::uint64_t p) {
    if (!is_prime(p)) {
        throw ValidationError("ring", "F_p requires a prime characteristic, got " + std::to_string(p),
                              std::to_string(p));
    }
    return ScalarRing(Kind::PrimeField, p);
}

std::string ScalarRing::name() const {
    switch (kind_) {
        case Kind::Integers:
            return "Z";
        case Kind::Rationals:
            return "Q";
        case Kind::PrimeField:
            return "F" + std::to_string(p_);
    }
    return "?";
}

Scalar ScalarRing::reduce(const Scalar& x) const {
    switch (kind_) {
        case Kind::Rationals:
            return x;
        case Kind::Integers:
            if (x.get_den() != 1) {
                throw ValidationError("ring", "value " + x.get_str() + " is not an integer", x.get_str());
            }
            return x;
        case Kind::PrimeField: {
            static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
            const unsigned long residue = mpz_fdiv_ui(x.get_num_mpz_t(), p_);
            if (x.get_den() == 1) return Scalar(residue);
            const mpz_class p = to_mpz(p_);
            const mpz_class num(residue);
            mpz_class den = x.get_den() % p;
            if (den == 0) {
                throw ValidationError("ring", "denominator of " + x.get_str() + " vanishes in " + name(),
                                      x.get_str());
            }
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
            mpz_class r = (num * inv) % p;
            return Scalar(r);
        }
    }
    return x;
}

bool ScalarRing::contains(const Scalar& x) const {
    switch (kind_) {
        case Kind::Rationals:
            return true;
        case Kind::Integers:
            return x.get_den() == 1;
        case Kind::PrimeField:
            return x.get_den() == 1 && x.get_num() >= 0 && x.get_num() < to_mpz(p_);
    }
    return false;
}

bool ScalarRing::is_unit(const Scalar& a) const {
    if (kind_ == Kind::Integers) return a == 1 || a == -1;
    return reduce(a) != 0;
}

std::optional<Scalar> ScalarRing::inverse(const Scalar& a) const {
    if (!is_unit(a)) return std::nullopt;
    if (kind_ == Kind::Integers) return a;
    return reduce(Scalar(1) / a);
}

Scalar ScalarRing::parse(std::string_view text) const {
    Scalar value;
    std::string s(text);
    if (s.empty() || value.set_str(s, 10) != 0) {
        throw ValidationError("parse", "malformed scalar '" + s + "'", s);
    }
    if (value.get_den() == 0) throw ValidationError("parse", "zero denominator in '" + s + "'", s);
    value.canonicalize();
    return reduce(value);
}

std::string ScalarRing::format(const Scalar& x) const { return x.get_str(); }

}  // namespace hochkit
