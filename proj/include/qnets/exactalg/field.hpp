#pragma once

// Scalar fields used throughout the toolkit: the rationals (GMP backed) and
// prime fields F_p with a runtime modulus. Generic code is written against a
// field descriptor F exposing F::Element, zero(), one() and from_int().

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qnets/errors.hpp"

namespace qnets {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Element of F_p. Both operands of a binary operation must share the modulus.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    static Fp from_signed(long long value, std::uint64_t modulus) {
        long long r = value % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        return Fp(static_cast<std::uint64_t>(r), modulus);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const {
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const {
        return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp pow(std::uint64_t e) const {
        Fp base = *this;
        Fp acc = raw(1 % p_, p_);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        return pow(p_ - 2);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }

struct RationalField {
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(long long v) const { return Rational(static_cast<long>(v)); }
    Element from_bigint(const BigInt& v) const { return Rational(v); }
    /// Number of elements, or nullopt for infinite fields.
    std::optional<std::uint64_t> order() const { return std::nullopt; }
    std::uint64_t characteristic() const { return 0; }
    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
    using Element = Fp;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime(p) || p < 5) throw InvalidInput("prime field needs a prime p >= 5, got " + std::to_string(p));
    }

    Element zero() const { return Fp(0, p); }
    Element one() const { return Fp(1, p); }
    Element from_int(long long v) const { return Fp::from_signed(v, p); }
    Element from_bigint(const BigInt& v) const {
        BigInt r = v % BigInt(static_cast<unsigned long>(p));
        if (sgn(r) < 0) r += static_cast<unsigned long>(p);
        return Fp(r.get_ui(), p);
    }
    std::optional<std::uint64_t> order() const { return p; }
    std::uint64_t characteristic() const { return p; }
    std::string name() const { return "F" + std::to_string(p); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }

    std::uint64_t p;
};

/// Reduction of a rational modulo p; nullopt when p divides the denominator.
inline std::optional<Fp> reduce_mod(const Rational& x, const PrimeField& field) {
    const PrimeField& f = field;
    Fp den = f.from_bigint(x.get_den());
    if (is_zero(den)) return std::nullopt;
    return f.from_bigint(x.get_num()) / den;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

}  // namespace qnets
