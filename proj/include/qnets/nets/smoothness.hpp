#pragma once

// One-sided smoothness certificates for plane curves. Smoothness of the
// reduction mod p of a primitive integral model implies smoothness over the
// algebraic closure of Q; a singular reduction says nothing about Q.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "qnets/exactalg/resultant.hpp"
#include "qnets/exactalg/ternary_form.hpp"

namespace qnets {

struct SmoothnessVerdict {
    enum class Kind { SmoothCertified, SingularModP, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::uint64_t prime = 0;
    std::array<std::uint64_t, 3> witness{};  // projective point mod prime, SingularModP only

    bool smooth() const { return kind == Kind::SmoothCertified; }
    std::string kind_name() const {
        switch (kind) {
            case Kind::SmoothCertified: return "SmoothCertified";
            case Kind::SingularModP: return "SingularModP";
            case Kind::Inconclusive: return "Inconclusive";
        }
        return "?";
    }
};

inline const std::vector<std::uint64_t>& default_smoothness_primes() {
    static const std::vector<std::uint64_t> primes{101, 211, 307};
    return primes;
}

namespace detail {

enum class EliminationOutcome { Smooth, Vanished, Degenerate };

/// One elimination attempt after the coordinate change g(l) = f(A l).
/// Requires the three partials to be monic-up-to-scalar in l3 and the two
/// intermediate resultants to have full degree in l2, so that a vanishing
/// final resultant is the only way a common projective zero can show up.
inline EliminationOutcome eliminate_gradient(const TernaryForm<PrimeField>& f, const Matrix<Fp>& a) {
    using P = MultiPoly<PrimeField>;
    const unsigned d = f.degree();
    const P g = f.substitute(a).to_multipoly();
    const std::array<P, 3> grad{g.partial(0), g.partial(1), g.partial(2)};
    const unsigned e = d - 1;
    for (const auto& gi : grad)
        if (gi.degree_in(2) != static_cast<int>(e)) return EliminationOutcome::Degenerate;
    const P r1 = resultant(grad[0], grad[1], 2, e, e);
    const P r2 = resultant(grad[0], grad[2], 2, e, e);
    const unsigned full = e * e;
    if (r1.degree_in(1) != static_cast<int>(full) || r2.degree_in(1) != static_cast<int>(full))
        return EliminationOutcome::Degenerate;
    const P last = resultant(r1, r2, 1, full, full);
    return last.is_zero() ? EliminationOutcome::Vanished : EliminationOutcome::Smooth;
}

inline std::optional<std::array<std::uint64_t, 3>> find_singular_point(const TernaryForm<PrimeField>& f) {
    const PrimeField& field = f.field();
    const std::array<TernaryForm<PrimeField>, 3> grad{f.partial(0), f.partial(1), f.partial(2)};
    const std::uint64_t p = field.p;
    auto singular = [&](const Fp& x, const Fp& y, const Fp& z) {
        if (!is_zero(f.evaluate(x, y, z))) return false;
        for (const auto& g : grad)
            if (!is_zero(g.evaluate(x, y, z))) return false;
        return true;
    };
    const Fp zero = field.zero(), one = field.one();
    if (singular(zero, zero, one)) return std::array<std::uint64_t, 3>{0, 0, 1};
    for (std::uint64_t z = 0; z < p; ++z)
        if (singular(zero, one, Fp(z, p))) return std::array<std::uint64_t, 3>{0, 1, z};
    for (std::uint64_t y = 0; y < p; ++y)
        for (std::uint64_t z = 0; z < p; ++z)
            if (singular(one, Fp(y, p), Fp(z, p))) return std::array<std::uint64_t, 3>{1, y, z};
    return std::nullopt;
}

inline Matrix<Fp> random_invertible(const PrimeField& field, std::mt19937_64& rng) {
    for (;;) {
        Matrix<Fp> a(3, 3, field.zero());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = Fp(rng() % field.p, field.p);
        if (!is_zero(det_fraction_free(a))) return a;
    }
}

/// Verdict for a curve already reduced mod p.
inline std::optional<SmoothnessVerdict> verdict_mod_p(const TernaryForm<PrimeField>& f, int retries) {
    const std::uint64_t p = f.field().p;
    if (f.is_zero() || f.degree() == 0 || f.degree() % p == 0) return std::nullopt;  // bad reduction
    // `retries` counts completed eliminations; coordinate changes failing the
    // leading-coefficient preconditions are redrawn, at most 64 draws in all.
    std::mt19937_64 rng(0x5eed0000ULL + p);
    int completed = 0;
    for (int draw = 0; draw < 64 && completed < retries; ++draw) {
        const auto outcome = eliminate_gradient(f, random_invertible(f.field(), rng));
        if (outcome == EliminationOutcome::Smooth) return SmoothnessVerdict{SmoothnessVerdict::Kind::SmoothCertified, p, {}};
        if (outcome == EliminationOutcome::Vanished) ++completed;
    }
    if (auto w = find_singular_point(f)) return SmoothnessVerdict{SmoothnessVerdict::Kind::SingularModP, p, *w};
    return std::nullopt;
}

/// Scales a rational form to primitive integer coefficients.
inline std::vector<BigInt> primitive_integer_coefficients(const TernaryForm<RationalField>& f) {
    BigInt l = 1, g = 0;
    for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out;
    for (const auto& c : f.coefficients()) {
        out.push_back(c.get_num() * (l / c.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (sgn(g) != 0)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace detail

/// Tries each prime in turn: a random coordinate change followed by
/// successive resultants of the three partials. A nonzero final resultant
/// certifies smoothness. If no prime certifies, the first F_p-rational
/// singular point found is reported; otherwise the verdict is Inconclusive.
/// Forms over F_p are tested at their own prime only.
template <class F>
SmoothnessVerdict smoothness_verdict(const TernaryForm<F>& f,
                                     const std::vector<std::uint64_t>& primes = default_smoothness_primes(),
                                     int retries = 3) {
    if (f.is_zero()) throw ZeroForm();
    std::optional<SmoothnessVerdict> singular;
    auto consider = [&](const TernaryForm<PrimeField>& reduced) -> std::optional<SmoothnessVerdict> {
        auto v = detail::verdict_mod_p(reduced, retries);
        if (v && v->smooth()) return v;
        if (v && !singular) singular = v;
        return std::nullopt;
    };
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (auto v = consider(f)) return *v;
    } else {
        const auto ints = detail::primitive_integer_coefficients(f);
        for (auto p : primes) {
            PrimeField field(p);
            std::vector<Fp> c;
            for (const auto& x : ints) c.push_back(field.from_bigint(x));
            if (auto v = consider(TernaryForm<PrimeField>(field, f.degree(), c))) return *v;
        }
    }
    if (singular) return *singular;
    return {};
}

}  // namespace qnets
