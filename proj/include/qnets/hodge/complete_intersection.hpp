#pragma once

// Smooth complete intersections in P^N: Euler characteristic, the
// Hirzebruch chi_y genus and the middle Hodge numbers; double planes.

#include <array>
#include <vector>

#include "qnets/errors.hpp"
#include "qnets/exactalg/field.hpp"
#include "qnets/hodge/bwb.hpp"

namespace qnets {

namespace detail {

/// Truncated power series with rational coefficients, degree < len.
using Series = std::vector<Rational>;

inline Series mul(const Series& f, const Series& g) {
    Series out(f.size(), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (sgn(f[i]) != 0)
            for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

inline Series inverse(const Series& f) {
    if (sgn(f.at(0)) == 0) throw std::logic_error("series inverse needs a unit constant term");
    Series out(f.size(), Rational(0));
    out[0] = 1 / f[0];
    for (std::size_t n = 1; n < f.size(); ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += f[k] * out[n - k];
        out[n] = -s / f[0];
    }
    return out;
}

inline Series power(const Series& f, long e) {
    Series out(f.size(), Rational(0));
    out[0] = 1;
    Series base = e < 0 ? inverse(f) : f;
    for (long k = e < 0 ? -e : e; k > 0; k >>= 1) {
        if (k & 1) out = mul(out, base);
        base = mul(base, base);
    }
    return out;
}

/// exp(c x) truncated.
inline Series exp_series(const Rational& c, std::size_t len) {
    Series out(len, Rational(0));
    Rational term = 1;
    for (std::size_t k = 0; k < len; ++k) {
        out[k] = term;
        term *= c / Rational(static_cast<long>(k) + 1);
    }
    return out;
}

/// Q_y(c x) / c as a series in x, where Q_y(x) = x (1 + y e^{-x}) / (1 - e^{-x}).
inline Series q_scaled(const Rational& y, long c, std::size_t len) {
    // (1 - e^{-cx}) / x
    const Series e = exp_series(Rational(-c), len + 1);
    Series den(len, Rational(0)), num(len, Rational(0));
    for (std::size_t k = 0; k < len; ++k) {
        den[k] = -e[k + 1];
        num[k] = (k == 0 ? Rational(1) : Rational(0)) + y * e[k];
    }
    return mul(num, inverse(den));
}

}  // namespace detail

/// Topological Euler characteristic of a smooth complete intersection of
/// the given degrees in P^N.
inline BigInt euler_ci(int n_ambient, const std::vector<int>& degrees) {
    const int c = static_cast<int>(degrees.size());
    if (n_ambient < 1 || c > n_ambient) throw InvalidSpec("complete intersection needs 0 <= codim <= N");
    BigInt prod = 1;
    for (int d : degrees) {
        if (d < 1) throw InvalidSpec("degrees must be positive");
        prod *= d;
    }
    const std::size_t len = static_cast<std::size_t>(n_ambient - c) + 1;
    detail::Series one_plus_h(len, Rational(0));
    one_plus_h[0] = 1;
    if (len > 1) one_plus_h[1] = 1;
    detail::Series total = detail::power(one_plus_h, n_ambient + 1);
    detail::Series one_plus(len, Rational(0));
    for (int d : degrees) {
        std::fill(one_plus.begin(), one_plus.end(), Rational(0));
        one_plus[0] = 1;
        if (len > 1) one_plus[1] = d;
        total = detail::mul(total, detail::inverse(one_plus));
    }
    const Rational e = total[len - 1] * Rational(prod);
    return e.get_num();
}

/// chi_y = sum_p chi(Omega^p) y^p, coefficients in p = 0..dim.
inline std::vector<BigInt> ci_chi_y(int n_ambient, const std::vector<int>& degrees) {
    const int c = static_cast<int>(degrees.size());
    if (n_ambient < 1 || c > n_ambient) throw InvalidSpec("complete intersection needs 0 <= codim <= N");
    for (int d : degrees)
        if (d < 1) throw InvalidSpec("degrees must be positive");
    const int dim = n_ambient - c;
    const std::size_t len = static_cast<std::size_t>(n_ambient) + 1;
    // chi_y(Y) = [h^dim] Q_y(h)^{N+1} / (1+y) * prod_i d_i / Q_y(d_i h),
    // sampled at y = 0..dim and interpolated.
    std::vector<Rational> samples;
    for (int yi = 0; yi <= dim; ++yi) {
        const Rational y = yi;
        detail::Series s = detail::power(detail::q_scaled(y, 1, len), n_ambient + 1);
        for (int d : degrees) s = detail::mul(s, detail::inverse(detail::q_scaled(y, d, len)));
        samples.push_back(s[static_cast<std::size_t>(dim)] / (1 + y));
    }
    // Newton interpolation on nodes 0..dim.
    std::vector<Rational> coef(samples);
    for (int k = 1; k <= dim; ++k)
        for (int i = dim; i >= k; --i)
            coef[static_cast<std::size_t>(i)] = (coef[static_cast<std::size_t>(i)] - coef[static_cast<std::size_t>(i - 1)]) / Rational(k);
    std::vector<Rational> poly(static_cast<std::size_t>(dim) + 1, Rational(0));
    for (int i = dim; i >= 0; --i) {
        // poly = poly * (y - i) + coef[i]
        std::vector<Rational> next(poly.size(), Rational(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
            if (j + 1 < next.size()) next[j + 1] += poly[j];
            next[j] -= poly[j] * i;
        }
        next[0] += coef[static_cast<std::size_t>(i)];
        poly = std::move(next);
    }
    std::vector<BigInt> out;
    for (const auto& r : poly) {
        if (r.get_den() != 1) throw std::logic_error("chi_y coefficient is not an integer");
        out.push_back(r.get_num());
    }
    return out;
}

/// Hodge numbers h^{p, dim-p} of a smooth complete intersection, p = 0..dim.
/// Off the middle row the diamond is that of P^dim (Lefschetz).
inline std::vector<BigInt> ci_middle_hodge(int n_ambient, const std::vector<int>& degrees) {
    const auto chi = ci_chi_y(n_ambient, degrees);
    const int dim = n_ambient - static_cast<int>(degrees.size());
    std::vector<BigInt> out;
    for (int p = 0; p <= dim; ++p) {
        // chi(Omega^p) = sum_q (-1)^q h^{p,q} = (-1)^p [p == dim-p ? 0 : 1] + (-1)^{dim-p} h^{p,dim-p}
        BigInt rest = chi[static_cast<std::size_t>(p)];
        if (2 * p != dim) rest -= (p % 2 == 0 ? 1 : -1);
        out.push_back((dim - p) % 2 == 0 ? rest : BigInt(-rest));
    }
    return out;
}

/// (h^{2,0}, h^{1,1}, h^{0,2}) of the double cover of P^2 branched along a
/// smooth curve of even degree d.
inline std::array<BigInt, 3> double_plane_hodge(int d) {
    if (d < 2) throw InvalidSpec("branch degree must be at least 2");
    if (d % 2 != 0) throw OddDegree();
    const BigInt h20 = binomial(d / 2 - 1, 2);
    const BigInt genus = BigInt((d - 1) * (d - 2)) / 2;
    const BigInt e = 4 + 2 * genus;
    return {h20, e - 2 - 2 * h20, h20};
}

}  // namespace qnets
