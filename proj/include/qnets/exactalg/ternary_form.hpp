#pragma once

// Homogeneous forms in three variables (l1, l2, l3). Coefficients are stored
// in graded-lex order with l1 > l2 > l3: for degree d the monomial
// l1^a l2^b l3^c sits at index (d-a)(d-a+1)/2 + (d-a-b). This order is part of
// the serialization contract.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qnets/concurrency.hpp"
#include "qnets/exactalg/matrix.hpp"
#include "qnets/exactalg/multipoly.hpp"

namespace qnets {

struct Monomial3 {
    unsigned a, b, c;
    friend bool operator==(const Monomial3&, const Monomial3&) = default;
};

inline std::size_t ternary_size(unsigned degree) { return (degree + 1) * (degree + 2) / 2; }

inline std::size_t ternary_index(unsigned degree, unsigned a, unsigned b) {
    const unsigned r = degree - a;
    return r * (r + 1) / 2 + (r - b);
}

inline Monomial3 ternary_monomial(unsigned degree, std::size_t index) {
    unsigned r = 0;
    while ((r + 1) * (r + 2) / 2 <= index) ++r;
    const unsigned offset = static_cast<unsigned>(index - r * (r + 1) / 2);
    const unsigned a = degree - r;
    const unsigned b = r - offset;
    return {a, b, degree - a - b};
}

template <class F>
class TernaryForm {
public:
    using Element = typename F::Element;

    TernaryForm(F field, unsigned degree) : field_(std::move(field)), degree_(degree) {
        coeffs_.assign(ternary_size(degree), field_.zero());
    }

    TernaryForm(F field, unsigned degree, std::vector<Element> coeffs)
        : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != ternary_size(degree)) throw InvalidInput("coefficient vector length does not match degree");
    }

    /// Single monomial c * l1^a l2^b l3^c.
    static TernaryForm monomial(const F& field, unsigned a, unsigned b, unsigned c, const Element& coeff) {
        TernaryForm f(field, a + b + c);
        f.coeffs_[ternary_index(a + b + c, a, b)] = coeff;
        return f;
    }

    /// c1 l1 + c2 l2 + c3 l3.
    static TernaryForm linear(const F& field, const Element& c1, const Element& c2, const Element& c3) {
        return TernaryForm(field, 1, {c1, c2, c3});
    }

    const F& field() const { return field_; }
    unsigned degree() const { return degree_; }
    const std::vector<Element>& coefficients() const { return coeffs_; }

    Element coefficient(unsigned a, unsigned b, unsigned c) const {
        if (a + b + c != degree_) return field_.zero();
        return coeffs_[ternary_index(degree_, a, b)];
    }
    void set_coefficient(unsigned a, unsigned b, unsigned c, const Element& v) {
        coeffs_.at(ternary_index(degree_, a, b)) = v;
        (void)c;
    }

    bool is_zero() const {
        for (const auto& x : coeffs_)
            if (!qnets::is_zero(x)) return false;
        return true;
    }

    Element evaluate(const Element& l1, const Element& l2, const Element& l3) const {
        // Horner-free direct sum; degrees here stay small.
        std::vector<Element> p1{field_.one()}, p2{field_.one()}, p3{field_.one()};
        for (unsigned k = 0; k < degree_; ++k) {
            p1.push_back(p1.back() * l1);
            p2.push_back(p2.back() * l2);
            p3.push_back(p3.back() * l3);
        }
        Element acc = field_.zero();
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (qnets::is_zero(coeffs_[i])) continue;
            auto m = ternary_monomial(degree_, i);
            acc += coeffs_[i] * p1[m.a] * p2[m.b] * p3[m.c];
        }
        return acc;
    }

    MultiPoly<F> to_multipoly() const {
        MultiPoly<F> p(field_, 3);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            auto m = ternary_monomial(degree_, i);
            p.add_term({m.a, m.b, m.c}, coeffs_[i]);
        }
        return p;
    }

    /// Converts a homogeneous polynomial in 3 variables; throws if not homogeneous of `degree`.
    static TernaryForm from_multipoly(const MultiPoly<F>& p, unsigned degree) {
        if (p.nvars() != 3) throw InvalidInput("ternary form needs exactly 3 variables");
        TernaryForm f(p.field(), degree);
        for (const auto& [e, c] : p.terms()) {
            if (e[0] + e[1] + e[2] != degree) throw InvalidInput("polynomial is not homogeneous of the requested degree");
            f.coeffs_[ternary_index(degree, e[0], e[1])] = c;
        }
        return f;
    }

    friend TernaryForm operator*(const TernaryForm& x, const TernaryForm& y) {
        return from_multipoly(x.to_multipoly() * y.to_multipoly(), x.degree_ + y.degree_);
    }

    friend TernaryForm operator+(const TernaryForm& x, const TernaryForm& y) {
        if (x.degree_ != y.degree_) throw InvalidInput("adding forms of different degree");
        TernaryForm out = x;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += y.coeffs_[i];
        return out;
    }

    TernaryForm scaled(const Element& s) const {
        TernaryForm out = *this;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    TernaryForm pow(unsigned k) const {
        TernaryForm acc = monomial(field_, 0, 0, 0, field_.one());
        for (unsigned i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    /// The form g(l) = f(A l) for a 3x3 matrix A.
    TernaryForm substitute(const Matrix<Element>& a) const {
        std::vector<MultiPoly<F>> images;
        for (std::size_t i = 0; i < 3; ++i) {
            MultiPoly<F> row(field_, 3);
            for (std::size_t j = 0; j < 3; ++j) {
                Exponent e(3, 0);
                e[j] = 1;
                row.add_term(e, a(i, j));
            }
            images.push_back(std::move(row));
        }
        return from_multipoly(to_multipoly().substitute(images), degree_);
    }

    TernaryForm partial(std::size_t var) const {
        if (degree_ == 0) return TernaryForm(field_, 0);
        return from_multipoly(to_multipoly().partial(var), degree_ - 1);
    }

    friend bool operator==(const TernaryForm& x, const TernaryForm& y) {
        return x.degree_ == y.degree_ && x.coeffs_ == y.coeffs_;
    }

private:
    F field_;
    unsigned degree_;
    std::vector<Element> coeffs_;
};

/// Node set for degree-d interpolation, in order: (1,0,0); (i,1,0) for
/// i = 0..d-1; (i,j,1) for i+j <= d-1 (i outer, j inner). These are
/// 1 + d + d(d+1)/2 = (d+1)(d+2)/2 points.
inline std::vector<std::array<long long, 3>> interpolation_nodes(unsigned degree) {
    std::vector<std::array<long long, 3>> nodes;
    nodes.push_back({1, 0, 0});
    for (unsigned i = 0; i < degree; ++i) nodes.push_back({static_cast<long long>(i), 1, 0});
    for (unsigned i = 0; i < degree; ++i)
        for (unsigned j = 0; i + j < degree; ++j)
            nodes.push_back({static_cast<long long>(i), static_cast<long long>(j), 1});
    return nodes;
}

namespace detail {

/// Inverse of the node/monomial evaluation matrix, cached per (field, degree).
template <class F>
Matrix<typename F::Element> interpolation_inverse(const F& field, unsigned degree) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, Matrix<typename F::Element>> cache;
    const auto key = std::make_pair(field.characteristic(), degree);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const auto nodes = interpolation_nodes(degree);
    const std::size_t n = nodes.size();
    Matrix<typename F::Element> v(n, n, field.zero());
    for (std::size_t r = 0; r < n; ++r) {
        auto x = field.from_int(nodes[r][0]), y = field.from_int(nodes[r][1]), z = field.from_int(nodes[r][2]);
        for (std::size_t c = 0; c < n; ++c) {
            auto m = ternary_monomial(degree, c);
            typename F::Element t = field.one();
            for (unsigned k = 0; k < m.a; ++k) t *= x;
            for (unsigned k = 0; k < m.b; ++k) t *= y;
            for (unsigned k = 0; k < m.c; ++k) t *= z;
            v(r, c) = t;
        }
    }
    auto inv = inverse(field, v);
    if (!inv) throw SingularInterpolationSystem();
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(*inv)).first->second;
}

}  // namespace detail

/// Recovers the degree-d ternary form whose values on interpolation_nodes(d)
/// are given by `evaluate`. Node evaluations may run concurrently.
template <class F, class Eval>
TernaryForm<F> interpolate_ternary_form(const F& field, Eval&& evaluate, unsigned degree) {
    if (auto q = field.order(); q && *q <= degree) throw SingularInterpolationSystem();
    const auto nodes = interpolation_nodes(degree);
    const auto inv = detail::interpolation_inverse(field, degree);
    std::vector<typename F::Element> values(nodes.size(), field.zero());
    parallel_for(nodes.size(), [&](std::size_t i) {
        values[i] = evaluate(field.from_int(nodes[i][0]), field.from_int(nodes[i][1]), field.from_int(nodes[i][2]));
    });
    return TernaryForm<F>(field, degree, mat_vec(field, inv, values));
}

template <class F>
struct LinePower {
    unsigned multiplicity;
    TernaryForm<F> cofactor;
};

/// Writes f = l^m * g with l not dividing g. The line is moved to l3 by a
/// linear change of coordinates, the lowest l3-power is split off, and the
/// result is moved back.
template <class F>
LinePower<F> line_power_extract(const TernaryForm<F>& f, const TernaryForm<F>& line) {
    const F& field = f.field();
    if (line.degree() != 1 || line.is_zero()) throw InvalidInput("line must be a nonzero linear form");
    if (f.is_zero()) throw ZeroForm();
    const auto& c = line.coefficients();
    std::size_t pivot = 2;
    while (qnets::is_zero(c[pivot])) --pivot;
    // Rows of B: unit vectors for the non-pivot coordinates, then the line.
    Matrix<typename F::Element> b(3, 3, field.zero());
    std::size_t r = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != pivot) b(r++, i) = field.one();
    for (std::size_t j = 0; j < 3; ++j) b(2, j) = c[j];
    const auto a = *inverse(field, b);

    const TernaryForm<F> g = f.substitute(a);
    unsigned m = f.degree();
    for (std::size_t i = 0; i < g.coefficients().size(); ++i)
        if (!qnets::is_zero(g.coefficients()[i])) m = std::min(m, ternary_monomial(g.degree(), i).c);
    TernaryForm<F> h(field, g.degree() - m);
    for (std::size_t i = 0; i < g.coefficients().size(); ++i) {
        auto mono = ternary_monomial(g.degree(), i);
        if (mono.c >= m) h.set_coefficient(mono.a, mono.b, mono.c - m, g.coefficients()[i]);
    }
    return {m, h.substitute(b)};
}

}  // namespace qnets
