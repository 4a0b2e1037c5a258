#pragma once

// Sparse multivariate polynomials over an exact field. Terms are kept in a map
// ordered lexicographically with x_0 > x_1 > ..., largest monomial first, and
// zero coefficients are never stored.

#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qnets/exactalg/field.hpp"

namespace qnets {

using Exponent = std::vector<unsigned>;

struct LexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return b < a; }
};

template <class F>
class MultiPoly {
public:
    using Element = typename F::Element;
    using Terms = std::map<Exponent, Element, LexGreater>;

    MultiPoly(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

    static MultiPoly constant(const F& field, std::size_t nvars, const Element& c) {
        MultiPoly p(field, nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }

    static MultiPoly variable(const F& field, std::size_t nvars, std::size_t index) {
        MultiPoly p(field, nvars);
        Exponent e(nvars, 0);
        e.at(index) = 1;
        p.add_term(std::move(e), field.one());
        return p;
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, const Element& c) {
        if (qnets::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (qnets::is_zero(it->second)) terms_.erase(it);
        }
    }

    Element coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    /// -1 for the zero polynomial.
    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
        return d;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            d = std::max(d, s);
        }
        return d;
    }

    /// Coefficient of var^k, as a polynomial in the same variable set (var absent).
    MultiPoly coefficient_in(std::size_t var, unsigned k) const {
        MultiPoly out(field_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            Exponent f = e;
            f[var] = 0;
            out.add_term(f, c);
        }
        return out;
    }

    /// True when the polynomial is a constant (including zero).
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }

    Element constant_term() const { return coefficient(Exponent(nvars_, 0)); }

    MultiPoly operator-() const {
        MultiPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out(a.field_, a.nvars_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Element& s) const {
        MultiPoly out(field_, nvars_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return out;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly acc = constant(field_, nvars_, field_.one());
        for (unsigned i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    MultiPoly partial(std::size_t var) const {
        MultiPoly out(field_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent f = e;
            --f[var];
            out.add_term(f, c * field_.from_int(static_cast<long long>(e[var])));
        }
        return out;
    }

    Element evaluate(const std::vector<Element>& point) const {
        Element acc = field_.zero();
        for (const auto& [e, c] : terms_) {
            Element t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Composition: replaces variable i by images[i] (all images share one variable set).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        const std::size_t m = images.at(0).nvars();
        MultiPoly out(field_, m);
        std::vector<std::vector<MultiPoly>> powers(nvars_);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(field_, m, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(constant(field_, m, field_.one()));
                while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
                if (e[i] > 0) t *= cache[e[i]];
            }
            out += t;
        }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(c) << ")";
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    F field_;
    std::size_t nvars_;
    Terms terms_;
};

template <class F>
bool is_zero(const MultiPoly<F>& p) {
    return p.is_zero();
}

/// Exact quotient a / b; throws if b does not divide a.
template <class F>
MultiPoly<F> exact_divide(const MultiPoly<F>& a, const MultiPoly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& [lead_e, lead_c] = *b.terms().begin();
    const typename F::Element lead_inv = b.field().one() / lead_c;
    MultiPoly<F> quotient(a.field(), a.nvars());
    MultiPoly<F> rest = a;
    const std::size_t n = a.nvars();
    while (!rest.is_zero()) {
        const auto& [re, rc] = *rest.terms().begin();
        Exponent e(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (re[i] < lead_e[i]) throw std::domain_error("inexact polynomial division");
            e[i] = re[i] - lead_e[i];
        }
        MultiPoly<F> t(a.field(), n);
        t.add_term(e, rc * lead_inv);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

}  // namespace qnets
