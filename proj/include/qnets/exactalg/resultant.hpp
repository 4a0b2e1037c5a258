#pragma once

#include <optional>

#include "qnets/exactalg/matrix.hpp"
#include "qnets/exactalg/multipoly.hpp"

namespace qnets {

/// Sylvester matrix of p and q in variable `var`, rows of p first. Formal
/// degrees may exceed the actual ones (leading coefficients are then zero).
template <class F>
Matrix<MultiPoly<F>> sylvester_matrix(const MultiPoly<F>& p, const MultiPoly<F>& q, std::size_t var,
                                      unsigned deg_p, unsigned deg_q) {
    const std::size_t n = deg_p + deg_q;
    const MultiPoly<F> zero(p.field(), p.nvars());
    Matrix<MultiPoly<F>> s(n, n, zero);
    for (unsigned i = 0; i < deg_q; ++i)
        for (unsigned k = 0; k <= deg_p; ++k) s(i, i + k) = p.coefficient_in(var, deg_p - k);
    for (unsigned i = 0; i < deg_p; ++i)
        for (unsigned k = 0; k <= deg_q; ++k) s(deg_q + i, i + k) = q.coefficient_in(var, deg_q - k);
    return s;
}

/// Res_var(p, q): determinant of the Sylvester matrix, computed by Bareiss
/// elimination over the coefficient polynomial ring. The result no longer
/// involves `var`. Formal degrees default to the actual degrees in `var`.
template <class F>
MultiPoly<F> resultant(const MultiPoly<F>& p, const MultiPoly<F>& q, std::size_t var,
                       std::optional<unsigned> deg_p = std::nullopt, std::optional<unsigned> deg_q = std::nullopt) {
    if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant of a zero polynomial");
    const unsigned m = deg_p.value_or(static_cast<unsigned>(p.degree_in(var)));
    const unsigned n = deg_q.value_or(static_cast<unsigned>(q.degree_in(var)));
    const auto one = MultiPoly<F>::constant(p.field(), p.nvars(), p.field().one());
    return bareiss_determinant(sylvester_matrix(p, q, var, m, n), one);
}

}  // namespace qnets
