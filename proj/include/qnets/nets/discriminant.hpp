#pragma once

#include <array>

#include "qnets/errors.hpp"
#include "qnets/exactalg/ternary_form.hpp"
#include "qnets/nets/quadratic_form.hpp"

namespace qnets {

/// det(l1 G1 + l2 G2 + l3 G3) as a ternary form of degree N+1, recovered by
/// evaluating scalar determinants on the interpolation grid.
template <class F>
TernaryForm<F> discriminant_curve(const NetOfQuadrics<F>& net) {
    const F& field = net.field();
    const auto degree = static_cast<unsigned>(net.size());
    auto disc = interpolate_ternary_form(
        field,
        [&](const typename F::Element& l1, const typename F::Element& l2, const typename F::Element& l3) {
            return determinant(field, net.pencil(l1, l2, l3));
        },
        degree);
    if (disc.is_zero()) throw DegenerateNet();
    return disc;
}

/// Multiplicity of each coordinate line l1, l2, l3 as a component of the form.
template <class F>
std::array<unsigned, 3> coordinate_line_multiplicities(const TernaryForm<F>& f) {
    std::array<unsigned, 3> out{};
    const F& field = f.field();
    const auto z = field.zero(), o = field.one();
    out[0] = line_power_extract(f, TernaryForm<F>::linear(field, o, z, z)).multiplicity;
    out[1] = line_power_extract(f, TernaryForm<F>::linear(field, z, o, z)).multiplicity;
    out[2] = line_power_extract(f, TernaryForm<F>::linear(field, z, z, o)).multiplicity;
    return out;
}

}  // namespace qnets
