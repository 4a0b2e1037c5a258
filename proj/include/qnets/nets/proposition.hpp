#pragma once

#include <string>

#include "qnets/nets/discriminant.hpp"
#include "qnets/nets/quadratic_form.hpp"
#include "qnets/nets/smoothness.hpp"

namespace qnets {

template <class F>
struct PropositionResult {
    unsigned multiplicity;       // multiplicity of the line l3 in the discriminant
    TernaryForm<F> residual;     // discriminant / l3^multiplicity
    SmoothnessVerdict residual_smooth;
};

/// Throws NotNormalForm unless N = 7, ker Q1 = ker Q2 = span(e0), Q3 is
/// smooth and q3_00 = 0.
template <class F>
void require_proposition_normal_form(const NetOfQuadrics<F>& net) {
    if (net.ambient_dim() != 7) throw NotNormalForm("normal form needs quadrics in P^7");
    const auto e0 = Subspace<F>::leading_coordinates(net.field(), net.size(), 1);
    if (!(kernel(net[0]) == e0) || !(kernel(net[1]) == e0))
        throw NotNormalForm("normal form needs ker Q1 = ker Q2 = span(e0)");
    if (!kernel(net[2]).is_zero()) throw NotNormalForm("normal form needs Q3 smooth");
    if (!is_zero(net[2](0, 0))) throw NotNormalForm("normal form needs q3_00 = 0");
}

/// Discriminant factorization along l3 without the normal-form check.
template <class F>
PropositionResult<F> proposition_factorization(const NetOfQuadrics<F>& net,
                                               const std::vector<std::uint64_t>& primes = default_smoothness_primes()) {
    const F& field = net.field();
    const auto disc = discriminant_curve(net);
    auto split = line_power_extract(disc, TernaryForm<F>::linear(field, field.zero(), field.zero(), field.one()));
    auto verdict = smoothness_verdict(split.cofactor, primes);
    return {split.multiplicity, std::move(split.cofactor), verdict};
}

/// The discriminant of a normal-form net is l3^2 times a sextic; reports the
/// multiplicity, the residual and its smoothness verdict.
template <class F>
PropositionResult<F> verify_proposition(const NetOfQuadrics<F>& net,
                                        const std::vector<std::uint64_t>& primes = default_smoothness_primes()) {
    require_proposition_normal_form(net);
    return proposition_factorization(net, primes);
}

}  // namespace qnets
