#pragma once

#include <array>
#include <random>
#include <set>
#include <vector>

#include "qnets/nets/configuration.hpp"
#include "qnets/nets/quadratic_form.hpp"

namespace qnets {

struct SingularLocusModel {
    std::size_t k_dim = 0;
    std::array<int, 3> orders{};               // vanishing order of each Q_i along P(K); -1 when K = 0
    std::vector<std::size_t> restricted_ranks;  // ranks on K of the order-0 quadrics, in net order
    SingularLocusLabel label = SingularLocusLabel::Empty;
};

/// sing(Q) = P(K) cut by the quadrics of order 0 along K. The label depends
/// only on dim K and the ranks of those restricted forms.
inline SingularLocusLabel classify_singular_locus(std::size_t k_dim, const std::vector<std::size_t>& ranks) {
    using L = SingularLocusLabel;
    if (k_dim == 0) return L::Empty;
    if (ranks.empty()) {
        if (k_dim == 1) return L::Point;
        if (k_dim == 2) return L::LineP1;
        return L::Unclassified;
    }
    if (k_dim == 1) return L::Empty;
    if (ranks.size() != 1 || ranks[0] != k_dim) return L::Unclassified;
    switch (k_dim) {
        case 2: return L::TwoPoints;
        case 3: return L::ConicV2P1;
        case 4: return L::QuadricSurfaceP1xP1;
        case 5: return L::Quadric3Fold;
        case 6: return L::Quadric4FoldGr24;
        default: return L::Unclassified;
    }
}

/// Vectors killed by all three Gram matrices; nonzero means Q is a cone.
template <class F>
Subspace<F> common_kernel_of_all(const NetOfQuadrics<F>& net) {
    const std::size_t n = net.size();
    Matrix<typename F::Element> stacked(3 * n, n, net.field().zero());
    for (std::size_t q = 0; q < 3; ++q)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(q * n + i, j) = net[q](i, j);
    return Subspace<F>::span(net.field(), n, null_space(net.field(), stacked));
}

template <class F>
SingularLocusModel singular_locus_model(const NetOfQuadrics<F>& net) {
    if (!common_kernel_of_all(net).is_zero()) throw ConeCase();
    const Subspace<F> k = check_shared_kernel(net);
    SingularLocusModel model;
    model.k_dim = k.dim();
    if (k.is_zero()) {
        model.orders = {-1, -1, -1};
        model.label = SingularLocusLabel::Empty;
        return model;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        model.orders[i] = vanishing_order_along(net[i], k);
        if (model.orders[i] == 0) model.restricted_ranks.push_back(rank(net.field(), restricted_gram(net[i], k)));
    }
    if (model.orders == std::array<int, 3>{2, 2, 2}) throw ConeCase();
    model.label = classify_singular_locus(model.k_dim, model.restricted_ranks);
    return model;
}

/// Rank of the 3 x (N+1) Jacobian (rows 2 G_i x) at a point of Q.
template <class F>
std::size_t jacobian_rank_at(const NetOfQuadrics<F>& net, const std::vector<typename F::Element>& pt) {
    const F& field = net.field();
    if (pt.size() != net.size()) throw InvalidInput("point has the wrong number of coordinates");
    bool nonzero = false;
    for (const auto& x : pt) nonzero = nonzero || !is_zero(x);
    if (!nonzero) throw PointNotOnVariety();
    Matrix<typename F::Element> jac(3, net.size(), field.zero());
    for (std::size_t i = 0; i < 3; ++i) {
        if (!is_zero(net[i].evaluate(pt))) throw PointNotOnVariety();
        auto g = net[i].gradient(pt);
        for (std::size_t j = 0; j < g.size(); ++j) jac(i, j) = g[j];
    }
    return rank(field, jac);
}

namespace detail {

/// Scales so the first nonzero coordinate is 1.
inline std::vector<Fp> projective_normalize(std::vector<Fp> v) {
    for (const auto& x : v)
        if (!is_zero(x)) {
            const Fp inv = x.inverse();
            for (auto& y : v) y *= inv;
            break;
        }
    return v;
}

inline std::vector<std::uint64_t> residues(const std::vector<Fp>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& x : v) out.push_back(x.value());
    return out;
}

}  // namespace detail

/// Distinct F_p-rational points of sing(Q) = P(K) cut by the order-0
/// quadrics, found along random lines of P(K). May return fewer than
/// `count` points when the locus has few rational points.
inline std::vector<std::vector<Fp>> singular_witnesses(const NetOfQuadrics<PrimeField>& net, std::size_t count,
                                                       std::uint64_t seed, int line_attempts = 400) {
    const PrimeField& field = net.field();
    const std::uint64_t p = field.p;
    const Subspace<PrimeField> k = check_shared_kernel(net);
    if (k.is_zero()) return {};
    std::vector<std::size_t> cutting;
    for (std::size_t i = 0; i < 3; ++i)
        if (vanishing_order_along(net[i], k) == 0) cutting.push_back(i);

    std::mt19937_64 rng(seed);
    auto random_coords = [&] {
        std::vector<Fp> c;
        for (std::size_t i = 0; i < k.dim(); ++i) c.emplace_back(rng() % p, p);
        return c;
    };
    auto on_locus = [&](const std::vector<Fp>& x) {
        for (auto i : cutting)
            if (!is_zero(net[i].evaluate(x))) return false;
        return true;
    };
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<Fp>> out;
    auto accept = [&](const std::vector<Fp>& x) {
        bool nonzero = false;
        for (const auto& v : x) nonzero = nonzero || !is_zero(v);
        if (!nonzero || !on_locus(x)) return;
        auto n = detail::projective_normalize(x);
        if (seen.insert(detail::residues(n)).second) out.push_back(std::move(n));
    };
    for (int attempt = 0; attempt < line_attempts && out.size() < count; ++attempt) {
        const auto u = k.combine(random_coords());
        const auto v = k.combine(random_coords());
        accept(v);
        for (std::uint64_t t = 0; t < p && out.size() < count; ++t) {
            std::vector<Fp> x(u.size(), field.zero());
            for (std::size_t j = 0; j < x.size(); ++j) x[j] = u[j] + Fp(t, p) * v[j];
            accept(x);
        }
    }
    return out;
}

/// F_p-rational points of Q found on random 3-planes of P^N: the three
/// quadrics restricted to the plane are solved by enumeration.
inline std::vector<std::vector<Fp>> sample_points_on_variety(const NetOfQuadrics<PrimeField>& net, std::size_t count,
                                                             std::uint64_t seed, int plane_attempts = 40) {
    const PrimeField& field = net.field();
    const std::uint64_t p = field.p;
    const std::size_t n = net.size();
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<Fp>> out;
    for (int attempt = 0; attempt < plane_attempts && out.size() < count; ++attempt) {
        std::vector<std::vector<Fp>> w(4, std::vector<Fp>(n, field.zero()));
        for (auto& row : w)
            for (auto& x : row) x = Fp(rng() % p, p);
        if (Subspace<PrimeField>::span(field, n, w).dim() < 4) continue;
        std::array<Matrix<Fp>, 3> r;
        for (std::size_t q = 0; q < 3; ++q) {
            r[q] = Matrix<Fp>(4, 4, field.zero());
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) r[q](i, j) = net[q].pair(w[i], w[j]);
        }
        auto eval = [&](std::size_t q, const std::array<Fp, 4>& c) {
            Fp acc = field.zero();
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) acc += c[i] * r[q](i, j) * c[j];
            return acc;
        };
        // Random starting offsets so different planes do not all report their smallest points first.
        const std::uint64_t s0 = rng() % p, t0 = rng() % p;
        for (std::uint64_t ds = 0; ds < p && out.size() < count; ++ds)
            for (std::uint64_t dt = 0; dt < p && out.size() < count; ++dt)
                for (std::uint64_t u = 0; u < p; ++u) {
                    const std::array<Fp, 4> c{Fp((s0 + ds) % p, p), Fp((t0 + dt) % p, p), Fp(u, p), field.one()};
                    if (!is_zero(eval(0, c)) || !is_zero(eval(1, c)) || !is_zero(eval(2, c))) continue;
                    std::vector<Fp> x(n, field.zero());
                    for (std::size_t i = 0; i < 4; ++i)
                        for (std::size_t j = 0; j < n; ++j) x[j] += c[i] * w[i][j];
                    auto nx = detail::projective_normalize(x);
                    if (seen.insert(detail::residues(nx)).second) out.push_back(std::move(nx));
                    break;
                }
    }
    return out;
}

}  // namespace qnets
