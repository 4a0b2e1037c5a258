#pragma once

// Table-row instances: a deterministic generator, the inverse classifier, and
// the change of coordinates putting a one-point singular locus at e_0.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "qnets/nets/configuration.hpp"
#include "qnets/nets/quadratic_form.hpp"
#include "qnets/nets/singular_locus.hpp"

namespace qnets {

struct RowClassification {
    enum class Kind { Row, SmoothNet, Unlisted };
    Kind kind = Kind::Unlisted;
    std::optional<RowId> row;

    std::string name() const {
        switch (kind) {
            case Kind::Row: return std::string(configuration(*row).name);
            case Kind::SmoothNet: return "SmoothNet";
            case Kind::Unlisted: return "Unlisted";
        }
        return "?";
    }
    friend bool operator==(const RowClassification&, const RowClassification&) = default;
};

/// Matches a net to a table row by ambient dimension, common-kernel
/// dimension, vanishing orders and singular-locus label. Raises ConeCase and
/// AssumptionViolated from the underlying checks.
template <class F>
RowClassification classify_row(const NetOfQuadrics<F>& net) {
    std::array<std::size_t, 3> dims{};
    for (std::size_t i = 0; i < 3; ++i) dims[i] = kernel(net[i]).dim();
    if (dims == std::array<std::size_t, 3>{0, 0, 0}) return {RowClassification::Kind::SmoothNet, std::nullopt};
    const SingularLocusModel model = singular_locus_model(net);
    const std::size_t n = net.size();
    for (const auto& cfg : configurations()) {
        if (!cfg.is_table_row() || static_cast<std::size_t>(cfg.ambient_n()) != net.ambient_dim()) continue;
        if (static_cast<std::size_t>(cfg.k_dim()) != model.k_dim || cfg.orders() != model.orders) continue;
        bool kernels_match = true;
        for (std::size_t i = 0; i < 3; ++i) {
            const int order = model.orders[i];
            const std::size_t table = static_cast<std::size_t>(cfg.kernel_dims[i]);
            const std::size_t expected = order == 2 ? model.k_dim : order == 1 ? forced_kernel_dim(n, model.k_dim) : 0;
            kernels_match = kernels_match && dims[i] == expected && table == (order == 2 ? model.k_dim : 0);
        }
        if (kernels_match && cfg.expected_singular_label == model.label)
            return {RowClassification::Kind::Row, cfg.id};
    }
    return {RowClassification::Kind::Unlisted, std::nullopt};
}

namespace detail {

template <class F>
Matrix<typename F::Element> random_symmetric(const F& field, std::size_t n, int box, std::mt19937_64& rng) {
    Matrix<typename F::Element> m(n, n, field.zero());
    const auto width = static_cast<std::uint64_t>(2 * box + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto v = field.from_int(static_cast<long long>(rng() % width) - box);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

template <class F>
bool pencil_is_nondegenerate(const NetOfQuadrics<F>& net) {
    const F& field = net.field();
    static constexpr long long probes[][3] = {{1, 2, 3}, {3, -1, 2}, {-2, 5, 1}, {7, 3, -4}};
    for (const auto& pr : probes)
        if (!is_zero(determinant(field, net.pencil(field.from_int(pr[0]), field.from_int(pr[1]), field.from_int(pr[2])))))
            return true;
    return false;
}

}  // namespace detail

/// Deterministic pseudo-random net realizing a table row, with K spanned by
/// the first k_dim coordinate vectors. Entries are drawn uniformly from
/// {-box..box}; draws are repeated until the net classifies as the row.
template <class F>
NetOfQuadrics<F> generate_instance(RowId row, const F& field, std::uint64_t seed, int box = 9) {
    const Configuration& cfg = configuration(row);
    if (!cfg.is_table_row()) throw InvalidInput(std::string(cfg.name) + " has no net-of-quadrics realization");
    const std::size_t n = static_cast<std::size_t>(cfg.ambient_n()) + 1;
    const std::size_t k = static_cast<std::size_t>(cfg.k_dim());
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(row) + 1);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<QuadraticForm<F>> qs;
        for (int order : cfg.orders()) {
            auto g = detail::random_symmetric(field, n, box, rng);
            if (order >= 1)
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) g(i, j) = field.zero();
            if (order == 2)
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < n; ++j) g(i, j) = g(j, i) = field.zero();
            qs.emplace_back(field, std::move(g));
        }
        NetOfQuadrics<F> net(qs[0], qs[1], qs[2]);
        try {
            auto cls = classify_row(net);
            if (cls.kind == RowClassification::Kind::Row && cls.row == row && detail::pencil_is_nondegenerate(net))
                return net;
        } catch (const DomainError&) {
        }
    }
    throw GenericityFailure("no generic instance of " + std::string(cfg.name) + " after 32 attempts over " + field.name());
}

/// Congruence B^T G B moving a one-dimensional common kernel to e_0. Requires
/// Q3 smooth and containing the singular point, so that q3_00 = 0 afterwards.
template <class F>
std::pair<NetOfQuadrics<F>, Matrix<typename F::Element>> normalize_vertex(const NetOfQuadrics<F>& net) {
    const F& field = net.field();
    Subspace<F> k(field, net.size());
    try {
        k = check_shared_kernel(net);
    } catch (const AssumptionViolated& e) {
        throw NotApplicable(std::string("normalize_vertex: ") + e.what());
    }
    if (k.dim() != 1) throw NotApplicable("normalize_vertex needs a one-dimensional common kernel");
    if (!kernel(net[2]).is_zero() || vanishing_order_along(net[2], k) != 1)
        throw NotApplicable("normalize_vertex needs Q3 smooth and passing through the singular point");
    const auto& v = k.basis()[0];
    std::size_t pivot = 0;
    while (is_zero(v[pivot])) ++pivot;
    const std::size_t n = net.size();
    Matrix<typename F::Element> b(n, n, field.zero());
    for (std::size_t r = 0; r < n; ++r) b(r, 0) = v[r];
    for (std::size_t i = 0, col = 1; i < n; ++i)
        if (i != pivot) b(i, col++) = field.one();
    return {net.congruent(b), b};
}

}  // namespace qnets
