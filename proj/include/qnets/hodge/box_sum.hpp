#pragma once

// External tensor sums on P^a x P^b and the bundles F = Q(0,1) + lines whose
// zero loci realize the table rows.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qnets/hodge/bwb.hpp"
#include "qnets/nets/configuration.hpp"

namespace qnets {

struct BoxSummand {
    FactorBundle left;
    FactorBundle right;
    BigInt multiplicity;
};

/// Multiset of summands left [x] right, stored canonically sorted.
class BoxSum {
public:
    using Key = std::pair<FactorBundle, FactorBundle>;

    BoxSum() = default;
    BoxSum(const FactorBundle& l, const FactorBundle& r, const BigInt& m = 1) { add(l, r, m); }

    void add(const FactorBundle& l, const FactorBundle& r, const BigInt& m = 1) {
        if (sgn(m) < 0) throw InvalidInput("BoxSum multiplicities must be positive");
        if (sgn(m) == 0) return;
        terms_[{l, r}] += m;
    }
    void add(const BoxSum& other) {
        for (const auto& [k, m] : other.terms_) terms_[k] += m;
    }

    std::vector<BoxSummand> summands() const {
        std::vector<BoxSummand> out;
        for (const auto& [k, m] : terms_) out.push_back({k.first, k.second, m});
        return out;
    }
    const std::map<Key, BigInt>& terms() const { return terms_; }
    std::size_t distinct() const { return terms_.size(); }
    /// Number of summands counted with multiplicity.
    BigInt count() const {
        BigInt c = 0;
        for (const auto& kv : terms_) c += kv.second;
        return c;
    }
    BigInt rank() const {
        BigInt r = 0;
        for (const auto& [k, m] : terms_) r += m * k.first.rank() * k.second.rank();
        return r;
    }
    bool empty() const { return terms_.empty(); }

    /// Tensor product, decomposing each factor with Littlewood-Richardson.
    BoxSum tensor(const BoxSum& other) const {
        BoxSum out;
        for (const auto& [k1, m1] : terms_)
            for (const auto& [k2, m2] : other.terms_) {
                if (k1.first.n != k2.first.n || k1.second.n != k2.second.n)
                    throw InvalidInput("tensor of BoxSums on different ambients");
                const int a = k1.first.n, b = k1.second.n;
                const auto left = lr_product(k1.first.mu, k2.first.mu, a);
                const auto right = lr_product(k1.second.mu, k2.second.mu, b);
                for (const auto& [lmu, lc] : left)
                    for (const auto& [rmu, rc] : right)
                        out.add(FactorBundle(a, lmu, k1.first.twist + k2.first.twist),
                                FactorBundle(b, rmu, k1.second.twist + k2.second.twist), m1 * m2 * lc * rc);
            }
        return out;
    }

    friend bool operator==(const BoxSum&, const BoxSum&) = default;

private:
    std::map<Key, BigInt> terms_;
};

/// H^q of a BoxSum on P^a x P^b by Kunneth and Borel-Weil-Bott.
inline CohomologyTable kunneth(const BoxSum& bs) {
    CohomologyTable out;
    for (const auto& [k, m] : bs.terms()) {
        const auto l = bwb_cohomology(k.first);
        if (l.empty()) continue;
        const auto r = bwb_cohomology(k.second);
        for (const auto& [q1, d1] : l)
            for (const auto& [q2, d2] : r) accumulate(out, {{q1 + q2, d1 * d2}}, m);
    }
    return out;
}

/// Omega^p of P^a x P^b.
inline BoxSum omega_G(int a, int b, int p) {
    if (p < 0 || p > a + b) throw InvalidInput("omega_G needs 0 <= p <= a+b");
    BoxSum out;
    for (int i = std::max(0, p - b); i <= std::min(a, p); ++i) out.add(FactorBundle::omega(a, i), FactorBundle::omega(b, p - i));
    return out;
}

/// F on P^a x P^b: optionally Q_{P^a}(0,1), plus line bundles O(d1, d2).
struct BundleSpec {
    int a = 0;
    int b = 0;
    bool has_quotient = true;
    std::vector<Bidegree> lines;

    int rank() const { return (has_quotient ? a : 0) + static_cast<int>(lines.size()); }
    int dim_y() const { return a + b - rank(); }

    void validate() const {
        if (a < 0 || b < 0) throw InvalidSpec("ambient dimensions must be nonnegative");
        if (has_quotient && a < 1) throw InvalidSpec("the quotient summand needs a >= 1");
        for (const auto& [d1, d2] : lines)
            if (d1 < 0 || d2 < 0 || (d1 == 0 && d2 == 0))
                throw InvalidSpec("line summand O(" + std::to_string(d1) + "," + std::to_string(d2) + ") is not globally generated and nontrivial");
        if (dim_y() < 0) throw InvalidSpec("expected dimension of the zero locus is negative");
    }

    friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

/// The spec of a table row (or of the split C-8 bundle).
inline BundleSpec bundle_spec(RowId row) {
    const auto& cfg = configuration(row);
    return BundleSpec{cfg.a, cfg.b, true, {cfg.quadric_types.begin(), cfg.quadric_types.end()}};
}

namespace detail {

/// Sum of the chosen line duals as a single BoxSum line term.
inline BoxSum dual_lines(const BundleSpec& s, const std::vector<std::size_t>& chosen, int extra_b = 0) {
    int d1 = 0, d2 = extra_b;
    for (auto i : chosen) {
        d1 -= s.lines[i].first;
        d2 -= s.lines[i].second;
    }
    return BoxSum(FactorBundle::line(s.a, d1), FactorBundle::line(s.b, d2));
}

template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) return visit(idx);
        for (std::size_t i = from; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

template <class Visit>
void for_each_multiset(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) return visit(idx);
        for (std::size_t i = from; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i);
        }
    };
    if (k > 0 && n == 0) return;
    rec(0, 0);
}

}  // namespace detail

/// Lambda^t F^dual. Uses Lambda^j (Q(0,1))^dual = Omega^j(j) [x] O(-j).
inline BoxSum exterior_powers_F(const BundleSpec& s, int t) {
    if (t < 0 || t > s.rank()) throw InvalidInput("exterior_powers_F needs 0 <= t <= rank F");
    BoxSum out;
    const int qmax = s.has_quotient ? std::min(t, s.a) : 0;
    for (int j = 0; j <= qmax; ++j) {
        const int rest = t - j;
        if (rest > static_cast<int>(s.lines.size())) continue;
        const BoxSum quot(FactorBundle::omega(s.a, j, j), FactorBundle::line(s.b, 0));
        detail::for_each_subset(s.lines.size(), static_cast<std::size_t>(rest), [&](const auto& idx) {
            out.add(quot.tensor(detail::dual_lines(s, idx, -j)));
        });
    }
    return out;
}

/// S^i F^dual. Uses S^j (Q(0,1))^dual = S^j(Omega)(j) [x] O(-j).
inline BoxSum symmetric_powers_F(const BundleSpec& s, int i) {
    if (i < 0) throw InvalidInput("symmetric_powers_F needs i >= 0");
    BoxSum out;
    const int qmax = s.has_quotient ? i : 0;
    for (int j = 0; j <= qmax; ++j) {
        const int rest = i - j;
        if (rest > 0 && s.lines.empty()) continue;
        const BoxSum quot(FactorBundle(s.a, Partition::row(j), j), FactorBundle::line(s.b, 0));
        detail::for_each_multiset(s.lines.size(), static_cast<std::size_t>(rest), [&](const auto& idx) {
            out.add(quot.tensor(detail::dual_lines(s, idx, -j)));
        });
    }
    return out;
}

}  // namespace qnets
