#pragma once

// Bookkeeping for first-quadrant resolutions. A term at position n of a
// resolution 0 -> T_N -> ... -> T_0 -> E -> 0 whose H^s is nonzero
// contributes to H^{s-n}(E) unless a differential removes it. Differentials
// run from (n, q) to (n', q+1) with n' < n, so every level satisfies
//   h_q = A_q - x_q - x_{q-1}
// where A_q sums the page at level q and x_q >= 0 is the total rank of the
// differentials leaving level q. Known levels pin the x's; anything left is
// reported with x = 0 (the degenerate case) and flagged.

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "qnets/hodge/bwb.hpp"

namespace qnets {

class SpectralPage {
public:
    void add(int position, int q, const BigInt& dim) {
        if (sgn(dim) == 0) return;
        auto& e = entries_[{position, q}];
        e += dim;
        if (sgn(e) == 0) entries_.erase({position, q});
    }
    const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::map<int, BigInt> level_sums() const {
        std::map<int, BigInt> a;
        for (const auto& [k, d] : entries_) a[k.second] += d;
        return a;
    }
    BigInt euler() const {
        BigInt chi = 0;
        for (const auto& [k, d] : entries_) chi += (k.second % 2 == 0 ? d : BigInt(-d));
        return chi;
    }
    /// Whether some entry at level q can map to an entry at level q+1.
    bool connected(int q) const {
        std::optional<int> max_source;
        for (const auto& [k, d] : entries_)
            if (k.second == q && (!max_source || k.first > *max_source)) max_source = k.first;
        if (!max_source) return false;
        for (const auto& [k, d] : entries_)
            if (k.second == q + 1 && k.first < *max_source) return true;
        return false;
    }

private:
    std::map<std::pair<int, int>, BigInt> entries_;
};

struct Resolution {
    std::map<int, BigInt> h;  // levels lo..hi (zeros included)
    std::set<int> ambiguous;  // levels whose value rests on an undetermined differential
};

/// Resolves a page whose abutment vanishes outside [lo, hi]; `known` pins
/// further levels inside the range.
inline Resolution resolve(const SpectralPage& page, const std::map<int, BigInt>& known, int lo, int hi) {
    const auto a = page.level_sums();
    int qmin = lo, qmax = hi;
    if (!a.empty()) {
        qmin = std::min(qmin, a.begin()->first);
        qmax = std::max(qmax, a.rbegin()->first);
    }
    auto sum_at = [&](int q) -> BigInt {
        auto it = a.find(q);
        return it == a.end() ? BigInt(0) : it->second;
    };
    auto pinned = [&](int q) -> std::optional<BigInt> {
        if (q < lo || q > hi) return BigInt(0);
        if (auto it = known.find(q); it != known.end()) return it->second;
        return std::nullopt;
    };

    std::map<int, std::optional<BigInt>> x;  // x[q]: rank leaving level q
    x[qmin - 1] = BigInt(0);
    for (int q = qmin; q <= qmax; ++q) x[q] = page.connected(q) ? std::nullopt : std::optional<BigInt>(0);

    Resolution r;
    for (bool progress = true; progress;) {
        progress = false;
        for (int q = qmin; q <= qmax; ++q) {
            auto target = pinned(q);
            if (!target) continue;
            const bool up = !x[q], down = !x[q - 1];
            if (up == down) continue;
            const BigInt rest = sum_at(q) - *target - (up ? *x[q - 1] : *x[q]);
            (up ? x[q] : x[q - 1]) = rest;
            progress = true;
        }
    }

    std::set<int> open;
    for (int q = qmin; q <= qmax; ++q) {
        if (auto t = pinned(q)) {
            if (q >= lo && q <= hi) r.h[q] = *t;
            // A fully determined level must agree with its pin.
            if (x[q] && x[q - 1] && sum_at(q) - *x[q] - *x[q - 1] != *t) r.ambiguous.insert(q);
            continue;
        }
        if (x[q] && x[q - 1]) r.h[q] = sum_at(q) - *x[q] - *x[q - 1];
        else open.insert(q);
    }
    if (open.size() == 1) {
        // The Euler characteristic of the page is the alternating sum of the abutment.
        const int q = *open.begin();
        BigInt chi = page.euler();
        for (const auto& [k, v] : r.h)
            if (k != q) chi -= (k % 2 == 0 ? v : BigInt(-v));
        r.h[q] = q % 2 == 0 ? chi : BigInt(-chi);
        open.clear();
    }
    for (int q : open) {
        r.h[q] = sum_at(q) - x[q].value_or(0) - x[q - 1].value_or(0);
        r.ambiguous.insert(q);
    }
    for (int q = qmin; q <= qmax; ++q)
        if ((x[q] && sgn(*x[q]) < 0) || (r.h.count(q) && sgn(r.h[q]) < 0)) r.ambiguous.insert(q);
    // A contradiction outside the range means the whole solution is suspect.
    const bool outside = std::erase_if(r.ambiguous, [&](int q) { return q < lo || q > hi; }) > 0;
    if (outside)
        for (int q = lo; q <= hi; ++q)
            if (!known.count(q)) r.ambiguous.insert(q);
    return r;
}

}  // namespace qnets
