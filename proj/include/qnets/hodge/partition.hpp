#pragma once

// Partitions and the Schur-functor combinatorics needed on P^n: Pieri rules,
// Littlewood-Richardson products truncated to a given rank, and dimensions.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qnets/errors.hpp"
#include "qnets/exactalg/field.hpp"

namespace qnets {

class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw InvalidInput("partition parts must be weakly decreasing and nonnegative");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (1^p)
    static Partition column(int p) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(p, 0)), 1)); }
    /// (r)
    static Partition row(int r) { return r > 0 ? Partition({r}) : Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }
    bool is_column() const { return parts_.empty() || parts_.front() == 1; }
    bool is_row() const { return parts_.size() <= 1; }

    Partition conjugate() const {
        std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

using SchurExpansion = std::map<Partition, BigInt>;

/// Partitions obtained from lam by adding a horizontal (vertical) strip of r
/// boxes, keeping at most max_rows rows.
inline std::vector<Partition> pieri(const Partition& lam, int r, bool vertical, int max_rows) {
    std::vector<Partition> out;
    if (r < 0) return out;
    const int rows = std::min(max_rows, lam.length() + r);
    if (lam.length() > max_rows) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (rem == 0) {
            std::vector<int> p = cur;
            for (int j = i; j < lam.length(); ++j) p.push_back(lam[static_cast<std::size_t>(j)]);
            out.emplace_back(std::move(p));
            return;
        }
        if (i >= rows) return;
        const int base = lam[static_cast<std::size_t>(i)];
        const int cap = i == 0 ? base + rem : cur.back();  // new row i may not exceed new row i-1
        int max_add = vertical ? 1 : (i == 0 ? rem : lam[static_cast<std::size_t>(i - 1)] - base);
        max_add = std::min({max_add, rem, cap - base});
        for (int add = 0; add <= max_add; ++add) {
            cur.push_back(base + add);
            rec(i + 1, rem - add);
            cur.pop_back();
        }
    };
    rec(0, r);
    return out;
}

namespace detail {

inline SchurExpansion pieri_all(const SchurExpansion& in, int r, bool vertical, int max_rows) {
    SchurExpansion out;
    for (const auto& [lam, c] : in)
        for (auto& nu : pieri(lam, r, vertical, max_rows)) out[nu] += c;
    return out;
}

inline void drop_zeros(SchurExpansion& e) {
    std::erase_if(e, [](const auto& kv) { return sgn(kv.second) == 0; });
}

}  // namespace detail

/// s_mu * s_nu restricted to partitions with at most max_rows rows (the
/// Schur functors that survive on a rank-max_rows bundle). Rows and columns
/// go through Pieri directly; other shapes through the Jacobi-Trudi
/// determinant in h (or e, whichever is smaller).
inline SchurExpansion lr_product(const Partition& mu, const Partition& nu, int max_rows) {
    SchurExpansion start;
    if (mu.length() > max_rows || nu.length() > max_rows) return start;
    start[mu] = 1;
    if (nu.empty()) return start;
    if (nu.is_row()) return detail::pieri_all(start, nu[0], false, max_rows);
    if (nu.is_column()) return detail::pieri_all(start, nu.length(), true, max_rows);

    const Partition conj = nu.conjugate();
    const bool use_e = conj.length() < nu.length();
    const Partition& shape = use_e ? conj : nu;
    const int l = shape.length();
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    SchurExpansion total;
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
        SchurExpansion cur = start;
        bool vanished = false;
        for (int i = 0; i < l && !vanished; ++i) {
            const int deg = shape[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
            if (deg < 0) vanished = true;
            else if (deg > 0) cur = detail::pieri_all(cur, deg, use_e, max_rows);
        }
        if (vanished) continue;
        for (const auto& [lam, c] : cur) total[lam] += (inversions % 2 ? -c : c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    detail::drop_zeros(total);
    for (const auto& [lam, c] : total)
        if (sgn(c) < 0) throw std::logic_error("negative Littlewood-Richardson coefficient");
    return total;
}

/// Lambda^a (x) Lambda^b on a rank-`rank` space: (2^c, 1^(a+b-2c)) for
/// max(0, a+b-rank) <= c <= min(a, b), each with multiplicity one.
inline std::vector<Partition> two_column_lr(int a, int b, int rank) {
    if (a < 0 || b < 0 || a > rank || b > rank) throw InvalidInput("two_column_lr needs 0 <= a, b <= rank");
    std::vector<Partition> out;
    for (int c = std::max(0, a + b - rank); c <= std::min(a, b); ++c) {
        std::vector<int> p(static_cast<std::size_t>(c), 2);
        p.resize(static_cast<std::size_t>(a + b - c), 1);
        out.emplace_back(std::move(p));
    }
    return out;
}

/// dim S_lam(C^r) by the hook-content formula.
inline BigInt schur_dimension(const Partition& lam, int r) {
    if (lam.length() > r) return 0;
    BigInt num = 1, den = 1;
    const Partition conj = lam.conjugate();
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[static_cast<std::size_t>(i)]; ++j) {
            num *= r + j - i;
            den *= lam[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1;
        }
    return num / den;
}

}  // namespace qnets
