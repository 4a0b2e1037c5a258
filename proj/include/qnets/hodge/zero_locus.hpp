#pragma once

// Hodge numbers of Y = Z(s), s a general section of F on G = P^a x P^b.
//
// Omega^p_Y is resolved by the conormal complex
//   0 -> S^p N* -> S^{p-1} N* (x) Omega^1_G -> ... -> Omega^p_G -> Omega^p_Y -> 0,
// N* = F*|_Y, and each restricted term by the Koszul complex Lambda^t F*.
// The term S^i F* (x) Omega^{p-i}_G (x) Lambda^t F* sits at position t + i.
// Pages are resolved with: vanishing outside 0..dim Y, per-summand Koszul
// spectral sequences (each irreducible summand restricts separately), Hodge
// symmetry and Serre duality against rows already computed, and the Euler
// characteristic. Whatever is still undetermined is reported with its
// degenerate value and flagged.

#include <array>
#include <set>
#include <vector>

#include "qnets/concurrency.hpp"
#include "qnets/hodge/box_sum.hpp"
#include "qnets/hodge/spectral.hpp"

namespace qnets {

struct HodgeReport {
    int p = 0;
    std::map<int, BigInt> dims;  // q -> h^{p,q}, every q in 0..dim Y
    std::set<int> ambiguous;
    BigInt euler_p;              // chi(Omega^p_Y), from the page alone

    bool any_ambiguous() const { return !ambiguous.empty(); }
    BigInt dim(int q) const {
        auto it = dims.find(q);
        return it == dims.end() ? BigInt(0) : it->second;
    }
};

struct HodgeDiamond {
    BundleSpec spec;
    int dim = 0;
    std::vector<HodgeReport> rows;  // rows[p]

    BigInt h(int p, int q) const { return rows.at(static_cast<std::size_t>(p)).dim(q); }
    bool ambiguous(int p, int q) const { return rows.at(static_cast<std::size_t>(p)).ambiguous.count(q) > 0; }
    bool any_ambiguous() const {
        for (const auto& r : rows)
            if (r.any_ambiguous()) return true;
        return false;
    }
    /// sum_p (-1)^p euler_p, which is the topological Euler characteristic.
    BigInt euler_characteristic() const {
        BigInt e = 0;
        for (const auto& r : rows) e += (r.p % 2 == 0 ? r.euler_p : BigInt(-r.euler_p));
        return e;
    }
};

/// (h^{m+1,m-1}, h^{m,m}, h^{m-1,m+1}) for dim Y = 2m.
struct MiddleVector {
    std::array<BigInt, 3> values;
    bool ambiguous = false;
};

namespace detail {

struct ConormalPages {
    SpectralPage flat;                 // whole double complex, position t + i
    std::optional<SpectralPage> staged;  // per-summand Koszul resolved first, position i
};

/// S^i F* (x) Omega^{p-i}_G.
inline BoxSum conormal_term(const BundleSpec& s, int p, int i) {
    return symmetric_powers_F(s, i).tensor(omega_G(s.a, s.b, p - i));
}

inline ConormalPages conormal_pages(const BundleSpec& s, int p) {
    const int dim = s.dim_y(), r = s.rank();
    std::vector<BoxSum> koszul;
    for (int t = 0; t <= r; ++t) koszul.push_back(exterior_powers_F(s, t));

    struct Work {
        int i;
        BoxSummand e;
    };
    std::vector<Work> work;
    for (int i = 0; i <= p; ++i)
        for (auto& e : conormal_term(s, p, i).summands()) work.push_back({i, std::move(e)});

    std::vector<SpectralPage> pages(work.size());
    parallel_for(work.size(), [&](std::size_t w) {
        const BoxSum single(work[w].e.left, work[w].e.right);
        for (int t = 0; t <= r; ++t)
            for (const auto& [deg, d] : kunneth(koszul[static_cast<std::size_t>(t)].tensor(single)))
                pages[w].add(t, deg - t, d);
    });

    ConormalPages out;
    SpectralPage staged;
    bool staged_ok = true;
    for (std::size_t w = 0; w < work.size(); ++w) {
        const int i = work[w].i;
        const BigInt& m = work[w].e.multiplicity;
        for (const auto& [k, d] : pages[w].entries()) out.flat.add(k.first + i, k.second - i, m * d);
        if (!staged_ok || pages[w].empty()) continue;
        const auto res = resolve(pages[w], {}, 0, dim);
        if (!res.ambiguous.empty()) {
            staged_ok = false;
            continue;
        }
        for (const auto& [q, d] : res.h) staged.add(i, q - i, m * d);
    }
    if (staged_ok) out.staged = std::move(staged);
    return out;
}

}  // namespace detail

/// The full Hodge diamond. Rows p <= dim/2 are computed; the rest follow from
/// Serre duality, while every euler_p is read off its own page.
inline HodgeDiamond hodge_diamond(const BundleSpec& spec) {
    spec.validate();
    const int dim = spec.dim_y();
    HodgeDiamond out{spec, dim, std::vector<HodgeReport>(static_cast<std::size_t>(dim) + 1)};
    auto value = [&](int p, int q) -> std::pair<BigInt, bool> {
        // h^{p,q} = h^{q,p} = h^{D-p,D-q}; return it from a row already filled.
        for (auto [pp, qq] : {std::pair{p, q}, {q, p}, {dim - p, dim - q}, {dim - q, dim - p}})
            if (2 * pp <= dim && !out.rows[static_cast<std::size_t>(pp)].dims.empty())
                return {out.h(pp, qq), out.ambiguous(pp, qq)};
        throw std::logic_error("Hodge number requested before its row");
    };

    for (int p = 0; p <= dim; ++p) {
        HodgeReport& row = out.rows[static_cast<std::size_t>(p)];
        row.p = p;
        if (2 * p > dim) {
            for (int q = 0; q <= dim; ++q) {
                auto [v, amb] = value(dim - p, dim - q);
                row.dims[q] = v;
                if (amb) row.ambiguous.insert(q);
            }
            row.euler_p = detail::conormal_pages(spec, p).flat.euler();
            continue;
        }
        std::map<int, BigInt> known;
        bool tainted = false;
        std::set<int> known_flags;
        for (int q = 0; q <= dim; ++q) {
            if (q >= p && q <= dim - p) continue;
            auto [v, amb] = q < p ? value(q, p) : value(dim - q, dim - p);
            known[q] = v;
            if (amb) {
                tainted = true;
                known_flags.insert(q);
            }
        }
        const auto pages = detail::conormal_pages(spec, p);
        row.euler_p = pages.flat.euler();
        std::vector<Resolution> candidates;
        if (pages.staged) candidates.push_back(resolve(*pages.staged, known, 0, dim));
        candidates.push_back(resolve(pages.flat, known, 0, dim));
        const Resolution* best = &candidates.front();
        for (const auto& c : candidates)
            if (c.ambiguous.size() < best->ambiguous.size()) best = &c;
        for (int q = 0; q <= dim; ++q) row.dims[q] = best->h.count(q) ? best->h.at(q) : BigInt(0);
        row.ambiguous = best->ambiguous;
        row.ambiguous.insert(known_flags.begin(), known_flags.end());
        if (tainted)
            for (int q = p; q <= dim - p; ++q) row.ambiguous.insert(q);
    }
    return out;
}

/// Row p of the diamond of Z(s) together with chi(Omega^p_Y).
inline HodgeReport hodge_zero_locus(const BundleSpec& spec, int p) {
    spec.validate();
    if (p < 0 || p > spec.dim_y()) throw InvalidInput("hodge_zero_locus needs 0 <= p <= dim Y");
    return hodge_diamond(spec).rows[static_cast<std::size_t>(p)];
}

inline MiddleVector middle_vector(const HodgeDiamond& d) {
    if (d.dim % 2 != 0 || d.dim < 2) throw InvalidSpec("middle vector needs an even-dimensional zero locus of dimension >= 2");
    const int m = d.dim / 2;
    MiddleVector v;
    v.values = {d.h(m + 1, m - 1), d.h(m, m), d.h(m - 1, m + 1)};
    v.ambiguous = d.ambiguous(m + 1, m - 1) || d.ambiguous(m, m) || d.ambiguous(m - 1, m + 1);
    return v;
}

/// K3 type: h^{m+1,m-1} = 1 and nothing further from the diagonal in the middle row.
inline bool is_k3_type(const HodgeDiamond& d) {
    if (d.dim % 2 != 0 || d.dim < 2) return false;
    const int m = d.dim / 2;
    for (int p = 0; p <= d.dim; ++p) {
        const BigInt v = d.h(p, d.dim - p);
        if (std::abs(p - m) >= 2 && sgn(v) != 0) return false;
    }
    return d.h(m + 1, m - 1) == 1;
}

}  // namespace qnets
