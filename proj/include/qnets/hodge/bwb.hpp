#pragma once

// Cohomology of homogeneous bundles S_mu(Omega)(k) on P^n.

#include <map>

#include "qnets/hodge/partition.hpp"

namespace qnets {

/// Degree q -> dimension; only nonzero entries are stored.
using CohomologyTable = std::map<int, BigInt>;

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline void accumulate(CohomologyTable& into, const CohomologyTable& t, const BigInt& factor = 1) {
    for (const auto& [q, d] : t) {
        into[q] += factor * d;
        if (sgn(into[q]) == 0) into.erase(q);
    }
}

/// h^q(P^n, Omega^p(k)).
inline CohomologyTable bott_closed_formula(int n, int p, int k) {
    if (p < 0 || p > n) throw InvalidInput("bott_closed_formula needs 0 <= p <= n");
    CohomologyTable t;
    if (k > p) t[0] = binomial(k + n - p, k) * binomial(k - 1, p);
    if (k == 0) t[p] = 1;
    if (k < p - n) t[n] = binomial(-k + p, -k) * binomial(-k - 1, n - p);
    std::erase_if(t, [](const auto& kv) { return sgn(kv.second) == 0; });
    return t;
}

/// S_mu(Omega_{P^n}) (x) O(twist). Lambda^p <-> (1^p), so (n, (1^p), k) is
/// Omega^p(k); the dual tautological quotient is Omega(1).
struct FactorBundle {
    int n = 0;
    Partition mu;
    int twist = 0;

    FactorBundle() = default;
    FactorBundle(int n_, Partition mu_, int twist_) : n(n_), mu(std::move(mu_)), twist(twist_) {
        if (n < 0) throw InvalidInput("projective-space dimension must be nonnegative");
        if (mu.length() > n) throw InvalidInput("Schur functor of Omega_{P^n} needs at most n parts");
    }
    static FactorBundle line(int n, int k) { return {n, Partition(), k}; }
    static FactorBundle omega(int n, int p, int k = 0) { return {n, Partition::column(p), k}; }

    BigInt rank() const { return schur_dimension(mu, n); }
    std::string str() const { return "S" + mu.str() + "Omega_P" + std::to_string(n) + "(" + std::to_string(twist) + ")"; }

    friend auto operator<=>(const FactorBundle&, const FactorBundle&) = default;
    friend bool operator==(const FactorBundle&, const FactorBundle&) = default;
};

/// Borel-Weil-Bott on P^n: the GL_{n+1} weight (k - |mu|, mu_1, ..., mu_n)
/// plus rho = (n+1, ..., 1). A repeated entry kills all cohomology; otherwise
/// the sorting length l gives the degree and the Weyl dimension of the sorted
/// weight minus rho gives the rank.
inline CohomologyTable bwb_cohomology(int n, const Partition& mu, int k) {
    if (mu.length() > n) throw InvalidInput("bwb_cohomology needs mu with at most n parts");
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    std::vector<long> v(m);
    v[0] = static_cast<long>(k) - mu.size() + n + 1;
    for (std::size_t i = 1; i < m; ++i) v[i] = mu[i - 1] + static_cast<long>(n + 1 - i);
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (v[i] == v[j]) return {};
            inversions += v[i] < v[j];
        }
    std::sort(v.begin(), v.end(), std::greater<>());
    // Weyl dimension: prod_{i<j} (l_i - l_j + j - i)/(j - i) with l = v - rho, i.e. prod (v_i - v_j)/(j - i).
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            num *= v[i] - v[j];
            den *= static_cast<long>(j - i);
        }
    return {{inversions, num / den}};
}

inline CohomologyTable bwb_cohomology(const FactorBundle& e) { return bwb_cohomology(e.n, e.mu, e.twist); }

}  // namespace qnets
