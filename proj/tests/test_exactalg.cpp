#include <gtest/gtest.h>

#include <random>

#include "qnets/exactalg/field.hpp"
#include "qnets/exactalg/matrix.hpp"
#include "qnets/exactalg/multipoly.hpp"
#include "qnets/exactalg/resultant.hpp"
#include "qnets/exactalg/ternary_form.hpp"

using namespace qnets;

namespace {

// Independent oracle: Laplace expansion along the first row.
Rational cofactor_det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Rational> minor(n - 1, n - 1, Rational(0));
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        Rational term = m(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : Rational(-term);
    }
    return acc;
}

template <class F>
TernaryForm<F> random_form(const F& field, unsigned degree, std::mt19937_64& rng) {
    std::vector<typename F::Element> c;
    for (std::size_t i = 0; i < ternary_size(degree); ++i)
        c.push_back(field.from_int(static_cast<long long>(rng() % 19) - 9));
    return TernaryForm<F>(field, degree, c);
}

}  // namespace

TEST(Determinant, IdentityAndTransposition) {
    RationalField q;
    EXPECT_EQ(det_fraction_free(Matrix<Rational>::identity(4, 0, 1)), 1);
    Matrix<Rational> swap(2, 2, Rational(0));
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    EXPECT_EQ(det_fraction_free(swap), -1);
    EXPECT_EQ(determinant(q, Matrix<Rational>()), 1);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        Matrix<Rational> m(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
        ASSERT_EQ(det_fraction_free(m), cofactor_det(m)) << "trial " << trial;
        ++checked;
    }
    EXPECT_GE(checked, 1000);
}

TEST(Determinant, RationalEntriesAndPrimeField) {
    Matrix<Rational> m(2, 2, Rational(0));
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(2, 3);
    m(1, 0) = Rational(3, 5);
    m(1, 1) = Rational(5, 7);
    EXPECT_EQ(det_fraction_free(m), cofactor_det(m));

    PrimeField f(101);
    Matrix<Fp> a(3, 3, f.zero());
    long long v = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j, ++v) a(i, j) = f.from_int(v * v % 13);
    Matrix<Rational> ar(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ar(i, j) = static_cast<long>(a(i, j).value());
    EXPECT_EQ(det_fraction_free(a), *reduce_mod(cofactor_det(ar), f));
}

TEST(TernaryForm, MonomialIndexingIsGradedLex) {
    // degree 2: l1^2, l1 l2, l1 l3, l2^2, l2 l3, l3^2
    std::vector<Monomial3> expected{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(ternary_monomial(2, i), expected[i]);
        EXPECT_EQ(ternary_index(2, expected[i].a, expected[i].b), i);
    }
    for (unsigned d = 0; d < 12; ++d)
        for (std::size_t i = 0; i < ternary_size(d); ++i) {
            auto m = ternary_monomial(d, i);
            EXPECT_EQ(ternary_index(d, m.a, m.b), i);
        }
}

TEST(Interpolation, MonomialRoundTrip) {
    RationalField q;
    auto f = interpolate_ternary_form(q, [](const Rational& a, const Rational& b, const Rational&) { return Rational(a * b); }, 2);
    EXPECT_EQ(f, TernaryForm<RationalField>::monomial(q, 1, 1, 0, 1));
    EXPECT_EQ(interpolation_nodes(8).size(), 45u);
}

TEST(Interpolation, RoundTripOnRandomForms) {
    std::mt19937_64 rng(7);
    PrimeField f101(101);
    RationalField q;
    for (unsigned d : {2u, 4u, 6u, 8u, 10u}) {
        for (int rep = 0; rep < 3; ++rep) {
            auto g = random_form(f101, d, rng);
            auto back = interpolate_ternary_form(f101, [&](Fp a, Fp b, Fp c) { return g.evaluate(a, b, c); }, d);
            EXPECT_EQ(back, g) << "degree " << d;
            auto h = random_form(q, d, rng);
            auto hb = interpolate_ternary_form(
                q, [&](const Rational& a, const Rational& b, const Rational& c) { return h.evaluate(a, b, c); }, d);
            EXPECT_EQ(hb, h) << "degree " << d;
        }
    }
}

TEST(Interpolation, TinyFieldIsRejected) {
    PrimeField f5(5);
    auto g = TernaryForm<PrimeField>::monomial(f5, 6, 0, 0, f5.one());
    EXPECT_THROW(interpolate_ternary_form(f5, [&](Fp a, Fp b, Fp c) { return g.evaluate(a, b, c); }, 6),
                 SingularInterpolationSystem);
}

TEST(LinePower, ConstructedProduct) {
    RationalField q;
    using T = TernaryForm<RationalField>;
    const T l3 = T::linear(q, 0, 0, 1);
    const T sextic = T::monomial(q, 6, 0, 0, 1) + T::monomial(q, 0, 6, 0, 1);
    auto res = line_power_extract(l3.pow(2) * sextic, l3);
    EXPECT_EQ(res.multiplicity, 2u);
    EXPECT_EQ(res.cofactor, sextic);

    auto coprime = line_power_extract(T::monomial(q, 8, 0, 0, 1), l3);
    EXPECT_EQ(coprime.multiplicity, 0u);
    EXPECT_EQ(coprime.cofactor, T::monomial(q, 8, 0, 0, 1));

    EXPECT_THROW(line_power_extract(T(q, 4), l3), ZeroForm);
}

TEST(LinePower, ReassemblyProperty) {
    std::mt19937_64 rng(99);
    PrimeField f(101);
    using T = TernaryForm<PrimeField>;
    for (int trial = 0; trial < 40; ++trial) {
        T line = random_form(f, 1, rng);
        if (line.is_zero()) continue;
        T base = random_form(f, 3 + trial % 4, rng);
        if (base.is_zero()) continue;
        const unsigned k = trial % 4;
        T prod = line.pow(k) * base;
        auto res = line_power_extract(prod, line);
        EXPECT_GE(res.multiplicity, k);
        EXPECT_EQ(line.pow(res.multiplicity) * res.cofactor, prod);
        EXPECT_EQ(line_power_extract(res.cofactor, line).multiplicity, 0u);
    }
}

TEST(Resultant, SmallCases) {
    RationalField q;
    using P = MultiPoly<RationalField>;
    // variables: x, a, b
    P x = P::variable(q, 3, 0), a = P::variable(q, 3, 1), b = P::variable(q, 3, 2);
    EXPECT_EQ(resultant(x - a, x - b, 0), a - b);
    P one = P::constant(q, 3, 1);
    EXPECT_TRUE(resultant(x * x - one, x - one, 0).is_zero());
}

TEST(Resultant, RootProductOracle) {
    PrimeField f(101);
    using P = MultiPoly<PrimeField>;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
        std::vector<Fp> alpha, beta;
        Fp lp = f.from_int(1 + rng() % 100), lq = f.from_int(1 + rng() % 100);
        P p = P::constant(f, 1, lp), qq = P::constant(f, 1, lq);
        P x = P::variable(f, 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            alpha.push_back(f.from_int(rng() % 101));
            p *= x - P::constant(f, 1, alpha.back());
        }
        for (unsigned j = 0; j < n; ++j) {
            beta.push_back(f.from_int(rng() % 101));
            qq *= x - P::constant(f, 1, beta.back());
        }
        Fp expected = lp.pow(n) * lq.pow(m);
        for (auto ai : alpha)
            for (auto bj : beta) expected *= ai - bj;
        P r = resultant(p, qq, 0);
        EXPECT_EQ(r.constant_term(), expected);

        // forcing a shared root makes the resultant vanish
        P shared = p * (x - P::constant(f, 1, beta[0]));
        EXPECT_TRUE(resultant(shared, qq, 0).is_zero());
    }
}

TEST(Determinism, RepeatedCallsAreIdentical) {
    PrimeField f(211);
    std::mt19937_64 rng(3);
    auto g = random_form(f, 6, rng);
    auto eval = [&](Fp a, Fp b, Fp c) { return g.evaluate(a, b, c); };
    EXPECT_EQ(interpolate_ternary_form(f, eval, 6), interpolate_ternary_form(f, eval, 6));
}
