#include <gtest/gtest.h>

#include <random>

#include "qnets/nets/discriminant.hpp"
#include "qnets/nets/instances.hpp"
#include "qnets/nets/proposition.hpp"
#include "qnets/nets/singular_locus.hpp"
#include "qnets/nets/smoothness.hpp"

using namespace qnets;

namespace {

using QNet = NetOfQuadrics<RationalField>;
using PNet = NetOfQuadrics<PrimeField>;
using QForm = QuadraticForm<RationalField>;
using T = TernaryForm<RationalField>;

const RationalField kQ;
const PrimeField kF101(101);

QForm diagonal(std::vector<long> d) {
    Matrix<Rational> g(d.size(), d.size(), Rational(0));
    for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
    return QForm(kQ, g);
}

template <class F>
Matrix<typename F::Element> random_invertible(const F& field, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix<typename F::Element> b(n, n, field.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = field.from_int(static_cast<long long>(rng() % 11) - 5);
        if (!is_zero(determinant(field, b))) return b;
    }
}

// Symbolic oracle: Laplace expansion with polynomial entries in (l1, l2, l3).
template <class F>
MultiPoly<F> symbolic_det(const Matrix<MultiPoly<F>>& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    MultiPoly<F> acc(m(0, 0).field(), 3);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Matrix<MultiPoly<F>> minor(n - 1, n - 1, MultiPoly<F>(m(0, 0).field(), 3));
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        auto term = m(0, j) * symbolic_det(minor);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

}  // namespace

TEST(Kernel, DiagonalAndSmoothForms) {
    auto k = kernel(diagonal({0, 1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(k, Subspace<RationalField>::leading_coordinates(kQ, 8, 1));
    EXPECT_TRUE(kernel(diagonal({1, 2, 3, 4, 5, 6, 7, 8})).is_zero());
}

TEST(Kernel, K3_27InstanceHasKernelPattern110) {
    auto net = generate_instance(RowId::T1_1, kQ, 11);
    EXPECT_EQ(kernel(net[0]).dim(), 1u);
    EXPECT_EQ(kernel(net[1]).dim(), 1u);
    EXPECT_EQ(kernel(net[2]).dim(), 0u);
}

TEST(SharedKernel, SmoothNetGivesZero) {
    QNet net(diagonal({1, 1, 1, 1}), diagonal({1, 2, 3, 4}), diagonal({4, 3, 2, 1}));
    EXPECT_TRUE(check_shared_kernel(net).is_zero());
}

TEST(SharedKernel, K3_27IsSpannedByE0) {
    auto net = generate_instance(RowId::T1_1, kQ, 3);
    EXPECT_EQ(check_shared_kernel(net), Subspace<RationalField>::leading_coordinates(kQ, 8, 1));
}

TEST(SharedKernel, DifferentKernelsViolateAssumption) {
    QNet net(diagonal({0, 1, 1, 1}), diagonal({1, 0, 1, 1}), diagonal({1, 2, 3, 4}));
    EXPECT_THROW(check_shared_kernel(net), AssumptionViolated);
}

TEST(VanishingOrder, MatchesQuadricTypes) {
    auto net = generate_instance(RowId::T1_1, kQ, 5);
    auto k = check_shared_kernel(net);
    EXPECT_EQ(vanishing_order_along(net[0], k), 2);  // (2,0)
    EXPECT_EQ(vanishing_order_along(net[2], k), 1);  // (1,1)
    EXPECT_EQ(vanishing_order_along(diagonal({1, 1, 1, 1, 1, 1, 1, 1}), k), 0);  // (0,2)
    EXPECT_THROW(vanishing_order_along(net[0], Subspace<RationalField>(kQ, 8)), EmptyCenter);
}

TEST(Discriminant, DiagonalProduct) {
    QNet net(diagonal({1, 0}), diagonal({0, 1}), diagonal({1, 1}));
    T expected = (T::linear(kQ, 1, 0, 1)) * (T::linear(kQ, 0, 1, 1));
    EXPECT_EQ(discriminant_curve(net), expected);
}

TEST(Discriminant, DegreeIsNPlusOne) {
    for (auto row : table_rows()) {
        auto net = generate_instance(row, kF101, 1);
        EXPECT_EQ(discriminant_curve(net).degree(), net.size());
    }
}

TEST(Discriminant, MatchesSymbolicExpansion) {
    std::mt19937_64 rng(17);
    const std::size_t n = 6;
    std::vector<QuadraticForm<PrimeField>> qs;
    for (int i = 0; i < 3; ++i) qs.emplace_back(kF101, detail::random_symmetric(kF101, n, 50, rng));
    PNet net(qs[0], qs[1], qs[2]);
    using P = MultiPoly<PrimeField>;
    Matrix<P> m(n, n, P(kF101, 3));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < 3; ++q) m(i, j) += P::variable(kF101, 3, q).scaled(net[q](i, j));
    auto oracle = TernaryForm<PrimeField>::from_multipoly(symbolic_det(m), n);
    EXPECT_EQ(discriminant_curve(net), oracle);
}

TEST(Discriminant, IdenticallyZeroIsAnError) {
    QNet net(diagonal({0, 1, 1}), diagonal({0, 2, 1}), diagonal({0, 1, 3}));
    EXPECT_THROW(discriminant_curve(net), DegenerateNet);
}

TEST(Proposition, NormalFormInstanceSplitsOffDoubleLine) {
    auto net = generate_instance(RowId::T1_1, kQ, 21, 5);
    auto res = verify_proposition(net);
    EXPECT_EQ(res.multiplicity, 2u);
    EXPECT_EQ(res.residual.degree(), 6u);
    EXPECT_TRUE(res.residual_smooth.smooth());
}

TEST(Proposition, PointOffQ3GivesMultiplicityOne) {
    auto net = generate_instance(RowId::T1_1, kQ, 22, 5);
    Matrix<Rational> g3 = net[2].gram();
    g3(0, 0) = 1;
    QNet moved(net[0], net[1], QForm(kQ, g3));
    if (!kernel(moved[2]).is_zero()) GTEST_SKIP() << "modified Q3 happens to be singular";
    EXPECT_THROW(verify_proposition(moved), NotNormalForm);
    auto res = proposition_factorization(moved);
    EXPECT_EQ(res.multiplicity, 1u);

    // Laplace oracle: expanding along row 0, the l3-linear part of det(M) is
    // q3_00 * det(l1 A1 + l2 A2) with A_i the lower-right 7x7 blocks.
    auto disc = discriminant_curve(moved);
    Matrix<Rational> a1(7, 7, Rational(0)), a2(7, 7, Rational(0));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            a1(i, j) = moved[0](i + 1, j + 1);
            a2(i, j) = moved[1](i + 1, j + 1);
        }
    QNet block(QForm(kQ, a1), QForm(kQ, a2), QForm(kQ, Matrix<Rational>(7, 7, Rational(0))));
    auto binary = discriminant_curve(block);
    for (unsigned a = 0; a <= 7; ++a)
        EXPECT_EQ(disc.coefficient(a, 7 - a, 1), g3(0, 0) * binary.coefficient(a, 7 - a, 0));
}

TEST(Proposition, SingularQ3IsNotNormalForm) {
    auto net = generate_instance(RowId::T1_1, kQ, 23, 5);
    EXPECT_THROW(verify_proposition(QNet(net[0], net[1], net[0])), NotNormalForm);
}

TEST(Smoothness, FermatSexticModSeven) {
    auto f = T::monomial(kQ, 6, 0, 0, 1) + T::monomial(kQ, 0, 6, 0, 1) + T::monomial(kQ, 0, 0, 6, 1);
    auto v = smoothness_verdict(f, {7});
    EXPECT_EQ(v.kind, SmoothnessVerdict::Kind::SmoothCertified);
    EXPECT_EQ(v.prime, 7u);
}

TEST(Smoothness, VisibleSingularPoint) {
    auto f = T::monomial(kQ, 6, 0, 0, 1) + T::monomial(kQ, 0, 6, 0, 1);
    auto v = smoothness_verdict(f);
    EXPECT_EQ(v.kind, SmoothnessVerdict::Kind::SingularModP);
    EXPECT_EQ(v.witness, (std::array<std::uint64_t, 3>{0, 0, 1}));
}

TEST(Smoothness, NodalCubicIsCaughtAndSmoothCubicCertified) {
    // y^2 z = x^3 + x^2 z has a node at (0:0:1); y^2 z = x^3 + x z^2 is smooth.
    T node = T::monomial(kQ, 0, 2, 1, 1) + T::monomial(kQ, 3, 0, 0, -1) + T::monomial(kQ, 2, 0, 1, -1);
    T smooth = T::monomial(kQ, 0, 2, 1, 1) + T::monomial(kQ, 3, 0, 0, -1) + T::monomial(kQ, 1, 0, 2, -1);
    EXPECT_EQ(smoothness_verdict(node).kind, SmoothnessVerdict::Kind::SingularModP);
    EXPECT_TRUE(smoothness_verdict(smooth).smooth());
}

TEST(Smoothness, OverPrimeFieldUsesOwnPrime) {
    PrimeField f(211);
    auto g = TernaryForm<PrimeField>::monomial(f, 4, 0, 0, f.one()) + TernaryForm<PrimeField>::monomial(f, 0, 4, 0, f.one()) +
             TernaryForm<PrimeField>::monomial(f, 0, 0, 4, f.one());
    auto v = smoothness_verdict(g);
    EXPECT_TRUE(v.smooth());
    EXPECT_EQ(v.prime, 211u);
}

TEST(SingularLocus, TableExamples) {
    EXPECT_EQ(singular_locus_model(generate_instance(RowId::T1_1, kQ, 1)).label, SingularLocusLabel::Point);
    auto r63 = singular_locus_model(generate_instance(RowId::T1_2, kQ, 1));
    EXPECT_EQ(r63.label, SingularLocusLabel::TwoPoints);
    EXPECT_EQ(r63.restricted_ranks, std::vector<std::size_t>{2});
    auto t24 = singular_locus_model(generate_instance(RowId::T2_4, kQ, 1));
    EXPECT_EQ(t24.k_dim, 6u);
    EXPECT_EQ(t24.restricted_ranks, std::vector<std::size_t>{6});
    EXPECT_EQ(t24.label, SingularLocusLabel::Quadric4FoldGr24);
}

TEST(SingularLocus, ConeCase) {
    QNet net(diagonal({0, 1, 1, 1}), diagonal({0, 2, 1, 1}), diagonal({0, 1, 3, 1}));
    EXPECT_THROW(singular_locus_model(net), ConeCase);
    EXPECT_THROW(classify_row(net), ConeCase);
}

TEST(SingularLocus, LabelInvariantUnderCongruenceAndScaling) {
    std::mt19937_64 rng(8);
    for (auto row : table_rows()) {
        auto net = generate_instance(row, kF101, 4);
        auto label = singular_locus_model(net).label;
        auto b = random_invertible(kF101, net.size(), rng);
        EXPECT_EQ(singular_locus_model(net.congruent(b)).label, label);
        Matrix<Fp> scale(3, 3, kF101.zero());
        scale(0, 0) = kF101.from_int(3);
        scale(1, 1) = kF101.from_int(-7);
        scale(2, 2) = kF101.from_int(45);
        EXPECT_EQ(singular_locus_model(net.recombined(scale)).label, label);
    }
}

TEST(Jacobian, VertexOfK3_27) {
    auto net = generate_instance(RowId::T1_1, kQ, 2);
    std::vector<Rational> e0(8, Rational(0));
    e0[0] = 1;
    EXPECT_LE(jacobian_rank_at(net, e0), 2u);
    std::vector<Rational> off(8, Rational(1));
    EXPECT_THROW(jacobian_rank_at(net, off), PointNotOnVariety);
}

TEST(Jacobian, GenericPointsHaveFullRank) {
    auto net = generate_instance(RowId::T1_1, kF101, 2);
    auto pts = sample_points_on_variety(net, 4, 99);
    ASSERT_FALSE(pts.empty());
    for (const auto& x : pts) EXPECT_EQ(jacobian_rank_at(net, x), 3u);
}

TEST(Jacobian, TwoPointsOfR63) {
    // Search seeds for an instance whose binary form on K splits over F_101.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto net = generate_instance(RowId::T1_2, kF101, seed);
        auto w = singular_witnesses(net, 5, seed);
        if (w.size() < 2) continue;
        EXPECT_EQ(w.size(), 2u);
        for (const auto& x : w) EXPECT_LE(jacobian_rank_at(net, x), 2u);
        return;
    }
    FAIL() << "no split R-63 instance found";
}

TEST(Classify, RoundTripAndSpecialCases) {
    EXPECT_EQ(classify_row(generate_instance(RowId::T1_3, kQ, 9)).row, RowId::T1_3);
    QNet smooth(diagonal({1, 1, 1, 1}), diagonal({1, 2, 3, 4}), diagonal({4, 3, 2, 1}));
    EXPECT_EQ(classify_row(smooth).kind, RowClassification::Kind::SmoothNet);
    QNet odd(diagonal({0, 1, 1, 1}), diagonal({1, 2, 3, 4}), diagonal({4, 3, 2, 1}));
    EXPECT_EQ(classify_row(odd).kind, RowClassification::Kind::Unlisted);
}

TEST(Classify, GeneratorRoundTripManySeeds) {
    for (auto row : table_rows())
        for (std::uint64_t seed = 0; seed < 50; ++seed)
            ASSERT_EQ(classify_row(generate_instance(row, kQ, seed)).row, row) << configuration(row).name << " seed " << seed;
}

TEST(Generate, DeterministicAndRowShaped) {
    EXPECT_EQ(generate_instance(RowId::T1_1, kQ, 42), generate_instance(RowId::T1_1, kQ, 42));
    EXPECT_FALSE(generate_instance(RowId::T1_1, kQ, 42) == generate_instance(RowId::T1_1, kQ, 43));
    auto net = generate_instance(RowId::T2_2, kF101, 6);
    auto k = check_shared_kernel(net);
    EXPECT_EQ(kernel(net[0]).dim(), 4u);
    EXPECT_EQ(kernel(net[1]).dim(), 4u);
    EXPECT_EQ(kernel(net[2]).dim(), 0u);
    EXPECT_EQ(vanishing_order_along(net[0], k), 2);
    EXPECT_EQ(vanishing_order_along(net[1], k), 2);
    EXPECT_EQ(vanishing_order_along(net[2], k), 0);
    EXPECT_THROW(generate_instance(RowId::C8_SPLIT, kQ, 1), InvalidInput);
}

TEST(Generate, TinyFieldFailsGenerically) {
    PrimeField f5(5);
    // Over F_5 the 6x6 zero-block condition for T2-4 is still satisfiable, but
    // a run of seeds must either produce a valid net or report GenericityFailure.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        try {
            auto net = generate_instance(RowId::T2_3, f5, seed);
            EXPECT_EQ(classify_row(net).row, RowId::T2_3);
        } catch (const GenericityFailure&) {
        }
    }
}

TEST(NormalizeVertex, IdentityOnNormalNet) {
    auto net = generate_instance(RowId::T1_1, kQ, 30);
    auto [normal, b] = normalize_vertex(net);
    EXPECT_EQ(b, (Matrix<Rational>::identity(8, 0, 1)));
    EXPECT_EQ(normal, net);
}

TEST(NormalizeVertex, PermutationAndScrambledInstances) {
    auto net = generate_instance(RowId::T1_1, kQ, 31);
    Matrix<Rational> swap(8, 8, Rational(0));
    swap(0, 1) = swap(1, 0) = 1;
    for (std::size_t i = 2; i < 8; ++i) swap(i, i) = 1;
    auto [normal, b] = normalize_vertex(net.congruent(swap));
    EXPECT_EQ(b, swap);
    EXPECT_EQ(normal, net);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        auto scrambled = net.congruent(random_invertible(kQ, 8, rng));
        auto [n2, b2] = normalize_vertex(scrambled);
        EXPECT_TRUE(is_zero(n2[2](0, 0)));
        EXPECT_EQ(kernel(n2[0]), Subspace<RationalField>::leading_coordinates(kQ, 8, 1));
        EXPECT_EQ(verify_proposition(n2).multiplicity, 2u);
    }
    EXPECT_THROW(normalize_vertex(generate_instance(RowId::T1_2, kQ, 1)), NotApplicable);
}

TEST(Invariants, DiscriminantCovariance) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        auto net = generate_instance(RowId::T1_1, kF101, trial);
        auto b = random_invertible(kF101, 8, rng);
        auto d = det_fraction_free(b);
        EXPECT_EQ(discriminant_curve(net.congruent(b)), discriminant_curve(net).scaled(d * d));

        auto qnet = generate_instance(RowId::T1_2, kQ, trial);
        auto bq = random_invertible(kQ, 8, rng);
        Rational dq = det_fraction_free(bq);
        EXPECT_EQ(discriminant_curve(qnet.congruent(bq)), discriminant_curve(qnet).scaled(dq * dq));
    }
}

TEST(Invariants, NetPlaneEquivariance) {
    std::mt19937_64 rng(13);
    auto net = generate_instance(RowId::T1_3, kF101, 2);
    auto disc = discriminant_curve(net);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_invertible(kF101, 3, rng);
        auto moved = discriminant_curve(net.recombined(a));
        for (int s = 0; s < 5; ++s) {
            std::vector<Fp> l{Fp(rng() % 101, 101), Fp(rng() % 101, 101), Fp(rng() % 101, 101)};
            auto at = mat_vec(kF101, a.transposed(), l);
            EXPECT_EQ(moved.evaluate(l[0], l[1], l[2]), disc.evaluate(at[0], at[1], at[2]));
        }
    }
}

TEST(Invariants, MultiplicityLowerBounds) {
    for (auto row : {RowId::T1_1, RowId::T1_2, RowId::T1_3, RowId::T2_1, RowId::T2_2, RowId::T2_3}) {
        const auto& cfg = configuration(row);
        const unsigned d = static_cast<unsigned>(cfg.k_dim());
        const unsigned bound = cfg.orders()[2] == 1 ? 2 * d : d;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto mult = coordinate_line_multiplicities(discriminant_curve(generate_instance(row, kF101, seed)));
            EXPECT_GE(mult[2], bound) << cfg.name;
        }
    }
}
