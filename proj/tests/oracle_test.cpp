#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace netident;
using testutil::K;
using testutil::U;

namespace {

Monomial mono(std::initializer_list<std::size_t> ids) { return Monomial::from_edges(ids); }

Poly random_poly(Rng& rng) {
    Poly p;
    const std::size_t terms = rng.below(4);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::size_t> ids;
        for (std::size_t d = rng.below(3); d > 0; --d) ids.push_back(rng.below(3));
        p += Poly::term(Monomial::from_edges(ids), static_cast<std::int64_t>(rng.below(7)) - 3);
    }
    return p;
}

} // namespace

TEST(Poly, CoefficientExamples) {
    const Poly one = Poly::constant(1);
    EXPECT_EQ(coefficient(one, Monomial()), 1);
    EXPECT_EQ(coefficient(one, mono({0})), 0);
    EXPECT_TRUE(Poly::constant(0).is_zero());
    // Cancellation removes the term.
    EXPECT_TRUE((Poly::variable(2) - Poly::variable(2)).is_zero());
    const Poly sq = (Poly::variable(0) + one) * (Poly::variable(0) + one);
    EXPECT_EQ(sq.coefficient(mono({0, 0})), 1);
    EXPECT_EQ(sq.coefficient(mono({0})), 2);
    EXPECT_EQ(sq.truncated(1), Poly::variable(0) + Poly::variable(0) + one);
    EXPECT_EQ(Poly::variable(0).multiply(Poly::variable(1), 1), Poly());
}

TEST(Poly, OverflowIsChecked) {
    const Poly big = Poly::constant(std::int64_t{1} << 62);
    EXPECT_THROW(big + big, std::overflow_error);
    EXPECT_THROW(big * Poly::constant(4), std::overflow_error);
}

TEST(Poly, RingAxioms) {
    Rng rng(400);
    for (int k = 0; k < 500; ++k) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, Poly());
        ASSERT_EQ(a * Poly::constant(1), a);
        // Evaluation is a ring homomorphism.
        const std::vector<Fp> pt{Fp(rng.below(1000)), Fp(rng.below(1000)), Fp(rng.below(1000))};
        ASSERT_EQ((a * b + c).evaluate(pt), a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
    }
}

TEST(SymbolicT, EmptyBlockIsIdentity) {
    const auto net = testutil::net(3, {{0, 1, U}}, {0}, {1});
    const auto t = symbolic_T_truncated(net, require_separable(net), BlockSide::B, 5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t[i][j], i == j ? Poly::constant(1) : Poly());
}

TEST(SymbolicT, SingleEdge) {
    const auto net = testutil::net(3, {{0, 1, K}, {1, 2, U}}, {0}, {2});
    const auto t = symbolic_T_truncated(net, require_separable(net), BlockSide::B, 3);
    EXPECT_EQ(t[1][0], Poly::variable(0));
    EXPECT_EQ(t[0][0], Poly::constant(1));
    EXPECT_EQ(t[1][1], Poly::constant(1));
    EXPECT_EQ(t[0][1], Poly());
}

TEST(SymbolicT, TwoCycle) {
    // a: 1 -> 2, b: 2 -> 1, walks of length 0, 2, 4 from 1 back to 1.
    const auto net = testutil::net(3, {{0, 1, K}, {1, 0, K}, {1, 2, U}}, {0}, {2});
    const auto t = symbolic_T_truncated(net, require_separable(net), BlockSide::B, 4);
    const Poly expect00 = Poly::constant(1) + Poly::term(mono({0, 1}), 1) + Poly::term(mono({0, 0, 1, 1}), 1);
    const Poly expect10 = Poly::variable(0) + Poly::term(mono({0, 0, 1}), 1);
    EXPECT_EQ(t[0][0], expect00);
    EXPECT_EQ(t[1][0], expect10);
}

TEST(SymbolicDet, Examples) {
    EXPECT_EQ(symbolic_detK_truncated(testutil::net(2, {{0, 1, U}}, {0}, {1}), 4), Poly::constant(1));
    const auto chain = testutil::net(3, {{0, 1, K}, {1, 2, U}}, {0}, {2});
    const Poly dc = symbolic_detK_truncated(chain, 4);
    EXPECT_EQ(dc, Poly::variable(0));
    EXPECT_EQ(coefficient(dc, mono({0})), 1);
    EXPECT_EQ(symbolic_detK_truncated(load_network(std::string(NETIDENT_SAMPLES) + "/crossing.json"), 4),
              Poly::constant(1));
}

TEST(SymbolicDet, CrossingWalksCarryBothSigns) {
    // Excited 1, 2 share the tail 3 through g1, g2 and also reach tail 4
    // through g3, g4; the single measurement 5 sees both pivots.
    const auto net = testutil::net(5, {{0, 2, K}, {1, 2, K}, {0, 3, K}, {1, 3, K}, {2, 4, U}, {3, 4, U}}, {0, 1}, {4});
    const Poly det = symbolic_detK_truncated(net, 4);
    // Columns (g1, g2) and (g3, g4): det = g1 g4 - g2 g3.
    const Poly expect = Poly::term(mono({0, 3}), 1) + Poly::term(mono({1, 2}), -1);
    EXPECT_EQ(det, expect);
    const auto table = repetition_table(net, 4);
    EXPECT_EQ(table.r(mono({0, 3})), 1);
    EXPECT_EQ(table.r(mono({1, 2})), -1);
}

TEST(SymbolicDet, TooLarge) {
    // 7 unknown edges from one excitation to 7 measurements.
    NetworkModel net;
    net.n = 8;
    net.excited = {0};
    for (NodeId c = 1; c < 8; ++c) {
        net.edges.push_back({0, c, EdgeKind::Unknown, std::nullopt});
        net.measured.push_back(c);
    }
    EXPECT_THROW(symbolic_detK_truncated(net, 2), TooLargeError);
}

TEST(OracleProperty, CoefficientsMatchRepetitions) {
    Rng rng(401);
    for (int k = 0; k < 80; ++k) {
        const auto net = testutil::random_separable_square(rng, 7, 4, rng.bernoulli(0.6));
        for (std::size_t d : {2u, 4u}) {
            const auto table = repetition_table(net, d);
            const Poly det = symbolic_detK_truncated(net, d);
            for (const auto& [mu, r] : table.repetition) ASSERT_EQ(coefficient(det, mu), r) << mu.to_string(net);
            // Every surviving oracle monomial was enumerated.
            for (const auto& [mu, c] : det.terms()) ASSERT_EQ(table.r(mu), c) << mu.to_string(net);
        }
    }
}

TEST(OracleProperty, EvaluationMatchesNumericDeterminant) {
    Rng rng(402);
    for (int k = 0; k < 60; ++k) {
        const auto net = testutil::random_separable_square(rng, 7, 4, true);
        const std::size_t L = net.n_unknown() * 2 * (net.n - 1);
        const Poly det = symbolic_detK_truncated(net, L);
        const auto ev = random_exact_evaluation(net, rng);
        const auto t = closed_loop(assemble_G(ev));
        ASSERT_EQ(det.evaluate(ev.values), determinant(build_K(net, t, t).entries));
    }
}
