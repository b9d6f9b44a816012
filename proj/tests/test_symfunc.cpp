#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "sxp/abacus.hpp"
#include "sxp/coplactic.hpp"
#include "sxp/symfunc.hpp"

using namespace sxp;
using fixtures::P;

namespace {

SchurExpansion single(const Partition& p) {
    SchurExpansion e;
    e.add(p, 1);
    return e;
}

} // namespace

TEST_CASE("expansion bookkeeping") {
    SchurExpansion e;
    e.add(P({2}), 2);
    e.add(P({1, 1}), -1);
    e.add(P({2}), -2);
    CHECK(e.coefficient(P({2})) == 0);
    CHECK(e.coefficient(P({1, 1})) == -1);
    CHECK(e.terms().size() == 1);
    CHECK(e.degree() == 2);
    CHECK_THROWS_AS(e.add(P({3}), 1), degree_mismatch);
}

TEST_CASE("Kostka numbers agree with tableau enumeration") {
    for (const SkewShape& s : brute::skew_shapes_with_outer_up_to(6)) {
        for (const Partition& c : partitions_of(s.size())) {
            Composition cont(c.parts());
            CHECK(kostka(s, cont) == count_ssyt(s, cont));
        }
        // improper or wrong-size contents count zero
        CHECK(kostka(s, Composition({s.size() + 1})) == 0);
        CHECK(kostka(s, Composition({-1, s.size() + 1})) == 0);
    }
    CHECK(kostka(P({4, 2}), Composition({3, 3})) == 1);
    CHECK(kostka(P({3, 3}), Composition({3, 3})) == 1);
}

TEST_CASE("dominant projection") {
    // s_(n) has every monomial coefficient 1
    for (int n = 1; n <= 7; ++n) {
        DominantVector v = schur_to_dominant(single(P({n})));
        CHECK(v.entries.size() == partitions_of(n).size());
        for (const auto& [p, c] : v.entries) CHECK(c == 1);
    }
    // s_(2) - s_(1,1) keeps only the dominant monomial
    SchurExpansion d;
    d.add(P({2}), 1);
    d.add(P({1, 1}), -1);
    DominantVector dv = schur_to_dominant(d);
    CHECK(dv.entry(P({2})) == 1);
    CHECK(dv.entry(P({1, 1})) == 0);

    // s_4 - s_31 + s_22 has coefficient 1 at x^(2,2)
    SchurExpansion pleth;
    pleth.add(P({4}), 1);
    pleth.add(P({3, 1}), -1);
    pleth.add(P({2, 2}), 1);
    CHECK(schur_to_dominant(pleth).entry(P({2, 2})) == 1);
}

TEST_CASE("dominant/schur round trips") {
    std::mt19937 rng(424242);
    for (int degree = 0; degree <= 10; ++degree) {
        auto parts = partitions_of(degree);
        for (int trial = 0; trial < 8; ++trial) {
            SchurExpansion e;
            for (const Partition& p : parts) {
                int c = std::uniform_int_distribution<int>(-3, 3)(rng);
                if (c != 0) e.add(p, c);
            }
            SchurExpansion back = dominant_to_schur(schur_to_dominant(e));
            CHECK(back == e);
        }
    }
}

TEST_CASE("oracle examples") {
    SchurExpansion expect;
    expect.add(P({4}), 1);
    expect.add(P({3, 1}), -1);
    expect.add(P({2, 2}), 1);
    CHECK(oracle_product_plethysm(P({}), skew(P({2})), 2) == expect);

    CHECK(oracle_product_plethysm(P({3, 2}), skew(P({3, 3})), 3).coefficient(
              P({6, 5, 5, 5, 2})) == 1);
    CHECK(oracle_product_plethysm(P({3, 2}), SkewShape(P({4, 3}), P({1})), 3).coefficient(
              P({6, 5, 5, 5, 2})) == 3);
}

TEST_CASE("inner products") {
    SchurExpansion a = single(P({3, 1}));
    CHECK(inner_product(a, a) == 1);
    SchurExpansion big = oracle_product_plethysm(P({}), skew(P({2})), 2);
    CHECK(inner_product(big, single(P({3, 1}))) == -1);
    CHECK(inner_product(big, SchurExpansion()) == 0);
    CHECK_THROWS_AS(inner_product(single(P({2})), single(P({3}))), degree_mismatch);
}

TEST_CASE("products") {
    // s_{(4,3)/(1)} = s_(4,2) + s_(3,3): the oracle at r = 1, tau empty
    SchurExpansion skew_exp = oracle_product_plethysm(P({}), SkewShape(P({4, 3}), P({1})), 1);
    SchurExpansion expect;
    expect.add(P({4, 2}), 1);
    expect.add(P({3, 3}), 1);
    CHECK(skew_exp == expect);

    CHECK(schur_product(single(P({3, 1})), single(P({}))) == single(P({3, 1})));

    SchurExpansion s1s1 = schur_product(single(P({1})), single(P({1})));
    SchurExpansion want;
    want.add(P({2}), 1);
    want.add(P({1, 1}), 1);
    CHECK(s1s1 == want);
}

TEST_CASE("adjointness at coefficient level") {
    // <s_tau s_lambda, s_nu> = <s_lambda, s_{nu/tau}>, both sides through
    // independent routes (product convolution vs skew-shape oracle).
    for (int t = 1; t <= 3; ++t)
        for (const Partition& tau : partitions_of(t))
            for (int l = 1; l <= 8 - t; ++l)
                for (const Partition& lambda : partitions_of(l)) {
                    SchurExpansion prod = schur_product(single(tau), single(lambda));
                    for (const Partition& nu : partitions_of(t + l)) {
                        Int lhs = prod.coefficient(nu);
                        Int rhs = 0;
                        if (nu.contains(tau))
                            rhs = oracle_product_plethysm(P({}), SkewShape(nu, tau), 1)
                                      .coefficient(lambda);
                        CHECK(lhs == rhs);
                    }
                }
}

TEST_CASE("plethystic adjointness") {
    // <s_lambda o p_r, s_{nu/tau}> vanishes unless nu/tau is r-decomposable,
    // in which case it equals sgn_r(nu/tau) <s_lambda, prod_i s_{nu(i)/tau(i)}>.
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; r * n <= 10; ++n)
            for (const Partition& lambda : partitions_of(n)) {
                SchurExpansion pleth = oracle_product_plethysm(P({}), skew(lambda), r);
                for (int t = 0; t <= 2; ++t)
                    for (const Partition& tau : partitions_of(t))
                        for (const Partition& nu : partitions_of(r * n + t)) {
                            if (!nu.contains(tau)) continue;
                            SkewShape over(nu, tau);
                            Int lhs = inner_product(
                                pleth, oracle_product_plethysm(P({}), over, 1));
                            SkewMultiShape q;
                            try {
                                q = skew_quotient(over, r);
                            } catch (const not_componentwise_skew&) {
                                CHECK(lhs == 0);
                                continue;
                            }
                            SchurExpansion prod = single(P({}));
                            for (const SkewShape& c : q.components)
                                prod = schur_product(
                                    prod, oracle_product_plethysm(P({}), c, 1));
                            Int sign = sgn_r(over, r);
                            CHECK(lhs ==
                                  checked_mul(sign, inner_product(single(lambda), prod)));
                        }
            }
}

TEST_CASE("products of skew Schur functions count latticed multitableaux") {
    // prod_i s_{nu(i)/tau(i)} = sum_lambda c^lambda_q s_lambda
    std::vector<SkewMultiShape> shapes;
    for (const SkewShape& a : brute::skew_shapes_with_outer_up_to(4)) {
        if (a.size() == 0) continue;
        for (const SkewShape& b : brute::skew_shapes_with_outer_up_to(4)) {
            if (b.size() == 0 || a.size() + b.size() > 8) continue;
            shapes.push_back(SkewMultiShape({a, b}));
        }
    }
    for (const SkewMultiShape& q : shapes) {
        SchurExpansion prod = single(P({}));
        for (const SkewShape& c : q.components)
            prod = schur_product(prod, oracle_product_plethysm(P({}), c, 1));
        SchurExpansion viacounts;
        for (const Partition& lambda : partitions_of(q.size()))
            viacounts.add(lambda, lr_coefficient(lambda, q));
        CHECK(prod == viacounts);
    }
}
