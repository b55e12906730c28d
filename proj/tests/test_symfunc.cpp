#include <doctest.h>

#include <algorithm>

#include "chl/symfunc.hpp"

using namespace chl;

namespace {

RatCoeff omt() { return RatCoeff::one_minus_t_pow(1); }

// p-basis element evaluated at concrete variable values via p_m = sum v_i^m.
RatCoeff eval_p_elem(const SymElem& f, const std::vector<RatCoeff>& vals) {
    REQUIRE(f.basis() == SymElem::Basis::p);
    RatCoeff total;
    for (const auto& [la, c] : f.terms()) {
        RatCoeff term = c;
        for (int part : la.parts()) {
            RatCoeff power_sum;
            for (const RatCoeff& v : vals) {
                RatCoeff p(1);
                for (int k = 0; k < part; ++k) p *= v;
                power_sum += p;
            }
            term *= power_sum;
        }
        total += term;
    }
    return total;
}

}  // namespace

TEST_SUITE("symfunc") {

TEST_CASE("expand_qn small cases") {
    CHECK(expand_qn(0) == SymElem::one(SymElem::Basis::p));
    CHECK(expand_qn(-3).is_zero());
    CHECK(expand_qn(1) == SymElem::p_monomial(Partition({1}), omt()));

    SymElem q2 = expand_qn(2);
    RatCoeff half(mpq_class(1, 2));
    CHECK(q2.coeff(Partition({2})) == RatCoeff::one_minus_t_pow(2) * half);
    CHECK(q2.coeff(Partition({1, 1})) == omt() * omt() * half);
    CHECK(q2.terms().size() == 2);
}

TEST_CASE("expand_qn matches exponential-series oracle") {
    for (int n = 0; n <= 8; ++n) CHECK(expand_qn(n) == expand_qn_series_oracle(n));
}

TEST_CASE("expand_qn at t=0 is the complete homogeneous function") {
    for (int n = 1; n <= 6; ++n) {
        SymElem qn = expand_qn(n);
        for (const Partition& rho : partitions_of(n)) {
            mpq_class expect(mpz_class(1), z_lambda(rho));
            expect.canonicalize();
            CHECK(qn.coeff(rho).eval(mpq_class(0)) == expect);
        }
    }
}

TEST_CASE("raising factor expansion against geometric-series oracle") {
    // (1 - (1-t) sum_{k=1}^{K} t^{k-1} R^k)(1 - tR) == 1 - R  mod R^{K+1}
    const int K = 9;
    std::vector<RatCoeff> series(K + 1);
    series[0] = RatCoeff(1);
    for (int k = 1; k <= K; ++k)
        series[k] = -(omt() * RatCoeff::t_pow(k - 1));
    std::vector<RatCoeff> prod(K + 1);
    for (int k = 0; k <= K; ++k) {
        prod[k] += series[k];
        if (k >= 1) prod[k] -= RatCoeff::t() * series[k - 1];
    }
    CHECK(prod[0] == RatCoeff(1));
    CHECK(prod[1] == RatCoeff(-1));
    for (int k = 2; k <= K; ++k) CHECK(prod[k].is_zero());
}

TEST_CASE("hl_Q basics") {
    CHECK(hl_Q(Partition()) == SymElem::one(SymElem::Basis::q));
    CHECK(hl_Q(Partition({1})) == SymElem::q_monomial(Partition({1})));

    SymElem q21 = hl_Q(Partition({2, 1}));
    CHECK(q21.coeff(Partition({2, 1})) == RatCoeff(1));
    CHECK(q21.coeff(Partition({3})) == -omt());
    CHECK(q21.terms().size() == 2);
}

TEST_CASE("hl_Q triangularity in dominance order") {
    for (const Partition& la : partitions_up_to(7)) {
        SymElem Q = hl_Q(la);
        CHECK(Q.coeff(la) == RatCoeff(1));
        for (const auto& [nu, c] : Q.terms()) {
            if (nu == la) continue;
            CHECK(dominates(nu, la));
        }
    }
}

TEST_CASE("scalar product") {
    SymElem one = SymElem::one(SymElem::Basis::p);
    CHECK(hl_scalar(one, one) == RatCoeff(1));
    SymElem p1 = SymElem::p_monomial(Partition({1}));
    CHECK(hl_scalar(p1, p1) == RatCoeff(1) / omt());
    CHECK(hl_scalar(hl_P(Partition({1})), hl_Q(Partition({1}))) ==
          RatCoeff(1));
}

TEST_CASE("b_lambda closed form") {
    // <Q_la, Q_la> = prod over distinct part sizes of (t;t)_{multiplicity}
    for (const Partition& la : partitions_up_to(6)) {
        RatCoeff expect(1);
        for (int m = 1; m <= (la.empty() ? 0 : la.part(1)); ++m)
            expect *= RatCoeff::qq_poch(la.mult(m));
        CHECK(b_lambda(la) == expect);
    }
}

TEST_CASE("hl_P worked cases") {
    CHECK(hl_P(Partition()) == SymElem::one(SymElem::Basis::q));
    CHECK(hl_P(Partition({1})) ==
          SymElem::q_monomial(Partition({1}), RatCoeff(1) / omt()));
    RatCoeff b11 = omt() * RatCoeff::one_minus_t_pow(2);
    CHECK(b_lambda(Partition({1, 1})) == b11);
    CHECK(hl_P(Partition({1, 1})) == hl_Q(Partition({1, 1})).scaled(b11.inverse()));
}

TEST_CASE("duality P against Q up to weight 6") {
    auto all = partitions_up_to(6);
    for (const Partition& la : all) {
        for (const Partition& mu : all) {
            RatCoeff got = hl_scalar(hl_P(la), hl_Q(mu));
            CHECK(got == (la == mu ? RatCoeff(1) : RatCoeff()));
        }
    }
}

TEST_CASE("pieri rule") {
    PartitionMap r0 = pieri_multiply(0, Partition({2, 1}));
    REQUIRE(r0.size() == 1);
    CHECK(r0.at(Partition({2, 1})) == RatCoeff(1));

    PartitionMap r1 = pieri_multiply(1, Partition({1}));
    REQUIRE(r1.size() == 2);
    CHECK(r1.at(Partition({2})) == omt());
    CHECK(r1.at(Partition({1, 1})) == RatCoeff(1));

    PartitionMap r2 = pieri_multiply(2, Partition());
    REQUIRE(r2.size() == 1);
    CHECK(r2.at(Partition({2})) == RatCoeff(1));
}

TEST_CASE("pieri consistency with direct q-basis product") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& la : partitions_up_to(5)) {
            SymElem prod = SymElem::q_monomial(Partition({n})) * hl_Q(la);
            if (n == 0) prod = hl_Q(la);
            PartitionMap direct = decompose_Q(prod);
            PartitionMap pieri = pieri_multiply(n, la);
            CHECK(direct == pieri);
        }
    }
}

TEST_CASE("decompose_Q inverts hl_Q") {
    for (const Partition& la : partitions_up_to(6)) {
        PartitionMap d = decompose_Q(hl_Q(la));
        REQUIRE(d.size() == 1);
        CHECK(d.at(la) == RatCoeff(1));
    }
    // a mixed element
    SymElem f = hl_Q(Partition({2})).scaled(RatCoeff::t()) +
                hl_Q(Partition({3, 1})).scaled(omt()) +
                SymElem::one(SymElem::Basis::q);
    PartitionMap d = decompose_Q(f);
    CHECK(d.at(Partition({2})) == RatCoeff::t());
    CHECK(d.at(Partition({3, 1})) == omt());
    CHECK(d.at(Partition()) == RatCoeff(1));
    CHECK(d.size() == 3);
}

TEST_CASE("basis conversions round trip") {
    for (const Partition& la : partitions_up_to(6)) {
        SymElem q = SymElem::q_monomial(la);
        CHECK(q.to_p().to_q() == q);
    }
    SymElem f = hl_Q(Partition({3, 2})).scaled(omt()) -
                SymElem::q_monomial(Partition({1, 1}), RatCoeff::t());
    CHECK(f.to_p().to_q() == f);
}

TEST_CASE("skew single-variable P") {
    std::vector<std::string> zv{"z"};
    CHECK(skew_P_single(Partition({2, 1}), Partition({2, 1})) ==
          SpectralPoly<RatCoeff>::constant(zv, RatCoeff(1)));
    CHECK(skew_P_single(Partition({2}), Partition({1})) ==
          SpectralPoly<RatCoeff>::monomial(zv, {1}, omt()));
    CHECK(skew_P_single(Partition({2, 2}), Partition({1})).is_zero());
    CHECK(skew_P_single(Partition({1}), Partition({2})).is_zero());
}

TEST_CASE("hl_P_evaluate branching") {
    RatCoeff a(2), b(3);
    RatCoeff one(1);
    CHECK(hl_P_evaluate(Partition(), std::vector<RatCoeff>{}, one) == one);
    CHECK(hl_P_evaluate(Partition({1}), {a, b}, one) == a + b);
    CHECK(hl_P_evaluate(Partition({1, 1}), {a}, one).is_zero());
}

TEST_CASE("hl_P_evaluate equals p-basis specialization") {
    std::vector<RatCoeff> vals{RatCoeff(2), RatCoeff(mpq_class(1, 3)),
                               RatCoeff::t()};
    for (int n = 1; n <= 3; ++n) {
        std::vector<RatCoeff> use(vals.begin(), vals.begin() + n);
        for (const Partition& la : partitions_up_to(4)) {
            RatCoeff via_branching = hl_P_evaluate(la, use, RatCoeff(1));
            RatCoeff via_p = eval_p_elem(hl_P(la).to_p(), use);
            CHECK(via_branching == via_p);
        }
    }
}

TEST_CASE("hl_P_evaluate symmetric under permutations") {
    std::vector<RatCoeff> vals{RatCoeff(2), RatCoeff(5),
                               RatCoeff(mpq_class(1, 2)), RatCoeff(7)};
    std::vector<int> idx{0, 1, 2, 3};
    for (const Partition& la : {Partition({2, 1}), Partition({3, 1}),
                                Partition({2, 2}), Partition({1, 1, 1})}) {
        RatCoeff ref = hl_P_evaluate(la, vals, RatCoeff(1));
        std::vector<int> perm(idx);
        do {
            std::vector<RatCoeff> v;
            for (int i : perm) v.push_back(vals[i]);
            CHECK(hl_P_evaluate(la, v, RatCoeff(1)) == ref);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("apply_H") {
    SymElem one = SymElem::one(SymElem::Basis::q);
    auto h0 = apply_H(0, one);
    REQUIRE(h0.size() == 1);
    CHECK(h0[0] == one);

    auto h1 = apply_H(1, one);
    REQUIRE(h1.size() == 2);
    CHECK(h1[1] == SymElem::q_monomial(Partition({1})));

    auto h2 = apply_H(2, hl_Q(Partition({1})));
    PartitionMap z1 = decompose_Q(h2[1]);
    CHECK(z1.at(Partition({2})) == omt());
    CHECK(z1.at(Partition({1, 1})) == RatCoeff(1));
    CHECK(z1.size() == 2);
    PartitionMap z2 = decompose_Q(h2[2]);
    CHECK(z2.at(Partition({3})) == omt());
    CHECK(z2.at(Partition({2, 1})) == RatCoeff(1));
    CHECK(z2.size() == 2);
}

TEST_CASE("apply_H_perp") {
    SymElem one_p = SymElem::one(SymElem::Basis::p);
    auto h = apply_H_perp(3, one_p);
    CHECK(h[0] == one_p);
    CHECK(h[1].is_zero());
    CHECK(h[2].is_zero());
    CHECK(h[3].is_zero());

    auto hq1 = apply_H_perp(1, expand_qn(1));
    CHECK(hq1[0] == expand_qn(1));
    CHECK(hq1[1] == SymElem::monomial(SymElem::Basis::p, Partition(), omt()));

    // derived contraction: q_1-perp Q_(1,1) = (1 - t^2) Q_(1)
    SymElem lhs = apply_qk_perp(1, hl_Q(Partition({1, 1})));
    CHECK(lhs == hl_Q(Partition({1})).to_p().scaled(
                     RatCoeff::one_minus_t_pow(2)));
}

TEST_CASE("H and H-perp are adjoint") {
    auto basis = partitions_up_to(5);
    for (int k = 0; k <= 3; ++k) {
        for (const Partition& la : basis) {
            for (const Partition& mu : basis) {
                SymElem f = SymElem::q_monomial(la);
                SymElem g = SymElem::q_monomial(mu);
                RatCoeff lhs = hl_scalar(apply_qk_perp(k, f), g);
                RatCoeff rhs =
                    hl_scalar(f, SymElem::q_monomial(Partition({k})) * g);
                if (k == 0) rhs = hl_scalar(f, g);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("serialization") {
    CHECK(SymElem::q_monomial(Partition({2, 1})).str() == "(1)/(1) * q[2,1]");
    CHECK(SymElem::p_monomial(Partition({3, 1, 1}), RatCoeff::t()).str() ==
          "(s^2)/(1) * p1^2 p3");
    CHECK(SymElem::zero(SymElem::Basis::q).str() == "0");
    CHECK(SymElem::one(SymElem::Basis::p).str() == "(1)/(1) * 1");
}

}
