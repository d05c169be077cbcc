#include "doctest.h"
#include "quiverdt/dt.hpp"
#include "quiverdt/oracle.hpp"

using namespace quiverdt;

namespace {
Laurent L(std::initializer_list<std::pair<int, long>> terms) {
    Laurent f;
    for (auto& [e, c] : terms) f = f + Laurent::monomial(e, Rat(c));
    return f;
}
}  // namespace

TEST_CASE("build_A coefficients") {
    Series a = build_A(Quiver::loop_quiver(1), 3);
    CHECK(a.coeff({0}) == RatFunc::one());
    CHECK(a.coeff({1}) == RatFunc(Laurent::one(), Laurent::q_pochhammer(1, true)));

    Series a2 = build_A(Quiver::loop_quiver(2), 3);
    CHECK(a2.coeff({1}) ==
          RatFunc(Laurent::monomial(1, -1), Laurent::q_pochhammer(1, true)));
}

TEST_CASE("DT invariants of loop quivers match the golden tables") {
    auto r0 = dt_invariants(Quiver::loop_quiver(0), 4);
    CHECK(r0.entries.at({1}).omega_neg == L({{1, 1}}));
    for (int n = 2; n <= 4; ++n) CHECK(r0.entries.count({n}) == 0);

    auto r2 = dt_invariants(Quiver::loop_quiver(2), 4);
    CHECK(r2.entries.at({1}).omega_neg == L({{3, 1}}));
    CHECK(r2.entries.at({2}).omega_neg == L({{6, 1}}));
    CHECK(r2.entries.at({3}).omega_neg == L({{11, 1}}));
    CHECK(r2.entries.at({4}).omega_neg == L({{14, 1}, {18, 1}}));

    auto r3 = dt_invariants(Quiver::loop_quiver(3), 4);
    CHECK(r3.entries.at({3}).omega_neg == L({{14, 1}, {16, 1}, {20, 1}}));
    CHECK(r3.entries.at({4}).omega_neg ==
          L({{18, 1}, {20, 1}, {22, 2}, {24, 1}, {26, 2}, {28, 1}, {30, 1}, {34, 1}}));

    for (auto& [al, e] : r3.entries) {
        CHECK(e.positive);
        CHECK(e.integral);
    }

    CHECK_THROWS_AS(dt_invariants(Quiver{2, {{0, 1}, {0, 0}}}, 2), std::invalid_argument);
}

TEST_CASE("Exp(Omega/(q-1)) reconstructs A") {
    for (int g = 0; g <= 3; ++g) {
        Quiver q = Quiver::loop_quiver(g);
        Series a = build_A(q, 4);
        auto r = dt_invariants(q, 4);
        Series om(a.grading());
        for (auto& [al, e] : r.entries) om.set(al, RatFunc(e.omega));
        CHECK(plethystic_exp(scale_by_q_minus_1(om, ScaleDirection::Divide)).terms() == a.terms());
    }
}

TEST_CASE("hn_factorization") {
    Quiver q = Quiver::two_vertex(1, 1);
    Stability zero{{Rat(0), Rat(0)}};
    auto strata0 = hn_factorization(q, zero, 3);
    REQUIRE(strata0.size() == 1);
    CHECK(strata0[0].series.terms() == build_A(q, 3).terms());

    Stability st{{Rat(1), Rat(0)}};
    auto strata = hn_factorization(q, st, 3);
    Series a = build_A(q, 3);
    // unit vectors have no proper decomposition
    for (const auto& s : strata) {
        for (const DimVector& e : {DimVector{1, 0}, DimVector{0, 1}})
            if (!s.series.coeff(e).is_zero()) CHECK(s.series.coeff(e) == a.coeff(e));
    }
    // reconstruction: slope-descending twisted product of strata equals A
    Series prod = Series::unit(a.grading(), a.twist());
    for (const auto& s : strata) prod = twisted_mul(prod, s.series);
    CHECK(prod.terms() == a.terms());
}

TEST_CASE("dt_theta") {
    // theta = 0 on a symmetric quiver equals dt_invariants
    Quiver q = Quiver::two_vertex(1, 1);
    Stability zero{{Rat(0), Rat(0)}};
    auto strata = dt_theta(q, zero, 3);
    REQUIRE(strata.size() == 1);
    auto plain = dt_invariants(q, 3);
    for (auto& [al, e] : plain.entries)
        CHECK(strata[0].omega.at(al).omega == e.omega);

    // g-loop quiver: any theta gives the same single stratum
    Quiver g2 = Quiver::loop_quiver(2);
    auto s1 = dt_theta(g2, Stability{{Rat(5)}}, 4);
    auto s2 = dt_theta(g2, Stability{{Rat(0)}}, 4);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].omega.at({1}).omega == s2[0].omega.at({1}).omega);

    // 2-vertex symmetric quiver, theta = (1,0): all omega_neg in N[v]
    auto st = dt_theta(q, Stability{{Rat(1), Rat(0)}}, 3);
    for (const auto& stratum : st)
        for (auto& [al, e] : stratum.omega) CHECK(e.positive);
}

TEST_CASE("stable_counts") {
    Stability zero1{{Rat(0)}};

    // one vertex, no loops: only the simple 1-dim rep
    auto s0 = stable_counts(Quiver::loop_quiver(0), zero1, Rat(0), 4);
    CHECK(s0.at({1}) == Laurent::one());
    for (int n = 2; n <= 4; ++n) CHECK(s0.count({n}) == 0);

    // Jordan quiver: S_1 = q, nothing above
    auto s1 = stable_counts(Quiver::loop_quiver(1), zero1, Rat(0), 4);
    CHECK(s1.at({1}) == L({{2, 1}}));
    for (int n = 2; n <= 4; ++n) CHECK(s1.count({n}) == 0);

    // two loops: S_1 = q^2
    auto s2 = stable_counts(Quiver::loop_quiver(2), zero1, Rat(0), 3);
    CHECK(s2.at({1}) == L({{4, 1}}));

    // oracle cross-check: absolutely simple counts at q = p
    for (int p : {2, 3}) {
        CHECK(oracle::count_simple(Quiver::loop_quiver(1), {1}, p) == p);
        CHECK(oracle::count_simple(Quiver::loop_quiver(2), {1}, p) == p * p);
    }
}

TEST_CASE("classical_dt") {
    auto r2 = dt_invariants(Quiver::loop_quiver(2), 4);
    auto c2 = classical_dt(r2);
    CHECK(c2.at({4}) == 2);

    auto r0 = dt_invariants(Quiver::loop_quiver(0), 1);
    CHECK(classical_dt(r0).at({1}) == 1);

    auto r3 = dt_invariants(Quiver::loop_quiver(3), 4);
    CHECK(classical_dt(r3).at({4}) == 10);
}

TEST_CASE("plethystic_transfer") {
    // C = 0 is the identity transfer
    std::map<DimVector, Laurent> a;
    a[{1}] = L({{2, 1}});  // q
    auto r = plethystic_transfer({{0}}, a, 4);
    CHECK(r.entries.at({1}).value == RatFunc::q_power(1));
    CHECK(r.entries.size() == 1);

    // C = [[1]], a = x: all b_alpha in N[q]
    std::map<DimVector, Laurent> ax;
    ax[{1}] = Laurent::one();
    auto rx = plethystic_transfer({{1}}, ax, 5);
    for (auto& [al, e] : rx.entries) {
        CHECK(e.in_N_of_q);
        CHECK(e.integral_half);
    }

    // b_alpha = q^{-|alpha|} Omega_alpha for the quiver with Ringel matrix -C-C^t
    auto dt3 = dt_invariants(Quiver::loop_quiver(3), 4);
    for (int n = 1; n <= 4; ++n) {
        RatFunc expect = RatFunc(dt3.entries.at({n}).omega_neg) * RatFunc::q_power(-n);
        CHECK(rx.entries.at({n}).value == expect);
    }

    CHECK_THROWS_AS(plethystic_transfer({{-1}}, ax, 3), std::invalid_argument);
}

TEST_CASE("exp_transfer") {
    std::map<DimVector, Laurent> a;
    a[{1}] = L({{2, 1}});
    auto r0 = exp_transfer({{0}}, a, 4);
    CHECK(r0.entries.at({1}).value == RatFunc::q_power(1));
    CHECK(r0.entries.size() == 1);

    CHECK(exp_transfer({{1}}, {}, 4).entries.empty());

    std::map<DimVector, Laurent> ax;
    ax[{1}] = Laurent::one();
    auto rx = exp_transfer({{1}}, ax, 4);
    // verdicts reported, not asserted: print any failures
    for (auto& [al, e] : rx.entries) {
        INFO("alpha " << al[0] << " -> " << e.value.to_string());
        CHECK(e.in_N_of_q);
    }
}
