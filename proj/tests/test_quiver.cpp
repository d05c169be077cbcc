#include <random>

#include "doctest.h"
#include "quiverdt/quiver.hpp"

using namespace quiverdt;

TEST_CASE("euler and tits forms") {
    for (int g = 0; g <= 3; ++g) {
        Quiver q = Quiver::loop_quiver(g);
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) CHECK(q.euler_form({m}, {n}) == (1 - g) * m * n);
    }
    Quiver jordan = Quiver::loop_quiver(1);
    CHECK(jordan.euler_form({2}, {3}) == 0);

    Quiver g2 = Quiver::loop_quiver(2);
    CHECK(g2.tits_form({1}) == -1);
    CHECK(g2.tits_form({0}) == 0);
    for (int n = 0; n <= 4; ++n) CHECK(g2.tits_form({n}) == -n * n);

    CHECK_THROWS_AS(g2.euler_form({1, 0}, {1}), std::invalid_argument);
}

TEST_CASE("antisymmetric form and symmetry") {
    Quiver loop = Quiver::loop_quiver(3);
    CHECK(loop.antisym_form({2}, {5}) == 0);
    CHECK(loop.is_symmetric());

    Quiver oneway{2, {{0, 1}, {0, 0}}};
    CHECK(oneway.antisym_form({1, 0}, {0, 1}) == -1);
    CHECK(!oneway.is_symmetric());

    Quiver both{2, {{0, 1}, {1, 0}}};
    CHECK(both.is_symmetric());
    CHECK(both.antisym_form({1, 0}, {0, 1}) == 0);
}

TEST_CASE("bilinearity properties") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(0, 4);
    std::uniform_int_distribution<int> m(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        Quiver q{2, {{m(rng), m(rng)}, {m(rng), m(rng)}}};
        DimVector a{d(rng), d(rng)}, b{d(rng), d(rng)};
        CHECK(q.tits_form(dim_add(a, b)) ==
              q.tits_form(a) + q.tits_form(b) + q.euler_form(a, b) + q.euler_form(b, a));
        CHECK(q.antisym_form(a, b) == -q.antisym_form(b, a));
    }
}

TEST_CASE("has_enough_loops") {
    CHECK(Quiver::loop_quiver(1).has_enough_loops());
    CHECK(!Quiver::loop_quiver(0).has_enough_loops());
    CHECK(Quiver::two_vertex(1, 2).has_enough_loops());

    // agrees with the all-entries-nonpositive test on the Euler matrix
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> m(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        Quiver q{2, {{m(rng), m(rng)}, {m(rng), m(rng)}}};
        bool nonpos = true;
        for (auto& row : q.euler_matrix())
            for (int x : row)
                if (x > 0) nonpos = false;
        CHECK(q.has_enough_loops() == nonpos);
    }
}

TEST_CASE("slope") {
    Stability zero{{Rat(0), Rat(0)}};
    CHECK(slope(zero, {1, 2}) == 0);
    Stability st{{Rat(1), Rat(0)}};
    CHECK(slope(st, {1, 1}) == rat(1, 2));
    Stability st2{{Rat(2), Rat(-1)}};
    CHECK(slope(st2, {1, 2}) == 0);
    CHECK(slope(st, {2, 2}) == slope(st, {1, 1}));
    CHECK_THROWS_AS(slope(st, {0, 0}), std::invalid_argument);
}

TEST_CASE("json round trip") {
    std::string text = R"({"vertices": 2, "arrow_matrix": [[1, 2], [2, 1]], "theta": ["1", "-1/2"]})";
    std::optional<Stability> st;
    Quiver q = quiver_from_json_text(text, &st);
    CHECK(q.r == 2);
    CHECK(q.arrows[0][1] == 2);
    REQUIRE(st);
    CHECK(st->theta[1] == rat(-1, 2));

    Quiver q2 = quiver_from_json_text(quiver_to_json_text(q, st), &st);
    CHECK(q2.arrows == q.arrows);

    CHECK_THROWS_AS(quiver_from_json_text("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(quiver_from_json_text(R"({"vertices": 1, "arrow_matrix": [[-1]]})"),
                    std::invalid_argument);
}
