#include <doctest.h>

#include <cmath>

#include "padyn/dimension.hpp"

using namespace padyn;

namespace {

const Field& F() {
    static Field f = Field::canonical(64);
    return f;
}

Field variant9() { return Field(3, mpq_class(9), mpq_class(1, 3), 64); }

}  // namespace

TEST_CASE("theoretical dimension") {
    CHECK(theoretical_dimension(F()) == doctest::Approx(1.5));
    CHECK(theoretical_dimension(variant9()) == doctest::Approx(4.0 / 3.0));
    const Field deep(3, mpq_class(243), mpq_class(1, 3), 32);  // val(a) = 5
    CHECK(theoretical_dimension(deep) == doctest::Approx(7.0 / 6.0));
    // always strictly between 1 and 2
    CHECK(theoretical_dimension(F()) > 1.0);
    CHECK(theoretical_dimension(F()) < 2.0);
    CHECK(theoretical_dimension(deep) > 1.0);
}

TEST_CASE("window depth selection") {
    // canonical: delta needs n = j-1, eps_(m-1) = 3^-(2m-1) needs 2m-1 >= j
    CHECK(window_depths_for(F(), 1) == std::pair{1, 0});
    CHECK(window_depths_for(F(), 2) == std::pair{2, 1});
    CHECK(window_depths_for(F(), 3) == std::pair{2, 2});
    CHECK(window_depths_for(F(), 4) == std::pair{3, 3});
    CHECK_THROWS_AS(check_depth_feasible(F(), 1, 0, 3), DepthInsufficient);
    CHECK_NOTHROW(check_depth_feasible(F(), 2, 2, 3));
}

TEST_CASE("ball ids at depth zero and one") {
    const auto whole = attractor_ball_ids(F(), 0, 1, 0);
    CHECK(whole.size() == 1);

    const auto depth1 = attractor_ball_ids(F(), 1, 1, 0);
    CHECK(depth1.size() == 9);  // every residue pair is hit
}

TEST_CASE("exact counts at the canonical parameters") {
    const long expect[] = {9, 27, 243, 729};
    for (long j = 1; j <= 4; ++j) {
        const auto [m, n] = window_depths_for(F(), j);
        const auto balls = attractor_ball_ids(F(), j, m, n);
        CHECK(static_cast<long>(balls.size()) == expect[j - 1]);
    }
}

TEST_CASE("exact counts at the variant parameters") {
    const Field V = variant9();
    const long expect[] = {9, 27, 81, 729};
    for (long j = 1; j <= 4; ++j) {
        const auto [m, n] = window_depths_for(V, j);
        const auto balls = attractor_ball_ids(V, j, m, n);
        CHECK(static_cast<long>(balls.size()) == expect[j - 1]);
    }
}

TEST_CASE("parallel enumeration equals the serial reference") {
    for (long j = 1; j <= 3; ++j) {
        const auto [m, n] = window_depths_for(F(), j);
        CHECK(attractor_ball_ids(F(), j, m, n) == attractor_ball_ids_serial(F(), j, m, n));
        CHECK(decoded_ball_histogram(F(), m, n, j) ==
              decoded_ball_histogram_serial(F(), m, n, j));
    }
}

TEST_CASE("refinement consistency") {
    const auto [m1, n1] = window_depths_for(F(), 2);
    const auto [m2, n2] = window_depths_for(F(), 3);
    const auto coarse = attractor_ball_ids(F(), 2, m1, n1);
    const auto fine = attractor_ball_ids(F(), 3, m2, n2);
    CHECK(fine.size() >= coarse.size());
    for (const auto& b : fine) CHECK(coarse.count(b.parent(3)) == 1);
}

TEST_CASE("window sufficiency: deeper windows do not change the ball set") {
    const auto [m, n] = window_depths_for(F(), 2);
    const auto base = attractor_ball_ids(F(), 2, m, n);
    CHECK(attractor_ball_ids(F(), 2, m + 1, n + 1) == base);
    CHECK(attractor_ball_ids(F(), 2, m + 2, n) == base);
}

TEST_CASE("box_count series") {
    const CountSeries s = box_count(F(), {1, 2, 3, 4}, {0, 1}, 10);
    REQUIRE(s.entries.size() == 4);  // tube scales eps_0, eps_1 coincide with depths 1, 3
    CHECK(s.entries[0].radius_vexp == 1);
    CHECK(s.entries[0].tube_index == 0);
    CHECK(s.entries[2].radius_vexp == 3);
    CHECK(s.entries[2].tube_index == 1);
    CHECK(s.entries[1].tube_index == -1);

    const long expect[] = {9, 27, 243, 729};
    for (int i = 0; i < 4; ++i) {
        CHECK(s.entries[i].count == expect[i]);
        // mass-distribution lower bound (1/q^2) r^-alpha holds everywhere
        CHECK(static_cast<double>(s.entries[i].count) >= s.entries[i].mass_lower_bound);
    }

    // the level-n horizontal cover has q^(n+1) tubes of radius eps_n, each a
    // union of 1/eps_n balls; the enumerated counts meet that bound exactly
    for (const auto& e : s.entries)
        if (e.tube_index >= 0)
            CHECK(static_cast<double>(e.count) ==
                  doctest::Approx(3.0 * e.paper_upper_bound));

    CHECK_THROWS_AS(box_count(F(), {9}, {}, 10), DepthInsufficient);
}

TEST_CASE("dimension estimate on synthetic power laws") {
    CountSeries s;
    s.p = 3;
    s.a_val = 1;
    for (long j : {2L, 4L, 6L}) {
        CountEntry e;
        e.radius_vexp = j;
        e.count = static_cast<long>(std::llround(std::pow(3.0, 1.5 * static_cast<double>(j))));
        s.entries.push_back(e);
    }
    CHECK(dimension_estimate(s) == doctest::Approx(1.5).epsilon(1e-12));

    s.entries.resize(2);
    CHECK_THROWS_AS(dimension_estimate(s), DegenerateSeries);
}

TEST_CASE("full pipeline slopes") {
    const double slope = dimension_estimate(box_count(F(), {1, 2, 3, 4}, {}, 10));
    CHECK(std::abs(slope - 1.5) <= 0.1 + 1e-9);
    CHECK(slope == doctest::Approx(1.4));  // exact counts give exactly 1.4 here

    const double vslope = dimension_estimate(box_count(variant9(), {1, 2, 3, 4}, {}, 12));
    CHECK(std::abs(vslope - 4.0 / 3.0) <= 0.1 + 1e-9);
}

TEST_CASE("regularity ratios stay below q^2 and are scale-stable") {
    const double r0 = regularity_check(F(), {0}, 10);
    CHECK(r0 == doctest::Approx(1.0));
    const double r1 = regularity_check(F(), {1}, 10);
    const double r2 = regularity_check(F(), {2}, 10);
    const double r3 = regularity_check(F(), {3}, 10);
    for (double r : {r1, r2, r3}) CHECK(r <= 9.0);
    CHECK(r3 <= 3.0 * r1);
    CHECK(r2 <= 3.0 * r1);
}

TEST_CASE("window cap guard") {
    CHECK_THROWS_AS(box_count(F(), {4}, {}, 5), DepthInsufficient);
}
