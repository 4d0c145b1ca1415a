#include <doctest.h>

#include "padyn/dynamics.hpp"

using namespace padyn;

namespace {

const Field& F() {
    static Field f = Field::canonical(64);
    return f;
}

Point pt3(long x, long y, long prec = 32) {
    return {Scalar::from_integer(3, x, prec), Scalar::from_integer(3, y, prec)};
}

}  // namespace

TEST_CASE("phi on small inputs") {
    CHECK(phi(F(), F().from_int(0, 16)).is_zero_to_prec());
    CHECK(phi(F(), F().from_int(1, 16)).is_zero_to_prec());  // t^q - t vanishes
    // phi(2) = (8 - 2)/3 = 2
    CHECK(phi(F(), F().from_int(2, 16)).agrees_with(F().from_int(2, 15)));
}

TEST_CASE("phi precision cost is one digit") {
    const Scalar t = haar_sample_unit(3, 5, 20);
    CHECK(phi(F(), t).prec() == 19);
}

TEST_CASE("phi guards the ring contract") {
    const Scalar bad = Scalar::from_rational(3, mpq_class(1, 3), 10);
    CHECK_THROWS_AS(phi(F(), bad), NotIntegral);
    CHECK_NOTHROW(phi(F(), bad, /*allow_outside_r=*/true));
    CHECK_THROWS_AS(phi(F(), Scalar::zero(3, -2)), Indeterminate);
}

TEST_CASE("phi expands by exactly q inside residue discs") {
    for (long i = 0; i < 300; ++i) {
        const Scalar t1 = haar_sample_unit(3, 900 + 2 * i, 24);
        const Scalar d = haar_sample_unit(3, 901 + 2 * i, 24);
        if (d.is_zero_to_prec()) continue;
        const Scalar t2 = add(t1, mul(F().from_int(3, 26), d));
        const Norm in = sub(t1, t2).norm();
        const Norm out = sub(phi(F(), t1), phi(F(), t2)).norm();
        REQUIRE(in.is_exact());
        REQUIRE(out.is_exact());
        CHECK(out.vexp() == in.vexp() - 1);
    }
}

TEST_CASE("step on known points") {
    const Point o = step(F(), pt3(0, 0));
    CHECK(o.x.is_zero_to_prec());
    CHECK(o.y.is_zero_to_prec());

    const Point a = step(F(), pt3(1, 1));  // (a*1 + phi(1), 1) = (3, 1)
    CHECK(a.x.agrees_with(F().from_int(3, 20)));
    CHECK(a.y.agrees_with(F().from_int(1, 20)));

    const Point b = step(F(), pt3(2, 0));  // (phi(2), 2) = (2, 2)
    CHECK(b.x.agrees_with(F().from_int(2, 20)));
    CHECK(b.y.agrees_with(F().from_int(2, 20)));
}

TEST_CASE("step precision ledger") {
    const Point start{haar_sample_unit(3, 62, 50), haar_sample_unit(3, 63, 50)};
    const OrbitSegment seg = forward_orbit(F(), start, 10);
    CHECK(seg.at(10).x.prec() == 40);  // one digit per forward step
    for (long k = 0; k < 10; ++k) CHECK(seg.at(k + 1).prec() == 49 - k);
}

TEST_CASE("step_inv at the non-surjectivity witness") {
    const Point w = step_inv(F(), pt3(1, 0));
    CHECK(w.x.is_zero_to_prec());
    CHECK(w.y.norm().vexp() == -1);  // |1/a| = 3 > 1, so (1,0) has no preimage in R^2

    const Point o = step_inv(F(), pt3(0, 0));
    CHECK(o.x.is_zero_to_prec());
    CHECK(o.y.is_zero_to_prec());
}

TEST_CASE("inverse round trips") {
    for (long i = 0; i < 100; ++i) {
        const Point pt{haar_sample_unit(3, 7000 + 2 * i, 24),
                       haar_sample_unit(3, 7001 + 2 * i, 24)};
        CHECK(step_inv(F(), step(F(), pt)).agrees_with(pt));
        CHECK(step(F(), step_inv(F(), pt)).agrees_with(pt));
    }
}

TEST_CASE("forward invariance of the unit polydisc") {
    for (long i = 0; i < 1000; ++i) {
        const Point pt{haar_sample_unit(3, 40000 + 2 * i, 8),
                       haar_sample_unit(3, 40001 + 2 * i, 8)};
        CHECK(step(F(), pt).in_unit_polydisc() == 1);
    }
}

TEST_CASE("partition compatibility: T(D(s) x R) lands in R x D(s)") {
    for (long i = 0; i < 300; ++i) {
        const unsigned s = static_cast<unsigned>(i % 3);
        // x = s + 3u puts the point in D_{1/q}(s) x R
        const Scalar u = haar_sample_unit(3, 51000 + 2 * i, 16);
        const Scalar x = add(F().from_int(s, 18), mul(F().from_int(3, 18), u));
        const Point pt{x, haar_sample_unit(3, 51001 + 2 * i, 16)};
        const Point img = step(F(), pt);
        CHECK(img.in_unit_polydisc() == 1);
        CHECK(img.y.residue() == s);
    }
}

TEST_CASE("forward orbit of the origin") {
    const OrbitSegment seg = forward_orbit(F(), pt3(0, 0, 20), 10);
    CHECK(seg.points.size() == 11);
    for (long k = 0; k <= 10; ++k) {
        CHECK(seg.at(k).x.is_zero_to_prec());
        CHECK(seg.at(k).y.is_zero_to_prec());
    }
}

TEST_CASE("forward orbit consistency with single steps") {
    const Point start{haar_sample_unit(3, 81, 30), haar_sample_unit(3, 82, 30)};
    const OrbitSegment seg = forward_orbit(F(), start, 6);
    Point cur = start;
    for (long k = 1; k <= 6; ++k) {
        cur = step(F(), cur);
        CHECK(seg.at(k).agrees_with(cur));
    }
}

TEST_CASE("forward orbit exhausts the budget honestly") {
    const Point start{haar_sample_unit(3, 83, 5), haar_sample_unit(3, 84, 5)};
    CHECK_THROWS_AS(forward_orbit(F(), start, 10), PrecisionExhausted);
}

TEST_CASE("backward orbit certifies exits") {
    CHECK_THROWS_AS(backward_orbit(F(), pt3(1, 0), 1), ExitsUnitPolydisc);
    try {
        backward_orbit(F(), pt3(1, 0), 1);
    } catch (const ExitsUnitPolydisc& e) {
        CHECK(e.step == 1);
    }

    const OrbitSegment seg = backward_orbit(F(), pt3(0, 0, 44), 20);
    CHECK(seg.points.size() == 21);
    CHECK(seg.k_min == -20);
    for (long k = -20; k <= 0; ++k) CHECK(seg.at(k).x.is_zero_to_prec());
}

TEST_CASE("backward orbit precision ledger") {
    const Point start = pt3(0, 0, 41);
    const OrbitSegment seg = backward_orbit(F(), start, 10);
    // 1 + val(a) = 2 digits per backward step
    CHECK(seg.at(-10).prec() == 41 - 10 * 2);
}

TEST_CASE("basin classification") {
    const BasinResult inside = basin_entry_time(F(), pt3(2, 1), 10);
    CHECK(inside.status == BasinStatus::entered);
    CHECK(inside.steps == 0);

    // (0, 1/a) -> (1, 0) in one step
    const Point outside{Scalar::zero(3, 30),
                        Scalar::from_rational(3, mpq_class(1, 3), 30)};
    const BasinResult one = basin_entry_time(F(), outside, 10);
    CHECK(one.status == BasinStatus::entered);
    CHECK(one.steps == 1);

    // (1/3, 0): |x| blows up under phi; cross-check the classification by
    // explicit certified iteration.  Valuations fall like -3^k, so ten steps
    // need a budget near 3^10 digits.
    const Point esc{Scalar::from_rational(3, mpq_class(1, 3), 64), Scalar::zero(3, 64)};
    const BasinResult div_res = basin_entry_time(F(), esc, 12);
    CHECK(div_res.status == BasinStatus::diverging);

    const long deep = 110000;
    Point cur{Scalar::from_rational(3, mpq_class(1, 3), deep), Scalar::zero(3, deep)};
    long prev_vexp = 1;
    for (int k = 0; k <= 10; ++k) {
        CHECK(cur.in_unit_polydisc() == -1);
        const Norm nx = cur.x.norm();
        REQUIRE(nx.is_exact());
        if (k > 0) CHECK(nx.vexp() == 3 * prev_vexp - 1);  // |x'| = q |x|^q
        prev_vexp = nx.vexp();
        if (k < 10) cur = step(F(), cur);
    }
}

TEST_CASE("eigen norms are constant on the unit polydisc") {
    const auto [lo, hi] = eigen_norms(F(), pt3(0, 0));
    CHECK(lo == Norm::exact(2));   // |a|/q = 3^-2
    CHECK(hi == Norm::exact(-1));  // |b| = 3

    const auto [lo1, hi1] = eigen_norms(F(), pt3(1, 1));
    CHECK(lo1 == Norm::exact(2));
    CHECK(hi1 == Norm::exact(-1));

    for (long i = 0; i < 50; ++i) {
        const Point pt{haar_sample_unit(3, 60000 + 2 * i, 12),
                       haar_sample_unit(3, 60001 + 2 * i, 12)};
        const auto [l, h] = eigen_norms(F(), pt);
        CHECK(l == Norm::exact(2));
        CHECK(h == Norm::exact(-1));
    }

    // valuation of a shifts the slow eigenvalue: |a|/q = 3^-3 for val(a) = 2
    const Field F9(3, mpq_class(9), mpq_class(1, 3), 32);
    const auto [l9, h9] = eigen_norms(F9, pt3(2, 2));
    CHECK(l9 == Norm::exact(3));
    CHECK(h9 == Norm::exact(-1));

    CHECK_THROWS_AS(
        eigen_norms(F(), Point{Scalar::from_rational(3, mpq_class(1, 3), 8),
                               Scalar::zero(3, 8)}),
        NotInUnitPolydisc);
}
