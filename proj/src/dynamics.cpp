#include "padyn/dynamics.hpp"

#include <algorithm>
#include <array>

namespace padyn {

namespace {

// precision at which to materialize an exact parameter so that its own
// error term never binds when combined with v (matters for |v| > 1)
long param_prec_for(const Scalar& v, long extra) {
    return v.prec() + std::max<long>(0, -v.val_lower_bound()) + extra;
}

}  // namespace

Scalar phi(const Field& F, const Scalar& t, bool allow_outside_r) {
    if (!allow_outside_r) {
        const int integral = t.integrality();
        if (integral < 0) throw NotIntegral("phi argument has negative valuation");
        if (integral == 0)
            throw Indeterminate("phi argument integrality undecided at precision " +
                                std::to_string(t.prec()));
    }
    const Scalar tq = pow_u(t, F.q());
    const Scalar diff = sub(tq, t);
    return mul(F.b_at(param_prec_for(diff, 2)), diff);
}

Point step(const Field& F, const Point& pt) {
    const Scalar ay = mul(F.a_at(param_prec_for(pt.y, F.a_val() + 2)), pt.y);
    return Point{add(ay, phi(F, pt.x, /*allow_outside_r=*/true)), pt.x};
}

Point step_inv(const Field& F, const Point& pt) {
    const Scalar num = sub(pt.x, phi(F, pt.y, /*allow_outside_r=*/true));
    const Scalar yp = div(num, F.a_at(param_prec_for(num, 2 * F.a_val() + 2)));
    return Point{pt.y, yp};
}

OrbitSegment forward_orbit(const Field& F, const Point& start, long n) {
    OrbitSegment seg;
    seg.k_min = 0;
    seg.k_max = n;
    seg.points.reserve(static_cast<std::size_t>(n) + 1);
    seg.points.push_back(start);
    for (long k = 1; k <= n; ++k) {
        Point next = step(F, seg.points.back());
        if (next.prec() < 1)
            throw PrecisionExhausted("forward orbit precision exhausted", k);
        seg.points.push_back(std::move(next));
    }
    return seg;
}

OrbitSegment backward_orbit(const Field& F, const Point& start, long m) {
    if (m < 0) throw Error("backward_orbit needs m >= 0");
    std::vector<Point> rev;  // times 0, -1, ..., -m
    rev.reserve(static_cast<std::size_t>(m) + 1);
    rev.push_back(start);
    for (long k = 0; k <= m; ++k) {
        const Point& cur = rev.back();
        const int inside = cur.in_unit_polydisc();
        if (inside < 0) throw ExitsUnitPolydisc(static_cast<int>(k));
        if (inside == 0)
            throw Indeterminate("membership in R^2 undecided at backward step " +
                                std::to_string(k));
        if (k == m) break;
        Point prev = step_inv(F, cur);
        if (prev.prec() < 1)
            throw PrecisionExhausted("backward orbit precision exhausted", k + 1);
        rev.push_back(std::move(prev));
    }
    OrbitSegment seg;
    seg.k_min = -m;
    seg.k_max = 0;
    seg.points.assign(rev.rbegin(), rev.rend());
    return seg;
}

BasinResult basin_entry_time(const Field& F, const Point& pt, long budget) {
    const long streak_needed = std::max<long>(3, F.a_val() + 2);
    long streak = 0;
    bool have_prev = false;
    long prev_vexp = 0;  // sup-norm exponent of the previous iterate, if exact
    Point cur = pt;
    for (long n = 0; n <= budget; ++n) {
        const int inside = cur.in_unit_polydisc();
        if (inside > 0) return {BasinStatus::entered, n};
        if (inside == 0) return {BasinStatus::indeterminate, n};

        // count a divergence step only when |x| > 1 and strict sup-norm
        // growth are both certain; anything uncertain breaks the streak
        const Norm nx = cur.x.norm();
        const Norm np = cur.norm();
        const bool x_big = nx.is_exact() && nx.vexp() < 0;
        const bool grew = np.is_exact() && have_prev && np.vexp() < prev_vexp;
        if (x_big && grew) {
            if (++streak >= streak_needed) return {BasinStatus::diverging, n};
        } else {
            streak = 0;
        }
        have_prev = np.is_exact();
        if (have_prev) prev_vexp = np.vexp();

        if (n == budget) break;
        cur = step(F, cur);
        // iterates of escaping points grow doubly exponentially; bail out
        // before the representation does
        if (cur.x.scale() + cur.x.prec() > (1L << 22) ||
            cur.y.scale() + cur.y.prec() > (1L << 22))
            throw PrecisionExhausted("basin iterate grew beyond the sanity bound", n + 1);
    }
    return {BasinStatus::indeterminate, budget};
}

std::pair<Norm, Norm> eigen_norms(const Field& F, const Point& pt) {
    if (pt.in_unit_polydisc() <= 0)
        throw NotInUnitPolydisc("eigen_norms requires a point of R^2");

    // characteristic polynomial c2 L^2 + c1 L + c0,
    // c2 = 1, c1 = -b(q x^(q-1) - 1), c0 = -a
    const long prec = std::max<long>(4, pt.x.prec());
    const Scalar xq1 = pow_u(pt.x, F.q() - 1);
    const Scalar inner = sub(mul(F.from_int(static_cast<long>(F.q()), prec + 2), xq1),
                             F.from_int(1, prec + 2));
    const Scalar c1 = negate(mul(F.b_at(prec + 2), inner));

    const std::array<std::pair<long, long>, 3> pts = {{
        {0, F.a_val()},       // val(-a)
        {1, c1.valuation()},  // computed at the point; -1 everywhere on R^2
        {2, 0},               // monic
    }};

    // lower convex hull, then one (slope, span) per segment
    std::vector<std::pair<long, long>> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b if it is on or above the segment a..q
            if ((b.second - a.second) * (q.first - a.first) >=
                (q.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    if (hull.size() != 3)
        throw Error("Newton polygon does not have two segments at this point");
    const long slope1_num = hull[1].second - hull[0].second;  // over span 1
    const long slope2_num = hull[2].second - hull[1].second;
    if (slope1_num >= slope2_num)
        throw Error("Newton polygon slopes out of order");
    // root valuation = -slope; norms (|a|/q, q) = (q^-(val(a)+1), q^1)
    return {Norm::exact(-slope1_num), Norm::exact(-slope2_num)};
}

}  // namespace padyn
