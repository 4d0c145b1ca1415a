#pragma once

#include <utility>
#include <vector>

#include "padyn/field.hpp"
#include "padyn/point.hpp"

namespace padyn {

// phi(t) = b(t^q - t).  Maps the ring of integers into itself and expands
// distances inside a residue disc by exactly q.  Costs one digit of absolute
// precision.  With allow_outside_r the R-contract is not enforced (used by
// basin experiments); otherwise a non-integral t raises NotIntegral (or
// Indeterminate when integrality cannot be decided).
Scalar phi(const Field& F, const Scalar& t, bool allow_outside_r = false);

// T(x,y) = (a y + phi(x), x).  Defined on all of K^2; maps R^2 into R^2.
Point step(const Field& F, const Point& pt);

// T^-1(x,y) = (y, (x - phi(y))/a).
Point step_inv(const Field& F, const Point& pt);

// A finite stretch of an orbit, points for times k in [k_min, k_max].
// Forward stepping costs exactly 1 digit of precision per step, backward
// stepping exactly 1 + val(a).
struct OrbitSegment {
    long k_min = 0;
    long k_max = 0;
    std::vector<Point> points;  // index i holds time k_min + i

    const Point& at(long k) const { return points.at(static_cast<std::size_t>(k - k_min)); }
};

// Times 0..n.  Throws PrecisionExhausted (with the failing index) when the
// budget cannot sustain n steps at >= 1 digit of output precision.
OrbitSegment forward_orbit(const Field& F, const Point& start, long n);

// Times -m..0, every point certified inside R^2.  Throws ExitsUnitPolydisc(k)
// when the k-th backward iterate provably leaves R^2 (certifying that the
// start is not in T^k(R^2)), Indeterminate when membership cannot be decided
// at the available precision.
OrbitSegment backward_orbit(const Field& F, const Point& start, long m);

enum class BasinStatus { entered, diverging, indeterminate };

struct BasinResult {
    BasinStatus status;
    long steps;  // entry time for entered; steps examined otherwise
};

// Classifies whether some forward iterate of pt lands in R^2 within the
// budget.  `diverging` is a heuristic classification (sup-norm strictly
// increased for max(3, val(a)+2) consecutive steps while |x| > 1), not a
// proof; `indeterminate` is an honest answer.
BasinResult basin_entry_time(const Field& F, const Point& pt, long budget);

// Norms of the Jacobian eigenvalues at a point of R^2, read off the Newton
// polygon of lambda^2 - b(q x^(q-1) - 1) lambda - a.  The polygon always has
// two unit-length segments; returns (|a|/q, q).
std::pair<Norm, Norm> eigen_norms(const Field& F, const Point& pt);

}  // namespace padyn
