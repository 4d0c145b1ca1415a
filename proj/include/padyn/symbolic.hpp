#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padyn/dynamics.hpp"
#include "padyn/field.hpp"
#include "padyn/point.hpp"

namespace padyn {

// A finite window of a bisequence over the residue alphabet {0,...,p-1}:
// back holds s_-1, s_-2, ..., s_-m (most recent first), fwd holds s_0..s_n.
// Text form puts the back part oldest-first before a dot: "21.0102" has
// s_-2 = 2, s_-1 = 1, s_0 = 0, s_1 = 1, s_2 = 0, s_3 = 2.
struct Window {
    std::vector<std::uint8_t> back;
    std::vector<std::uint8_t> fwd;

    long m() const { return static_cast<long>(back.size()); }
    long n() const { return static_cast<long>(fwd.size()) - 1; }

    std::uint8_t at(long k) const {
        return k >= 0 ? fwd.at(static_cast<std::size_t>(k))
                      : back.at(static_cast<std::size_t>(-k - 1));
    }

    bool operator==(const Window&) const = default;
};

Window parse_window(unsigned p, const std::string& text);
std::string format_window(const Window& w);

// Tube scales of the coding construction: delta_n = q^-(n+1) for the
// vertical tubes, eps_m = |a|^m q^-(m+1) for the horizontal ones.  Both are
// exact powers of q.
std::pair<Norm, Norm> tube_radii(const Field& F, long m, long n);

// Ball radius certified for a decode of a window with m back symbols and
// n+1 forward symbols: max(delta_n, eps_(m-1)).  The horizontal curve built
// from m symbols is the level-(m-1) curve of the recursion, so its tube
// radius is eps_(m-1); any infinite extension of the window decodes within
// this radius.
Norm decode_radius(const Field& F, long m, long n);

// The unique x in the residue disc of s with phi(x) + drag = t_next, found
// by the contraction x -> x - (t_next - phi(x) - drag)/b.  Each iteration
// gains at least one digit.  t_next, drag must lie in R.
Scalar local_digit_solve(const Field& F, const Scalar& t_next, const Scalar& drag,
                         unsigned s, long prec);

// Pointwise evaluation of the trajectory curves of the coding argument:
// vertical curves f carry forward itineraries (level j solves the
// contraction against the level j-1 curve; the deepest level is the constant
// oldest symbol), horizontal curves g carry backward itineraries.  Both are
// (1/q)-Lipschitz, and inner evaluations are memoized by residue class,
// which the Lipschitz bound makes exact at the working precision.
Scalar vertical_curve_eval(const Field& F, const std::vector<std::uint8_t>& fwd,
                           const Scalar& t, long prec, int recursion_budget = 64);
Scalar horizontal_curve_eval(const Field& F, const std::vector<std::uint8_t>& back,
                             const Scalar& t, long prec, int recursion_budget = 64);

struct DecodedPoint {
    Point point;
    Norm radius;  // decode_radius(m, n)
};

// The conjugacy omega at finite depth: the intersection of the vertical
// curve of the forward symbols with the horizontal curve of the backward
// symbols.  decode() solves the equivalent cut orbit recurrence
//     x_(k+1) = a x_(k-1) + phi(x_k),  x_k = s_k (mod p),
// with exact boundary symbols, by Gauss-Seidel sweeps of local_digit_solve;
// decode_reference() intersects the two curve evaluators by alternating
// fixed-point iteration.  Both compute the same point (the intersection is
// unique); the reference path is kept as the testing oracle.  Results are
// post-verified by an encode round trip.  Windows need both parts nonempty.
DecodedPoint decode(const Field& F, const Window& w, long prec);
DecodedPoint decode_reference(const Field& F, const Window& w, long prec);

// Forward symbols s_0..s_n of a point of R^2: residues of the x-coordinates
// along the forward orbit.
std::vector<std::uint8_t> encode_forward(const Field& F, const Point& pt, long n);

// Backward symbols s_-1..s_-m: residues of the y-coordinates of
// T^0, T^-1, ..., T^-(m-1).  Throws ExitsUnitPolydisc when the point is
// provably outside T^(m-1)(R^2).
std::vector<std::uint8_t> encode_backward(const Field& F, const Point& pt, long m);

// One step of the shift: back grows by s_0, fwd shrinks.  Needs n >= 1.
Window shift(const Window& w);

// || T(decode(w)) - decode(shift(w)) ||, the finite-depth conjugacy defect.
// Contract: at most max(decode_radius(w), decode_radius(shift(w))).
Norm conjugacy_residual(const Field& F, const Window& w, long prec);

// The point with the same forward itinerary as pt (computed to fwd_depth)
// and the prescribed backward symbols; lies on the same vertical curve, so
// its forward orbit shadows pt's at rate eps.
Point stable_companion(const Field& F, const Point& pt,
                       const std::vector<std::uint8_t>& new_back, long fwd_depth,
                       long prec);

}  // namespace padyn
