#pragma once

#include <set>
#include <vector>

#include "padyn/ball.hpp"
#include "padyn/enumerate.hpp"
#include "padyn/field.hpp"

namespace padyn {

// dim A_T = 1 + 1/(1 + log_q(1/|a|)) = 1 + 1/(1 + val(a)); always in (1, 2).
double theoretical_dimension(const Field& F);

// The set of depth-j balls meeting the attractor, by exhaustive window
// decoding at depths (m, n); exact, not sampled.  The serial variant is the
// reference implementation.
std::set<BallId> attractor_ball_ids(const Field& F, long depth, int m, int n);
std::set<BallId> attractor_ball_ids_serial(const Field& F, long depth, int m, int n);

struct CountEntry {
    long radius_vexp = 0;     // radius q^-radius_vexp
    long count = 0;           // N(r), exact
    int tube_index = -1;      // n when the radius is eps_n, else -1
    double paper_upper_bound = 0.0;  // q^n/eps_n at tube scales, 0 otherwise
    double mass_lower_bound = 0.0;   // (1/q^2) r^-alpha
};

struct CountSeries {
    unsigned p = 0;
    long a_val = 0;
    std::vector<CountEntry> entries;  // sorted by decreasing radius
};

// Exact covering counts at the uniform depths and at the anisotropic tube
// scales eps_n (the scale where the covering upper bound lives).  Window
// sizes come from window_depths_for; enumeration cost p^(m+n+1) is capped at
// p^window_cap_exponent.
CountSeries box_count(const Field& F, const std::vector<long>& depths,
                      const std::vector<int>& tube_indices, int window_cap_exponent = 10);

// Least-squares slope of log N(r) against log(1/r); needs >= 3 entries.
double dimension_estimate(const CountSeries& series);

// max over all enumerated balls at the given depths of mu_T(B)/diam(B)^alpha
// with alpha the theoretical dimension; the regularity constant is q^2.
double regularity_check(const Field& F, const std::vector<long>& depths,
                        int window_cap_exponent = 10);

// radius exponent of eps_n: |a|^n q^-(n+1) = q^-(val(a) n + n + 1)
long tube_radius_vexp(const Field& F, int n);

}  // namespace padyn
