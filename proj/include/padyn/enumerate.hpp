#pragma once

#include <map>

#include "padyn/ball.hpp"
#include "padyn/field.hpp"
#include "padyn/symbolic.hpp"

namespace padyn {

// Exhaustive decode of all p^(m+n+1) itinerary windows with m back and n+1
// forward symbols, histogrammed by the depth-j ball of the decoded point.
// Feasible only when the decode radius fits inside the ball radius
// (max(delta_n, eps_(m-1)) <= p^-j), which makes the histogram exactly the
// attractor's ball occupancy with the uniform cylinder weights: every
// infinite extension of a window decodes into the same ball.
//
// The parallel kernel partitions the flat window index across OpenMP threads
// and merges per-thread histograms (an associative, order-independent
// reduction, so results are deterministic).  The serial variant drives the
// curve-intersection decoder instead and is kept as the reference for tests
// and benchmarks.
std::map<BallId, long> decoded_ball_histogram(const Field& F, int m, int n, long depth);
std::map<BallId, long> decoded_ball_histogram_serial(const Field& F, int m, int n,
                                                     long depth);

// Throws DepthInsufficient unless max(delta_n, eps_(m-1)) <= p^-depth.
void check_depth_feasible(const Field& F, int m, int n, long depth);

// Smallest (m, n) satisfying the feasibility condition at the given depth.
std::pair<int, int> window_depths_for(const Field& F, long depth);

// Window with the given flat index: the first m base-p digits are the back
// symbols s_-1..s_-m, the next n+1 the forward symbols.
Window window_from_index(const Field& F, int m, int n, unsigned long long index);

}  // namespace padyn
