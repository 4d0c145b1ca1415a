#include "padyn/dimension.hpp"

#include <algorithm>
#include <cmath>

namespace padyn {

double theoretical_dimension(const Field& F) {
    return 1.0 + 1.0 / (1.0 + static_cast<double>(F.a_val()));
}

long tube_radius_vexp(const Field& F, int n) { return F.a_val() * n + n + 1; }

std::set<BallId> attractor_ball_ids(const Field& F, long depth, int m, int n) {
    std::set<BallId> out;
    for (const auto& [ball, cnt] : decoded_ball_histogram(F, m, n, depth)) out.insert(ball);
    return out;
}

std::set<BallId> attractor_ball_ids_serial(const Field& F, long depth, int m, int n) {
    std::set<BallId> out;
    for (const auto& [ball, cnt] : decoded_ball_histogram_serial(F, m, n, depth))
        out.insert(ball);
    return out;
}

namespace {

CountEntry count_at(const Field& F, long radius_vexp, int tube_index, int cap_exp) {
    const auto [m, n] = window_depths_for(F, radius_vexp);
    if (m + n + 1 > cap_exp)
        throw DepthInsufficient("window count p^" + std::to_string(m + n + 1) +
                                " exceeds the cap p^" + std::to_string(cap_exp) +
                                " at radius exponent " + std::to_string(radius_vexp));
    CountEntry e;
    e.radius_vexp = radius_vexp;
    e.count = static_cast<long>(attractor_ball_ids(F, radius_vexp, m, n).size());
    e.tube_index = tube_index;
    const double q = static_cast<double>(F.p());
    if (tube_index >= 0)
        e.paper_upper_bound = std::pow(q, tube_index) * std::pow(q, radius_vexp);
    const double alpha = theoretical_dimension(F);
    e.mass_lower_bound = std::pow(q, -2.0) * std::pow(q, alpha * static_cast<double>(radius_vexp));
    return e;
}

}  // namespace

CountSeries box_count(const Field& F, const std::vector<long>& depths,
                      const std::vector<int>& tube_indices, int window_cap_exponent) {
    CountSeries series;
    series.p = F.p();
    series.a_val = F.a_val();
    std::vector<std::pair<long, int>> radii;  // (vexp, tube index or -1)
    for (long j : depths) {
        if (j < 1) throw Error("depths must be >= 1");
        radii.emplace_back(j, -1);
    }
    for (int n : tube_indices) {
        if (n < 0) throw Error("tube indices must be >= 0");
        radii.emplace_back(tube_radius_vexp(F, n), n);
    }
    // one entry per radius; when a uniform depth coincides with a tube scale,
    // keep the tube-flagged entry so the cover bound is emitted
    std::sort(radii.begin(), radii.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    radii.erase(std::unique(radii.begin(), radii.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                radii.end());
    for (const auto& [vexp, tube] : radii)
        series.entries.push_back(count_at(F, vexp, tube, window_cap_exponent));
    return series;
}

double dimension_estimate(const CountSeries& series) {
    if (series.entries.size() < 3)
        throw DegenerateSeries("need at least three radii for a slope");
    // log(1/r) = vexp * log q, log N; least squares
    const double logq = std::log(static_cast<double>(series.p));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(series.entries.size());
    for (const auto& e : series.entries) {
        const double x = static_cast<double>(e.radius_vexp) * logq;
        const double y = std::log(static_cast<double>(e.count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0) throw DegenerateSeries("radii are not distinct");
    return (n * sxy - sx * sy) / denom;
}

double regularity_check(const Field& F, const std::vector<long>& depths,
                        int window_cap_exponent) {
    const double alpha = theoretical_dimension(F);
    const double q = static_cast<double>(F.p());
    double worst = 0.0;
    for (long j : depths) {
        const auto [m, n] = window_depths_for(F, j);
        if (m + n + 1 > window_cap_exponent)
            throw DepthInsufficient("window cap exceeded at depth " + std::to_string(j));
        const auto hist = decoded_ball_histogram(F, m, n, j);
        const double weight = std::pow(q, -static_cast<double>(m + n + 1));
        const double diam_alpha = std::pow(q, -alpha * static_cast<double>(j));
        for (const auto& [ball, cnt] : hist)
            worst = std::max(worst, static_cast<double>(cnt) * weight / diam_alpha);
    }
    return worst;
}

}  // namespace padyn
