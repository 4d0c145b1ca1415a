#include "padyn/enumerate.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padyn {

void check_depth_feasible(const Field& F, int m, int n, long depth) {
    if (m < 1 || n < 0) throw DepthInsufficient("need m >= 1 back and n >= 0 forward");
    if (decode_radius(F, m, n).vexp() < depth)
        throw DepthInsufficient("decode radius max(delta_" + std::to_string(n) + ", eps_" +
                                std::to_string(m - 1) + ") exceeds ball radius p^-" +
                                std::to_string(depth));
}

std::pair<int, int> window_depths_for(const Field& F, long depth) {
    const int n = static_cast<int>(std::max<long>(0, depth - 1));  // delta_n <= p^-depth
    int m = 1;
    while (F.a_val() * (m - 1) + m < depth) ++m;  // eps_(m-1) <= p^-depth
    return {m, n};
}

Window window_from_index(const Field& F, int m, int n, unsigned long long index) {
    Window w;
    w.back.resize(static_cast<std::size_t>(m));
    w.fwd.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < m; ++i) {
        w.back[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % F.p());
        index /= F.p();
    }
    for (int i = 0; i <= n; ++i) {
        w.fwd[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % F.p());
        index /= F.p();
    }
    return w;
}

namespace {

unsigned long long window_count(const Field& F, int m, int n) {
    unsigned long long total = 1;
    for (int i = 0; i < m + n + 1; ++i) {
        if (total > (1ULL << 62) / F.p()) throw Error("window count overflows");
        total *= F.p();
    }
    return total;
}

long enumeration_prec(const Field& F, long depth) { return depth + F.a_val() + 2; }

}  // namespace

std::map<BallId, long> decoded_ball_histogram_serial(const Field& F, int m, int n,
                                                     long depth) {
    check_depth_feasible(F, m, n, depth);
    const unsigned long long total = window_count(F, m, n);
    const long prec = enumeration_prec(F, depth);
    std::map<BallId, long> hist;
    for (unsigned long long i = 0; i < total; ++i) {
        const Window w = window_from_index(F, m, n, i);
        const DecodedPoint d = decode_reference(F, w, prec);
        ++hist[BallId::of(d.point, depth)];
    }
    return hist;
}

std::map<BallId, long> decoded_ball_histogram(const Field& F, int m, int n, long depth) {
    check_depth_feasible(F, m, n, depth);
    const unsigned long long total = window_count(F, m, n);
    const long prec = enumeration_prec(F, depth);
    std::map<BallId, long> hist;

#ifdef _OPENMP
#pragma omp parallel
    {
        std::map<BallId, long> local;
#pragma omp for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(total); ++i) {
            const Window w = window_from_index(F, m, n, static_cast<unsigned long long>(i));
            const DecodedPoint d = decode(F, w, prec);
            ++local[BallId::of(d.point, depth)];
        }
#pragma omp critical(padyn_hist_merge)
        for (const auto& [ball, cnt] : local) hist[ball] += cnt;
    }
#else
    for (unsigned long long i = 0; i < total; ++i) {
        const Window w = window_from_index(F, m, n, i);
        const DecodedPoint d = decode(F, w, prec);
        ++hist[BallId::of(d.point, depth)];
    }
#endif
    return hist;
}

}  // namespace padyn
