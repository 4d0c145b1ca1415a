#include "padyn/measure.hpp"

#include <algorithm>
#include <cmath>

#include "padyn/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padyn {

Window bernoulli_window(const Field& F, std::uint64_t seed, int m, int n) {
    if (m < 0 || n < 0) throw Error("bernoulli_window needs m, n >= 0");
    DigitSampler rng(F.p(), seed);
    Window w;
    w.back.resize(static_cast<std::size_t>(m));
    w.fwd.resize(static_cast<std::size_t>(n) + 1);
    for (auto& s : w.back) s = static_cast<std::uint8_t>(rng.next());
    for (auto& s : w.fwd) s = static_cast<std::uint8_t>(rng.next());
    return w;
}

std::vector<std::uint8_t> forward_symbols(const Field& F, const Point& pt, long N) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(N));
    // scalar recurrence x_(k+1) = a x_(k-1) + phi(x_k) with x_(-1) = y
    Scalar prev = pt.y;
    Scalar cur = pt.x;
    for (long k = 0; k < N; ++k) {
        try {
            out.push_back(static_cast<std::uint8_t>(cur.residue()));
        } catch (const InsufficientPrecision&) {
            throw PrecisionExhausted("orbit symbol stream ran out of digits", k);
        }
        if (k + 1 == N) break;
        const long a_prec =
            prev.prec() + std::max<long>(0, -prev.val_lower_bound()) + F.a_val() + 2;
        const Scalar ax = mul(F.a_at(a_prec), prev);
        Scalar next = add(ax, phi(F, cur, /*allow_outside_r=*/true));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

namespace {

std::string word_str(const std::vector<std::uint8_t>& word) {
    std::string s;
    for (auto d : word)
        s.push_back(static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10));
    return s;
}

FrequencyReport make_report(const Field& F, const std::vector<std::uint8_t>& word,
                            long observed, long total) {
    FrequencyReport r;
    r.word = word_str(word);
    r.observed = observed;
    r.total = total;
    r.expected = mpq_class(1, pow_p(F.p(), static_cast<long>(word.size())));
    r.expected.canonicalize();
    const double e = r.expected.get_d();
    const double sigma = std::sqrt(e * (1.0 - e) * static_cast<double>(total));
    r.z_score = sigma > 0 ? (static_cast<double>(observed) - e * static_cast<double>(total)) / sigma
                          : 0.0;
    return r;
}

long count_word(const std::vector<std::uint8_t>& symbols,
                const std::vector<std::uint8_t>& word) {
    const std::size_t L = word.size();
    if (L == 0 || symbols.size() < L) return 0;
    long c = 0;
    for (std::size_t i = 0; i + L <= symbols.size(); ++i)
        if (std::equal(word.begin(), word.end(), symbols.begin() + static_cast<long>(i))) ++c;
    return c;
}

}  // namespace

std::vector<FrequencyReport> symbol_frequencies(const Field& F, const Point& pt, long N) {
    const auto symbols = forward_symbols(F, pt, N);
    std::vector<long> counts(F.p(), 0);
    for (auto s : symbols) ++counts[s];
    std::vector<FrequencyReport> out;
    out.reserve(F.p());
    for (unsigned s = 0; s < F.p(); ++s)
        out.push_back(make_report(F, {static_cast<std::uint8_t>(s)}, counts[s], N));
    return out;
}

FrequencyReport cylinder_frequency_of(const Field& F,
                                      const std::vector<std::uint8_t>& symbols,
                                      const std::vector<std::uint8_t>& word) {
    return make_report(F, word, count_word(symbols, word),
                       static_cast<long>(symbols.size()));
}

FrequencyReport cylinder_frequency(const Field& F, const Point& pt,
                                   const std::vector<std::uint8_t>& word, long N) {
    const auto symbols = forward_symbols(F, pt, N);
    return cylinder_frequency_of(F, symbols, word);
}

mpq_class mu_ball(const Field& F, const BallId& ball, int m, int n) {
    const auto hist = decoded_ball_histogram(F, m, n, ball.depth);
    long hits = 0;
    if (auto it = hist.find(ball); it != hist.end()) hits = it->second;
    mpq_class mu(hits, pow_p(F.p(), m + n + 1));
    mu.canonicalize();
    return mu;
}

namespace {

struct StartSpec {
    std::string name;
    Point pt;
};

std::vector<EquidistRow> rows_for_start(const Field& F, const StartSpec& start,
                                        const EquidistConfig& cfg) {
    const auto symbols = forward_symbols(F, start.pt, cfg.orbit_length);
    std::vector<EquidistRow> rows;
    for (int len : cfg.word_lengths) {
        std::vector<std::uint8_t> word(static_cast<std::size_t>(len), 0);
        // iterate all p^len words in lexicographic order
        while (true) {
            const FrequencyReport fr = cylinder_frequency_of(F, symbols, word);
            EquidistRow row;
            row.start = start.name;
            row.word = fr.word;
            row.observed = fr.observed;
            row.total = fr.total;
            row.expected = fr.expected;
            row.z_score = fr.z_score;
            row.pass = std::abs(fr.z_score) <= cfg.band_sigma;
            rows.push_back(std::move(row));

            int i = len - 1;
            while (i >= 0 && word[static_cast<std::size_t>(i)] + 1u == F.p()) {
                word[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++word[static_cast<std::size_t>(i)];
        }
    }
    return rows;
}

}  // namespace

EquidistReport equidistribution_report(const Field& F, const EquidistConfig& cfg) {
    if (cfg.word_lengths.empty()) throw Error("no word lengths configured");
    const long margin = 8 + *std::max_element(cfg.word_lengths.begin(), cfg.word_lengths.end());
    const long prec = cfg.orbit_length + margin;

    std::vector<StartSpec> starts;
    for (int i = 0; i < cfg.num_seeds; ++i) {
        const std::uint64_t sx = cfg.base_seed + 2 * static_cast<std::uint64_t>(i);
        const std::uint64_t sy = cfg.base_seed + 2 * static_cast<std::uint64_t>(i) + 1;
        starts.push_back({"seed:" + std::to_string(i),
                          Point{haar_sample_unit(F.p(), sx, prec),
                                haar_sample_unit(F.p(), sy, prec)}});
    }
    if (cfg.include_basin_start) {
        // (0, 1/a) sits outside R^2; ride basin_entry_time to the entry point
        mpq_class inv_a = 1 / F.a();
        const Point outside{Scalar::zero(F.p(), prec),
                            Scalar::from_rational(F.p(), inv_a, prec)};
        const BasinResult br = basin_entry_time(F, outside, 8);
        if (br.status != BasinStatus::entered)
            throw Error("basin start unexpectedly failed to enter R^2");
        Point entry = outside;
        for (long k = 0; k < br.steps; ++k) entry = step(F, entry);
        starts.push_back({"basin:(0,1/a)", std::move(entry)});
    }

    std::vector<std::vector<EquidistRow>> per_start(starts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(starts.size()); ++i)
        per_start[static_cast<std::size_t>(i)] =
            rows_for_start(F, starts[static_cast<std::size_t>(i)], cfg);

    EquidistReport rep;
    for (auto& rows : per_start)
        for (auto& r : rows) {
            rep.all_pass = rep.all_pass && r.pass;
            rep.rows.push_back(std::move(r));
        }
    return rep;
}

}  // namespace padyn
