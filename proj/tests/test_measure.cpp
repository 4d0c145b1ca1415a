#include <doctest.h>

#include <cmath>
#include <map>

#include "padyn/enumerate.hpp"
#include "padyn/measure.hpp"

using namespace padyn;

namespace {

const Field& F() {
    static Field f = Field::canonical(64);
    return f;
}

}  // namespace

TEST_CASE("bernoulli windows are deterministic with uniform symbols") {
    const Window a = bernoulli_window(F(), 9, 4, 5);
    const Window b = bernoulli_window(F(), 9, 4, 5);
    CHECK(a == b);
    CHECK(a.m() == 4);
    CHECK(a.n() == 5);

    long counts[3] = {0, 0, 0};
    long total = 0;
    for (long s = 0; s < 2000; ++s) {
        const Window w = bernoulli_window(F(), 5000 + s, 2, 2);
        for (long k = -w.m(); k <= w.n(); ++k) {
            ++counts[w.at(k)];
            ++total;
        }
    }
    const double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / static_cast<double>(total));
    for (long c : counts)
        CHECK(std::abs(static_cast<double>(c) / static_cast<double>(total) - 1.0 / 3) <=
              4 * sigma);
}

TEST_CASE("symbol frequencies of the fixed orbit") {
    const Point origin{Scalar::zero(3, 128), Scalar::zero(3, 128)};
    const auto reports = symbol_frequencies(F(), origin, 100);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].observed == 100);
    CHECK(reports[1].observed == 0);
    CHECK(reports[2].observed == 0);
    CHECK(reports[0].expected == mpq_class(1, 3));
    CHECK(reports[0].z_score > 4.0);  // the all-zero orbit is not generic
}

TEST_CASE("periodic decoded point has periodic frequencies") {
    // forward itinerary alternating 0,1 with period 2; the window must carry
    // as many forward symbols as the frequency run will read
    Window w;
    for (int i = 0; i < 8; ++i) w.back.push_back(static_cast<std::uint8_t>(i % 2));
    for (int i = 0; i < 64; ++i) w.fwd.push_back(static_cast<std::uint8_t>(i % 2));
    const Point pt = decode(F(), w, 80).point;
    const auto reports = symbol_frequencies(F(), pt, 60);
    CHECK(reports[0].observed == 30);
    CHECK(reports[1].observed == 30);
    CHECK(reports[2].observed == 0);
}

TEST_CASE("cylinder counts") {
    const Point origin{Scalar::zero(3, 64), Scalar::zero(3, 64)};
    const auto r = cylinder_frequency(F(), origin, {0}, 50);
    CHECK(r.observed == 50);
    CHECK(r.total == 50);

    const auto r2 = cylinder_frequency(F(), origin, {0, 0}, 50);
    CHECK(r2.observed == 49);  // sliding windows
    CHECK(r2.expected == mpq_class(1, 9));
}

TEST_CASE("cylinder frequencies of one length sum to 1 - O(L/N)") {
    const Point pt{haar_sample_unit(3, 777, 600), haar_sample_unit(3, 778, 600)};
    const long N = 500;
    const auto symbols = forward_symbols(F(), pt, N);
    for (int L = 1; L <= 3; ++L) {
        long sum = 0;
        std::vector<std::uint8_t> word(static_cast<std::size_t>(L), 0);
        for (long w = 0; w < pow_p(3, L).get_si(); ++w) {
            long v = w;
            for (auto& d : word) {
                d = static_cast<std::uint8_t>(v % 3);
                v /= 3;
            }
            sum += cylinder_frequency_of(F(), symbols, word).observed;
        }
        CHECK(sum == N - L + 1);
    }
}

TEST_CASE("shift invariance proxy") {
    const Point pt{haar_sample_unit(3, 881, 300), haar_sample_unit(3, 882, 300)};
    const long N = 200;
    const std::vector<std::uint8_t> word{1, 2};
    const auto a = cylinder_frequency(F(), pt, word, N);
    const auto b = cylinder_frequency(F(), step(F(), pt), word, N);
    CHECK(std::abs(a.frequency() - b.frequency()) <= 2.0 / static_cast<double>(N));
}

TEST_CASE("mu_ball exact values") {
    // whole polydisc
    const BallId whole{0, 0, 0};
    CHECK(mu_ball(F(), whole, 1, 0) == mpq_class(1));

    // depth-1 balls all carry 1/9
    mpq_class total(0);
    for (long xr = 0; xr < 3; ++xr)
        for (long yr = 0; yr < 3; ++yr) {
            const BallId ball{xr, yr, 1};
            const mpq_class mu = mu_ball(F(), ball, 1, 0);
            CHECK(mu == mpq_class(1, 9));
            total += mu;
        }
    CHECK(total == 1);

    CHECK_THROWS_AS(mu_ball(F(), BallId{0, 0, 3}, 1, 0), DepthInsufficient);
}

TEST_CASE("mu_ball is additive over children") {
    const auto [m1, n1] = window_depths_for(F(), 1);
    const auto [m2, n2] = window_depths_for(F(), 2);
    const auto parents = decoded_ball_histogram(F(), m1, n1, 1);
    const auto children = decoded_ball_histogram(F(), m2, n2, 2);
    for (const auto& [ball, cnt] : parents) {
        mpq_class mu_parent = mu_ball(F(), ball, m1, n1);
        mpq_class mu_kids(0);
        for (const auto& [child, ccnt] : children)
            if (child.parent(3) == ball) mu_kids += mu_ball(F(), child, m2, n2);
        CHECK(mu_parent == mu_kids);
    }
}

TEST_CASE("stable companions of the fixed point are not generic") {
    const Point fixed{Scalar::zero(3, 80), Scalar::zero(3, 80)};
    const Point comp = stable_companion(F(), fixed, {1, 0, 0, 0}, 60, 70);
    const auto reports = symbol_frequencies(F(), comp, 50);
    CHECK(reports[0].observed == 50);  // symbol-0 frequency 1
}

TEST_CASE("equidistribution report") {
    EquidistConfig cfg;
    cfg.num_seeds = 2;
    cfg.base_seed = 71;
    cfg.orbit_length = 1500;
    cfg.word_lengths = {1, 2, 3};
    cfg.band_sigma = 5.0;
    cfg.include_basin_start = true;
    const EquidistReport rep = equidistribution_report(F(), cfg);
    // 3 starts (2 seeds + basin), 3 + 9 + 27 words each
    CHECK(rep.rows.size() == 3 * 39);
    CHECK(rep.all_pass);
    CHECK(rep.rows.front().start == "seed:0");
    CHECK(rep.rows.back().start == "basin:(0,1/a)");

    // determinism: identical config gives identical rows
    const EquidistReport rep2 = equidistribution_report(F(), cfg);
    REQUIRE(rep2.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rep.rows[i].observed == rep2.rows[i].observed);
        CHECK(rep.rows[i].word == rep2.rows[i].word);
    }
}
