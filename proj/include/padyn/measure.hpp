#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padyn/ball.hpp"
#include "padyn/field.hpp"
#include "padyn/symbolic.hpp"

namespace padyn {

// Observed frequency of a symbol word along a forward orbit, against the
// Bernoulli expectation q^-|word|.
struct FrequencyReport {
    std::string word;
    long observed = 0;
    long total = 0;
    mpq_class expected;
    double z_score = 0.0;

    double frequency() const { return static_cast<double>(observed) / static_cast<double>(total); }
};

// A window of i.i.d. uniform symbols (m back, n+1 forward), deterministic
// per seed.
Window bernoulli_window(const Field& F, std::uint64_t seed, int m, int n);

// Residues of the orbit x-coordinates: s_0..s_(N-1).  This is the streaming
// kernel behind the statistics below; the precision budget must cover N
// forward steps.
std::vector<std::uint8_t> forward_symbols(const Field& F, const Point& pt, long N);

// One report per symbol s in {0,...,p-1} over N orbit steps.
std::vector<FrequencyReport> symbol_frequencies(const Field& F, const Point& pt, long N);

// Sliding-window count of `word` as consecutive forward symbols, over total N.
FrequencyReport cylinder_frequency(const Field& F, const Point& pt,
                                   const std::vector<std::uint8_t>& word, long N);
FrequencyReport cylinder_frequency_of(const Field& F,
                                      const std::vector<std::uint8_t>& symbols,
                                      const std::vector<std::uint8_t>& word);

// Exact mu_T of the ball, computed by enumerating all windows at depth
// (m, n): (number of windows decoding into the ball) * q^-(m+n+1).  Needs
// the enumeration feasibility condition; throws DepthInsufficient otherwise.
mpq_class mu_ball(const Field& F, const BallId& ball, int m, int n);

struct EquidistConfig {
    int num_seeds = 1;
    std::uint64_t base_seed = 1;
    long orbit_length = 10000;
    std::vector<int> word_lengths = {1, 2};
    double band_sigma = 4.0;          // statistical band width in binomial sigmas
    bool include_basin_start = true;  // also run from (0, 1/a), entering R^2 via T
};

struct EquidistRow {
    std::string start;  // "seed:<k>" or "basin:(0,1/a)"
    std::string word;
    long observed = 0;
    long total = 0;
    mpq_class expected;
    double z_score = 0.0;
    bool pass = true;
};

struct EquidistReport {
    std::vector<EquidistRow> rows;
    bool all_pass = true;
};

// Birkhoff-average equidistribution experiment: runs the word statistics for
// Haar-random starts (and optionally the basin start found by
// basin_entry_time) and checks each frequency against its binomial band.
// Seeds run in parallel; rows come back in canonical (start, word) order.
EquidistReport equidistribution_report(const Field& F, const EquidistConfig& cfg);

}  // namespace padyn
