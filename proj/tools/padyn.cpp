// Command-line front end: reproducible experiments over the plane
// automorphism family T(x,y) = (ay + b(x^q - x), x) on Q_p^2.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "padyn/acceptance.hpp"
#include "padyn/dimension.hpp"
#include "padyn/dynamics.hpp"
#include "padyn/io.hpp"
#include "padyn/measure.hpp"
#include "padyn/symbolic.hpp"

using namespace padyn;

namespace {

struct GlobalOpts {
    unsigned p = 3;
    std::string a = "3";
    std::string b = "1/3";
    long precision = 64;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

// exact rational value of an integer / fraction / digit-string literal
mpq_class parse_rational_literal(unsigned p, const std::string& text) {
    const Scalar s = parse_literal(p, text, 8);
    mpq_class r(s.coeff(), pow_p(p, s.scale()));
    r.canonicalize();
    return r;
}

Field make_field(const GlobalOpts& g) {
    try {
        return Field(g.p, parse_rational_literal(g.p, g.a), parse_rational_literal(g.p, g.b),
                     g.precision);
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("bad parameters: ") + e.what());
    }
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(g.out, std::ios::binary);
    if (!os) throw ConfigInvalid("cannot open output file " + g.out);
    os << text;
}

std::vector<long> parse_range_list(const std::string& text) {
    auto num = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const long v = std::stol(s, &used);
            if (used != s.size()) throw ConfigInvalid("bad number in list: " + s);
            return v;
        } catch (const std::logic_error&) {
            throw ConfigInvalid("bad number in list: '" + s + "' (in \"" + text + "\")");
        }
    };
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const long lo = num(item.substr(0, dots));
            const long hi = num(item.substr(dots + 2));
            for (long v = lo; v <= hi; ++v) out.push_back(v);
        } else if (!item.empty()) {
            out.push_back(num(item));
        }
        pos = comma + 1;
    }
    return out;
}

Point parse_point(const Field& F, const std::string& x, const std::string& y, long prec) {
    return {parse_literal(F.p(), x, prec), parse_literal(F.p(), y, prec)};
}

int cmd_orbit(const GlobalOpts& g, const std::string& x, const std::string& y, long steps,
              bool backward) {
    const Field F = make_field(g);
    const Point start = parse_point(F, x, y, g.precision);
    const OrbitSegment seg =
        backward ? backward_orbit(F, start, steps) : forward_orbit(F, start, steps);
    if (g.format == "json") {
        emit(g, orbit_to_json_lines(seg));
    } else {
        std::ostringstream os;
        os << "k,x,y,prec\n";
        for (long k = seg.k_min; k <= seg.k_max; ++k)
            os << k << "," << seg.at(k).x.str() << "," << seg.at(k).y.str() << ","
               << seg.at(k).prec() << "\n";
        emit(g, os.str());
    }
    return 0;
}

int cmd_encode(const GlobalOpts& g, const std::string& x, const std::string& y, long back,
               long fwd) {
    const Field F = make_field(g);
    const Point pt = parse_point(F, x, y, g.precision);
    Window w;
    w.fwd = encode_forward(F, pt, fwd);
    if (back > 0) w.back = encode_backward(F, pt, back);
    if (g.format == "json") {
        nlohmann::json j{{"window", format_window(w)}};
        emit(g, j.dump() + "\n");
    } else {
        emit(g, format_window(w) + "\n");
    }
    return 0;
}

int cmd_decode(const GlobalOpts& g, const std::string& window) {
    const Field F = make_field(g);
    const Window w = parse_window(F.p(), window);
    const DecodedPoint d = decode(F, w, g.precision);
    if (g.format == "json") {
        nlohmann::json j = point_to_json(d.point);
        j["radius"] = d.radius.str(F.q());
        j["window"] = format_window(w);
        emit(g, j.dump() + "\n");
    } else {
        std::ostringstream os;
        os << "x,y,radius\n"
           << d.point.x.str() << "," << d.point.y.str() << "," << d.radius.str(F.q()) << "\n";
        emit(g, os.str());
    }
    return 0;
}

int cmd_check_conjugacy(const GlobalOpts& g, long windows, long back, long fwd, long prec,
                        bool acceptance) {
    const Field F = make_field(g);
    const long bound =
        std::min(decode_radius(F, back, fwd).vexp(),
                 decode_radius(F, back + 1, fwd - 1).vexp());
    std::ostringstream os;
    os << "window,residual,bound,pass\n";
    long worst = 1 << 20;
    bool all_ok = true;
    for (long i = 0; i < windows; ++i) {
        const Window w =
            bernoulli_window(F, g.seed + static_cast<std::uint64_t>(i),
                             static_cast<int>(back), static_cast<int>(fwd));
        const Norm r = conjugacy_residual(F, w, prec);
        const bool ok = r.is_zero() || r.vexp() >= bound;
        all_ok = all_ok && ok;
        if (!r.is_zero()) worst = std::min(worst, r.vexp());
        os << format_window(w) << "," << r.str(F.q()) << "," << F.q() << "^-" << bound << ","
           << (ok ? 1 : 0) << "\n";
    }
    emit(g, os.str());
    std::cerr << "max residual " << F.q() << "^-" << worst << ", bound " << F.q() << "^-"
              << bound << (all_ok ? " (all pass)" : " (FAILURES)") << "\n";
    return acceptance && !all_ok ? 1 : 0;
}

int cmd_equidistribution(const GlobalOpts& g, int seeds, long length,
                         const std::string& words, double sigma, bool no_basin,
                         bool acceptance) {
    const Field F = make_field(g);
    EquidistConfig cfg;
    cfg.num_seeds = seeds;
    cfg.base_seed = g.seed;
    cfg.orbit_length = length;
    cfg.word_lengths.clear();
    for (long L : parse_range_list(words)) cfg.word_lengths.push_back(static_cast<int>(L));
    cfg.band_sigma = sigma;
    cfg.include_basin_start = !no_basin;
    const EquidistReport rep = equidistribution_report(F, cfg);
    emit(g, g.format == "json" ? equidist_to_json(rep).dump(2) + "\n" : equidist_to_csv(rep));
    std::cerr << (rep.all_pass ? "all bands pass" : "band FAILURES") << "\n";
    return acceptance && !rep.all_pass ? 1 : 0;
}

int cmd_dimension(const GlobalOpts& g, const std::string& depths, const std::string& tubes,
                  int cap, bool acceptance) {
    const Field F = make_field(g);
    std::vector<int> tube_idx;
    for (long t : parse_range_list(tubes)) tube_idx.push_back(static_cast<int>(t));
    const CountSeries series = box_count(F, parse_range_list(depths), tube_idx, cap);
    const double slope = dimension_estimate(series);
    const double want = theoretical_dimension(F);
    if (g.format == "json") {
        nlohmann::json j = count_series_to_json(series);
        j["slope"] = slope;
        j["theoretical"] = want;
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << count_series_to_csv(series);
        os << "# slope," << fmt_double(slope) << "\n# theoretical," << fmt_double(want) << "\n";
        emit(g, os.str());
    }
    std::cerr << "slope " << slope << " vs theoretical " << want << "\n";
    return acceptance && std::abs(slope - want) > 0.1 + 1e-9 ? 1 : 0;
}

int cmd_embed(const GlobalOpts& g, long count, long back, long fwd, long digits) {
    const Field F = make_field(g);
    const long prec = std::max(g.precision, digits + 4);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        const Window w =
            bernoulli_window(F, g.seed + static_cast<std::uint64_t>(i),
                             static_cast<int>(back), static_cast<int>(fwd));
        pts.push_back(embed_real(decode(F, w, prec).point, digits));
    }
    emit(g, g.format == "svg" ? scatter_svg(pts) : scatter_csv(pts));
    return 0;
}

int cmd_acceptance(const GlobalOpts& g, const std::string& criteria) {
    (void)g;
    std::vector<int> ids;
    for (long id : parse_range_list(criteria)) ids.push_back(static_cast<int>(id));
    int failures = 0;
    for (const auto& r : run_acceptance(ids)) {
        std::cout << format_criterion(r) << "\n";
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic plane automorphisms: attractor coding, orbit statistics, dimension"};
    app.fallthrough();  // global options may follow the subcommand
    app.set_config("--config", "", "declarative run configuration (flags win)");

    GlobalOpts g;
    app.add_option("--p", g.p, "prime p (residue field order q = p)")->capture_default_str();
    app.add_option("--a", g.a, "parameter a, 0 < |a| < 1")->capture_default_str();
    app.add_option("--b", g.b, "parameter b, |b| = q")->capture_default_str();
    app.add_option("--precision", g.precision, "default working precision in digits")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "base seed for all sampling")->capture_default_str();
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    app.require_subcommand(1);

    // orbit
    auto* orbit = app.add_subcommand("orbit", "forward or backward orbit dump");
    std::string ox = "0", oy = "0";
    long osteps = 10;
    bool obackward = false;
    orbit->add_option("--x", ox, "start x (p-adic literal)")->capture_default_str();
    orbit->add_option("--y", oy, "start y")->capture_default_str();
    orbit->add_option("--steps", osteps, "number of steps")->capture_default_str();
    orbit->add_flag("--backward", obackward, "iterate T^-1 with membership certificates");

    // encode
    auto* encode = app.add_subcommand("encode", "itinerary window of a point");
    std::string ex = "0", ey = "0";
    long eback = 4, efwd = 4;
    encode->add_option("--x", ex)->capture_default_str();
    encode->add_option("--y", ey)->capture_default_str();
    encode->add_option("--back", eback, "backward depth m")->capture_default_str();
    encode->add_option("--fwd", efwd, "forward depth n")->capture_default_str();

    // decode
    auto* dec = app.add_subcommand("decode", "point and radius of an itinerary window");
    std::string dwindow;
    dec->add_option("--window", dwindow, "window text, e.g. 21.0102")->required();

    // check-conjugacy
    auto* conj = app.add_subcommand("check-conjugacy", "residual sweep over random windows");
    long cwindows = 500, cback = 6, cfwd = 6, cprec = 20;
    bool cacc = false;
    conj->add_option("--windows", cwindows)->capture_default_str();
    conj->add_option("--back", cback)->capture_default_str();
    conj->add_option("--fwd", cfwd)->capture_default_str();
    conj->add_option("--decode-precision", cprec)->capture_default_str();
    conj->add_flag("--acceptance", cacc, "nonzero exit if any residual exceeds its bound");

    // equidistribution
    auto* equi = app.add_subcommand("equidistribution", "orbit word statistics vs Bernoulli");
    int qseeds = 1;
    long qlen = 10000;
    std::string qwords = "1,2";
    double qsigma = 4.0;
    bool qnobasin = false, qacc = false;
    equi->add_option("--seeds", qseeds)->capture_default_str();
    equi->add_option("--length", qlen, "orbit length N")->capture_default_str();
    equi->add_option("--words", qwords, "word lengths, e.g. 1,2,3")->capture_default_str();
    equi->add_option("--sigma", qsigma, "band width in binomial sigmas")->capture_default_str();
    equi->add_flag("--no-basin-start", qnobasin, "skip the (0, 1/a) basin start");
    equi->add_flag("--acceptance", qacc, "nonzero exit if any band fails");

    // dimension
    auto* dim = app.add_subcommand("dimension", "exact covering counts and dimension slope");
    std::string ddepths = "1..4", dtubes = "0,1";
    int dcap = 10;
    bool dacc = false;
    dim->add_option("--depths", ddepths, "uniform depths, e.g. 1..4")->capture_default_str();
    dim->add_option("--tubes", dtubes, "tube-scale indices n (radius eps_n)")
        ->capture_default_str();
    dim->add_option("--window-cap", dcap, "enumeration cap exponent: at most p^cap windows")
        ->capture_default_str();
    dim->add_flag("--acceptance", dacc, "nonzero exit if the slope is off by more than 0.1");

    // embed
    auto* emb = app.add_subcommand("embed", "real-embedding scatter of decoded points");
    long mcount = 500, mback = 6, mfwd = 6, mdigits = 6;
    emb->add_option("--count", mcount)->capture_default_str();
    emb->add_option("--back", mback)->capture_default_str();
    emb->add_option("--fwd", mfwd)->capture_default_str();
    emb->add_option("--digits", mdigits, "embedding depth d")->capture_default_str();

    // acceptance
    auto* acc = app.add_subcommand("acceptance", "run the verification criteria");
    std::string acriteria = "1..9";
    acc->add_option("--criteria", acriteria, "criterion numbers, e.g. 1..4 or 2,7")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (orbit->parsed()) return cmd_orbit(g, ox, oy, osteps, obackward);
        if (encode->parsed()) return cmd_encode(g, ex, ey, eback, efwd);
        if (dec->parsed()) return cmd_decode(g, dwindow);
        if (conj->parsed())
            return cmd_check_conjugacy(g, cwindows, cback, cfwd, cprec, cacc);
        if (equi->parsed())
            return cmd_equidistribution(g, qseeds, qlen, qwords, qsigma, qnobasin, qacc);
        if (dim->parsed()) return cmd_dimension(g, ddepths, dtubes, dcap, dacc);
        if (emb->parsed()) return cmd_embed(g, mcount, mback, mfwd, mdigits);
        if (acc->parsed()) return cmd_acceptance(g, acriteria);
    } catch (const ExitsUnitPolydisc& e) {
        std::cerr << "certificate: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
