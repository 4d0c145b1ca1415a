#include "padyn/io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace padyn {

using nlohmann::json;

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json scalar_to_json(const Scalar& s) {
    json j;
    long val;
    if (s.is_zero_to_prec()) {
        val = s.prec();
        j["digits"] = json::array();
    } else {
        val = s.valuation();
        j["digits"] = s.digits(s.prec() - val);
    }
    j["val"] = val;
    j["prec"] = s.prec();
    return j;
}

Scalar scalar_from_json(unsigned p, const json& j) {
    const long val = j.at("val").get<long>();
    const long prec = j.at("prec").get<long>();
    std::vector<unsigned> digits = j.at("digits").get<std::vector<unsigned>>();
    if (val + static_cast<long>(digits.size()) > prec)
        throw MalformedLiteral("digits exceed declared precision");
    digits.resize(static_cast<std::size_t>(prec - val), 0u);
    return Scalar::from_digits(p, digits, val);
}

json point_to_json(const Point& pt) {
    return json{{"x", scalar_to_json(pt.x)}, {"y", scalar_to_json(pt.y)}};
}

std::string orbit_to_json_lines(const OrbitSegment& seg) {
    std::ostringstream os;
    for (long k = seg.k_min; k <= seg.k_max; ++k) {
        const Point& pt = seg.at(k);
        json j;
        j["k"] = k;
        j["x"] = scalar_to_json(pt.x);
        j["y"] = scalar_to_json(pt.y);
        j["prec"] = pt.prec();
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string equidist_to_csv(const EquidistReport& rep) {
    std::ostringstream os;
    os << "seed,word,observed,total,expected,z_score,pass\n";
    for (const auto& r : rep.rows)
        os << r.start << "," << r.word << "," << r.observed << "," << r.total << ","
           << r.expected.get_str() << "," << fmt_double(r.z_score) << ","
           << (r.pass ? 1 : 0) << "\n";
    return os.str();
}

json equidist_to_json(const EquidistReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"seed", r.start},
                            {"word", r.word},
                            {"observed", r.observed},
                            {"total", r.total},
                            {"expected", r.expected.get_str()},
                            {"z_score", r.z_score},
                            {"pass", r.pass}});
    return json{{"rows", rows}, {"all_pass", rep.all_pass}};
}

std::string count_series_to_csv(const CountSeries& series) {
    std::ostringstream os;
    os << "radius_exponent,radius,count,paper_upper_bound,mass_lower_bound\n";
    for (const auto& e : series.entries)
        os << e.radius_vexp << "," << series.p << "^-" << e.radius_vexp << "," << e.count << ","
           << (e.tube_index >= 0 ? fmt_double(e.paper_upper_bound) : std::string())
           << "," << fmt_double(e.mass_lower_bound) << "\n";
    return os.str();
}

json count_series_to_json(const CountSeries& series) {
    json entries = json::array();
    for (const auto& e : series.entries) {
        json je{{"radius_exponent", e.radius_vexp},
                {"count", e.count},
                {"mass_lower_bound", e.mass_lower_bound}};
        if (e.tube_index >= 0) {
            je["tube_index"] = e.tube_index;
            je["paper_upper_bound"] = e.paper_upper_bound;
        }
        entries.push_back(std::move(je));
    }
    return json{{"p", series.p}, {"val_a", series.a_val}, {"entries", entries}};
}

std::pair<double, double> embed_real(const Point& pt, long d) {
    if (pt.in_unit_polydisc() <= 0)
        throw NotIntegral("embed_real needs a point of R^2");
    if (pt.prec() < d)
        throw InsufficientPrecision("embed_real needs " + std::to_string(d) + " digits");
    auto fold = [&](const Scalar& s) {
        mpz_class r = s.reduce_mod(d);
        const double p = static_cast<double>(s.p());
        double u = 0.0;
        for (long i = 0; i < d; ++i) {
            const unsigned digit = static_cast<unsigned>(mpz_fdiv_ui(r.get_mpz_t(), s.p()));
            u += static_cast<double>(digit) * std::pow(p, -static_cast<double>(i + 1));
            mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), s.p());
        }
        return u;
    };
    return {fold(pt.x), fold(pt.y)};
}

std::string scatter_csv(const std::vector<std::pair<double, double>>& pts) {
    std::ostringstream os;
    os << "u,v\n";
    for (const auto& [u, v] : pts) os << fmt_double(u) << "," << fmt_double(v) << "\n";
    return os.str();
}

std::string scatter_svg(const std::vector<std::pair<double, double>>& pts, int size_px) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
       << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const double s = static_cast<double>(size_px);
    for (const auto& [u, v] : pts) {
        const double cx = u * s;
        const double cy = s - v * s;  // origin bottom-left
        os << "<circle cx=\"" << std::setprecision(8) << cx << "\" cy=\"" << cy
           << "\" r=\"1.5\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace padyn
