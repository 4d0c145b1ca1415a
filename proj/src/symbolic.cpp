#include "padyn/symbolic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

namespace padyn {

Window parse_window(unsigned p, const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos)
        throw MalformedWindow("window needs a dot separating past from future: " + text);
    Window w;
    auto sym = [&](char c) -> std::uint8_t {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'z')
            d = c - 'a' + 10;
        else
            throw MalformedWindow("bad symbol '" + std::string(1, c) + "'");
        if (d >= static_cast<int>(p))
            throw MalformedWindow("symbol '" + std::string(1, c) + "' out of range for p=" +
                                  std::to_string(p));
        return static_cast<std::uint8_t>(d);
    };
    for (auto it = text.rbegin() + static_cast<long>(text.size() - dot); it != text.rend(); ++it)
        w.back.push_back(sym(*it));  // rightmost-before-dot first: s_-1, s_-2, ...
    for (std::size_t i = dot + 1; i < text.size(); ++i) w.fwd.push_back(sym(text[i]));
    if (w.fwd.empty()) throw MalformedWindow("window needs at least one forward symbol");
    return w;
}

std::string format_window(const Window& w) {
    std::ostringstream os;
    auto put = [&](std::uint8_t d) {
        os << static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10);
    };
    for (auto it = w.back.rbegin(); it != w.back.rend(); ++it) put(*it);
    os << '.';
    for (auto d : w.fwd) put(d);
    return os.str();
}

std::pair<Norm, Norm> tube_radii(const Field& F, long m, long n) {
    if (m < 0 || n < 0) throw Error("tube_radii needs m, n >= 0");
    return {Norm::exact(n + 1), Norm::exact(F.a_val() * m + m + 1)};
}

Norm decode_radius(const Field& F, long m, long n) {
    if (m < 1 || n < 0) throw MalformedWindow("decode needs both window parts nonempty");
    const long delta_exp = n + 1;
    const long eps_exp = F.a_val() * (m - 1) + m;  // eps_(m-1)
    return Norm::exact(std::min(delta_exp, eps_exp));
}

namespace {

void require_in_r(const Scalar& v, const char* what) {
    const int integral = v.integrality();
    if (integral < 0) throw NotIntegral(std::string(what) + " must lie in R");
    if (integral == 0)
        throw Indeterminate(std::string(what) + " integrality undecided at precision " +
                            std::to_string(v.prec()));
}

}  // namespace

Scalar local_digit_solve(const Field& F, const Scalar& t_next, const Scalar& drag,
                         unsigned s, long prec) {
    if (s >= F.p()) throw Error("symbol out of range");
    require_in_r(t_next, "t_next");
    require_in_r(drag, "drag");
    const long K = std::min({prec, t_next.prec() + 1, drag.prec() + 1});
    if (K < 1) throw PrecisionExhausted("local_digit_solve has no budget left");

    // one inversion up front; the loop then only multiplies
    const Scalar inv_b = div(F.from_int(1, K + 4), F.b_at(K + 4));
    Scalar x = Scalar::from_integer(F.p(), s, K);
    for (long it = 0; it <= K + 4; ++it) {
        const Scalar residual = sub(sub(t_next, phi(F, x)), drag);
        const Scalar next = sub(x, mul(residual, inv_b));
        if (next == x) {
            if (x.residue() != s)
                throw NoSolutionInDisc("solver left its residue disc");
            return x;
        }
        x = next;
    }
    throw NoSolutionInDisc("contraction failed to stabilize");
}

// ---------------------------------------------------------------------------
// Curve evaluators

namespace {

// Pointwise evaluator for one family of trajectory curves over a fixed
// symbol list.  Memo key: (position in the symbol list, requested precision,
// argument residue class that determines the value at that precision).
class CurveEvaluator {
public:
    CurveEvaluator(const Field& F, const std::vector<std::uint8_t>& syms, bool vertical,
                   int budget)
        : F_(F), syms_(syms), vertical_(vertical), budget_(budget) {
        if (syms.empty()) throw MalformedWindow("curve needs at least one symbol");
        for (auto s : syms)
            if (s >= F.p()) throw MalformedWindow("symbol out of range");
        if (static_cast<int>(syms.size()) > budget_)
            throw RecursionBudgetExceeded("curve depth " + std::to_string(syms.size()) +
                                          " exceeds budget " + std::to_string(budget_));
    }

    Scalar eval(const Scalar& t, long prec) {
        if (!inv_b_ || inv_b_->prec() < prec + 2)
            inv_b_ = div(F_.from_int(1, prec + 4), F_.b_at(prec + 4));
        return eval_from(0, t, prec);
    }

private:
    Scalar eval_from(std::size_t idx, const Scalar& t, long prec) {
        if (prec < 1) throw PrecisionExhausted("curve evaluation has no budget left");
        if (idx + 1 == syms_.size())
            return Scalar::from_integer(F_.p(), syms_[idx], prec);

        const long key_res_prec = prec - 1;  // (1/q)-Lipschitz in t
        mpz_class res;
        bool memoizable = key_res_prec >= 1 && t.prec() >= key_res_prec;
        if (memoizable) {
            res = t.reduce_mod(key_res_prec);
            if (auto it = memo_.find({idx, prec, res}); it != memo_.end())
                return it->second;
        }

        const unsigned s = syms_[idx];
        const Scalar at = vertical_
                              ? mul(F_.a_at(prec + F_.a_val() + 2), t)
                              : t;
        Scalar x = Scalar::from_integer(F_.p(), s, prec);
        bool settled = false;
        for (long it = 0; it <= prec + 4; ++it) {
            const Scalar next = [&]() -> Scalar {
                if (vertical_) {
                    // F_t^s(x) = x + (a t + phi(x) - f_inner(x)) / b
                    const Scalar inner = eval_from(idx + 1, x, std::max<long>(1, prec - 1));
                    return add(x, mul(sub(add(at, phi(F_, x)), inner), *inv_b_));
                }
                // G_t^s(y) = y - (t - phi(y) - a g_inner(y)) / b
                const Scalar inner =
                    eval_from(idx + 1, x, std::max<long>(1, prec - 1 - F_.a_val()));
                const Scalar ag = mul(F_.a_at(inner.prec() + F_.a_val() + 2), inner);
                return sub(x, mul(sub(sub(t, phi(F_, x)), ag), *inv_b_));
            }();
            if (next == x) {
                settled = true;
                break;
            }
            x = next;
        }
        if (!settled) throw Error("internal: curve contraction failed to stabilize");
        if (x.residue() != s) throw Error("internal: curve value left its residue disc");
        if (memoizable) memo_.emplace(std::make_tuple(idx, prec, res), x);
        return x;
    }

    const Field& F_;
    const std::vector<std::uint8_t>& syms_;
    bool vertical_;
    int budget_;
    std::optional<Scalar> inv_b_;
    std::map<std::tuple<std::size_t, long, mpz_class>, Scalar> memo_;
};

}  // namespace

Scalar vertical_curve_eval(const Field& F, const std::vector<std::uint8_t>& fwd,
                           const Scalar& t, long prec, int recursion_budget) {
    require_in_r(t, "curve argument");
    CurveEvaluator ev(F, fwd, /*vertical=*/true, recursion_budget);
    return ev.eval(t, prec);
}

Scalar horizontal_curve_eval(const Field& F, const std::vector<std::uint8_t>& back,
                             const Scalar& t, long prec, int recursion_budget) {
    require_in_r(t, "curve argument");
    CurveEvaluator ev(F, back, /*vertical=*/false, recursion_budget);
    return ev.eval(t, prec);
}

// ---------------------------------------------------------------------------
// decode

namespace {

void check_window(const Field& F, const Window& w) {
    if (w.fwd.empty() || w.back.empty())
        throw MalformedWindow("decode needs both window parts nonempty");
    for (auto s : w.back)
        if (s >= F.p()) throw MalformedWindow("backward symbol out of range");
    for (auto s : w.fwd)
        if (s >= F.p()) throw MalformedWindow("forward symbol out of range");
}

// Working precision: the caller's request plus whatever the encode round
// trip will burn (1 digit per forward step, 1 + val(a) per backward step).
long working_prec(const Field& F, const Window& w, long prec) {
    return std::max({prec, w.n() + 2, w.m() * (1 + F.a_val()) + 2});
}

// encode round trip of a freshly decoded point; failure is an internal error
void post_verify(const Field& F, const Window& w, const Point& pt) {
    const auto fwd = encode_forward(F, pt, w.n());
    if (fwd != w.fwd) throw Error("internal: decode failed the forward round trip");
    const auto back = encode_backward(F, pt, w.m());
    if (back != w.back) throw Error("internal: decode failed the backward round trip");
}

}  // namespace

DecodedPoint decode(const Field& F, const Window& w, long prec) {
    check_window(F, w);
    if (prec < 2) throw PrecisionExhausted("decode needs at least two digits of budget");
    const long m = w.m(), n = w.n();
    const long len = m + n + 1;
    const long K = working_prec(F, w, prec);

    // unknowns x_k for k in [-m, n]; slot(k) = k + m
    std::vector<Scalar> xs;
    xs.reserve(static_cast<std::size_t>(len));
    for (long k = -m; k <= n; ++k)
        xs.push_back(Scalar::from_integer(F.p(), w.at(k), K));

    if (len > 2) {
        const Scalar a = F.a_at(K + F.a_val() + 2);
        bool converged = false;
        for (long sweep = 0; sweep <= K + len + 4 && !converged; ++sweep) {
            converged = true;
            for (long k = n - 1; k >= -m + 1; --k) {
                const auto slot = static_cast<std::size_t>(k + m);
                Scalar next = local_digit_solve(F, xs[slot + 1], mul(a, xs[slot - 1]),
                                                w.at(k), K);
                if (next != xs[slot]) {
                    converged = false;
                    xs[slot] = std::move(next);
                }
            }
        }
        if (!converged) throw Error("internal: decode sweeps failed to stabilize");
    }

    Point pt{xs[static_cast<std::size_t>(m)], xs[static_cast<std::size_t>(m - 1)]};
    post_verify(F, w, pt);
    return {std::move(pt), decode_radius(F, m, n)};
}

DecodedPoint decode_reference(const Field& F, const Window& w, long prec) {
    check_window(F, w);
    if (prec < 2) throw PrecisionExhausted("decode needs at least two digits of budget");
    const long m = w.m(), n = w.n();
    const long K = working_prec(F, w, prec);

    CurveEvaluator vert(F, w.fwd, /*vertical=*/true, 64);
    CurveEvaluator horiz(F, w.back, /*vertical=*/false, 64);

    Scalar y = Scalar::from_integer(F.p(), w.back[0], K);
    Scalar x = vert.eval(y, K);
    for (long it = 0; it <= K + 4; ++it) {
        Scalar y2 = horiz.eval(x, K);
        Scalar x2 = vert.eval(y2, K);
        if (y2 == y && x2 == x) {
            Point pt{std::move(x2), std::move(y2)};
            post_verify(F, w, pt);
            return {std::move(pt), decode_radius(F, m, n)};
        }
        y = std::move(y2);
        x = std::move(x2);
    }
    throw Error("internal: curve intersection failed to stabilize");
}

// ---------------------------------------------------------------------------

std::vector<std::uint8_t> encode_forward(const Field& F, const Point& pt, long n) {
    if (pt.in_unit_polydisc() < 0)
        throw NotIntegral("encode_forward needs a point of R^2");
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    Point cur = pt;
    for (long k = 0;; ++k) {
        try {
            out.push_back(static_cast<std::uint8_t>(cur.x.residue()));
        } catch (const InsufficientPrecision&) {
            throw PrecisionExhausted("forward itinerary ran out of digits", k);
        }
        if (k == n) break;
        cur = step(F, cur);
    }
    return out;
}

std::vector<std::uint8_t> encode_backward(const Field& F, const Point& pt, long m) {
    std::vector<std::uint8_t> out;
    if (m < 1) return out;
    out.reserve(static_cast<std::size_t>(m));
    const OrbitSegment seg = backward_orbit(F, pt, m - 1);  // certifies membership
    for (long k = 0; k < m; ++k) {
        try {
            out.push_back(static_cast<std::uint8_t>(seg.at(-k).y.residue()));
        } catch (const InsufficientPrecision&) {
            throw PrecisionExhausted("backward itinerary ran out of digits", k);
        }
    }
    return out;
}

Window shift(const Window& w) {
    if (w.n() < 1) throw EmptyForwardPart("shift needs at least two forward symbols");
    Window out;
    out.back.reserve(w.back.size() + 1);
    out.back.push_back(w.fwd.front());
    out.back.insert(out.back.end(), w.back.begin(), w.back.end());
    out.fwd.assign(w.fwd.begin() + 1, w.fwd.end());
    return out;
}

Norm conjugacy_residual(const Field& F, const Window& w, long prec) {
    const DecodedPoint p = decode(F, w, prec);
    const DecodedPoint q = decode(F, shift(w), prec);
    return distance(step(F, p.point), q.point);
}

Point stable_companion(const Field& F, const Point& pt,
                       const std::vector<std::uint8_t>& new_back, long fwd_depth,
                       long prec) {
    Window w;
    w.back = new_back;
    w.fwd = encode_forward(F, pt, fwd_depth);
    return decode(F, w, prec).point;
}

}  // namespace padyn
