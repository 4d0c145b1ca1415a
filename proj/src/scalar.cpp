#include "padyn/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace padyn {

const mpz_class& pow_p(unsigned p, long k) {
    assert(k >= 0);
    thread_local std::map<unsigned, std::vector<mpz_class>> cache;
    thread_local unsigned last_p = 0;
    thread_local std::vector<mpz_class>* last_v = nullptr;
    if (p != last_p) {
        last_v = &cache[p];
        last_p = p;
    }
    auto& v = *last_v;
    if (v.empty()) v.emplace_back(1);
    while (static_cast<long>(v.size()) <= k) v.emplace_back(v.back() * p);
    return v[static_cast<std::size_t>(k)];
}

long int_valuation(unsigned p, const mpz_class& z) {
    assert(z != 0);
    mpz_class stripped;
    const mpz_class pz(p);
    return static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

// ---------------------------------------------------------------------------
// Norm

double Norm::approx(unsigned q) const {
    if (kind_ == Kind::zero) return 0.0;
    return std::pow(static_cast<double>(q), -static_cast<double>(vexp_));
}

mpq_class Norm::as_rational(unsigned q) const {
    if (kind_ == Kind::zero) return mpq_class(0);
    if (kind_ == Kind::upper_bound)
        throw Error("norm is only known as an upper bound");
    mpq_class r;
    if (vexp_ >= 0)
        r = mpq_class(1, pow_p(q, vexp_));
    else
        r = mpq_class(pow_p(q, -vexp_));
    r.canonicalize();
    return r;
}

std::string Norm::str(unsigned q) const {
    if (kind_ == Kind::zero) return "0";
    std::ostringstream os;
    if (kind_ == Kind::upper_bound) os << "<=";
    os << q << "^" << -vexp_;
    return os.str();
}

Norm sup_norm(const Norm& a, const Norm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_exact() && b.is_exact()) return Norm::exact(std::min(a.vexp(), b.vexp()));
    if (a.is_exact()) return a.vexp() <= b.vexp() ? a : Norm::upper_bound(b.vexp());
    if (b.is_exact()) return b.vexp() <= a.vexp() ? b : Norm::upper_bound(a.vexp());
    return Norm::upper_bound(std::min(a.vexp(), b.vexp()));
}

// ---------------------------------------------------------------------------
// Scalar

void Scalar::normalize() {
    const long cap = scale_ + prec_;
    if (cap <= 0) {
        coeff_ = 0;
        scale_ = 0;
        return;
    }
    const mpz_class& m = pow_p(p_, cap);
    mpz_fdiv_r(coeff_.get_mpz_t(), coeff_.get_mpz_t(), m.get_mpz_t());
    if (coeff_ == 0) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && mpz_divisible_ui_p(coeff_.get_mpz_t(), p_)) {
        mpz_divexact_ui(coeff_.get_mpz_t(), coeff_.get_mpz_t(), p_);
        --scale_;
    }
}

Scalar Scalar::zero(unsigned p, long prec) { return Scalar(p, mpz_class(0), 0, prec); }

Scalar Scalar::from_integer(unsigned p, const mpz_class& n, long prec) {
    return Scalar(p, n, 0, prec);
}

Scalar Scalar::from_rational(unsigned p, const mpq_class& r, long prec) {
    const mpz_class& den = r.get_den();  // canonical: den > 0, coprime to num
    if (den == 1) return Scalar(p, r.get_num(), 0, prec);
    const long d = int_valuation(p, den);
    if (pow_p(p, d) != den)
        throw DenominatorNotPPower("denominator " + den.get_str() +
                                   " is not a power of " + std::to_string(p));
    return Scalar(p, r.get_num(), d, prec);
}

Scalar Scalar::from_digits(unsigned p, const std::vector<unsigned>& digits, long val) {
    mpz_class c(0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it >= p) throw MalformedLiteral("digit out of range");
        c = c * p + *it;
    }
    const long prec = val + static_cast<long>(digits.size());
    if (val >= 0) {
        if (val > 0) c *= pow_p(p, val);
        return Scalar(p, c, 0, prec);
    }
    return Scalar(p, c, -val, prec);
}

long Scalar::valuation() const {
    if (coeff_ == 0)
        throw Indeterminate("valuation undetermined: zero to precision " +
                            std::to_string(prec_));
    return int_valuation(p_, coeff_) - scale_;
}

int Scalar::integrality() const {
    if (coeff_ != 0) return valuation() >= 0 ? +1 : -1;
    return prec_ >= 0 ? +1 : 0;
}

mpz_class Scalar::reduce_mod(long j) const {
    if (j < 0) throw Error("reduce_mod needs j >= 0");
    const int integral = integrality();
    if (integral < 0) throw NotIntegral("value has negative valuation");
    if (integral == 0)
        throw InsufficientPrecision("integrality undetermined at precision " +
                                    std::to_string(prec_));
    if (prec_ < j)
        throw InsufficientPrecision("residue mod p^" + std::to_string(j) +
                                    " requested at precision " + std::to_string(prec_));
    // canonical integral scalar has scale 0, so coeff_ is the representative
    return coeff_ % pow_p(p_, j);
}

unsigned Scalar::residue() const { return static_cast<unsigned>(reduce_mod(1).get_ui()); }

std::vector<unsigned> Scalar::digits(long count) const {
    std::vector<unsigned> out;
    out.reserve(static_cast<std::size_t>(count));
    if (coeff_ == 0) {
        // positions 0..prec-1 are certified zero; beyond that nothing is known
        if (count > prec_)
            throw InsufficientPrecision("digit request reaches past the precision");
        out.assign(static_cast<std::size_t>(count), 0u);
        return out;
    }
    if (count > prec_ - valuation())
        throw InsufficientPrecision("digit request reaches past the precision");
    mpz_class m = coeff_;
    {
        mpz_class stripped;
        const mpz_class pz(p_);
        mpz_remove(stripped.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
        m = stripped;
    }
    for (long i = 0; i < count; ++i) {
        out.push_back(static_cast<unsigned>(mpz_fdiv_ui(m.get_mpz_t(), p_)));
        mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), p_);
    }
    return out;
}

Scalar Scalar::truncated(long new_prec) const {
    if (new_prec > prec_)
        throw InsufficientPrecision("cannot raise precision by truncation");
    return Scalar(p_, coeff_, scale_, new_prec);
}

Norm Scalar::norm(bool assert_exact_zero) const {
    if (coeff_ == 0)
        return assert_exact_zero ? Norm::exactly_zero() : Norm::upper_bound(prec_);
    return Norm::exact(valuation());
}

bool Scalar::agrees_with(const Scalar& o) const { return sub(*this, o).is_zero_to_prec(); }

namespace {
void check_same_field(const Scalar& u, const Scalar& v) {
    if (u.p() != v.p()) throw Error("operands live over different primes");
}
}  // namespace

Scalar add(const Scalar& u, const Scalar& v) {
    check_same_field(u, v);
    if (u.scale_ == v.scale_)
        return Scalar(u.p_, u.coeff_ + v.coeff_, u.scale_, std::min(u.prec_, v.prec_));
    const long e = std::max(u.scale_, v.scale_);
    mpz_class c = u.coeff_ * pow_p(u.p_, e - u.scale_) +
                  v.coeff_ * pow_p(u.p_, e - v.scale_);
    return Scalar(u.p_, std::move(c), e, std::min(u.prec_, v.prec_));
}

Scalar sub(const Scalar& u, const Scalar& v) {
    check_same_field(u, v);
    if (u.scale_ == v.scale_)
        return Scalar(u.p_, u.coeff_ - v.coeff_, u.scale_, std::min(u.prec_, v.prec_));
    const long e = std::max(u.scale_, v.scale_);
    mpz_class c = u.coeff_ * pow_p(u.p_, e - u.scale_) -
                  v.coeff_ * pow_p(u.p_, e - v.scale_);
    return Scalar(u.p_, std::move(c), e, std::min(u.prec_, v.prec_));
}

Scalar negate(const Scalar& u) {
    return Scalar(u.p(), -u.coeff(), u.scale(), u.prec());
}

Scalar mul(const Scalar& u, const Scalar& v) {
    check_same_field(u, v);
    long k;
    if (u.coeff_ != 0 && v.coeff_ != 0) {
        // |u E_v| and |v E_u|; the E_u E_v term never binds for canonical
        // nonzero representatives (val < prec).
        k = std::min(u.prec_ + v.valuation(), v.prec_ + u.valuation());
    } else if (u.coeff_ == 0 && v.coeff_ == 0) {
        k = u.prec_ + v.prec_;
    } else {
        const Scalar& z = (u.coeff_ == 0) ? u : v;
        const Scalar& w = (u.coeff_ == 0) ? v : u;
        k = z.prec_ + w.valuation();
    }
    return Scalar(u.p_, u.coeff_ * v.coeff_, u.scale_ + v.scale_, k);
}

Scalar div(const Scalar& u, const Scalar& v) {
    check_same_field(u, v);
    if (v.coeff_ == 0)
        throw DivisionByZero("divisor is zero to precision " + std::to_string(v.prec_));
    const long val_v = v.valuation();
    long k;
    if (u.coeff_ != 0)
        k = std::min(u.prec_ - val_v, v.prec_ + u.valuation() - 2 * val_v);
    else
        k = u.prec_ - val_v;

    const long t = int_valuation(u.p_, v.coeff_);
    mpz_class unit;
    mpz_divexact(unit.get_mpz_t(), v.coeff_.get_mpz_t(), pow_p(u.p_, t).get_mpz_t());
    const long off = u.scale_ + t - v.scale_;  // result = coeff_u * unit^-1 * p^-off
    const long e = std::max(0L, off);
    const long cap = e + k;
    if (cap <= 0) return Scalar(u.p_, mpz_class(0), 0, k);

    const mpz_class& m = pow_p(u.p_, cap);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("internal: unit not invertible");
    mpz_class c = (u.coeff_ % m) * inv;
    if (off < 0) c *= pow_p(u.p_, -off);
    return Scalar(u.p_, std::move(c), e, k);
}

Scalar pow_u(const Scalar& u, unsigned long e) {
    if (e == 0) return Scalar::from_integer(u.p(), 1, u.prec());
    Scalar acc = u;
    unsigned long hibit = 1;
    while ((hibit << 1) <= e) hibit <<= 1;
    for (hibit >>= 1; hibit; hibit >>= 1) {
        acc = mul(acc, acc);
        if (e & hibit) acc = mul(acc, u);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// Sampling

namespace {
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
std::uint64_t rotl64(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

DigitSampler::DigitSampler(unsigned p, std::uint64_t seed) : p_(p) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t DigitSampler::next_u64() {
    // xoshiro256**
    const std::uint64_t result = rotl64(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl64(state_[3], 45);
    return result;
}

unsigned DigitSampler::next() {
    const std::uint64_t lim = UINT64_MAX - UINT64_MAX % p_;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= lim);
    return static_cast<unsigned>(v % p_);
}

Scalar haar_sample_unit(unsigned p, std::uint64_t seed, long n_digits) {
    if (n_digits < 1) throw Error("haar_sample_unit needs at least one digit");
    DigitSampler rng(p, seed);
    std::vector<unsigned> d(static_cast<std::size_t>(n_digits));
    for (auto& x : d) x = rng.next();
    return Scalar::from_digits(p, d, 0);
}

// ---------------------------------------------------------------------------
// Literals

namespace {
int digit36(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}
char to36(unsigned d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}
long parse_long(const std::string& s) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw MalformedLiteral("trailing junk in number: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw MalformedLiteral("bad integer: " + s);
    }
}
mpz_class parse_mpz(const std::string& s) {
    if (s.empty()) throw MalformedLiteral("empty integer literal");
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw MalformedLiteral("bad integer literal: " + s);
    }
}
}  // namespace

Scalar parse_literal(unsigned p, const std::string& text, long default_prec) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw MalformedLiteral("empty literal");

    if (s.rfind("O(", 0) == 0) {
        // O(p^k): zero to precision k
        if (s.back() != ')') throw MalformedLiteral(text);
        const auto caret = s.find('^');
        if (caret == std::string::npos) throw MalformedLiteral(text);
        if (parse_long(s.substr(2, caret - 2)) != static_cast<long>(p))
            throw MalformedLiteral("zero token base does not match p");
        return Scalar::zero(p, parse_long(s.substr(caret + 1, s.size() - caret - 2)));
    }

    if (const auto at = s.find('@'); at != std::string::npos) {
        const auto tilde = s.find('~', at);
        if (tilde == std::string::npos) throw MalformedLiteral("digit token needs ~prec");
        const long val = parse_long(s.substr(at + 1, tilde - at - 1));
        const long prec = parse_long(s.substr(tilde + 1));
        std::vector<unsigned> digits;
        for (char c : s.substr(0, at)) {
            const int d = digit36(c);
            if (d < 0 || d >= static_cast<int>(p))
                throw MalformedLiteral("digit '" + std::string(1, c) + "' out of range for p=" +
                                       std::to_string(p));
            digits.push_back(static_cast<unsigned>(d));
        }
        if (val + static_cast<long>(digits.size()) > prec)
            throw MalformedLiteral("digit token claims digits beyond its precision");
        // the token asserts all digits between val+len and prec are zero
        digits.resize(static_cast<std::size_t>(prec - val), 0u);
        return Scalar::from_digits(p, digits, val);
    }

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        mpq_class r(parse_mpz(s.substr(0, slash)), parse_mpz(s.substr(slash + 1)));
        r.canonicalize();
        return Scalar::from_rational(p, r, default_prec);
    }

    return Scalar::from_integer(p, parse_mpz(s), default_prec);
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (coeff_ == 0) {
        os << "O(" << p_ << "^" << prec_ << ")";
        return os.str();
    }
    const long v = valuation();
    const auto d = digits(prec_ - v);
    for (unsigned x : d) os << to36(x);
    os << "@" << v << "~" << prec_;
    return os.str();
}

std::string format_digits(const Scalar& u, long j) {
    std::string out;
    for (unsigned d : u.digits(j)) out.push_back(to36(d));
    return out;
}

}  // namespace padyn
