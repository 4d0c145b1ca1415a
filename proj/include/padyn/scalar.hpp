#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "padyn/errors.hpp"

namespace padyn {

// Returns p^k for k >= 0 (small exponents are cached per thread).
const mpz_class& pow_p(unsigned p, long k);

// p-adic valuation of a nonzero integer.
long int_valuation(unsigned p, const mpz_class& z);

// An absolute value on Q_p, normalized so |p| = 1/q with q = p.  A norm is
// either known exactly (q^-vexp), known only as an upper bound (<= q^-vexp,
// the case of a value that is zero to finite precision), or exactly zero.
class Norm {
public:
    enum class Kind { exact, upper_bound, zero };

    static Norm exact(long vexp) { return Norm(Kind::exact, vexp); }
    static Norm upper_bound(long vexp) { return Norm(Kind::upper_bound, vexp); }
    static Norm exactly_zero() { return Norm(Kind::zero, 0); }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::exact; }
    bool is_zero() const { return kind_ == Kind::zero; }

    // The exponent v with norm value q^-v (meaningless for exact zero).
    long vexp() const { return vexp_; }

    // Norm value as a double (0 for exact zero; may round to 0/inf for huge
    // exponents, which is fine for reporting).
    double approx(unsigned q) const;

    // Exact rational value; throws Error for an upper-bound marker.
    mpq_class as_rational(unsigned q) const;

    std::string str(unsigned q) const;

    friend bool operator==(const Norm& a, const Norm& b) {
        return a.kind_ == b.kind_ && (a.kind_ == Kind::zero || a.vexp_ == b.vexp_);
    }

private:
    Norm(Kind k, long v) : kind_(k), vexp_(v) {}
    Kind kind_;
    long vexp_;
};

// Sup-norm combination max(|x|, |y|); conservative when a side is only an
// upper bound.
Norm sup_norm(const Norm& a, const Norm& b);

// An element of Q_p known to finite absolute precision.  The value class is
//
//     coeff * p^-scale + p^prec * Z_p
//
// with the canonical reduced representative
//
//     0 <= coeff < p^(scale+prec),   scale minimal (scale == 0 or p∤coeff),
//
// so equal value classes have equal representations.  A scalar that is zero
// to precision k has coeff == 0 and scale == 0.  All instances are immutable
// after construction and safe to share across threads.
class Scalar {
public:
    // The class O(p^prec) around zero.
    static Scalar zero(unsigned p, long prec);

    static Scalar from_integer(unsigned p, const mpz_class& n, long prec);

    // Requires the denominator to be a power of p.
    static Scalar from_rational(unsigned p, const mpq_class& r, long prec);

    // Value sum_i digits[i] * p^(val+i), precision val + digits.size().
    static Scalar from_digits(unsigned p, const std::vector<unsigned>& digits, long val);

    unsigned p() const { return p_; }
    const mpz_class& coeff() const { return coeff_; }
    long scale() const { return scale_; }
    long prec() const { return prec_; }

    bool is_zero_to_prec() const { return coeff_ == 0; }

    // Valuation of the representative; throws Indeterminate when the scalar
    // is zero to its precision (only "val >= prec" is known then).
    long valuation() const;

    // Lower bound on the valuation of the true value (prec when coeff == 0).
    long val_lower_bound() const { return coeff_ == 0 ? prec_ : valuation(); }

    // Tri-state integrality: +1 certified in Z_p, -1 certified not, 0 unknown
    // at this precision.
    int integrality() const;

    // The unique representative mod p^j in [0, p^j).
    mpz_class reduce_mod(long j) const;

    // Residue digit in [0, p): reduce_mod(1) as a machine integer.
    unsigned residue() const;

    // Digit d_i of the representative at p-power position val()+i, little
    // endian, count digits.
    std::vector<unsigned> digits(long count) const;

    // Forgets precision down to new_prec (new_prec <= prec).
    Scalar truncated(long new_prec) const;

    Norm norm(bool assert_exact_zero = false) const;

    bool operator==(const Scalar& o) const {
        return p_ == o.p_ && coeff_ == o.coeff_ && scale_ == o.scale_ && prec_ == o.prec_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Same value class ignoring any precision difference: representatives
    // agree modulo p^min(prec, o.prec).
    bool agrees_with(const Scalar& o) const;

    std::string str() const;  // round-trippable token, see parse_literal

    friend Scalar add(const Scalar& u, const Scalar& v);
    friend Scalar sub(const Scalar& u, const Scalar& v);
    friend Scalar mul(const Scalar& u, const Scalar& v);
    friend Scalar div(const Scalar& u, const Scalar& v);
    friend Scalar negate(const Scalar& u);

private:
    Scalar(unsigned p, mpz_class c, long e, long k)
        : p_(p), coeff_(std::move(c)), scale_(e), prec_(k) {
        normalize();
    }
    void normalize();

    unsigned p_;
    mpz_class coeff_;
    long scale_;
    long prec_;
};

Scalar add(const Scalar& u, const Scalar& v);
Scalar sub(const Scalar& u, const Scalar& v);
Scalar mul(const Scalar& u, const Scalar& v);
// Exact quotient of representatives with conservative precision; throws
// DivisionByZero when the divisor is zero to its precision.
Scalar div(const Scalar& u, const Scalar& v);
Scalar negate(const Scalar& u);
Scalar pow_u(const Scalar& u, unsigned long e);

inline Scalar operator+(const Scalar& u, const Scalar& v) { return add(u, v); }
inline Scalar operator-(const Scalar& u, const Scalar& v) { return sub(u, v); }
inline Scalar operator*(const Scalar& u, const Scalar& v) { return mul(u, v); }
inline Scalar operator-(const Scalar& u) { return negate(u); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Deterministic uniform digit source (explicit rejection sampling, identical
// digit streams on every platform for a fixed seed).
class DigitSampler {
public:
    DigitSampler(unsigned p, std::uint64_t seed);
    unsigned next();

private:
    unsigned p_;
    std::uint64_t state_[4];
    std::uint64_t next_u64();
};

// A Haar-uniform element of Z_p at absolute precision n_digits: digits
// i.i.d. uniform over {0,...,p-1}, deterministic per seed.
Scalar haar_sample_unit(unsigned p, std::uint64_t seed, long n_digits);

// Accepted literal forms:
//   integer            "42", "-7"
//   fraction           "5/27"  (denominator must be a power of p)
//   digit token        "d0d1d2...@v~k"  little-endian digits (base 36),
//                      valuation v, absolute precision k; e.g. "1@-1~8" is
//                      1/p known mod p^8.
// The default precision applies to the integer/fraction forms.
Scalar parse_literal(unsigned p, const std::string& text, long default_prec);

// First j digits of u starting at its valuation, as a digit string (base 36).
std::string format_digits(const Scalar& u, long j);

}  // namespace padyn
