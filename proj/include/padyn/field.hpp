#pragma once

#include <gmpxx.h>

#include "padyn/errors.hpp"
#include "padyn/scalar.hpp"

namespace padyn {

// Ground field Q_p together with the map parameters.  The residue field has
// order q = p, the uniformizer is p itself, and coset representatives for
// the residue field are 0..p-1.  Parameters are held as exact rationals
// (p-power denominators) and materialized as scalars at whatever working
// precision a computation needs, so they never limit precision budgets.
//
// Constraints checked at construction:
//   - p prime (deterministic trial division),
//   - val(a) >= 1 and a != 0   (0 < |a| < 1),
//   - val(b) == -1             (|b| = q).
class Field {
public:
    Field(unsigned p, const mpq_class& a, const mpq_class& b, long default_prec);

    // p = 3, a = 3, b = 1/3: |a| = 1/3, |b| = 3, attractor dimension 3/2.
    static Field canonical(long default_prec = 64);

    unsigned p() const { return p_; }
    unsigned q() const { return p_; }
    long a_val() const { return a_val_; }
    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    long default_precision() const { return default_prec_; }

    Scalar a_at(long prec) const { return Scalar::from_rational(p_, a_, prec); }
    Scalar b_at(long prec) const { return Scalar::from_rational(p_, b_, prec); }
    Scalar from_int(long n, long prec) const {
        return Scalar::from_integer(p_, mpz_class(n), prec);
    }

private:
    unsigned p_;
    mpq_class a_, b_;
    long a_val_;
    long default_prec_;
};

bool is_prime(unsigned n);

}  // namespace padyn
