#include "padyn/field.hpp"

namespace padyn {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned d = 3; static_cast<unsigned long long>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {
// valuation of an exact nonzero rational
long rat_valuation(unsigned p, const mpq_class& r) {
    return int_valuation(p, r.get_num()) - int_valuation(p, r.get_den());
}
}  // namespace

Field::Field(unsigned p, const mpq_class& a, const mpq_class& b, long default_prec)
    : p_(p), a_(a), b_(b), default_prec_(default_prec) {
    if (!is_prime(p))
        throw ConfigInvalid("p = " + std::to_string(p) + " is not prime");
    if (default_prec < 1) throw ConfigInvalid("default precision must be positive");
    if (a_ == 0) throw ConfigInvalid("a = 0 violates 0 < |a| < 1");
    a_.canonicalize();
    b_.canonicalize();
    a_val_ = rat_valuation(p_, a_);
    if (a_val_ < 1)
        throw ConfigInvalid("val(a) = " + std::to_string(a_val_) +
                            " violates 0 < |a| < 1 (need val(a) >= 1)");
    if (b_ == 0 || rat_valuation(p_, b_) != -1)
        throw ConfigInvalid("|b| != q: need val(b) = -1");
    // denominators must be p-powers for exact materialization; this throws
    // DenominatorNotPPower otherwise
    (void)a_at(2);
    (void)b_at(2);
}

Field Field::canonical(long default_prec) {
    return Field(3, mpq_class(3), mpq_class(1, 3), default_prec);
}

}  // namespace padyn
