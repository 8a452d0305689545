#ifndef HKADE_RATIONAL_HPP
#define HKADE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hkade {

using Int = mpz_class;
using Rational = mpq_class;

// Domain-level failures (bad inputs, violated preconditions). The CLI maps
// these to exit code 2; usage errors stay with CLI11.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// mpq_class's two-argument constructor does not canonicalize; every ratio
// is built through this helper instead.
inline Rational frac(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("DivisionByZero", "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}
inline Rational frac(long num, long den) { return frac(Int(num), Int(den)); }

inline Int floor_rat(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// p^s for s of either sign, exactly.
inline Rational pow_signed(long p, long s) {
    Int q = pow_int(Int(p), static_cast<unsigned long>(s < 0 ? -s : s));
    return s >= 0 ? Rational(q) : Rational(1, q);
}

inline std::string rat_str(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline Rational parse_rat(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw domain_error("BadRational", "cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace hkade

#endif
