#ifndef RELIM_RATIONAL_HPP
#define RELIM_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace relim {

// All probabilities and distances are exact rationals; identities from the
// density calculus are equality tests, never tolerance tests.
using Rational = mpq_class;
using Density = Rational;

inline Rational ratio(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational ratio(std::uint64_t num, std::uint64_t den) {
    return ratio(mpz_class(static_cast<unsigned long>(num)),
                 mpz_class(static_cast<unsigned long>(den)));
}

// "num/den" in lowest terms, denominator always shown ("0/1", "1/1", "1/3").
inline std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Integer power with a cap; returns false if n^k would exceed `limit`.
inline bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit, std::uint64_t& out) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return false;
        r *= base;
    }
    out = r;
    return true;
}

} // namespace relim

#endif
