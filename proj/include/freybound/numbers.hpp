#ifndef FREYBOUND_NUMBERS_HPP
#define FREYBOUND_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace freybound {

// Exact arithmetic types. BigInt is canonical by construction (GMP keeps a
// sign + magnitude with no leading limbs); Rational is always kept in lowest
// terms with positive denominator via canonicalize().
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt make_bigint(long v) { return BigInt(v); }

inline BigInt bigint_from_string(const std::string& s) {
    BigInt n;
    if (n.set_str(s, 10) != 0)
        throw std::invalid_argument("not a decimal integer: " + s);
    return n;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const BigInt& n) { return sgn(n); }
inline int sign_of(const Rational& q) { return sgn(q); }

inline BigInt abs_of(const BigInt& n) { return abs(n); }

// floor(sqrt(n)), n >= 0
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; throws if b does not divide a.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("divexact: not divisible");
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_ulong(const BigInt& n) { return n.fits_ulong_p(); }

inline std::string to_string(const BigInt& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Binomial coefficient C(n, k).
inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace freybound

#endif
