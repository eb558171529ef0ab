#ifndef FREYBOUND_INTPOLY_HPP
#define FREYBOUND_INTPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "freybound/numbers.hpp"

namespace freybound {

// Univariate polynomial over Z, dense coefficients, lowest degree first.
// The zero polynomial is the empty coefficient vector; otherwise the last
// coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    IntPoly(std::initializer_list<BigInt> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const BigInt& c);
    // c * x^k
    static IntPoly monomial(const BigInt& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& leading_coeff() const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    // coefficient of x^k (0 beyond the degree)
    const BigInt& coeff(std::size_t k) const;
    bool is_monic() const { return !is_zero() && leading_coeff() == 1; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

    BigInt eval(const BigInt& x) const;
    // sign of f(num/den), den > 0, computed on the homogenized form
    int sign_at(const Rational& x) const;

    IntPoly derivative() const;
    // positive gcd of all coefficients (content of zero polynomial is 0)
    BigInt content() const;
    IntPoly primitive_part() const;
    // quotient, asserting exact divisibility coefficient by coefficient
    IntPoly divexact_by(const BigInt& c) const;
    // polynomial exact division; throws std::logic_error if not divisible
    IntPoly divexact_by(const IntPoly& d) const;

    // pseudo-remainder: lc(d)^(deg f - deg d + 1) * f = q*d + r, deg r < deg d
    IntPoly pseudo_rem(const IntPoly& d) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// gcd over Z[x]: primitive subresultant PRS, result with positive leading
// coefficient (up to content; returns content-gcd * primitive gcd).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Unique integer polynomial of degree < pts.size() through the given
// (x, y) points; throws std::logic_error if the interpolant is not
// integral. Points must have pairwise distinct x.
IntPoly interpolate_integer_poly(const std::vector<std::pair<BigInt, BigInt>>& pts);

// f / gcd(f, f'), made primitive with positive leading coefficient
IntPoly squarefree_part(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

}  // namespace freybound

#endif
