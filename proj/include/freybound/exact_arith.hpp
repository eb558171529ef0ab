#ifndef FREYBOUND_EXACT_ARITH_HPP
#define FREYBOUND_EXACT_ARITH_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "freybound/intpoly.hpp"
#include "freybound/numbers.hpp"

namespace freybound {

// Raised by sturm_root_count when an interval endpoint is itself a root.
// Callers decide how to widen; nothing is perturbed silently.
struct BoundaryRootError : std::runtime_error {
    explicit BoundaryRootError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive computation would exceed its guardrail; the
// message carries the cost estimate.
struct CostGuardError : std::runtime_error {
    explicit CostGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Res(f, g) = lc(g)^deg(f) * prod_{g(b)=0} f(b), the Sylvester determinant
// with the g-block on top. Computed by the subresultant PRS, no modular
// arithmetic. Throws std::invalid_argument on a zero input.
BigInt poly_resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) * Res(f, f') / lc(f), n = deg f >= 1
BigInt poly_discriminant(const IntPoly& f);

// Exact count of real roots of a squarefree f in the open interval (lo, hi)
// by Sturm's theorem with rational sign evaluations.
long sturm_root_count(const IntPoly& f, const Rational& lo, const Rational& hi);

// Number of sign variations of the Sturm chain of f at x (internal building
// block, exposed for the root-location checks elsewhere).
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& f);
    long variations_at(const Rational& x) const;
    // count over (lo, hi); endpoints must not be roots
    long count_in(const Rational& lo, const Rational& hi) const;
    // count of all distinct real roots (evaluates beyond the root bound)
    long count_all() const;
    // a positive rational B with every real root of f in (-B, B)
    Rational root_bound() const;

  private:
    std::vector<IntPoly> chain_;
};

// Prime factorization of |n| as prime -> multiplicity. Trial division below
// a fixed bound, then Brent-cycle Pollard rho with the fixed polynomial
// x^2 + c for c = 1, 2, 3, ...; every reported prime passes a Miller-Rabin
// test over the fixed witness set 2, 3, 5, ..., 41 (deterministic below
// 3.3e24; above that the same witnesses give a reproducible strong
// probable-prime certificate). n = 0 is rejected.
using Factorization = std::map<BigInt, unsigned>;
Factorization factorize(const BigInt& n);

// Miller-Rabin over the fixed witness set used by factorize.
bool is_prime(const BigInt& n);

// s_n = alpha1^n + alpha2^n for the roots of x^2 - a x + Q,
// via s_0 = 2, s_1 = a, s_{k+1} = a s_k - Q s_{k-1}.
BigInt lucas_power_sum(const BigInt& a, const BigInt& Q, unsigned long n);

}  // namespace freybound

#endif
