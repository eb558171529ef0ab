#ifndef FREYBOUND_FERMAT_LOCAL_HPP
#define FREYBOUND_FERMAT_LOCAL_HPP

#include <string>
#include <vector>

#include "freybound/zeta_count.hpp"

namespace freybound {

// One residue triple with x^p + y^p = z^r (mod q). The exponent class is
// the representative e in [1, q-1] of p mod (q-1), chosen so that
// x^p = x^e holds for every residue including 0.
struct LocalSolution {
    unsigned long q = 0;
    unsigned long p_class = 1;
    unsigned long r = 0;
    unsigned long x = 0, y = 0, z = 0;
    bool x_zero = false, y_zero = false, z_zero = false, xy_zero = false;
    bool t_defined = false;
    unsigned long t_value = 0;  // x^p * (z^r)^-1 mod q when z != 0
};

// All q^3 triples, swept with precomputed power tables, in lexicographic
// (x, y, z) order independent of the worker count.
std::vector<LocalSolution> enum_local_solutions(unsigned long q, unsigned long p_class,
                                                unsigned long r, unsigned workers = 1);

struct ExponentClassSweep {
    unsigned long p_class = 1;
    // whether some odd prime p lands in this class mod q-1
    bool odd_prime_attainable = false;
    std::vector<LocalSolution> solutions;
};

// One sweep per exponent class in [1, q-1]; classes unreachable by odd
// primes are still swept and flagged.
std::vector<ExponentClassSweep> sweep_exponent_classes(unsigned long q, unsigned long r,
                                                       unsigned workers = 1);

// Pure predicate report on a putative global solution a^p + b^p = c^r.
struct GlobalHypothesisReport {
    BigInt a, b, c;
    unsigned long p = 0, r = 0;
    bool is_solution = false;
    bool nontrivial = false;
    bool proper = false;
    bool r_divides_ab = false;
    bool ab_odd = false;
    // reduction-type flags; each is a claim conditional on its hypothesis
    bool semistable_claim = false;          // requires r | ab
    bool good_reduction_at_2_claim = false; // requires 2 does not divide ab
};

GlobalHypothesisReport check_global_hypotheses(const BigInt& a, const BigInt& b, const BigInt& c,
                                               unsigned long p, unsigned long r);

// One-parameter template: h(t,x) and f(t,x) as coefficient matrices,
// coeff[i][j] multiplying x^i t^j. Specializing t gives a model shape.
struct CurveFamily {
    std::vector<std::vector<BigInt>> h;
    std::vector<std::vector<BigInt>> f;
    unsigned long genus = 1;
};

// Plain-text family format (tokens, '#' comments):
//   genus G
//   h XDEG TDEG   followed by (XDEG+1) rows of (TDEG+1) integers
//   f XDEG TDEG   followed by (XDEG+1) rows of (TDEG+1) integers
CurveFamily parse_family_file(const std::string& text);

struct SpecializeResult {
    bool degenerate = false;
    std::string reason;          // set when degenerate
    HyperellipticModel model;    // valid when !degenerate
};

// Substitutes t = s.t_value. A triple with z = 0 has no t and comes back
// degenerate ("potentially multiplicative"); singular specializations are
// reported downstream when the model is counted.
SpecializeResult specialize_family(const CurveFamily& fam, const LocalSolution& s,
                                   const FinFieldPtr& field);

}  // namespace freybound

#endif
