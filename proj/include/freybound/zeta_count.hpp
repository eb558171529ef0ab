#ifndef FREYBOUND_ZETA_COUNT_HPP
#define FREYBOUND_ZETA_COUNT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "freybound/intpoly.hpp"
#include "freybound/weil_traces.hpp"

namespace freybound {

struct SingularModelError : std::runtime_error {
    explicit SingularModelError(const std::string& what) : std::runtime_error(what) {}
};

// F_{p^k} with the lexicographically smallest monic irreducible modulus of
// degree k over F_p (deterministic across runs and platforms). Elements are
// indices in [0, p^k): base-p digit vectors, lowest degree first.
class FiniteField {
  public:
    static std::shared_ptr<const FiniteField> make(unsigned long p, unsigned long k);

    unsigned long p() const { return p_; }
    unsigned long k() const { return k_; }
    std::uint64_t q() const { return q_; }
    // modulus coefficients, low first, length k+1
    const std::vector<unsigned long>& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    // image of an integer under Z -> F_p <= F_q
    std::uint64_t from_integer(const BigInt& n) const;
    // absolute trace to F_p
    unsigned long trace(std::uint64_t a) const;
    // evaluation of an integer polynomial at a field element
    std::uint64_t eval_poly(const IntPoly& f, std::uint64_t x) const;

  private:
    FiniteField(unsigned long p, unsigned long k, std::vector<unsigned long> modulus);
    std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;

    unsigned long p_;
    unsigned long k_;
    std::uint64_t q_;
    std::vector<unsigned long> modulus_;
};

using FinFieldPtr = std::shared_ptr<const FiniteField>;

// Counting rule for the points at infinity of a degree-(2g+2) model in
// characteristic 2, where the normalization cannot be inferred.
enum class InfinityRule { automatic, two_points, one_point, zero_points };

// y^2 + h(x) y = f(x) with integer coefficients, reduced modulo the field
// characteristic at counting time.
struct HyperellipticModel {
    IntPoly h;
    IntPoly f;
    unsigned long genus = 1;
    InfinityRule infinity_rule = InfinityRule::automatic;
};

// Numerator of the zeta function over F_q, constant term 1, degree 2g.
struct LPolynomial {
    BigInt q;
    unsigned long genus = 0;
    IntPoly poly;
};

// Number of points on the smooth projective model over the field.
// Throws SingularModelError when the reduction is singular and
// CostGuardError when q exceeds the naive-enumeration guardrail.
BigInt count_points(const HyperellipticModel& model, const FinFieldPtr& field,
                    unsigned workers = 1);

// Counts N_1..N_g over F_q, ..., F_{q^g}, recovers e_1..e_g by Newton's
// identities and the rest by the functional equation.
LPolynomial l_polynomial(const HyperellipticModel& model, const FinFieldPtr& base,
                         unsigned workers = 1);

// x^(2g) L(1/x): the monic characteristic polynomial of Frobenius.
IntPoly frobenius_charpoly(const LPolynomial& L);

// N_k predicted by L for any k >= 1 (used as a non-circular consistency
// check against direct counting).
BigInt predicted_count(const LPolynomial& L, unsigned long k);

// Candidates a with trace_charpoly(a, Q) == frobenius_charpoly(L).
std::vector<TraceEntry> match_rm_traces(const LPolynomial& L, const WeilTraceSet& candidates);

// Plain-text model format:
//   line 1: p k
//   line 2: h coefficients, low degree first (a single 0 for h = 0)
//   line 3: f coefficients, low degree first
//   line 4: genus
//   line 5: infinity rule, one of auto|one|two|zero
// '#' starts a comment.
struct ModelFile {
    unsigned long p = 0;
    unsigned long k = 1;
    HyperellipticModel model;
};
ModelFile parse_model_file(const std::string& text);

extern const std::uint64_t kCountGuardrail;  // max points scanned per count

}  // namespace freybound

#endif
