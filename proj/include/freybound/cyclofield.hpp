#ifndef FREYBOUND_CYCLOFIELD_HPP
#define FREYBOUND_CYCLOFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "freybound/exact_arith.hpp"
#include "freybound/intpoly.hpp"

namespace freybound {

// K = Q(zeta_r)^+ for an odd prime r, presented on the power basis of
// psi = zeta_r + zeta_r^-1. Immutable after construction.
class RealCycloField {
  public:
    // m_psi is derived from the degree-(r-1) cyclotomic polynomial by the
    // substitution y = x + 1/x; construction verifies that it is monic,
    // squarefree, of degree (r-1)/2, with all real roots inside (-2, 2).
    static std::shared_ptr<const RealCycloField> make(unsigned long r);

    unsigned long r() const { return r_; }
    unsigned long degree() const { return g_; }
    const IntPoly& min_poly() const { return m_psi_; }
    const BigInt& disc() const { return disc_; }

    // Tr(psi^k) for k = 0..upto, by Newton's identities on m_psi.
    std::vector<BigInt> psi_power_traces(std::size_t upto) const;

  private:
    RealCycloField(unsigned long r, unsigned long g, IntPoly m, BigInt d)
        : r_(r), g_(g), m_psi_(std::move(m)), disc_(std::move(d)) {}
    unsigned long r_;
    unsigned long g_;
    IntPoly m_psi_;
    BigInt disc_;
};

using FieldPtr = std::shared_ptr<const RealCycloField>;

// Element of O_K = Z[psi] as an integer polynomial in psi of degree < g.
class NFElem {
  public:
    NFElem() = default;
    // reduces coords mod m_psi
    NFElem(FieldPtr field, IntPoly coords);
    static NFElem from_int(FieldPtr field, const BigInt& n);
    static NFElem psi(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const IntPoly& coords() const { return coords_; }
    bool is_zero() const { return coords_.is_zero(); }
    bool is_rational() const { return coords_.degree() <= 0; }
    // value when is_rational(), else throws
    BigInt rational_value() const;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator-() const;
    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }
    // lexicographic on (degree, coefficient vector); deterministic ordering
    bool operator<(const NFElem& o) const;

    std::string to_string() const;

  private:
    void check_same_field(const NFElem& o) const;
    FieldPtr field_;
    IntPoly coords_;
};

// sigma_a : psi -> zeta^a + zeta^-a, for gcd(a, r) = 1. sigma_a = sigma_{r-a}.
NFElem galois_conjugate(const NFElem& e, unsigned long a);

// N_{K/Q}(e) = product of all real embeddings of e.
BigInt field_norm(const NFElem& e);

// Monic integer polynomial of degree g whose roots are the g embeddings of e
// (with multiplicities when e generates a proper subfield).
IntPoly embedding_charpoly(const NFElem& e);

// Every real embedding of e is >= 0. Exact, via Sturm counts on the
// squarefree part of embedding_charpoly.
bool totally_nonneg(const NFElem& e);

// Every real embedding of e lies in [-bound, bound].
bool conjugate_bound_check(const NFElem& e, const Rational& bound);

// Every real embedding of e lies in [-2 sqrt(Q), 2 sqrt(Q)]; the square
// root is never floated, the test runs on 4Q - e^2.
bool conjugate_bound_check_sqrt(const NFElem& e, const BigInt& Q);

}  // namespace freybound

#endif
