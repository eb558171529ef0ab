#include "freybound/cyclofield.hpp"

#include <sstream>
#include <stdexcept>

namespace freybound {

namespace {

// remainder of f modulo a monic divisor (exact over Z)
IntPoly rem_monic(const IntPoly& f, const IntPoly& m) {
    return f.pseudo_rem(m);  // lc(m) = 1, so the pseudo remainder is exact
}

}  // namespace

std::shared_ptr<const RealCycloField> RealCycloField::make(unsigned long r) {
    if (r < 3 || r % 2 == 0 || !is_prime(BigInt(static_cast<long>(r))))
        throw std::invalid_argument("RealCycloField: r must be an odd prime >= 3");
    unsigned long g = (r - 1) / 2;
    // Phi_r(x)/x^g = 1 + sum_{k=1..g} (x^k + x^-k); substitute
    // x^k + x^-k = C_k(y) with C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}.
    IntPoly y{0, 1};
    IntPoly c_prev = IntPoly::constant(2);
    IntPoly c_cur = y;
    IntPoly m = IntPoly::constant(1) + y;
    for (unsigned long k = 2; k <= g; ++k) {
        IntPoly c_next = y * c_cur - c_prev;
        m = m + c_next;
        c_prev = std::move(c_cur);
        c_cur = std::move(c_next);
    }
    if (m.degree() != static_cast<long>(g) || !m.is_monic())
        throw std::logic_error("RealCycloField: minimal polynomial malformed");
    if (!is_squarefree(m)) throw std::logic_error("RealCycloField: m_psi not squarefree");
    if (sturm_root_count(m, Rational(-2), Rational(2)) != static_cast<long>(g))
        throw std::logic_error("RealCycloField: m_psi not totally real in (-2,2)");
    BigInt d = poly_discriminant(m);
    return std::shared_ptr<const RealCycloField>(new RealCycloField(r, g, std::move(m), std::move(d)));
}

std::vector<BigInt> RealCycloField::psi_power_traces(std::size_t upto) const {
    // Newton's identities for the monic m_psi = x^g + c_{g-1} x^{g-1} + ... + c_0
    std::vector<BigInt> p(upto + 1);
    long g = static_cast<long>(g_);
    p[0] = BigInt(static_cast<long>(g_));
    for (std::size_t k = 1; k <= upto; ++k) {
        BigInt acc = 0;
        long kk = static_cast<long>(k);
        if (kk <= g) acc = BigInt(-kk) * m_psi_.coeff(static_cast<std::size_t>(g - kk));
        for (long i = 1; i < kk && i <= g; ++i)
            acc -= m_psi_.coeff(static_cast<std::size_t>(g - i)) * p[k - static_cast<std::size_t>(i)];
        p[k] = acc;
    }
    return p;
}

NFElem::NFElem(FieldPtr field, IntPoly coords) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("NFElem: null field");
    coords_ = rem_monic(coords, field_->min_poly());
}

NFElem NFElem::from_int(FieldPtr field, const BigInt& n) {
    return NFElem(std::move(field), IntPoly::constant(n));
}

NFElem NFElem::psi(FieldPtr field) { return NFElem(std::move(field), IntPoly{0, 1}); }

BigInt NFElem::rational_value() const {
    if (!is_rational()) throw std::logic_error("NFElem: not a rational integer");
    return coords_.coeff(0);
}

void NFElem::check_same_field(const NFElem& o) const {
    if (!field_ || !o.field_ || field_->r() != o.field_->r())
        throw std::invalid_argument("NFElem: field mismatch");
}

NFElem NFElem::operator+(const NFElem& o) const {
    check_same_field(o);
    return NFElem(field_, coords_ + o.coords_);
}

NFElem NFElem::operator-(const NFElem& o) const {
    check_same_field(o);
    return NFElem(field_, coords_ - o.coords_);
}

NFElem NFElem::operator*(const NFElem& o) const {
    check_same_field(o);
    return NFElem(field_, coords_ * o.coords_);
}

NFElem NFElem::operator-() const { return NFElem(field_, -coords_); }

bool NFElem::operator==(const NFElem& o) const {
    check_same_field(o);
    return coords_ == o.coords_;
}

bool NFElem::operator<(const NFElem& o) const {
    check_same_field(o);
    const auto& a = coords_.coeffs();
    const auto& b = o.coords_.coeffs();
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
        const BigInt& x = coords_.coeff(i);
        const BigInt& y = o.coords_.coeff(i);
        if (x != y) return x < y;
    }
    return false;
}

std::string NFElem::to_string() const { return coords_.to_string("psi"); }

NFElem galois_conjugate(const NFElem& e, unsigned long a) {
    const FieldPtr& F = e.field();
    if (!F) throw std::invalid_argument("galois_conjugate: element without field");
    unsigned long r = F->r();
    a %= r;
    if (a == 0) throw std::invalid_argument("galois_conjugate: a must be coprime to r");
    const IntPoly& m = F->min_poly();
    // D_a(psi) by the recurrence D_0 = 2, D_1 = psi, D_{k+1} = psi D_k - D_{k-1}
    IntPoly y{0, 1};
    IntPoly d_prev = IntPoly::constant(2);
    IntPoly d_cur = y;
    for (unsigned long k = 1; k < a; ++k) {
        IntPoly d_next = rem_monic(y * d_cur - d_prev, m);
        d_prev = std::move(d_cur);
        d_cur = std::move(d_next);
    }
    IntPoly image = std::move(d_cur);  // psi -> D_a(psi)
    // Horner-compose coords at the image, reducing as we go
    IntPoly acc;
    const IntPoly& A = e.coords();
    for (long i = A.degree(); i >= 0; --i) {
        acc = rem_monic(acc * image, m) + IntPoly::constant(A.coeff(static_cast<std::size_t>(i)));
    }
    return NFElem(F, acc);
}

BigInt field_norm(const NFElem& e) {
    if (e.is_zero()) return 0;
    const FieldPtr& F = e.field();
    if (e.is_rational()) return pow_ui(e.rational_value(), F->degree());
    // product of embeddings = Res with the convention fixed in exact_arith:
    // poly_resultant(A, m_psi) = lc(m)^deg(A) * prod_j A(psi_j)
    return poly_resultant(e.coords(), F->min_poly());
}

IntPoly embedding_charpoly(const NFElem& e) {
    const FieldPtr& F = e.field();
    if (!F) throw std::invalid_argument("embedding_charpoly: element without field");
    unsigned long g = F->degree();
    if (e.is_rational()) {
        // (x - c)^g
        IntPoly lin(std::vector<BigInt>{-e.coords().coeff(0), BigInt(1)});
        IntPoly acc = IntPoly::constant(1);
        for (unsigned long i = 0; i < g; ++i) acc = acc * lin;
        return acc;
    }
    // R(t) = prod_j (t - A(psi_j)), recovered from g+1 exact evaluations
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (long t = 0; pts.size() < g + 1; ++t) {
        IntPoly shifted = IntPoly::constant(BigInt(t)) - e.coords();
        pts.emplace_back(BigInt(t), poly_resultant(shifted, F->min_poly()));
    }
    IntPoly cp = interpolate_integer_poly(pts);
    if (cp.degree() != static_cast<long>(g) || !cp.is_monic())
        throw std::logic_error("embedding_charpoly: interpolation failure");
    return cp;
}

bool totally_nonneg(const NFElem& e) {
    if (e.is_zero()) return true;
    IntPoly cp = squarefree_part(embedding_charpoly(e));
    // an embedding equal to 0 is admissible; strip the (single) x factor
    if (cp.coeff(0) == 0) cp = cp.divexact_by(IntPoly{0, 1});
    if (cp.degree() < 1) return true;
    SturmChain chain(cp);
    Rational m = chain.root_bound();
    return chain.count_in(-m, Rational(0)) == 0;
}

bool conjugate_bound_check(const NFElem& e, const Rational& bound) {
    if (!(bound > 0)) throw std::invalid_argument("conjugate_bound_check: bound must be positive");
    const BigInt n = bound.get_num();
    const BigInt d = bound.get_den();
    NFElem scaled = NFElem::from_int(e.field(), d) * e;
    NFElem u = NFElem::from_int(e.field(), n * n) - scaled * scaled;
    return totally_nonneg(u);
}

bool conjugate_bound_check_sqrt(const NFElem& e, const BigInt& Q) {
    if (Q <= 0) throw std::invalid_argument("conjugate_bound_check_sqrt: Q must be positive");
    NFElem u = NFElem::from_int(e.field(), 4 * Q) - e * e;
    return totally_nonneg(u);
}

}  // namespace freybound
