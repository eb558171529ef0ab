#include "freybound/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace freybound {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = c;
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::leading_coeff() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const BigInt& IntPoly::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) - o.coeff(i);
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const BigInt& c) const {
    if (c == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    // sign of sum c_i num^i den^(n-i); den > 0 so this matches sign of f(x)
    const BigInt num = x.get_num();
    const BigInt den = x.get_den();
    BigInt acc = 0;
    BigInt dpow = 1;
    // Horner from the top: acc = acc*num + c_i*den^(n-i)
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * num + *it * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = coeffs_[i] * BigInt(static_cast<long>(i));
    r.trim();
    return r;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        g = gcd_of(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    return divexact_by(content());
}

IntPoly IntPoly::divexact_by(const BigInt& c) const {
    if (c == 0) throw std::invalid_argument("division by zero");
    IntPoly r(*this);
    for (auto& x : r.coeffs_) x = divexact(x, c);
    return r;
}

IntPoly IntPoly::divexact_by(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw std::logic_error("divexact_by: not divisible");
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - d.degree()) + 1, BigInt(0));
    const BigInt& lc = d.leading_coeff();
    for (long k = degree() - d.degree(); k >= 0; --k) {
        BigInt top = rem[static_cast<std::size_t>(k + d.degree())];
        if (top == 0) continue;
        BigInt q = divexact(top, lc);
        quot[static_cast<std::size_t>(k)] = q;
        for (long i = 0; i <= d.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * d.coeff(static_cast<std::size_t>(i));
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("divexact_by: nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::pseudo_rem(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("pseudo_rem by zero polynomial");
    if (is_zero() || degree() < d.degree()) return *this;
    const BigInt& l = d.leading_coeff();
    IntPoly r = *this;
    long e = degree() - d.degree() + 1;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long shift = r.degree() - d.degree();
        BigInt top = r.leading_coeff();
        // r <- l*r - top * x^shift * d
        IntPoly scaled = r * l;
        for (long i = 0; i <= d.degree(); ++i)
            scaled.coeffs_[static_cast<std::size_t>(shift + i)] -= top * d.coeff(static_cast<std::size_t>(i));
        scaled.trim();
        r = std::move(scaled);
        --e;
    }
    if (e > 0) r = r * pow_ui(l, static_cast<unsigned long>(e));
    return r;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const BigInt& c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt a = abs_of(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.leading_coeff() > 0 ? b : -b;
    if (b.is_zero()) return a.leading_coeff() > 0 ? a : -a;
    BigInt cont = gcd_of(a.content(), b.content());
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = f.pseudo_rem(g);
        f = std::move(g);
        g = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    if (f.leading_coeff() < 0) f = -f;
    return f * cont;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) return IntPoly();
    if (f.degree() == 0) return IntPoly::constant(1);
    IntPoly s = f.divexact_by(poly_gcd(f, f.derivative())).primitive_part();
    if (s.leading_coeff() < 0) s = -s;
    return s;
}

IntPoly interpolate_integer_poly(const std::vector<std::pair<BigInt, BigInt>>& pts) {
    const std::size_t n = pts.size();
    if (n == 0) return IntPoly();
    // Newton divided differences in exact rationals
    std::vector<Rational> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = Rational(pts[i].second);
    std::vector<Rational> coef(n);
    coef[0] = col[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n; i-- > level;) {
            Rational dx(pts[i].first - pts[i - level].first);
            if (dx == 0) throw std::invalid_argument("interpolate: duplicate x");
            col[i] = (col[i] - col[i - 1]) / dx;
        }
        coef[level] = col[level];
    }
    // expand sum_k coef[k] * prod_{j<k} (x - x_j)
    std::vector<Rational> acc(1, Rational(0));
    std::vector<Rational> basis(1, Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) acc[i] += coef[k] * basis[i];
        if (k + 1 < n) {
            // basis <- basis * (x - x_k)
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            Rational xk(pts[k].first);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= basis[i] * xk;
            }
            basis = std::move(next);
        }
    }
    std::vector<BigInt> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i].get_den() != 1) throw std::logic_error("interpolate: non-integral coefficient");
        out[i] = acc[i].get_num();
    }
    return IntPoly(std::move(out));
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

}  // namespace freybound
