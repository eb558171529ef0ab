#include "freybound/exact_arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace freybound {

namespace {

// Res(A, B) = lc(A)^deg(B) * prod_{A(a)=0} B(a), by the subresultant PRS
// (Cohen, Algorithm 3.3.7). Exact integer arithmetic throughout.
BigInt subresultant_res(IntPoly A, IntPoly B) {
    if (A.degree() == 0) return pow_ui(A.leading_coeff(), static_cast<unsigned long>(B.degree()));
    if (B.degree() == 0) return pow_ui(B.leading_coeff(), static_cast<unsigned long>(A.degree()));

    int sign = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    }

    BigInt ca = A.content();
    BigInt cb = B.content();
    A = A.divexact_by(ca);
    B = B.divexact_by(cb);
    BigInt t = pow_ui(ca, static_cast<unsigned long>(B.degree())) *
               pow_ui(cb, static_cast<unsigned long>(A.degree()));

    BigInt g = 1, h = 1;
    int s = 1;
    while (true) {
        long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = A.pseudo_rem(B);
        A = std::move(B);
        B = R.is_zero() ? IntPoly()
                        : R.divexact_by(g * pow_ui(h, static_cast<unsigned long>(delta)));
        if (B.is_zero()) return 0;  // loop invariant keeps deg A >= 1 here
        g = A.leading_coeff();
        if (delta > 0)
            h = divexact(pow_ui(g, static_cast<unsigned long>(delta)),
                         pow_ui(h, static_cast<unsigned long>(delta - 1)));
        if (B.degree() == 0) break;
    }
    unsigned long d = static_cast<unsigned long>(A.degree());
    BigInt h_final = divexact(pow_ui(B.leading_coeff(), d), pow_ui(h, d - 1));
    return BigInt(sign * s) * t * h_final;
}

}  // namespace

BigInt poly_resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("poly_resultant: zero input polynomial");
    // convention lc(g)^deg(f) * prod_{g(b)=0} f(b)  ==  Res(g, f)
    return subresultant_res(g, f);
}

BigInt poly_discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("poly_discriminant: degree must be >= 1");
    if (f.degree() == 1) return 1;
    long n = f.degree();
    BigInt res = poly_resultant(f, f.derivative());
    BigInt disc = divexact(res, f.leading_coeff());
    return ((n * (n - 1) / 2) % 2 != 0) ? BigInt(-disc) : disc;
}

SturmChain::SturmChain(const IntPoly& f) {
    IntPoly p0 = f.primitive_part();
    chain_.push_back(p0);
    if (p0.degree() < 1) return;
    IntPoly p1 = f.derivative().primitive_part();
    chain_.push_back(p1);
    while (chain_.back().degree() > 0) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        IntPoly r = a.pseudo_rem(b);
        if (r.is_zero()) break;  // non-squarefree input; callers check first
        // pseudo_rem scales by lc(b)^(delta+1); keep only positive factors
        long e = a.degree() - b.degree() + 1;
        int mult_sign = (b.leading_coeff() < 0 && (e & 1)) ? -1 : 1;
        IntPoly next = (mult_sign < 0) ? r : -r;
        chain_.push_back(next.primitive_part());
    }
}

long SturmChain::variations_at(const Rational& x) const {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long SturmChain::count_in(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

Rational SturmChain::root_bound() const {
    const IntPoly& f = chain_.front();
    if (f.degree() < 1) return Rational(1);
    BigInt maxc = 0;
    for (long i = 0; i < f.degree(); ++i) {
        BigInt a = abs_of(f.coeff(static_cast<std::size_t>(i)));
        if (a > maxc) maxc = a;
    }
    Rational b(maxc, abs_of(f.leading_coeff()));
    b.canonicalize();
    return b + 1;  // Cauchy bound: all real roots lie strictly inside
}

long SturmChain::count_all() const {
    if (chain_.front().degree() < 1) return 0;
    Rational b = root_bound();
    return count_in(-b, b);
}

long sturm_root_count(const IntPoly& f, const Rational& lo, const Rational& hi) {
    if (f.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: requires lo < hi");
    if (!is_squarefree(f)) throw std::invalid_argument("sturm_root_count: input not squarefree");
    if (f.sign_at(lo) == 0) throw BoundaryRootError("sturm_root_count: f(lo) = 0");
    if (f.sign_at(hi) == 0) throw BoundaryRootError("sturm_root_count: f(hi) = 0");
    if (f.degree() < 1) return 0;
    return SturmChain(f).count_in(lo, hi);
}

namespace {

// Fixed witness set: deterministic for n < 3.3e24 (first 13 primes).
const unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
const unsigned long kTrialBound = 100000;

bool miller_rabin(const BigInt& n) {
    BigInt d = n - 1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }
    for (unsigned long w : kWitnesses) {
        BigInt a(static_cast<long>(w));
        if (a >= n) continue;
        BigInt x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent-cycle rho with f(x) = x^2 + c, start y = 2. Returns a nontrivial
// divisor of odd composite n, or n itself (caller advances c).
BigInt pollard_brent(const BigInt& n, unsigned long c) {
    const long m = 128;
    BigInt y = 2, g = 1, q = 1, x, ys;
    long r = 1;
    auto step = [&](BigInt& v) { v = (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (long i = 0; i < r; ++i) step(y);
        long k = 0;
        while (k < r && g == 1) {
            ys = y;
            long lim = std::min(m, r - k);
            for (long i = 0; i < lim; ++i) {
                step(y);
                q = q * abs_of(x - y) % n;
            }
            g = gcd_of(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            g = gcd_of(abs_of(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void factor_into(const BigInt& n, Factorization& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt d = pollard_brent(n, c);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(divexact(n, d), out);
            return;
        }
    }
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned long w : kWitnesses) {
        if (n == static_cast<long>(w)) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
    }
    return miller_rabin(n);
}

Factorization factorize(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    Factorization out;
    BigInt m = abs_of(n);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[BigInt(static_cast<long>(p))];
            m = divexact(m, BigInt(static_cast<long>(p)));
        }
    }
    for (unsigned long p = 7; p <= kTrialBound && m > 1; p += 6) {
        for (unsigned long q : {p, p + 4}) {  // 6k+1, 6k+5
            while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
                ++out[BigInt(static_cast<long>(q))];
                m = divexact(m, BigInt(static_cast<long>(q)));
            }
        }
    }
    if (m > 1) factor_into(m, out);
    return out;
}

BigInt lucas_power_sum(const BigInt& a, const BigInt& Q, unsigned long n) {
    if (n == 0) return 2;
    if (n == 1) return a;
    BigInt prev = 2, cur = a;
    for (unsigned long k = 1; k < n; ++k) {
        BigInt next = a * cur - Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace freybound
