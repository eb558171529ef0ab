#include "freybound/zeta_count.hpp"

#include <algorithm>
#include <sstream>

#include "freybound/parallel.hpp"

namespace freybound {

const std::uint64_t kCountGuardrail = 10000000;

namespace {

// ---- small F_p[x] helpers for modulus construction and smoothness checks ----

using ModPoly = std::vector<unsigned long>;  // low first, entries in [0, p)

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long mp_deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

ModPoly mp_from_intpoly(const IntPoly& f, unsigned long p) {
    ModPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        BigInt m = c % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        r.push_back(m.get_ui());
    }
    mp_trim(r);
    return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    mp_trim(r);
    return r;
}

unsigned long mp_inv_scalar(unsigned long a, unsigned long p) {
    long t = 0, newt = 1;
    long r = static_cast<long>(p), newr = static_cast<long>(a % p);
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<long>(p);
    return static_cast<unsigned long>(t);
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, unsigned long p) {
    mp_trim(a);
    if (b.empty()) throw std::logic_error("mp_rem: zero divisor");
    unsigned long binv = mp_inv_scalar(b.back(), p);
    while (mp_deg(a) >= mp_deg(b)) {
        unsigned long c = (a.back() * binv) % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + (p - (c * b[j]) % p)) % p;
        mp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, unsigned long p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ModPoly mp_derivative(const ModPoly& a, unsigned long p) {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back((a[i] * (i % p)) % p);
    mp_trim(r);
    return r;
}

ModPoly mp_pow_mod(ModPoly base, BigInt e, const ModPoly& m, unsigned long p) {
    ModPoly acc{1};
    base = mp_rem(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mp_rem(mp_mul(acc, base, p), m, p);
        base = mp_rem(mp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

bool mp_is_irreducible(const ModPoly& m, unsigned long p) {
    long k = mp_deg(m);
    if (k < 1) return false;
    ModPoly xr = mp_rem(ModPoly{0, 1}, m, p);  // x reduced mod m (matters for k = 1)
    ModPoly t = xr;
    for (long d = 1; d <= k; ++d) {
        t = mp_pow_mod(t, BigInt(static_cast<long>(p)), m, p);  // x^(p^d) mod m
        // diff = t - x mod m
        ModPoly diff = t;
        diff.resize(std::max<std::size_t>(diff.size(), xr.size()), 0);
        for (std::size_t i = 0; i < xr.size(); ++i) diff[i] = (diff[i] + p - xr[i]) % p;
        mp_trim(diff);
        if (d < k) {
            if (diff.empty()) return false;
            if (mp_deg(mp_gcd(m, diff, p)) > 0) return false;
        } else {
            if (!diff.empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(unsigned long p, unsigned long k, std::vector<unsigned long> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (unsigned long i = 0; i < k; ++i) q_ *= p;
}

std::shared_ptr<const FiniteField> FiniteField::make(unsigned long p, unsigned long k) {
    if (k < 1) throw std::invalid_argument("FiniteField: k must be >= 1");
    if (!is_prime(BigInt(static_cast<long>(p))))
        throw std::invalid_argument("FiniteField: p must be prime");
    // guardrail: element count must stay enumerable
    BigInt qq = pow_ui(BigInt(static_cast<long>(p)), k);
    if (qq > static_cast<long>(kCountGuardrail)) {
        std::ostringstream os;
        os << "FiniteField: q = " << p << "^" << k << " = " << qq.get_str()
           << " exceeds the naive guardrail of " << kCountGuardrail << " elements";
        throw CostGuardError(os.str());
    }
    // lexicographically smallest monic irreducible: scan the low-coefficient
    // vectors in base-p counter order
    std::uint64_t q = qq.get_ui();
    for (std::uint64_t idx = 0;; ++idx) {
        if (idx >= q) throw std::logic_error("FiniteField: no irreducible found");
        ModPoly m(k + 1, 0);
        std::uint64_t v = idx;
        for (unsigned long i = 0; i < k; ++i) {
            m[i] = v % p;
            v /= p;
        }
        m[k] = 1;
        if (mp_is_irreducible(m, p))
            return std::shared_ptr<const FiniteField>(new FiniteField(p, k, std::move(m)));
    }
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint64_t r = 0, mult = 1;
    for (unsigned long i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a + p_ - b % p_) % p_;
    std::uint64_t r = 0, mult = 1;
    for (unsigned long i = 0; i < k_; ++i) {
        r += ((a % p_ + p_ - b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t FiniteField::mul_slow(std::uint64_t a, std::uint64_t b) const {
    std::vector<std::uint64_t> da(k_), db(k_);
    for (unsigned long i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned long i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned long j = 0; j < k_; ++j) prod[i + j] += da[i] * db[j];
    }
    for (auto& d : prod) d %= p_;
    for (unsigned long i = 2 * k_ - 2; i >= k_; --i) {
        std::uint64_t c = prod[i];
        if (c != 0) {
            for (unsigned long j = 0; j < k_; ++j)
                prod[i - k_ + j] = (prod[i - k_ + j] + c * (p_ - modulus_[j])) % p_;
            prod[i] = 0;
        }
        if (i == k_) break;
    }
    std::uint64_t r = 0, mult = 1;
    for (unsigned long i = 0; i < k_; ++i) {
        r += (prod[i] % p_) * mult;
        mult *= p_;
    }
    return r;
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a * b) % p_;
    return mul_slow(a, b);
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("FiniteField: inverse of zero");
    return pow(a, q_ - 2);
}

std::uint64_t FiniteField::from_integer(const BigInt& n) const {
    BigInt m = n % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return m.get_ui();
}

unsigned long FiniteField::trace(std::uint64_t a) const {
    std::uint64_t acc = a, t = a;
    for (unsigned long i = 1; i < k_; ++i) {
        t = pow(t, p_);
        acc = add(acc, t);
    }
    if (acc >= p_) throw std::logic_error("FiniteField: trace left the prime field");
    return static_cast<unsigned long>(acc);
}

std::uint64_t FiniteField::eval_poly(const IntPoly& f, std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = add(mul(acc, x), from_integer(*it));
    return acc;
}

namespace {

void check_model_shape(const HyperellipticModel& model) {
    long df = model.f.degree();
    long target = static_cast<long>(2 * model.genus);
    if (df != target + 1 && df != target + 2)
        throw std::invalid_argument("model: deg f must be 2g+1 or 2g+2");
    if (model.h.degree() > static_cast<long>(model.genus) + 1)
        throw std::invalid_argument("model: deg h must be <= g+1");
}

std::string mp_to_string(const ModPoly& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i];
    os << "]";
    return os.str();
}

// Odd characteristic: the completed square F = f + h^2/4 mod p.
// Throws SingularModelError when F is not squarefree or degenerates.
ModPoly completed_square_checked(const HyperellipticModel& model, unsigned long p) {
    ModPoly h = mp_from_intpoly(model.h, p);
    ModPoly F = mp_from_intpoly(model.f, p);
    unsigned long inv4 = mp_inv_scalar(4 % p, p);
    ModPoly h2 = mp_mul(h, h, p);
    for (auto& c : h2) c = (c * inv4) % p;
    F.resize(std::max(F.size(), h2.size()), 0);
    for (std::size_t i = 0; i < h2.size(); ++i) F[i] = (F[i] + h2[i]) % p;
    mp_trim(F);
    long target = static_cast<long>(2 * model.genus);
    if (mp_deg(F) != target + 1 && mp_deg(F) != target + 2)
        throw SingularModelError("model: degree collapses mod " + std::to_string(p) +
                                 " (completed square has degree " + std::to_string(mp_deg(F)) +
                                 ")");
    ModPoly g = mp_gcd(F, mp_derivative(F, p), p);
    if (mp_deg(g) > 0)
        throw SingularModelError("model: singular mod " + std::to_string(p) +
                                 ", repeated-root witness " + mp_to_string(g));
    return F;
}

// Characteristic 2 smoothness: no common root of h and f'^2 + f h'^2.
void check_nonsingular_char2(const HyperellipticModel& model) {
    const unsigned long p = 2;
    ModPoly h = mp_from_intpoly(model.h, p);
    ModPoly f = mp_from_intpoly(model.f, p);
    if (h.empty()) throw SingularModelError("model: h = 0 mod 2 gives an inseparable reduction");
    if (mp_deg(f) != model.f.degree())
        throw SingularModelError("model: leading coefficient of f vanishes mod 2");
    ModPoly fp = mp_derivative(f, p);
    ModPoly hp = mp_derivative(h, p);
    ModPoly crit = mp_mul(fp, fp, p);
    ModPoly fh = mp_mul(f, mp_mul(hp, hp, p), p);
    crit.resize(std::max(crit.size(), fh.size()), 0);
    for (std::size_t i = 0; i < fh.size(); ++i) crit[i] = (crit[i] + fh[i]) % p;
    mp_trim(crit);
    ModPoly g = crit.empty() ? h : mp_gcd(h, crit, p);
    if (mp_deg(g) > 0)
        throw SingularModelError("model: singular mod 2, gcd witness " + mp_to_string(g));
}

// per-x affine counting shared by both characteristics
template <typename PerX>
BigInt sum_over_field(const FinFieldPtr& field, unsigned workers, PerX&& per_x) {
    auto worker = [&](std::size_t begin, std::size_t end) {
        std::uint64_t cnt = 0;
        for (std::uint64_t x = begin; x < end; ++x) cnt += per_x(x);
        return cnt;
    };
    auto chunks = chunked_parallel<std::uint64_t>(field->q(), workers, worker);
    BigInt total = 0;
    for (auto c : chunks) total += static_cast<unsigned long>(c);
    return total;
}

// prime-field coefficients as field elements, low first
std::vector<std::uint64_t> embed_coeffs(const ModPoly& a) {
    return std::vector<std::uint64_t>(a.begin(), a.end());
}

std::uint64_t horner(const FinFieldPtr& field, const std::vector<std::uint64_t>& c,
                     std::uint64_t x) {
    std::uint64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field->add(field->mul(acc, x), *it);
    return acc;
}

}  // namespace

BigInt count_points(const HyperellipticModel& model, const FinFieldPtr& field, unsigned workers) {
    check_model_shape(model);
    const std::uint64_t q = field->q();
    const long odd_deg = static_cast<long>(2 * model.genus) + 1;

    if (field->p() == 2) {
        check_nonsingular_char2(model);
        auto hc = embed_coeffs(mp_from_intpoly(model.h, 2));
        auto fc = embed_coeffs(mp_from_intpoly(model.f, 2));
        BigInt affine = sum_over_field(field, workers, [&](std::uint64_t x) -> std::uint64_t {
            std::uint64_t hx = horner(field, hc, x);
            if (hx == 0) return 1;  // y^2 = f(x): Frobenius is a bijection
            std::uint64_t fx = horner(field, fc, x);
            std::uint64_t hinv = field->inv(hx);
            std::uint64_t u = field->mul(fx, field->mul(hinv, hinv));
            return (field->trace(u) == 0) ? 2 : 0;
        });
        BigInt inf;
        switch (model.infinity_rule) {
            case InfinityRule::one_point: inf = 1; break;
            case InfinityRule::two_points: inf = 2; break;
            case InfinityRule::zero_points: inf = 0; break;
            case InfinityRule::automatic:
                if (model.f.degree() != odd_deg)
                    throw std::invalid_argument(
                        "model: points at infinity for an even-degree model in "
                        "characteristic 2 must be declared");
                inf = 1;
                break;
        }
        return affine + inf;
    }

    // odd characteristic: y'^2 = F(x) with F = f + h^2/4
    ModPoly F = completed_square_checked(model, field->p());
    auto Fc = embed_coeffs(F);
    std::vector<bool> sq(q, false);
    for (std::uint64_t y = 1; y < q; ++y) sq[field->mul(y, y)] = true;

    BigInt affine = sum_over_field(field, workers, [&](std::uint64_t x) -> std::uint64_t {
        std::uint64_t v = horner(field, Fc, x);
        if (v == 0) return 1;
        return sq[v] ? 2 : 0;
    });

    BigInt inf;
    switch (model.infinity_rule) {
        case InfinityRule::one_point: inf = 1; break;
        case InfinityRule::two_points: inf = 2; break;
        case InfinityRule::zero_points: inf = 0; break;
        case InfinityRule::automatic:
            if (mp_deg(F) == odd_deg)
                inf = 1;
            else
                inf = sq[F.back()] ? 2 : 0;  // 1 + chi(lc F)
            break;
    }
    return affine + inf;
}

LPolynomial l_polynomial(const HyperellipticModel& model, const FinFieldPtr& base,
                         unsigned workers) {
    check_model_shape(model);
    const unsigned long g = model.genus;
    BigInt q(static_cast<unsigned long>(base->q()));
    BigInt cost = pow_ui(q, g);
    if (cost > static_cast<long>(kCountGuardrail)) {
        std::ostringstream os;
        os << "l_polynomial: counting over F_(q^" << g << ") needs " << cost.get_str()
           << " point evaluations, beyond the guardrail of " << kCountGuardrail;
        throw CostGuardError(os.str());
    }

    std::vector<BigInt> s(g + 1);  // power sums of Frobenius eigenvalues
    for (unsigned long j = 1; j <= g; ++j) {
        auto ext = FiniteField::make(base->p(), base->k() * j);
        BigInt nj = count_points(model, ext, workers);
        s[j] = pow_ui(q, j) + 1 - nj;
    }

    // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i
    std::vector<BigInt> e(2 * g + 1);
    e[0] = 1;
    for (unsigned long k = 1; k <= g; ++k) {
        BigInt acc = 0;
        for (unsigned long i = 1; i <= k; ++i) {
            BigInt term = e[k - i] * s[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
            throw std::logic_error(
                "l_polynomial: Newton identity failed; re-check nonsingularity first");
        e[k] = divexact(acc, BigInt(static_cast<long>(k)));
    }
    for (unsigned long i = 1; i <= g; ++i) e[g + i] = pow_ui(q, i) * e[g - i];

    // L(T) = sum (-1)^k e_k T^k; charpoly P(x) = x^2g L(1/x)
    std::vector<BigInt> lcoef(2 * g + 1);
    for (unsigned long k = 0; k <= 2 * g; ++k) lcoef[k] = (k % 2) ? -e[k] : e[k];
    LPolynomial L{q, g, IntPoly(std::move(lcoef))};
    if (!is_weil_charpoly(frobenius_charpoly(L), q))
        throw std::logic_error(
            "l_polynomial: Weil bound violated during assembly; re-check nonsingularity first");
    return L;
}

IntPoly frobenius_charpoly(const LPolynomial& L) {
    std::vector<BigInt> c(2 * L.genus + 1);
    for (unsigned long i = 0; i <= 2 * L.genus; ++i) c[i] = L.poly.coeff(2 * L.genus - i);
    return IntPoly(std::move(c));
}

BigInt predicted_count(const LPolynomial& L, unsigned long k) {
    const unsigned long n = 2 * L.genus;
    std::vector<BigInt> e(n + 1);
    for (unsigned long i = 0; i <= n; ++i) {
        BigInt li = L.poly.coeff(i);
        e[i] = (i % 2) ? -li : li;
    }
    std::vector<BigInt> p(k + 1);
    for (unsigned long j = 1; j <= k; ++j) {
        BigInt acc = 0;
        for (unsigned long i = 1; i <= std::min<unsigned long>(j, n); ++i) {
            BigInt term = e[i] * ((i == j) ? BigInt(static_cast<long>(j)) : p[j - i]);
            acc += (i % 2 == 1) ? term : -term;
        }
        p[j] = acc;
    }
    return pow_ui(L.q, k) + 1 - p[k];
}

std::vector<TraceEntry> match_rm_traces(const LPolynomial& L, const WeilTraceSet& candidates) {
    if (candidates.Q != L.q)
        throw std::invalid_argument("match_rm_traces: candidate Q differs from L-polynomial q");
    unsigned long expected_genus =
        (candidates.mode == TraceMode::rational) ? 1 : candidates.field->degree();
    if (L.genus != expected_genus)
        throw std::invalid_argument("match_rm_traces: genus does not match trace-set degree");
    IntPoly target = frobenius_charpoly(L);
    std::vector<TraceEntry> out;
    for (const auto& entry : candidates.elements)
        if (trace_charpoly(entry.value, candidates.Q) == target) out.push_back(entry);
    return out;
}

ModelFile parse_model_file(const std::string& text) {
    // strip comments, then read whitespace-separated tokens line-aware
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    if (lines.size() != 5) throw std::invalid_argument("model file: expected 5 data lines");
    ModelFile mf;
    if (lines[0].size() != 2) throw std::invalid_argument("model file: line 1 must be 'p k'");
    mf.p = std::stoul(lines[0][0]);
    mf.k = std::stoul(lines[0][1]);
    auto read_poly = [](const std::vector<std::string>& toks) {
        std::vector<BigInt> c;
        for (const auto& s : toks) c.push_back(bigint_from_string(s));
        return IntPoly(std::move(c));
    };
    mf.model.h = read_poly(lines[1]);
    mf.model.f = read_poly(lines[2]);
    if (lines[3].size() != 1) throw std::invalid_argument("model file: line 4 must be the genus");
    mf.model.genus = std::stoul(lines[3][0]);
    if (lines[4].size() != 1)
        throw std::invalid_argument("model file: line 5 must be the infinity rule");
    const std::string& rule = lines[4][0];
    if (rule == "auto")
        mf.model.infinity_rule = InfinityRule::automatic;
    else if (rule == "one")
        mf.model.infinity_rule = InfinityRule::one_point;
    else if (rule == "two")
        mf.model.infinity_rule = InfinityRule::two_points;
    else if (rule == "zero")
        mf.model.infinity_rule = InfinityRule::zero_points;
    else
        throw std::invalid_argument("model file: unknown infinity rule '" + rule + "'");
    return mf;
}

}  // namespace freybound
