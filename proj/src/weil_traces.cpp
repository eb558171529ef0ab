#include "freybound/weil_traces.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "freybound/parallel.hpp"

namespace freybound {

WeilTraceSet enum_rational_traces(const BigInt& Q) {
    if (Q < 2) throw std::invalid_argument("enum_rational_traces: Q must be >= 2");
    WeilTraceSet s;
    s.Q = Q;
    s.mode = TraceMode::rational;
    BigInt amax = isqrt(4 * Q);
    for (BigInt a = -amax; a <= amax; ++a) s.elements.push_back({Trace(a), Provenance::enumerated});
    return s;
}

namespace {

// Exact inverse of a nonsingular integer matrix, as rationals.
std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("invert_matrix: singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

std::vector<BigInt> field_trace_box(const FieldPtr& field, const BigInt& Q) {
    const unsigned long g = field->degree();
    auto p = field->psi_power_traces(2 * g - 2);
    std::vector<std::vector<Rational>> gram(g, std::vector<Rational>(g));
    for (unsigned long k = 0; k < g; ++k)
        for (unsigned long i = 0; i < g; ++i) gram[k][i] = Rational(p[k + i]);
    auto inv = invert_matrix(std::move(gram));

    // |Tr(a psi^k)| <= 2 sqrt(Q) * sum_j |psi_j|^k < 2 sqrt(Q) * g * 2^k,
    // so the integer vector w = T c obeys w_k^2 <= 4 Q g^2 4^k.
    std::vector<BigInt> w_bound(g);
    for (unsigned long k = 0; k < g; ++k)
        w_bound[k] = isqrt(4 * Q * BigInt(static_cast<long>(g * g)) * pow_ui(BigInt(4), k));

    std::vector<BigInt> box(g);
    for (unsigned long i = 0; i < g; ++i) {
        Rational acc(0);
        for (unsigned long k = 0; k < g; ++k) acc += abs(inv[i][k]) * Rational(w_bound[k]);
        BigInt c;
        mpz_fdiv_q(c.get_mpz_t(), acc.get_num().get_mpz_t(), acc.get_den().get_mpz_t());
        box[i] = c;
    }
    return box;
}

namespace {

struct RatInterval {
    Rational lo, hi;
};

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

// hull of c * iv over integer c in [clo, chi]
RatInterval iv_scale_range(const RatInterval& iv, const BigInt& clo, const BigInt& chi) {
    Rational a(clo), b(chi);
    Rational c1 = a * iv.lo, c2 = a * iv.hi, c3 = b * iv.lo, c4 = b * iv.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

// isolating intervals for all real roots of a squarefree totally real
// polynomial, refined by Sturm bisection until width <= 4 / 2^refine_bits
std::vector<RatInterval> isolate_real_roots(const IntPoly& f, unsigned refine_bits) {
    SturmChain chain(f);
    Rational b = chain.root_bound();
    struct Node {
        Rational lo, hi;
        long count;
    };
    std::vector<Node> work{{-b, b, chain.count_in(-b, b)}};
    std::vector<RatInterval> done;
    while (!work.empty()) {
        Node n = work.back();
        work.pop_back();
        if (n.count == 0) continue;
        Rational mid = (n.lo + n.hi) / 2;
        if (f.sign_at(mid) == 0) {
            done.push_back({mid, mid});  // exact rational root
            long left = chain.count_in(n.lo, mid);
            // the exact root is counted in (lo, mid]
            if (left - 1 > 0) work.push_back({n.lo, mid, left - 1});
            long right = n.count - left;
            if (right > 0) work.push_back({mid, n.hi, right});
            continue;
        }
        long left = chain.count_in(n.lo, mid);
        long right = n.count - left;
        auto emit = [&](Rational lo, Rational hi, long cnt) {
            if (cnt == 0) return;
            if (cnt == 1 && hi - lo <= Rational(4) / Rational(BigInt(1) << refine_bits)) {
                done.push_back({lo, hi});
                return;
            }
            work.push_back({std::move(lo), std::move(hi), cnt});
        };
        emit(n.lo, mid, left);
        emit(mid, n.hi, right);
    }
    std::sort(done.begin(), done.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    return done;
}

// provably |x| > 2 sqrt(Q) for every x in the interval (exact rational test)
bool iv_outside_weil(const RatInterval& iv, const BigInt& fourQ) {
    if (iv.lo > 0 && iv.lo * iv.lo > Rational(fourQ)) return true;
    if (iv.hi < 0 && iv.hi * iv.hi > Rational(fourQ)) return true;
    return false;
}

}  // namespace

WeilTraceSet enum_field_traces(const FieldPtr& field, const BigInt& Q, unsigned workers) {
    if (Q < 2) throw std::invalid_argument("enum_field_traces: Q must be >= 2");
    const unsigned long g = field->degree();
    WeilTraceSet s;
    s.Q = Q;
    s.mode = TraceMode::field;
    s.field = field;

    std::vector<BigInt> box = field_trace_box(field, Q);
    const BigInt fourQ = 4 * Q;

    // rational enclosures of the conjugates psi_j and their powers psi_j^i
    auto roots = isolate_real_roots(field->min_poly(), 40);
    std::vector<std::vector<RatInterval>> pw(g, std::vector<RatInterval>(g));
    for (unsigned long j = 0; j < g; ++j) {
        pw[j][0] = {Rational(1), Rational(1)};
        for (unsigned long i = 1; i < g; ++i) pw[j][i] = iv_mul(pw[j][i - 1], roots[j]);
    }
    // hull of the free part sum_{i < level} c_i psi_j^i over the whole box
    std::vector<std::vector<RatInterval>> free_hull(g + 1, std::vector<RatInterval>(g));
    for (unsigned long j = 0; j < g; ++j) free_hull[0][j] = {Rational(0), Rational(0)};
    for (unsigned long level = 1; level <= g; ++level)
        for (unsigned long j = 0; j < g; ++j) {
            RatInterval contrib = iv_scale_range(pw[j][level - 1], -box[level - 1], box[level - 1]);
            free_hull[level][j] = {free_hull[level - 1][j].lo + contrib.lo,
                                   free_hull[level - 1][j].hi + contrib.hi};
        }

    BigInt top = box[g - 1];
    BigInt top_range = 2 * top + 1;
    if (!fits_ulong(top_range))
        throw CostGuardError("enum_field_traces: top coordinate range " + top_range.get_str() +
                             " is not enumerable");
    std::size_t top_count = top_range.get_ui();

    // outer rational bound on 2 sqrt(Q), for solving coordinate ranges;
    // the exact leaf check removes any overshoot
    const Rational s_bound = Rational(isqrt(fourQ) + 1);

    auto floor_rat = [](const Rational& x) {
        BigInt r;
        mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
        return r;
    };
    auto ceil_rat = [](const Rational& x) {
        BigInt r;
        mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
        return r;
    };

    // depth-first over coordinates c_{g-1}, ..., c_0: each level solves the
    // embedding constraints for a feasible integer range of the next
    // coordinate, then recurses; leaves still pass through the exact
    // Sturm-based conjugate check
    auto sweep = [&](std::size_t begin, std::size_t end) {
        std::vector<NFElem> found;
        std::vector<BigInt> c(g);
        std::vector<std::vector<RatInterval>> fixed(g + 1, std::vector<RatInterval>(g));
        for (unsigned long j = 0; j < g; ++j) fixed[g][j] = {Rational(0), Rational(0)};

        // conservative integer range for c_i given the fixed part above it
        auto solve_range = [&](unsigned long i, BigInt& vlo, BigInt& vhi) {
            vlo = -box[i];
            vhi = box[i];
            for (unsigned long j = 0; j < g && vlo <= vhi; ++j) {
                Rational A = -s_bound - fixed[i + 1][j].hi - free_hull[i][j].hi;
                Rational B = s_bound - fixed[i + 1][j].lo - free_hull[i][j].lo;
                const RatInterval& p = pw[j][i];
                if ((p.lo <= 0 && p.hi >= 0)) continue;  // cannot divide safely
                Rational q1 = A / p.lo, q2 = A / p.hi, q3 = B / p.lo, q4 = B / p.hi;
                Rational qmin = std::min(std::min(q1, q2), std::min(q3, q4));
                Rational qmax = std::max(std::max(q1, q2), std::max(q3, q4));
                BigInt lo_j = ceil_rat(qmin);
                BigInt hi_j = floor_rat(qmax);
                if (lo_j > vlo) vlo = lo_j;
                if (hi_j < vhi) vhi = hi_j;
            }
        };

        auto place = [&](unsigned long i, const BigInt& v) {
            c[i] = v;
            Rational vr(v);
            for (unsigned long j = 0; j < g; ++j) {
                Rational add_lo = vr >= 0 ? vr * pw[j][i].lo : vr * pw[j][i].hi;
                Rational add_hi = vr >= 0 ? vr * pw[j][i].hi : vr * pw[j][i].lo;
                fixed[i][j] = {fixed[i + 1][j].lo + add_lo, fixed[i + 1][j].hi + add_hi};
                RatInterval total{fixed[i][j].lo + free_hull[i][j].lo,
                                  fixed[i][j].hi + free_hull[i][j].hi};
                if (iv_outside_weil(total, fourQ)) return false;
            }
            return true;
        };

        std::function<void(unsigned long)> descend = [&](unsigned long level) {
            // level counts the coordinates still free; c[level..g-1] are set
            if (level == 0) {
                NFElem e(field, IntPoly(std::vector<BigInt>(c.begin(), c.end())));
                if (conjugate_bound_check_sqrt(e, Q)) found.push_back(std::move(e));
                return;
            }
            unsigned long i = level - 1;
            BigInt vlo, vhi;
            solve_range(i, vlo, vhi);
            for (BigInt v = vlo; v <= vhi; ++v)
                if (place(i, v)) descend(i);
        };

        for (std::size_t ti = begin; ti < end; ++ti) {
            BigInt v = -top + BigInt(static_cast<long>(ti));
            if (!place(g - 1, v)) continue;
            if (g == 1) {
                NFElem e(field, IntPoly(std::vector<BigInt>{c[0]}));
                if (conjugate_bound_check_sqrt(e, Q)) found.push_back(std::move(e));
            } else {
                descend(g - 1);
            }
        }
        return found;
    };

    auto chunks = chunked_parallel<std::vector<NFElem>>(top_count, workers, sweep);
    for (auto& ch : chunks)
        for (auto& e : ch) s.elements.push_back({Trace(std::move(e)), Provenance::enumerated});
    std::sort(s.elements.begin(), s.elements.end(), [](const TraceEntry& a, const TraceEntry& b) {
        return std::get<NFElem>(a.value) < std::get<NFElem>(b.value);
    });
    return s;
}

IntPoly trace_charpoly(const Trace& a, const BigInt& Q) {
    if (std::holds_alternative<BigInt>(a)) {
        const BigInt& t = std::get<BigInt>(a);
        return IntPoly(std::vector<BigInt>{Q, -t, BigInt(1)});
    }
    const NFElem& e = std::get<NFElem>(a);
    const FieldPtr& F = e.field();
    const unsigned long g = F->degree();
    if (e.is_rational()) {
        IntPoly quad(std::vector<BigInt>{Q, -e.coords().coeff(0), BigInt(1)});
        IntPoly acc = IntPoly::constant(1);
        for (unsigned long i = 0; i < g; ++i) acc = acc * quad;
        return acc;
    }
    // R(t) = prod_j (t^2 - sigma_j(a) t + Q) via evaluation/interpolation
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (long t = 0; pts.size() < 2 * g + 1; ++t) {
        BigInt tt(t);
        IntPoly gt = IntPoly::constant(tt * tt + Q) - e.coords() * tt;
        pts.emplace_back(tt, poly_resultant(gt, F->min_poly()));
    }
    IntPoly cp = interpolate_integer_poly(pts);
    if (cp.degree() != static_cast<long>(2 * g) || !cp.is_monic())
        throw std::logic_error("trace_charpoly: interpolation failure");
    return cp;
}

IntPoly weil_trace_poly(const IntPoly& P, const BigInt& Q) {
    if (P.is_zero() || P.degree() % 2 != 0 || P.degree() < 2 || !P.is_monic())
        throw std::invalid_argument("weil_trace_poly: need a monic polynomial of even degree");
    const long g = P.degree() / 2;
    IntPoly rem = P;
    std::vector<BigInt> t(static_cast<std::size_t>(g) + 1);
    for (long j = g; j >= 0; --j) {
        BigInt tj = rem.coeff(static_cast<std::size_t>(g + j));
        t[static_cast<std::size_t>(j)] = tj;
        if (tj == 0) continue;
        // subtract tj * x^g (x + Q/x)^j = tj * sum_i C(j,i) Q^i x^(g+j-2i)
        std::vector<BigInt> sub(static_cast<std::size_t>(g + j) + 1, BigInt(0));
        for (long i = 0; i <= j; ++i)
            sub[static_cast<std::size_t>(g + j - 2 * i)] =
                tj * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)) *
                pow_ui(Q, static_cast<unsigned long>(i));
        rem = rem - IntPoly(std::move(sub));
    }
    if (!rem.is_zero())
        throw std::invalid_argument("weil_trace_poly: functional equation fails");
    return IntPoly(std::move(t));
}

namespace {

// no roots of f in the open interval (a, +infinity); roots exactly at a
// are tolerated
bool no_roots_above(const IntPoly& f, const BigInt& a) {
    IntPoly s = squarefree_part(f);
    IntPoly lin(std::vector<BigInt>{-a, BigInt(1)});
    while (!s.is_zero() && s.degree() >= 1 && s.eval(a) == 0) s = s.divexact_by(lin);
    if (s.degree() < 1) return true;
    SturmChain chain(s);
    Rational m = chain.root_bound();
    Rational lo(a);
    if (lo >= m) return true;
    return chain.count_in(lo, m) == 0;
}

}  // namespace

bool is_weil_charpoly(const IntPoly& P, const BigInt& Q) {
    IntPoly T;
    try {
        T = weil_trace_poly(P, Q);
    } catch (const std::invalid_argument&) {
        return false;
    }
    IntPoly Ts = squarefree_part(T);
    if (Ts.degree() >= 1 && SturmChain(Ts).count_all() != Ts.degree()) return false;
    // W(s) = E(s)^2 - s O(s)^2 has roots t_i^2; require none above 4Q
    std::vector<BigInt> even, odd;
    for (long i = 0; i <= T.degree(); ++i) {
        if (i % 2 == 0)
            even.push_back(T.coeff(static_cast<std::size_t>(i)));
        else
            odd.push_back(T.coeff(static_cast<std::size_t>(i)));
    }
    IntPoly E{std::vector<BigInt>(even)};
    IntPoly O{std::vector<BigInt>(odd)};
    IntPoly W = E * E - IntPoly{0, 1} * O * O;
    if (W.is_zero()) return false;
    return no_roots_above(W, 4 * Q);
}

BigInt gl_exponent(unsigned long n, unsigned long p, unsigned long k) {
    if (n == 0 || p < 2 || k == 0) throw std::invalid_argument("gl_exponent: bad arguments");
    unsigned long ceil_log = 0;
    BigInt pw = 1;
    while (pw < static_cast<long>(n)) {
        pw *= static_cast<long>(p);
        ++ceil_log;
    }
    BigInt result = pow_ui(BigInt(static_cast<long>(p)), k - 1 + ceil_log);
    BigInt l = 1;
    for (unsigned long d = 1; d <= n; ++d)
        l = lcm_of(l, pow_ui(BigInt(static_cast<long>(p)), d) - 1);
    return result * l;
}

BigInt inertial_exponent_bound(unsigned long g) {
    if (g == 0) throw std::invalid_argument("inertial_exponent_bound: g must be >= 1");
    unsigned long n = 2 * g;
    return 2 * lcm_of(gl_exponent(n, 2, 2), gl_exponent(n, 3, 1));
}

std::string trace_to_string(const Trace& t) {
    if (std::holds_alternative<BigInt>(t)) return std::get<BigInt>(t).get_str();
    return std::get<NFElem>(t).to_string();
}

bool trace_equal(const Trace& a, const Trace& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<BigInt>(a)) return std::get<BigInt>(a) == std::get<BigInt>(b);
    return std::get<NFElem>(a) == std::get<NFElem>(b);
}

}  // namespace freybound
