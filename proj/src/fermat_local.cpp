#include "freybound/fermat_local.hpp"

#include <numeric>
#include <sstream>

#include "freybound/parallel.hpp"

namespace freybound {

namespace {

const unsigned long kLocalSweepGuardrail = 1024;

unsigned long normalize_exponent(unsigned long e, unsigned long q) {
    // representative in [1, q-1] of e mod (q-1); x^e is then correct on all
    // of Z/q including 0
    if (q == 2) return 1;
    unsigned long m = q - 1;
    unsigned long red = e % m;
    return red == 0 ? m : red;
}

unsigned long powmod_ul(unsigned long base, unsigned long e, unsigned long q) {
    unsigned long acc = 1 % q;
    base %= q;
    while (e > 0) {
        if (e & 1) acc = (acc * base) % q;
        base = (base * base) % q;
        e >>= 1;
    }
    return acc;
}

unsigned long invmod_ul(unsigned long a, unsigned long q) { return powmod_ul(a, q - 2, q); }

void check_q_prime(unsigned long q) {
    if (!is_prime(BigInt(static_cast<long>(q))))
        throw std::invalid_argument("local sweep: q must be prime");
    if (q > kLocalSweepGuardrail) {
        std::ostringstream os;
        os << "local sweep: q = " << q << " exceeds the guardrail of " << kLocalSweepGuardrail
           << " (the sweep scans q^2 pairs and can emit ~q^2 solutions)";
        throw CostGuardError(os.str());
    }
}

}  // namespace

std::vector<LocalSolution> enum_local_solutions(unsigned long q, unsigned long p_class,
                                                unsigned long r, unsigned workers) {
    check_q_prime(q);
    unsigned long ep = normalize_exponent(p_class, q);
    unsigned long er = normalize_exponent(r, q);

    std::vector<unsigned long> xpow(q), zpow(q), zinv(q);
    for (unsigned long v = 0; v < q; ++v) {
        xpow[v] = powmod_ul(v, ep, q);
        zpow[v] = powmod_ul(v, er, q);
    }
    for (unsigned long v = 1; v < q; ++v) zinv[v] = invmod_ul(zpow[v], q);

    // bucket z by z^r value so each (x, y) pair finds its solutions directly
    std::vector<std::vector<unsigned long>> bucket(q);
    for (unsigned long z = 0; z < q; ++z) bucket[zpow[z]].push_back(z);

    auto sweep = [&](std::size_t begin, std::size_t end) {
        std::vector<LocalSolution> out;
        for (unsigned long x = static_cast<unsigned long>(begin); x < end; ++x) {
            for (unsigned long y = 0; y < q; ++y) {
                unsigned long s = (xpow[x] + xpow[y]) % q;
                for (unsigned long z : bucket[s]) {
                    LocalSolution sol;
                    sol.q = q;
                    sol.p_class = ep;
                    sol.r = r;
                    sol.x = x;
                    sol.y = y;
                    sol.z = z;
                    sol.x_zero = (x == 0);
                    sol.y_zero = (y == 0);
                    sol.z_zero = (z == 0);
                    sol.xy_zero = sol.x_zero || sol.y_zero;
                    if (!sol.z_zero) {
                        sol.t_defined = true;
                        sol.t_value = (xpow[x] * zinv[z]) % q;
                    }
                    out.push_back(sol);
                }
            }
        }
        return out;
    };

    auto chunks = chunked_parallel<std::vector<LocalSolution>>(q, workers, sweep);
    std::vector<LocalSolution> all;
    for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
    return all;
}

std::vector<ExponentClassSweep> sweep_exponent_classes(unsigned long q, unsigned long r,
                                                       unsigned workers) {
    check_q_prime(q);
    unsigned long nclasses = (q == 2) ? 1 : q - 1;
    std::vector<ExponentClassSweep> out;
    out.reserve(nclasses);
    for (unsigned long e = 1; e <= nclasses; ++e) {
        ExponentClassSweep sweep;
        sweep.p_class = e;
        // an odd prime p with p = e mod (q-1) exists iff gcd(e, q-1) = 1
        // (Dirichlet) or the representative e is itself an odd prime
        unsigned long m = (q == 2) ? 1 : q - 1;
        bool coprime = std::gcd(e, m) == 1;
        bool self_prime = (e % 2 == 1) && e > 2 && is_prime(BigInt(static_cast<long>(e)));
        sweep.odd_prime_attainable = coprime || self_prime;
        sweep.solutions = enum_local_solutions(q, e, r, workers);
        out.push_back(std::move(sweep));
    }
    return out;
}

GlobalHypothesisReport check_global_hypotheses(const BigInt& a, const BigInt& b, const BigInt& c,
                                               unsigned long p, unsigned long r) {
    GlobalHypothesisReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.p = p;
    rep.r = r;
    BigInt ap = pow_ui(a, p), bp = pow_ui(b, p), cr = pow_ui(c, r);
    rep.is_solution = (ap + bp == cr);
    rep.nontrivial = (a != 0 && b != 0 && c != 0);
    rep.proper = (gcd_of(gcd_of(a, b), c) == 1);
    BigInt ab = a * b;
    rep.r_divides_ab = mpz_divisible_ui_p(ab.get_mpz_t(), r) != 0;
    rep.ab_odd = mpz_odd_p(ab.get_mpz_t()) != 0;
    rep.semistable_claim = rep.r_divides_ab;
    rep.good_reduction_at_2_claim = rep.ab_odd;
    return rep;
}

CurveFamily parse_family_file(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.push_back(t);
    }
    std::size_t pos = 0;
    auto need = [&](const std::string& what) -> std::string {
        if (pos >= toks.size())
            throw std::invalid_argument("family file: unexpected end, wanted " + what);
        return toks[pos++];
    };
    auto need_ul = [&](const std::string& what) { return std::stoul(need(what)); };

    CurveFamily fam;
    if (need("'genus'") != "genus") throw std::invalid_argument("family file: expected 'genus'");
    fam.genus = need_ul("genus value");
    auto read_matrix = [&](const std::string& name) {
        if (need("'" + name + "'") != name)
            throw std::invalid_argument("family file: expected '" + name + "'");
        unsigned long xdeg = need_ul("x-degree");
        unsigned long tdeg = need_ul("t-degree");
        std::vector<std::vector<BigInt>> m(xdeg + 1, std::vector<BigInt>(tdeg + 1));
        for (unsigned long i = 0; i <= xdeg; ++i)
            for (unsigned long j = 0; j <= tdeg; ++j)
                m[i][j] = bigint_from_string(need("coefficient"));
        return m;
    };
    fam.h = read_matrix("h");
    fam.f = read_matrix("f");
    if (pos != toks.size()) throw std::invalid_argument("family file: trailing tokens");
    return fam;
}

SpecializeResult specialize_family(const CurveFamily& fam, const LocalSolution& s,
                                   const FinFieldPtr& field) {
    if (field->p() != s.q)
        throw std::invalid_argument("specialize_family: field characteristic differs from q");
    SpecializeResult res;
    if (!s.t_defined) {
        res.degenerate = true;
        res.reason = "t undefined (z = 0 mod q): potentially multiplicative reduction";
        return res;
    }
    BigInt t(static_cast<long>(s.t_value));
    auto eval_rows = [&](const std::vector<std::vector<BigInt>>& m) {
        std::vector<BigInt> coeffs(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            BigInt acc = 0;
            for (std::size_t j = m[i].size(); j-- > 0;) acc = acc * t + m[i][j];
            coeffs[i] = acc;
        }
        return IntPoly(std::move(coeffs));
    };
    res.model.h = eval_rows(fam.h);
    res.model.f = eval_rows(fam.f);
    res.model.genus = fam.genus;
    res.model.infinity_rule = InfinityRule::automatic;
    return res;
}

}  // namespace freybound
