#ifndef FREYBOUND_BOUND_ASSEMBLY_HPP
#define FREYBOUND_BOUND_ASSEMBLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freybound/fermat_local.hpp"
#include "freybound/regprime.hpp"
#include "freybound/weil_traces.hpp"

namespace freybound {

// The trace corresponds to a root of unity: the resultant vanishes and no
// finite bound comes out of this trace set.
struct UnitRootDegeneracy : std::runtime_error {
    explicit UnitRootDegeneracy(const std::string& what) : std::runtime_error(what) {}
};

// |Res(X^n - 1, X^2 - aX + Q)| for even n, by the Lucas closed form
// |Q^n - s_n + 1|. Throws UnitRootDegeneracy when the value is 0.
BigInt unit_root_resultant(const BigInt& a, const BigInt& Q, unsigned long n);

// Totally real trace: the recurrence runs in O_K and the rational-integer
// divisibility target is |N_{K/Q}(Q^n - s_n + 1)|.
BigInt unit_root_resultant(const NFElem& a, const BigInt& Q, unsigned long n);

BigInt unit_root_resultant(const Trace& a, const BigInt& Q, unsigned long n);

struct LedgerEntry {
    std::string tag;   // assumption | external-input | external-theorem | note
    std::string text;
};

struct BoundReport {
    // input echo
    unsigned long r = 0;  // 0 when the base field is Q
    unsigned long f = 1;
    BigInt Q;
    unsigned long c = 2;
    BigInt h_exponent = 1;
    BigInt b_char = 1;
    BigInt disc = 1;
    std::string trace_mode;
    unsigned long trace_count = 0;

    std::vector<std::pair<std::string, BigInt>> per_trace;  // (trace, |resultant|)
    bool degenerate = false;  // a root-of-unity trace makes the bound vacuous
    std::vector<std::string> degenerate_traces;
    BigInt b_res = 1;
    BigInt b_total = 1;
    Factorization factors;
    BigInt c1 = 0;  // largest prime dividing b_total (0 when b_total = 1 or vacuous)
    std::vector<LedgerEntry> ledger;
};

// n = c * h'; B_res = prod of per-trace resultants; B_total = |disc| * B_char * B_res.
// Degeneracies do not throw: the report comes back flagged instead.
BoundReport assemble_bound(const WeilTraceSet& S, unsigned long c, const BigInt& h_exponent,
                           const BigInt& disc, const BigInt& b_char, unsigned workers = 1);

struct PipelineOptions {
    unsigned long q = 2;
    unsigned long f = 1;
    unsigned long c = 2;
    std::optional<BigInt> hplus_override;
    std::string hplus_table_path;  // used by the CLI to resolve h' before the run
    std::optional<BigInt> bchar_override;
    std::optional<CurveFamily> family;
    bool rational_traces = false;  // restrict S to rational integers (test hook)
    unsigned workers = 1;
};

struct PipelineResult {
    int exit_status = 0;  // 0 affirmative, 2 definite-negative (irregular/degenerate)
    RegularityResult regularity;
    bool aborted_irregular = false;
    std::optional<BoundReport> report;
    std::vector<std::string> narrative;
};

// The full desk pipeline for exponent r: regularity gate, field and
// discriminant, trace-set construction (curve-derived when a family is
// supplied, enumerated otherwise), bound assembly, narrative.
PipelineResult run_pipeline(unsigned long r, const PipelineOptions& opt);

// Classical curves with a rational isogeny of prime degree and good
// reduction at 2, for the soundness smoke test: the isogeny prime must
// divide the assembled bound.
struct BuiltinIsogenyCurve {
    const char* label;
    long a1, a2, a3, a4, a6;  // Weierstrass coefficients
    unsigned long isogeny_prime;
};
const std::vector<BuiltinIsogenyCurve>& builtin_isogeny_curves();

// Trace of Frobenius at 2, recomputed by brute-force point count of the
// stored model over F_2.
BigInt curve_trace_at_2(const BuiltinIsogenyCurve& curve);

}  // namespace freybound

#endif
