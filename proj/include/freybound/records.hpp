#ifndef FREYBOUND_RECORDS_HPP
#define FREYBOUND_RECORDS_HPP

#include <string>
#include <vector>

#include "freybound/bound_assembly.hpp"
#include "freybound/fermat_local.hpp"
#include "freybound/regprime.hpp"
#include "freybound/weil_traces.hpp"
#include "freybound/zeta_count.hpp"

namespace freybound {

// Machine format: one JSON object per line, every record carrying the
// format-version field "v". All integers travel as decimal strings.
inline constexpr int kRecordFormatVersion = 1;

enum class OutputFormat { table, records };

std::string render_regularity(unsigned long r, const RegularityResult& res, OutputFormat fmt);

std::string render_narrative(const std::vector<std::string>& lines, OutputFormat fmt);

std::string render_trace_set(const WeilTraceSet& s, OutputFormat fmt);

struct LocalSweepRender {
    unsigned long q = 0;
    unsigned long r = 0;
    std::vector<ExponentClassSweep> sweeps;
};
std::string render_local_sweeps(const LocalSweepRender& data, OutputFormat fmt);

struct ZetaRender {
    unsigned long p = 0;
    unsigned long k = 1;
    LPolynomial L;
    std::vector<BigInt> counts;  // N_1..N_g
};
std::string render_zeta(const ZetaRender& data, OutputFormat fmt);

std::string render_bound_report(const BoundReport& rep, const std::vector<std::string>& narrative,
                                OutputFormat fmt);

// per-specialization match lines appended by `local` when a family is given
struct FamilyMatchRender {
    unsigned long t_value = 0;
    bool degenerate = false;
    bool singular = false;
    std::string detail;             // reason / L-polynomial
    std::vector<std::string> matched_traces;
};
std::string render_family_matches(const std::vector<FamilyMatchRender>& rows, OutputFormat fmt);

}  // namespace freybound

#endif
