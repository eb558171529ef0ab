// freybound: exact-arithmetic toolkit for trace-set enumeration,
// hyperelliptic point counting, local solution sieving, regular-prime
// checking, and assembly of reducibility-excluding bounds.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "freybound/bound_assembly.hpp"
#include "freybound/cache.hpp"
#include "freybound/hplus.hpp"
#include "freybound/records.hpp"

using namespace freybound;

namespace {

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OutputFormat parse_format(const std::string& f) {
    return f == "records" ? OutputFormat::records : OutputFormat::table;
}

BigInt hplus_or_throw(unsigned long r, const std::string& table_path) {
    if (!table_path.empty()) {
        auto table = parse_hplus_table(slurp_file(table_path));
        auto it = table.find(r);
        if (it == table.end())
            throw std::invalid_argument("h' table has no entry for r = " + std::to_string(r));
        return it->second;
    }
    if (auto v = hplus_builtin(r)) return *v;
    throw std::invalid_argument("no built-in h' for r = " + std::to_string(r) +
                                "; supply --hplus or --hplus-table");
}

struct Emitted {
    std::string content;
    int exit_status = 0;
};

// Runs compute() through the cache when a cache dir is configured. The
// worker count is deliberately not part of the key: output is required to
// be identical for every worker count.
int emit(const std::string& cache_dir, const std::string& subcommand,
         const std::string& canonical, const std::function<Emitted()>& compute) {
    if (!cache_dir.empty()) {
        RecordCache cache(cache_dir);
        std::string key = RecordCache::key_for(canonical);
        if (auto hit = cache.lookup(subcommand, key)) {
            std::cout << hit->content;
            return hit->exit_status;
        }
        Emitted made = compute();
        cache.store(subcommand, key, canonical, {made.content, made.exit_status});
        std::cout << made.content;
        return made.exit_status;
    }
    Emitted made = compute();
    std::cout << made.content;
    return made.exit_status;
}

const char* kModelHelp =
    "plain-text model file: line 1 'p k'; line 2 h coefficients (low degree "
    "first); line 3 f coefficients; line 4 genus; line 5 infinity rule "
    "auto|one|two|zero; '#' comments";

const char* kFamilyHelp =
    "plain-text family file: 'genus G', then 'h XDEG TDEG' and 'f XDEG TDEG' "
    "each followed by (XDEG+1) rows of (TDEG+1) integer coefficients of t; "
    "'#' comments";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "freybound: exact trace-set enumeration, point counting, local solution "
        "sweeps, regular-prime checks, and reducibility-excluding bounds"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "records"}));
    const char* env_cache = std::getenv("FREYBOUND_CACHE");
    std::string cache_dir = env_cache ? env_cache : "";
    app.add_option("--cache", cache_dir, "cache directory (default $FREYBOUND_CACHE)");
    unsigned workers = 1;
    app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));

    std::function<Emitted()> action;
    std::string sub_name;
    std::string canonical;

    // ---- regular ----
    auto* cmd_regular = app.add_subcommand("regular", "decide regularity of an odd prime r");
    cmd_regular->fallthrough();
    unsigned long reg_r = 0;
    cmd_regular->add_option("r", reg_r, "odd prime exponent")->required();
    cmd_regular->callback([&] {
        sub_name = "regular";
        canonical = "v1|regular|r=" + std::to_string(reg_r) + "|format=" + format;
        action = [&, fmt = parse_format(format)] {
            RegularityResult res = is_regular(reg_r);
            return Emitted{render_regularity(reg_r, res, fmt), res.regular ? 0 : 2};
        };
    });

    // ---- traces ----
    auto* cmd_traces =
        app.add_subcommand("traces", "enumerate candidate Frobenius traces for a norm power Q");
    cmd_traces->fallthrough();
    std::string traces_mode;
    std::vector<std::string> traces_args;
    cmd_traces->add_option("mode", traces_mode, "rational | field")
        ->required()
        ->check(CLI::IsMember({"rational", "field"}));
    cmd_traces
        ->add_option("args", traces_args,
                     "rational: Q    field: r Q (traces live in Z[psi] of Q(zeta_r)+)")
        ->expected(1, 2);
    cmd_traces->callback([&] {
        sub_name = "traces";
        std::ostringstream key;
        key << "v1|traces|mode=" << traces_mode;
        for (const auto& a : traces_args) key << "|" << a;
        key << "|format=" << format;
        canonical = key.str();
        action = [&, fmt = parse_format(format)] {
            WeilTraceSet s;
            if (traces_mode == "rational") {
                if (traces_args.size() != 1)
                    throw std::invalid_argument("traces rational takes exactly one argument Q");
                s = enum_rational_traces(bigint_from_string(traces_args[0]));
            } else {
                if (traces_args.size() != 2)
                    throw std::invalid_argument("traces field takes arguments r Q");
                auto field = RealCycloField::make(std::stoul(traces_args[0]));
                s = enum_field_traces(field, bigint_from_string(traces_args[1]), workers);
            }
            return Emitted{render_trace_set(s, fmt), 0};
        };
    });

    // ---- local ----
    auto* cmd_local = app.add_subcommand(
        "local", "sweep residue triples of x^p + y^p = z^r mod q over all exponent classes");
    cmd_local->fallthrough();
    unsigned long local_q = 0, local_r = 0;
    std::string local_family;
    cmd_local->add_option("q", local_q, "prime modulus")->required();
    cmd_local->add_option("r", local_r, "z-exponent (odd prime)")->required();
    cmd_local->add_option("--family", local_family, kFamilyHelp);
    cmd_local->callback([&] {
        sub_name = "local";
        canonical = "v1|local|q=" + std::to_string(local_q) + "|r=" + std::to_string(local_r) +
                    "|family=" + local_family + "|format=" + format;
        action = [&, fmt = parse_format(format)] {
            LocalSweepRender data;
            data.q = local_q;
            data.r = local_r;
            data.sweeps = sweep_exponent_classes(local_q, local_r, workers);
            std::string out = render_local_sweeps(data, fmt);
            if (!local_family.empty()) {
                CurveFamily fam = parse_family_file(slurp_file(local_family));
                auto field = RealCycloField::make(local_r);
                if (fam.genus != field->degree())
                    throw std::invalid_argument(
                        "family genus must equal (r-1)/2 to match the trace ring");
                auto base = FiniteField::make(local_q, 1);
                BigInt Q(static_cast<long>(local_q));
                WeilTraceSet candidates = enum_field_traces(field, Q, workers);
                std::set<unsigned long> ts;
                for (const auto& sweep : data.sweeps) {
                    if (!sweep.odd_prime_attainable) continue;
                    for (const auto& sol : sweep.solutions)
                        if (sol.t_defined) ts.insert(sol.t_value);
                }
                std::vector<FamilyMatchRender> rows;
                for (unsigned long t : ts) {
                    FamilyMatchRender row;
                    row.t_value = t;
                    LocalSolution probe;
                    probe.q = local_q;
                    probe.t_defined = true;
                    probe.t_value = t;
                    auto specialized = specialize_family(fam, probe, base);
                    try {
                        LPolynomial L = l_polynomial(specialized.model, base, workers);
                        row.detail = "L = " + L.poly.to_string();
                        for (const auto& m : match_rm_traces(L, candidates))
                            row.matched_traces.push_back(trace_to_string(m.value));
                    } catch (const SingularModelError& e) {
                        row.singular = true;
                        row.detail = e.what();
                    }
                    rows.push_back(std::move(row));
                }
                out += render_family_matches(rows, fmt);
            }
            return Emitted{out, 0};
        };
    });

    // ---- zeta ----
    auto* cmd_zeta =
        app.add_subcommand("zeta", "L-polynomial of a hyperelliptic model over a small field");
    cmd_zeta->fallthrough();
    std::string zeta_model;
    cmd_zeta->add_option("model", zeta_model, kModelHelp)->required();
    cmd_zeta->callback([&] {
        sub_name = "zeta";
        canonical = "v1|zeta|model=" + zeta_model + "|format=" + format;
        action = [&, fmt = parse_format(format)] {
            ModelFile mf = parse_model_file(slurp_file(zeta_model));
            auto base = FiniteField::make(mf.p, mf.k);
            ZetaRender data;
            data.p = mf.p;
            data.k = mf.k;
            for (unsigned long j = 1; j <= mf.model.genus; ++j) {
                auto ext = FiniteField::make(mf.p, mf.k * j);
                data.counts.push_back(count_points(mf.model, ext, workers));
            }
            data.L = l_polynomial(mf.model, base, workers);
            return Emitted{render_zeta(data, fmt), 0};
        };
    });

    // ---- bound / pipeline ----
    auto add_bound_flags = [&](CLI::App* cmd, auto& opts) {
        cmd->add_option("--q", opts.q, "prime of the chosen place (default 2)");
        cmd->add_option("--f", opts.f, "residual degree (default 1)");
        cmd->add_option("--c", opts.c, "even inertial exponent (default 2)");
        cmd->add_option_function<std::string>(
            "--hplus", [&opts](const std::string& v) { opts.hplus_override = bigint_from_string(v); },
            "class-group exponent override");
        cmd->add_option("--hplus-table", opts.hplus_table_path,
                        "h' table file with lines 'r value note' (external data)");
        cmd->add_option_function<std::string>(
            "--bchar", [&opts](const std::string& v) { opts.bchar_override = bigint_from_string(v); },
            "character bound override (default 1 with a ledger warning)");
    };

    auto* cmd_bound = app.add_subcommand(
        "bound", "assemble the divisibility bound for an enumerated trace set");
    cmd_bound->fallthrough();
    unsigned long bound_r = 0;
    PipelineOptions bound_opts;
    std::string bound_traces = "field";
    cmd_bound->add_option("r", bound_r, "odd prime conductor of the real cyclotomic field")
        ->required();
    cmd_bound->add_option("--traces", bound_traces, "trace mode: field | rational")
        ->check(CLI::IsMember({"field", "rational"}));
    add_bound_flags(cmd_bound, bound_opts);
    cmd_bound->callback([&] {
        sub_name = "bound";
        std::ostringstream key;
        key << "v1|bound|r=" << bound_r << "|traces=" << bound_traces << "|q=" << bound_opts.q
            << "|f=" << bound_opts.f << "|c=" << bound_opts.c;
        if (bound_opts.hplus_override) key << "|hplus=" << bound_opts.hplus_override->get_str();
        if (!bound_opts.hplus_table_path.empty()) key << "|hplustable=" << bound_opts.hplus_table_path;
        if (bound_opts.bchar_override) key << "|bchar=" << bound_opts.bchar_override->get_str();
        key << "|format=" << format;
        canonical = key.str();
        action = [&, fmt = parse_format(format)] {
            auto field = RealCycloField::make(bound_r);
            BigInt Q = pow_ui(BigInt(static_cast<long>(bound_opts.q)), bound_opts.f);
            if (Q < 2) throw std::invalid_argument("bound: q^f must be >= 2");
            WeilTraceSet S;
            if (bound_traces == "rational") {
                S = enum_rational_traces(Q);
            } else {
                S = enum_field_traces(field, Q, workers);
            }
            S.f = bound_opts.f;
            BigInt hplus = bound_opts.hplus_override
                               ? *bound_opts.hplus_override
                               : hplus_or_throw(bound_r, bound_opts.hplus_table_path);
            BigInt bchar = bound_opts.bchar_override.value_or(BigInt(1));
            BoundReport rep =
                assemble_bound(S, bound_opts.c, hplus, field->disc(), bchar, workers);
            rep.r = bound_r;
            return Emitted{render_bound_report(rep, {}, fmt), rep.degenerate ? 2 : 0};
        };
    });

    auto* cmd_pipeline = app.add_subcommand(
        "pipeline", "full run: regularity gate, trace set, bound assembly, narrative");
    cmd_pipeline->fallthrough();
    unsigned long pipe_r = 0;
    PipelineOptions pipe_opts;
    std::string pipe_traces = "field";
    std::string pipe_family;
    cmd_pipeline->add_option("r", pipe_r, "regular odd prime >= 5")->required();
    cmd_pipeline->add_option("--traces", pipe_traces, "trace mode: field | rational")
        ->check(CLI::IsMember({"field", "rational"}));
    cmd_pipeline->add_option("--family", pipe_family, kFamilyHelp);
    add_bound_flags(cmd_pipeline, pipe_opts);
    cmd_pipeline->callback([&] {
        sub_name = "pipeline";
        std::ostringstream key;
        key << "v1|pipeline|r=" << pipe_r << "|traces=" << pipe_traces
            << "|family=" << pipe_family << "|q=" << pipe_opts.q << "|f=" << pipe_opts.f
            << "|c=" << pipe_opts.c;
        if (pipe_opts.hplus_override) key << "|hplus=" << pipe_opts.hplus_override->get_str();
        if (!pipe_opts.hplus_table_path.empty()) key << "|hplustable=" << pipe_opts.hplus_table_path;
        if (pipe_opts.bchar_override) key << "|bchar=" << pipe_opts.bchar_override->get_str();
        key << "|format=" << format;
        canonical = key.str();
        action = [&, fmt = parse_format(format)] {
            PipelineOptions opts = pipe_opts;
            opts.workers = workers;
            opts.rational_traces = (pipe_traces == "rational");
            if (!opts.hplus_override && !opts.hplus_table_path.empty())
                opts.hplus_override = hplus_or_throw(pipe_r, opts.hplus_table_path);
            if (!pipe_family.empty()) opts.family = parse_family_file(slurp_file(pipe_family));
            PipelineResult res = run_pipeline(pipe_r, opts);
            std::string out;
            if (res.report) {
                out = render_bound_report(*res.report, res.narrative, fmt);
            } else {
                out = render_regularity(pipe_r, res.regularity, fmt);
                out += render_narrative(res.narrative, fmt);
            }
            return Emitted{out, res.exit_status};
        };
    });

    CLI11_PARSE(app, argc, argv);

    try {
        return emit(cache_dir, sub_name, canonical, action);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
