#include "freybound/records.hpp"

#include <json.hpp>
#include <sstream>

namespace freybound {

using nlohmann::json;

namespace {

json base_record(const char* type) {
    json j;
    j["v"] = kRecordFormatVersion;
    j["type"] = type;
    return j;
}

std::string mode_name(TraceMode m) {
    switch (m) {
        case TraceMode::rational: return "rational";
        case TraceMode::field: return "field";
        case TraceMode::curve_derived: return "curve-derived";
    }
    return "?";
}

json trace_coords(const Trace& t) {
    json coords = json::array();
    if (std::holds_alternative<BigInt>(t)) {
        coords.push_back(std::get<BigInt>(t).get_str());
    } else {
        const NFElem& e = std::get<NFElem>(t);
        unsigned long g = e.field()->degree();
        for (unsigned long i = 0; i < g; ++i) coords.push_back(e.coords().coeff(i).get_str());
    }
    return coords;
}

}  // namespace

std::string render_regularity(unsigned long r, const RegularityResult& res, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::records) {
        json j = base_record("regularity");
        j["r"] = r;
        j["regular"] = res.regular;
        j["irregular_indices"] = res.irregular_indices;
        os << j.dump() << "\n";
        return os.str();
    }
    os << "r = " << r << ": " << (res.regular ? "regular" : "irregular");
    if (!res.regular) {
        os << " at index";
        if (res.irregular_indices.size() > 1) os << "es";
        for (auto k : res.irregular_indices) os << " " << k;
    }
    os << "\n";
    return os.str();
}

std::string render_narrative(const std::vector<std::string>& lines, OutputFormat fmt) {
    std::ostringstream os;
    for (const auto& line : lines) {
        if (fmt == OutputFormat::records) {
            json j = base_record("narrative");
            j["text"] = line;
            os << j.dump() << "\n";
        } else {
            os << line << "\n";
        }
    }
    return os.str();
}

std::string render_trace_set(const WeilTraceSet& s, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::records) {
        for (const auto& en : s.elements) {
            json j = base_record("trace");
            j["mode"] = mode_name(s.mode);
            if (s.field) j["r"] = s.field->r();
            j["Q"] = s.Q.get_str();
            j["f"] = s.f;
            j["coords"] = trace_coords(en.value);
            j["provenance"] =
                en.provenance == Provenance::enumerated ? "enumerated" : "curve-derived";
            os << j.dump() << "\n";
        }
        return os.str();
    }
    os << "trace set: mode " << mode_name(s.mode);
    if (s.field) os << " (r = " << s.field->r() << ")";
    os << ", Q = " << s.Q.get_str() << ", f = " << s.f << ", " << s.elements.size()
       << " elements\n";
    for (const auto& en : s.elements) {
        os << "  " << trace_to_string(en.value)
           << (en.provenance == Provenance::curve_derived ? "   [curve-derived]" : "") << "\n";
    }
    return os.str();
}

std::string render_local_sweeps(const LocalSweepRender& data, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::records) {
        for (const auto& sweep : data.sweeps) {
            for (const auto& s : sweep.solutions) {
                json j = base_record("local_solution");
                j["q"] = data.q;
                j["r"] = data.r;
                j["class"] = sweep.p_class;
                j["class_attainable"] = sweep.odd_prime_attainable;
                j["x"] = s.x;
                j["y"] = s.y;
                j["z"] = s.z;
                json flags = json::array();
                if (s.x_zero) flags.push_back("x0");
                if (s.y_zero) flags.push_back("y0");
                if (s.z_zero) flags.push_back("z0");
                if (s.xy_zero) flags.push_back("xy0");
                j["flags"] = flags;
                j["t"] = s.t_defined ? json(std::to_string(s.t_value)) : json("undef");
                os << j.dump() << "\n";
            }
        }
        return os.str();
    }
    os << "local solutions of x^p + y^p = z^" << data.r << " mod " << data.q << "\n";
    for (const auto& sweep : data.sweeps) {
        os << "class p = " << sweep.p_class << " mod " << (data.q == 2 ? 1 : data.q - 1)
           << (sweep.odd_prime_attainable ? "" : "   [no odd prime lands here]") << ": "
           << sweep.solutions.size() << " solutions\n";
        for (const auto& s : sweep.solutions) {
            os << "  (" << s.x << ", " << s.y << ", " << s.z << ")";
            if (s.z_zero) os << "  z=0";
            if (s.t_defined) os << "  t=" << s.t_value;
            os << "\n";
        }
    }
    return os.str();
}

std::string render_zeta(const ZetaRender& data, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::records) {
        json j = base_record("lpolynomial");
        j["p"] = data.p;
        j["k"] = data.k;
        j["q"] = data.L.q.get_str();
        j["genus"] = data.L.genus;
        json coeffs = json::array();
        for (unsigned long i = 0; i <= 2 * data.L.genus; ++i)
            coeffs.push_back(data.L.poly.coeff(i).get_str());
        j["coeffs"] = coeffs;
        json counts = json::array();
        for (const auto& n : data.counts) counts.push_back(n.get_str());
        j["counts"] = counts;
        json cp = json::array();
        IntPoly charpoly = frobenius_charpoly(data.L);
        for (long i = 0; i <= charpoly.degree(); ++i)
            cp.push_back(charpoly.coeff(static_cast<std::size_t>(i)).get_str());
        j["frobenius_charpoly"] = cp;
        os << j.dump() << "\n";
        return os.str();
    }
    os << "field F_" << data.p;
    if (data.k > 1) os << "^" << data.k;
    os << ", q = " << data.L.q.get_str() << ", genus " << data.L.genus << "\n";
    for (std::size_t i = 0; i < data.counts.size(); ++i)
        os << "  N_" << (i + 1) << " = " << data.counts[i].get_str() << "\n";
    os << "  L = " << data.L.poly.to_string() << "\n";
    os << "  charpoly(Frobenius) = " << frobenius_charpoly(data.L).to_string() << "\n";
    return os.str();
}

std::string render_bound_report(const BoundReport& rep, const std::vector<std::string>& narrative,
                                OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::records) {
        {
            json j = base_record("bound_input");
            j["r"] = rep.r;
            j["f"] = rep.f;
            j["Q"] = rep.Q.get_str();
            j["c"] = rep.c;
            j["h_exponent"] = rep.h_exponent.get_str();
            j["b_char"] = rep.b_char.get_str();
            j["disc"] = rep.disc.get_str();
            j["trace_mode"] = rep.trace_mode;
            j["trace_count"] = rep.trace_count;
            os << j.dump() << "\n";
        }
        for (const auto& [label, value] : rep.per_trace) {
            json j = base_record("trace_resultant");
            j["trace"] = label;
            j["value"] = value.get_str();
            os << j.dump() << "\n";
        }
        {
            json j = base_record("bound_total");
            j["degenerate"] = rep.degenerate;
            j["B_res"] = rep.b_res.get_str();
            j["B_total"] = rep.b_total.get_str();
            json factors = json::array();
            for (const auto& [p, e] : rep.factors) factors.push_back({p.get_str(), e});
            j["factors"] = factors;
            j["c1"] = rep.c1.get_str();
            os << j.dump() << "\n";
        }
        for (const auto& entry : rep.ledger) {
            json j = base_record("ledger");
            j["tag"] = entry.tag;
            j["text"] = entry.text;
            os << j.dump() << "\n";
        }
        for (const auto& line : narrative) {
            json j = base_record("narrative");
            j["text"] = line;
            os << j.dump() << "\n";
        }
        return os.str();
    }

    os << "bound report\n";
    os << "  inputs: r = " << rep.r << ", Q = " << rep.Q.get_str() << ", f = " << rep.f
       << ", c = " << rep.c << ", h' = " << rep.h_exponent.get_str()
       << ", B_char = " << rep.b_char.get_str() << ", disc = " << rep.disc.get_str() << "\n";
    os << "  traces (" << rep.trace_mode << ", " << rep.trace_count << "):\n";
    for (const auto& [label, value] : rep.per_trace)
        os << "    " << label << "  ->  " << value.get_str() << "\n";
    if (rep.degenerate) {
        os << "  DEGENERATE: no finite bound from this trace set (root-of-unity trace";
        for (const auto& t : rep.degenerate_traces) os << " " << t;
        os << ")\n";
    } else {
        os << "  B_res   = " << rep.b_res.get_str() << "\n";
        os << "  B_total = " << rep.b_total.get_str() << "\n";
        os << "  factors =";
        for (const auto& [p, e] : rep.factors) {
            os << " " << p.get_str();
            if (e > 1) os << "^" << e;
        }
        os << "\n";
        os << "  c1      = " << rep.c1.get_str() << "\n";
    }
    os << "  ledger:\n";
    for (const auto& entry : rep.ledger) os << "    [" << entry.tag << "] " << entry.text << "\n";
    for (const auto& line : narrative) os << "  " << line << "\n";
    return os.str();
}

std::string render_family_matches(const std::vector<FamilyMatchRender>& rows, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::records) {
        for (const auto& row : rows) {
            json j = base_record("family_specialization");
            j["t"] = row.t_value;
            j["degenerate"] = row.degenerate;
            j["singular"] = row.singular;
            j["detail"] = row.detail;
            j["matched"] = row.matched_traces;
            os << j.dump() << "\n";
        }
        return os.str();
    }
    for (const auto& row : rows) {
        os << "t = " << row.t_value << ": ";
        if (row.degenerate)
            os << "degenerate (" << row.detail << ")";
        else if (row.singular)
            os << "singular (" << row.detail << ")";
        else {
            os << row.detail << "; matched traces:";
            for (const auto& m : row.matched_traces) os << " " << m;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace freybound
