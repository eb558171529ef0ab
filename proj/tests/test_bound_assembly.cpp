#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freybound/bound_assembly.hpp"

#include <fstream>
#include <sstream>

#include "freybound/exact_arith.hpp"
#include "freybound/hplus.hpp"

using namespace freybound;

TEST_CASE("unit root resultant fixed values") {
    CHECK(unit_root_resultant(BigInt(0), BigInt(2), 2) == 9);
    CHECK(unit_root_resultant(BigInt(1), BigInt(2), 2) == 8);
    CHECK(unit_root_resultant(BigInt(2), BigInt(2), 2) == 5);
    CHECK_THROWS_AS(unit_root_resultant(BigInt(2), BigInt(1), 2), UnitRootDegeneracy);
    CHECK_THROWS_AS(unit_root_resultant(BigInt(0), BigInt(2), 3), std::invalid_argument);
}

TEST_CASE("closed form equals the generic resultant") {
    for (long a = -6; a <= 6; ++a)
        for (long Q = 2; Q <= 9; ++Q)
            for (unsigned long n = 2; n <= 12; n += 2) {
                std::vector<BigInt> xn(n + 1, BigInt(0));
                xn[0] = -1;
                xn[n] = 1;
                IntPoly unit{std::move(xn)};
                IntPoly quad{BigInt(Q), BigInt(-a), BigInt(1)};
                // the degeneracy signal stands for the value 0 (a = +-(Q+1)
                // puts a root of unity among the eigenvalues)
                BigInt closed;
                try {
                    closed = unit_root_resultant(BigInt(a), BigInt(Q), n);
                } catch (const UnitRootDegeneracy&) {
                    closed = 0;
                }
                CHECK(closed == abs_of(poly_resultant(unit, quad)));
            }
}

TEST_CASE("field-mode resultants: rational compatibility and Galois invariance") {
    auto F = RealCycloField::make(5);
    unsigned long g = F->degree();
    // rational integer wrapped in the field: field value is the g-th power
    for (long a = -2; a <= 2; ++a) {
        BigInt rat = unit_root_resultant(BigInt(a), BigInt(2), 2);
        BigInt fld = unit_root_resultant(NFElem::from_int(F, a), BigInt(2), 2);
        CHECK(fld == pow_ui(rat, g));
    }
    // conjugate traces give equal values
    auto F7 = RealCycloField::make(7);
    auto S = enum_field_traces(F7, BigInt(2));
    for (const auto& en : S.elements) {
        const NFElem& e = std::get<NFElem>(en.value);
        BigInt v = unit_root_resultant(e, BigInt(2), 2);
        for (unsigned long a = 2; a <= 3; ++a)
            CHECK(unit_root_resultant(galois_conjugate(e, a), BigInt(2), 2) == v);
    }
}

TEST_CASE("assemble_bound desk example") {
    auto S = enum_rational_traces(BigInt(2));
    BoundReport rep = assemble_bound(S, 2, BigInt(1), BigInt(5), BigInt(1));
    CHECK(rep.b_res == 14400);  // 5 * 8 * 9 * 8 * 5
    CHECK(rep.b_total == 72000);
    REQUIRE(rep.factors.size() == 3);
    CHECK(rep.factors.at(BigInt(2)) == 6);
    CHECK(rep.factors.at(BigInt(3)) == 2);
    CHECK(rep.factors.at(BigInt(5)) == 3);
    CHECK(rep.c1 == 5);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.per_trace.size() == 5);
    CHECK_FALSE(rep.ledger.empty());
}

TEST_CASE("assemble_bound: empty set, monotonicity, degeneracy") {
    WeilTraceSet empty;
    empty.Q = BigInt(2);
    empty.mode = TraceMode::rational;
    BoundReport rep0 = assemble_bound(empty, 2, BigInt(1), BigInt(5), BigInt(3));
    CHECK(rep0.b_res == 1);
    CHECK(rep0.b_total == 15);

    // adding a trace multiplies B_res
    WeilTraceSet one = empty;
    one.elements.push_back({Trace(BigInt(0)), Provenance::enumerated});
    WeilTraceSet two = one;
    two.elements.push_back({Trace(BigInt(1)), Provenance::enumerated});
    BigInt b1 = assemble_bound(one, 2, BigInt(1), BigInt(5), BigInt(1)).b_res;
    BigInt b2 = assemble_bound(two, 2, BigInt(1), BigInt(5), BigInt(1)).b_res;
    CHECK(mpz_divisible_p(b2.get_mpz_t(), b1.get_mpz_t()));

    // Q = 4 contains the boundary trace 4 = 2 sqrt(Q): alpha = 2 is not a
    // root of unity, but a = Q + 1 = 5 gives alpha = 1
    WeilTraceSet deg;
    deg.Q = BigInt(4);
    deg.mode = TraceMode::rational;
    deg.elements.push_back({Trace(BigInt(5)), Provenance::enumerated});
    BoundReport repd = assemble_bound(deg, 2, BigInt(1), BigInt(1), BigInt(1));
    CHECK(repd.degenerate);
    CHECK(repd.b_total == 0);
    CHECK(repd.degenerate_traces == std::vector<std::string>{"5"});

    CHECK_THROWS_AS(assemble_bound(empty, 3, BigInt(1), BigInt(5), BigInt(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(assemble_bound(empty, 2, BigInt(0), BigInt(5), BigInt(1)),
                    std::invalid_argument);
}

TEST_CASE("worker count does not change the report") {
    auto F = RealCycloField::make(7);
    auto S = enum_field_traces(F, BigInt(2));
    BoundReport a = assemble_bound(S, 2, BigInt(1), F->disc(), BigInt(1), 1);
    BoundReport b = assemble_bound(S, 2, BigInt(1), F->disc(), BigInt(1), 8);
    CHECK(a.b_total == b.b_total);
    CHECK(a.per_trace == b.per_trace);
    CHECK(a.c1 == b.c1);
}

TEST_CASE("soundness smoke test: isogeny primes divide the assembled bound") {
    for (const auto& curve : builtin_isogeny_curves()) {
        BigInt a2 = curve_trace_at_2(curve);
        CHECK(a2 * a2 <= 8);  // Weil at q = 2
        WeilTraceSet S;
        S.Q = BigInt(2);
        S.f = 1;
        S.mode = TraceMode::rational;
        S.elements.push_back({Trace(a2), Provenance::curve_derived});
        BoundReport rep = assemble_bound(S, 2, BigInt(1), BigInt(1), BigInt(1));
        CAPTURE(curve.label);
        CHECK(mpz_divisible_ui_p(rep.b_total.get_mpz_t(), curve.isogeny_prime));
    }
    // the three curves are isogenous, so their traces agree
    CHECK(curve_trace_at_2(builtin_isogeny_curves()[0]) == -2);
    CHECK(curve_trace_at_2(builtin_isogeny_curves()[1]) == -2);
    CHECK(curve_trace_at_2(builtin_isogeny_curves()[2]) == -2);
}

TEST_CASE("no good-reduction-at-2 curve can be reducible mod 7") {
    // |a| <= 2 sqrt(2) forces a in {-2..2}; 9 - a^2 is then never 0 mod 7,
    // so the divisibility criterion at the place above 2 has no prime-7
    // instance; this is why the built-in list carries no such curve
    for (long a = -2; a <= 2; ++a)
        CHECK(unit_root_resultant(BigInt(a), BigInt(2), 2) % 7 != 0);
}

TEST_CASE("pipeline r=5 with rational trace restriction: the desk number") {
    PipelineOptions opt;
    opt.rational_traces = true;
    PipelineResult res = run_pipeline(5, opt);
    CHECK(res.exit_status == 0);
    REQUIRE(res.report.has_value());
    CHECK(res.report->b_res == 14400);
    CHECK(res.report->b_total == 72000);
    CHECK(res.report->c1 == 5);
    CHECK(res.report->disc == 5);
    CHECK(res.report->ledger.size() >= 5);
}

TEST_CASE("pipeline r=5 field fallback") {
    PipelineOptions opt;
    PipelineResult res = run_pipeline(5, opt);
    REQUIRE(res.report.has_value());
    const BoundReport& rep = *res.report;
    CHECK(rep.disc == 5);
    CHECK(rep.c == 2);
    CHECK(rep.h_exponent == 1);
    // B_res equals the product over the enumerated field traces
    auto F = RealCycloField::make(5);
    auto S = enum_field_traces(F, BigInt(2));
    CHECK(rep.trace_count == S.elements.size());
    BigInt prod = 1;
    for (const auto& en : S.elements) prod *= unit_root_resultant(en.value, BigInt(2), 2);
    CHECK(rep.b_res == prod);
    bool fallback_noted = false;
    for (const auto& line : res.narrative)
        if (line.find("no curve model supplied") != std::string::npos) fallback_noted = true;
    CHECK(fallback_noted);
}

TEST_CASE("pipeline aborts on irregular r") {
    PipelineResult res = run_pipeline(37, PipelineOptions{});
    CHECK(res.aborted_irregular);
    CHECK(res.exit_status == 2);
    CHECK_FALSE(res.report.has_value());
    REQUIRE(res.regularity.irregular_indices.size() == 1);
    CHECK(res.regularity.irregular_indices[0] == 32);
}

TEST_CASE("pipeline rejects a family whose genus does not fit the field") {
    CurveFamily fam;
    fam.genus = 1;
    fam.h = {{BigInt(0)}};
    fam.f = {{BigInt(0), BigInt(1)}, {BigInt(0)}, {BigInt(0)}, {BigInt(1)}};
    PipelineOptions opt;
    opt.family = fam;
    CHECK_THROWS_AS(run_pipeline(5, opt), std::invalid_argument);  // genus 1 != degree 2
}

TEST_CASE("pipeline with the y^2 = x^5 + t family at q = 3, f = 2") {
    // the t = 1, 2 specializations have quintic automorphisms, so over F_9
    // their Frobenius charpoly splits through Z[psi] with trace 0; t = 0 is
    // the singular specialization and drops out
    CurveFamily fam;
    fam.genus = 2;
    fam.h = {{BigInt(0)}};
    fam.f = {{BigInt(0), BigInt(1)}, {BigInt(0)}, {BigInt(0)}, {BigInt(0)},
             {BigInt(0)}, {BigInt(1)}};
    PipelineOptions opt;
    opt.family = fam;
    opt.q = 3;
    opt.f = 2;
    PipelineResult res = run_pipeline(5, opt);
    REQUIRE(res.report.has_value());
    const BoundReport& rep = *res.report;
    CHECK(rep.trace_mode == "curve-derived");
    CHECK(rep.Q == 9);
    REQUIRE(rep.trace_count == 1);
    CHECK(rep.per_trace[0].first == "0");
    // a = 0, n = 2: norm(81 + 18 + 1) = 100^2; B_total = 5 * 10000
    CHECK(rep.per_trace[0].second == 10000);
    CHECK(rep.b_total == 50000);
    CHECK(rep.c1 == 5);
    bool singular_noted = false;
    for (const auto& line : res.narrative)
        if (line.find("1 singular specializations excluded") != std::string::npos)
            singular_noted = true;
    CHECK(singular_noted);
}

#ifdef FREYBOUND_SOURCE_DATA_DIR
TEST_CASE("shipped h' table parses and covers the primes up to 151") {
    std::ifstream in(std::string(FREYBOUND_SOURCE_DATA_DIR) + "/hplus_table.txt");
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    auto table = parse_hplus_table(buf.str());
    CHECK(table.size() == 35);
    for (unsigned long r = 3; r <= 151; ++r) {
        if (!is_prime(BigInt(static_cast<long>(r)))) continue;
        REQUIRE(table.count(r) == 1);
        CHECK(table.at(r) == 1);
        CHECK(table.at(r) == *hplus_builtin(r));  // file and builtin agree
    }
    CHECK_FALSE(hplus_builtin(157).has_value());
    CHECK_THROWS_AS(parse_hplus_table("11\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_hplus_table("11 0 note"), std::invalid_argument);
}
#endif
