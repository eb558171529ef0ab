#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "subprocess.hpp"

using freybound::testing::run_cli;
using nlohmann::json;

namespace {

std::vector<json> json_lines(const std::string& s) {
    std::vector<json> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("regular subcommand statuses") {
    auto r5 = run_cli("regular 5");
    CHECK(r5.status == 0);
    CHECK(r5.out.find("regular") != std::string::npos);

    auto r37 = run_cli("regular 37");
    CHECK(r37.status == 2);
    CHECK(r37.out.find("32") != std::string::npos);

    auto r4 = run_cli("regular 4 2>/dev/null");
    CHECK(r4.status == 1);
}

TEST_CASE("traces subcommand") {
    auto rat = run_cli("--format records traces rational 2");
    CHECK(rat.status == 0);
    auto lines = json_lines(rat.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines.front().at("coords")[0] == "-2");
    CHECK(lines.back().at("coords")[0] == "2");

    auto fld = run_cli("--format records traces field 5 2");
    CHECK(json_lines(fld.out).size() == 15);

    CHECK(run_cli("traces rational 1 2>/dev/null").status == 1);
}

TEST_CASE("local subcommand") {
    auto res = run_cli("--format records local 2 5");
    CHECK(res.status == 0);
    auto lines = json_lines(res.out);
    REQUIRE(lines.size() == 4);
    bool found_110 = false;
    for (const auto& j : lines) {
        CHECK((j.at("x").get<unsigned>() + j.at("y").get<unsigned>()) % 2 ==
              j.at("z").get<unsigned>() % 2);
        if (j.at("x") == 1 && j.at("y") == 1 && j.at("z") == 0) {
            found_110 = true;
            bool has_z0 = false;
            for (const auto& f : j.at("flags")) has_z0 = has_z0 || f == "z0";
            CHECK(has_z0);
            CHECK(j.at("t") == "undef");
        }
    }
    CHECK(found_110);
    CHECK(run_cli("local 4 5 2>/dev/null").status == 1);
}

TEST_CASE("zeta subcommand") {
    namespace fs = std::filesystem;
    fs::path model = fs::temp_directory_path() / "fb_cli_model.txt";
    {
        std::ofstream f(model);
        f << "3 1\n0\n0 1 0 1\n1\nauto\n";
    }
    auto res = run_cli("--format records zeta " + model.string());
    CHECK(res.status == 0);
    auto lines = json_lines(res.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].at("type") == "lpolynomial");
    CHECK(lines[0].at("coeffs") == std::vector<std::string>{"1", "0", "3"});
    CHECK(lines[0].at("counts") == std::vector<std::string>{"4"});
    fs::remove(model);
}

TEST_CASE("pipeline desk number and statuses") {
    auto res = run_cli("--format records pipeline 5 --traces rational");
    CHECK(res.status == 0);
    bool checked = false;
    for (const auto& j : json_lines(res.out)) {
        if (j.at("type") == "bound_total") {
            CHECK(j.at("B_res") == "14400");
            CHECK(j.at("B_total") == "72000");
            CHECK(j.at("c1") == "5");
            checked = true;
        }
    }
    CHECK(checked);

    CHECK(run_cli("pipeline 37").status == 2);

    auto field = run_cli("--format records pipeline 5");
    int ledger_lines = 0;
    for (const auto& j : json_lines(field.out))
        if (j.at("type") == "ledger") ++ledger_lines;
    CHECK(ledger_lines >= 5);
}

TEST_CASE("family flag flows through local and pipeline") {
    namespace fs = std::filesystem;
    fs::path fam = fs::temp_directory_path() / "fb_cli_family.txt";
    {
        std::ofstream f(fam);
        f << "genus 2\nh 0 0\n0\nf 5 1\n0 1\n0 0\n0 0\n0 0\n0 0\n1 0\n";  // y^2 = x^5 + t
    }
    auto res = run_cli("--format records pipeline 5 --family " + fam.string() +
                       " --q 3 --f 2");
    CHECK(res.status == 0);
    bool total_ok = false;
    for (const auto& j : json_lines(res.out))
        if (j.at("type") == "bound_total") total_ok = (j.at("B_total") == "50000");
    CHECK(total_ok);

    auto loc = run_cli("--format records local 3 5 --family " + fam.string());
    CHECK(loc.status == 0);
    int specialization_rows = 0;
    for (const auto& j : json_lines(loc.out))
        if (j.at("type") == "family_specialization") ++specialization_rows;
    CHECK(specialization_rows >= 2);  // t = 1, 2 (t = 0 singular also gets a row)
    fs::remove(fam);
}

TEST_CASE("cache hit and miss produce identical output") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fb_cli_cache";
    fs::remove_all(dir);
    std::string base = "--format records --cache " + dir.string() + " pipeline 5";
    auto miss = run_cli(base);
    REQUIRE(miss.status == 0);
    CHECK(fs::exists(dir / "pipeline"));
    auto hit = run_cli(base);
    CHECK(hit.status == 0);
    CHECK(hit.out == miss.out);

    // tamper with every cached payload: the run must recompute, not trust it
    for (const auto& entry : fs::directory_iterator(dir / "pipeline")) {
        if (entry.path().extension() == ".records") {
            std::ofstream f(entry.path(), std::ios::trunc);
            f << "garbage";
        }
    }
    auto recomputed = run_cli(base);
    CHECK(recomputed.status == 0);
    CHECK(recomputed.out == miss.out);
    fs::remove_all(dir);
}

TEST_CASE("worker count never changes records output") {
    auto w1 = run_cli("--format records --workers 1 pipeline 7");
    auto w8 = run_cli("--format records --workers 8 pipeline 7");
    CHECK(w1.status == w8.status);
    CHECK(w1.out == w8.out);
}

TEST_CASE("bound subcommand with a supplied h' table") {
    auto res = run_cli("--format records bound 5 --traces rational");
    CHECK(res.status == 0);
    bool ok = false;
    for (const auto& j : json_lines(res.out))
        if (j.at("type") == "bound_total") ok = (j.at("B_total") == "72000");
    CHECK(ok);

    const char* src_dir = std::getenv("FREYBOUND_SOURCE_DIR");
    if (src_dir) {
        auto tbl = run_cli("--format records pipeline 5 --hplus-table " + std::string(src_dir) +
                           "/data/hplus_table.txt");
        CHECK(tbl.status == 0);
    }
}
