// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "marcumq/output_record.hpp"
#include "marcumq/special_functions.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& cmdline) {
    const std::string full = cmdline + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
        res.out.append(buf, n);
        if (n < sizeof buf) break;
    }
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string cli() { return MARCUMQ_CLI_PATH; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream iss(text);
    std::string line;
    while (std::getline(iss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("eval prints the value to 15 significant digits") {
    const RunResult r = run(cli() + " eval --nu 1 --a 0.2 --b 0.6");
    CHECK(r.status == 0);
    REQUIRE(!lines(r.out).empty());
    CHECK(lines(r.out)[0] == "0.838249985438908");
}

TEST_CASE("eval with a = 0 routes to the exact limit") {
    const RunResult r = run(cli() + " eval --nu 3 --a 0 --b 1.4");
    CHECK(r.status == 0);
    char expect[32];
    std::snprintf(expect, sizeof expect, "%.15g", marcumq::reg_upper_gamma(3.0, 0.98));
    CHECK(lines(r.out)[0] == expect);
}

TEST_CASE("domain violations exit 2") {
    CHECK(run(cli() + " eval --nu -1 --a 1 --b 1").status == 2);
    CHECK(run(cli() + " eval --nu 1 --a 1 --b -2").status == 2);
    CHECK(run(cli() + " eval --nu 1 --a 1 --b 1 --method simpson").status == 2);
    CHECK(run(cli() + " bogus-subcommand").status == 2);
}

TEST_CASE("non-convergence exits 3 and ill-conditioned exits 4") {
    CHECK(run(cli() + " eval --nu 1 --a 0.2 --b 2 --max-terms 3").status == 3);
    CHECK(run("MARCUMQ_MAX_TERMS=3 " + cli() + " eval --nu 1 --a 0.2 --b 2").status == 3);
    CHECK(run(cli() + " eval --nu 1 --a 0.2 --b 10").status == 4);
    CHECK(run(cli() + " eval --nu 1 --a 0.2 --b 10 --force").status == 0);
}

TEST_CASE("json and csv formats parse back") {
    const RunResult j = run(cli() + " eval --nu 5 --a 2.2 --b 2.6 --format json");
    CHECK(j.status == 0);
    const auto rec = marcumq::from_json(nlohmann::json::parse(lines(j.out)[0]));
    CHECK(rec.nu == 5.0);
    CHECK(rec.method == marcumq::Method::laguerre);
    CHECK(std::fabs(rec.value - 0.929671935077756) < 1e-12);

    const RunResult c = run(cli() + " eval --nu 5 --a 2.2 --b 2.6 --format csv");
    const auto rows = lines(c.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == marcumq::csv_header());
    const auto crec = marcumq::from_csv(rows[1]);
    CHECK(crec.value == rec.value);
    CHECK(crec.terms_used == rec.terms_used);
    CHECK(crec.error_bound == rec.error_bound);
}

TEST_CASE("repeated runs are deterministic apart from timing") {
    const std::string cmd = cli() + " eval --nu 2.5 --a 1.3 --b 1.9 --format json";
    const auto r1 = marcumq::from_json(nlohmann::json::parse(lines(run(cmd).out)[0]));
    auto r2 = marcumq::from_json(nlohmann::json::parse(lines(run(cmd).out)[0]));
    r2.elapsed_ns = r1.elapsed_ns;
    CHECK(r1 == r2);
}

TEST_CASE("batch mode evaluates stdin records in order") {
    const RunResult r = run("printf 'nu,a,b\\n1,0.2,0.6\\n1,0.2,1.0\\n3,1.2,1.6\\n' | " + cli() +
                            " eval --batch");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "0.838249985438908");
    CHECK(rows[2] == "0.916936068900377");
}

TEST_CASE("compare agrees across methods") {
    const RunResult r = run(cli() + " compare --nu 5 --a 2.2 --b 2.6 --format json");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);  // four records plus the spread summary
    for (int i = 0; i < 4; ++i) {
        const auto rec = marcumq::from_json(nlohmann::json::parse(rows[i]));
        CHECK(std::fabs(rec.value - 0.929671935077756) < 1e-9);
    }
    const auto summary = nlohmann::json::parse(rows[4]);
    CHECK(summary.at("max_spread").get<double>() <= 1e-10);
}

TEST_CASE("compare at b = 0 returns exactly one everywhere") {
    const RunResult r = run(cli() + " compare --nu 1 --a 1 --b 0 --format json");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    for (int i = 0; i < 4; ++i) {
        CHECK(marcumq::from_json(nlohmann::json::parse(rows[i])).value == 1.0);
    }
}

TEST_CASE("compare consensus on a fractional-order point") {
    const RunResult r = run(cli() + " compare --nu 7.7 --a 1.2 --b 1.6 --format json");
    CHECK(r.status == 0);
    for (int i = 0; i < 4; ++i) {
        const auto rec = marcumq::from_json(nlohmann::json::parse(lines(r.out)[i]));
        CHECK(std::fabs(rec.value - 0.999944937223540) <= 1e-9);
    }
}

TEST_CASE("convergence at b = 0 reports exact partial sums") {
    const RunResult r =
        run(cli() + " convergence --nu 2 --a 1.1 --b 0 --n-max 5 --format csv");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream iss(rows[i]);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(iss, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 5);
        CHECK(std::strtod(fields[1].c_str(), nullptr) == 1.0);
        CHECK(std::strtod(fields[2].c_str(), nullptr) == 0.0);
    }
}

TEST_CASE("tables self-test passes") {
    const RunResult r = run(cli() + " tables");
    CHECK(r.status == 0);
    CHECK(r.out.find("0.999944937223540") != std::string::npos);
}

TEST_CASE("convergence emits the fixed CSV schema with a sound bound") {
    const RunResult r =
        run(cli() + " convergence --nu 1 --a 0.2 --b 0.6 --n-max 20 --format csv");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 21);
    CHECK(rows[0] == "n0,value,actual_err,bound,ratio");
    double prev_bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream iss(rows[i]);
        std::string field;
        std::vector<double> vals;
        int col = 0;
        while (std::getline(iss, field, ',')) {
            if (col++ > 0) vals.push_back(std::strtod(field.c_str(), nullptr));
        }
        REQUIRE(vals.size() == 4);
        const double actual = vals[1], bound = vals[2];
        CHECK(actual <= bound);
        CHECK(bound <= prev_bound);
        prev_bound = bound;
    }
}
