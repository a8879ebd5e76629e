#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "agflag/codes.hpp"
#include "agflag/flags.hpp"
#include "agflag/presets.hpp"

using namespace agflag;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(AGFLAG_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), int(buf.size()), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("grid: record count, header, byte stability") {
    const auto r1 = run_cli("hermitian --q 2 grid --b-max 4 --a-max 12");
    CHECK(r1.exit_code == 0);
    const auto r2 = run_cli("hermitian --q 2 grid --b-max 4 --a-max 12");
    CHECK(r1.output == r2.output);

    std::size_t lines = 0, data = 0;
    std::string first_line, first_data;
    std::size_t pos = 0;
    while (pos < r1.output.size()) {
        const auto nl = r1.output.find('\n', pos);
        const std::string line = r1.output.substr(pos, nl - pos);
        pos = nl + 1;
        if (lines == 0) first_line = line;
        if (!line.empty() && line[0] != '#' && lines > 0) {
            if (data == 0) first_data = line;
            ++data;
        }
        ++lines;
    }
    CHECK(first_line == "b,a,ell,dim,in_hb,in_hbstar,in_hpq");
    CHECK(data == 65);  // 5 x 13 grid
    CHECK(first_data == "0,0,1,1,1,1,1");
}

TEST_CASE("grid: isodual summary marks exactly the right rows") {
    const auto r = run_cli("gen-hermitian --q 2 --ell 3 grid --b-max 13 --a-max 0");
    CHECK(r.exit_code == 0);
    std::size_t pos = 0;
    while (pos < r.output.size()) {
        const auto nl = r.output.find('\n', pos);
        const std::string line = r.output.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.size() < 2 || line[0] != '#' || !isdigit(line[1])) continue;
        const long b = std::stol(line.substr(1));
        const bool marked = line.back() == '1';
        CHECK(marked == (b == 4 || b == 13));
    }
}

TEST_CASE("grid: json format carries records and per-b summaries") {
    const auto r = run_cli("hermitian --q 2 grid --b-max 2 --a-max 8 --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["curve"]["n"] == 7);
    CHECK(j["curve"]["genus"] == 1);
    CHECK(j["records"].size() == 3 * 9);
    REQUIRE(j["per_b"].size() == 3);
    CHECK(j["per_b"][0]["max_hb_star"] == 7);
    CHECK(j["per_b"][0]["lower_bound"] == 7);
    CHECK(j["per_b"][0]["upper_bound"] == 8);
    CHECK(j["per_b"][0]["isodual"] == false);
    CHECK(j["per_b"][1]["isodual"] == true);  // b = 1: 3 divides 2b+1
    for (const auto& rec : j["records"]) {
        CHECK(rec.contains("ell"));
        CHECK(rec.contains("dim"));
        CHECK(rec.contains("in_hb"));
        CHECK(rec.contains("in_hbstar"));
        CHECK(rec.contains("in_hpq"));
    }
}

TEST_CASE("flag: verified report whose witness re-verifies through the library") {
    const auto r = run_cli("hermitian --q 2 flag --b 1 --verify");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["b"] == 1);
    CHECK(j["fast_general"] == true);
    CHECK(j["fast_kummer"] == true);
    CHECK(j["oracle_status"] == "verified-dual");
    REQUIRE(j["witness"].is_array());

    const auto support = EvaluationSupport::standard(make_hermitian_curve(2), 1);
    std::vector<FieldElement> x;
    for (const auto& enc : j["witness"])
        x.push_back(support.curve().field().element(enc.get<std::uint32_t>()));
    REQUIRE(long(x.size()) == support.n());
    const std::vector<long> indices = j["indices"].get<std::vector<long>>();
    const std::size_t s = indices.size() - 1;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto ci = build_code(support, indices[i], 1);
        const auto cj = build_code(support, indices[s - i], 1);
        CHECK(rowspace_equal(ci.gen, scale_columns(dual(cj), x)));
    }
}

TEST_CASE("flag: witness output is reproducible") {
    const auto r1 = run_cli("norm-trace --q 2 --ell 3 flag --b 3 --verify");
    const auto r2 = run_cli("norm-trace --q 2 --ell 3 flag --b 3 --verify");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
}

TEST_CASE("flag: skipping the oracle") {
    const auto r = run_cli("norm-trace --q 2 --ell 3 flag --b 2");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["fast_general"] == false);
    CHECK(j["oracle_status"] == "skipped");
    CHECK(j["witness"].is_null());
}

TEST_CASE("isodual-list") {
    CHECK(run_cli("gen-hermitian --q 2 --ell 3 isodual-list").output ==
          "[4,13,22,31,40,49,58]\n");
    CHECK(run_cli("norm-trace --q 2 --ell 3 isodual-list").output == "[3]\n");
    CHECK(run_cli("hermitian --q 3 isodual-list").output == "[]\n");
}

TEST_CASE("verify exits zero on presets") {
    CHECK(run_cli("hermitian --q 2 verify").exit_code == 0);
    CHECK(run_cli("norm-trace --q 2 --ell 3 verify").exit_code == 0);
}

TEST_CASE("semigroup output") {
    const auto r = run_cli("hermitian --q 2 semigroup");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["hp_gaps"] == json::array({1}));
    CHECK(j["hq_gaps"] == json::array({1}));
    REQUIRE(j["gamma"].size() == 1);
    CHECK(j["gamma"][0] == json::array({1, 1}));
    CHECK(j["hpq_grid"][0][0] == 1);
    CHECK(j["hpq_grid"][1][1] == 1);
    CHECK(j["hpq_grid"][0][1] == 0);
}

TEST_CASE("validation failures exit nonzero with a clean message") {
    const auto bad_gcd = run_cli("custom --p 2 --k 2 --m 4 --f 0,1,1 verify");
    CHECK(bad_gcd.exit_code == 2);
    CHECK(bad_gcd.output.find("error:") != std::string::npos);
    CHECK(bad_gcd.output.find("gcd") != std::string::npos);

    const auto bad_field = run_cli("custom --p 6 --k 1 --m 3 --f 0,1,1 verify");
    CHECK(bad_field.exit_code == 2);
    CHECK(bad_field.output.find("error:") != std::string::npos);

    const auto bad_b = run_cli("hermitian --q 2 flag --b 2");
    CHECK(bad_b.exit_code == 2);
}

TEST_CASE("custom preset reproduces the norm-trace curve") {
    // GF(8), m = 7, f = x^4 + x^2 + x given by raw encodings
    const auto r = run_cli("custom --p 2 --k 3 --m 7 --f 0,1,1,0,1 isodual-list");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[3]\n");
}
