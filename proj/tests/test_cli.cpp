#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

// golden tests against the installed binary; the build passes its path in
#ifndef MAHONIAN_CLI_PATH
#error "MAHONIAN_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MAHONIAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("gen prints canonical polynomial text") {
    auto r = run_cli("gen --group d --n 2 --stat dmaj --char sign");
    CHECK(r.status == 0);
    CHECK(r.out == "1 - q^2\n");

    r = run_cli("gen --group b --n 1 --stat fmaj");
    CHECK(r.status == 0);
    CHECK(r.out == "1 + q\n");

    r = run_cli("gen --group s --n 3 --stat maj --char sign");
    CHECK(r.status == 0);
    CHECK(r.out == "1 - q^3\n");

    r = run_cli("gen --group b --n 2 --stat fmaj --char sign --format latex");
    CHECK(r.status == 0);
    CHECK(r.out == "1 - q^{4}\n");
}

TEST_CASE("gen json matches the documented schema") {
    const auto r = run_cli("gen --group d --n 2 --stat dmaj --char sign --format json");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"group\":\"d\",\"n\":2,\"stat\":\"dmaj\",\"char\":\"sign\",\"var\":\"q\","
          "\"coeffs\":[1,0,-1]}\n");

    // parse with a real JSON reader and re-render from the parsed coefficients
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["group"] == "d");
    CHECK(j["n"] == 2);
    CHECK(j["coeffs"] == nlohmann::json::array({1, 0, -1}));
    std::string rebuilt = "{\"group\":\"" + j["group"].get<std::string>() +
                          "\",\"n\":" + std::to_string(j["n"].get<int>()) + ",\"stat\":\"" +
                          j["stat"].get<std::string>() + "\",\"char\":\"" +
                          j["char"].get<std::string>() + "\",\"var\":\"" +
                          j["var"].get<std::string>() + "\",\"coeffs\":" + j["coeffs"].dump() +
                          "}\n";
    CHECK(rebuilt == r.out);
}

TEST_CASE("gen rejects invalid combinations with exit 2") {
    CHECK(run_cli("gen --group s --n 2 --stat dmaj").status == 2);
    CHECK(run_cli("gen --group q --n 2 --stat inv").status == 2);
    CHECK(run_cli("gen --group b --n 2 --stat nope").status == 2);
    CHECK(run_cli("gen --group b --n 2 --stat inv --char bogus").status == 2);
    CHECK(run_cli("gen --group b --n 9 --stat inv").status == 2);   // ceiling without --big
    CHECK(run_cli("gen --group b --n 12 --stat inv --big").status == 2);
    CHECK(run_cli("gen --n 2 --stat inv").status == 2);             // missing --group
    CHECK(run_cli("").status == 2);                                  // missing subcommand
    CHECK(run_cli("frobnicate").status == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("gen --help").status == 0);
}

TEST_CASE("verify reports one line per rank and exits zero on success") {
    const auto r = run_cli("verify --id agr --max-n 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS  agr  n=1") != std::string::npos);
    CHECK(r.out.find("PASS  agr  n=2") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const auto quarto = run_cli("verify --id quarto --max-n 2");
    CHECK(quarto.status == 0);
    CHECK(quarto.out.find("PASS  quarto  n=1") != std::string::npos);
    CHECK(quarto.out.find("PASS  quarto  n=2") != std::string::npos);
}

TEST_CASE("verify json is byte-identical across thread counts") {
    const auto a = run_cli("verify --id signed-mahonian-d --max-n 5 --format json --jobs 1");
    const auto b = run_cli("verify --id signed-mahonian-d --max-n 5 --format json --jobs 3");
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 5);
    for (const auto& rep : j) {
        CHECK(rep["equal"] == true);
        CHECK(rep["brute"] == rep["closed"]);
    }
    CHECK(j[1]["brute"] == nlohmann::json::array({1, 0, -1}));
}

TEST_CASE("verify rejects bad ids and out-of-range ranks") {
    CHECK(run_cli("verify --id nonsense --max-n 3").status == 2);
    CHECK(run_cli("verify --id quarto --max-n 5").status == 2);   // ceiling is 4
    CHECK(run_cli("verify --id agr --max-n 0").status == 2);
    CHECK(run_cli("verify --id agr").status == 2);                // missing --max-n
}

TEST_CASE("verify all respects per-identity ceilings") {
    const auto r = run_cli("verify --id all --max-n 1 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    // every identity applicable at n=1 shows up exactly once, even ones skip
    bool saw_quarto = false, saw_delta_even = false;
    for (const auto& rep : j) {
        CHECK(rep["equal"] == true);
        if (rep["id"] == "quarto") saw_quarto = true;
        if (rep["id"] == "delta-even") saw_delta_even = true;
    }
    CHECK(saw_quarto);
    CHECK_FALSE(saw_delta_even);
}

TEST_CASE("iota on a moving window prints the image") {
    const auto r = run_cli("iota --window \"2,6,5,-4,-3,1\"");
    CHECK(r.status == 0);
    CHECK(r.out == "1,6,5,-4,-3,2\n");
}

TEST_CASE("iota on a fixed window prints the barred form and stats") {
    const auto r = run_cli("iota --window \"-3,-4,1,2,-6,-5\"");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "-3,-4,1,2,-6,-5\n"
          "FIXED; barred = -2,1,-3~ ; S={3}\n"
          "maj = 2, inv = 2, N1 = 2, S+ = {}, S- = {3}\n");

    const auto j = run_cli("iota --window \"-3,-4,1,2,-6,-5\" --format json");
    CHECK(j.status == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["fixed"] == true);
    CHECK(parsed["barred"] == "-2,1,-3~");
    CHECK(parsed["stats"]["maj"] == 2);
    CHECK(parsed["stats"]["n1"] == 2);
}

TEST_CASE("iota fixed-only lists the fixed points in order") {
    const auto r = run_cli("iota --n 2 --fixed-only");
    CHECK(r.status == 0);
    CHECK(r.out == "-2,-1\n-1,-2\n1,2\n2,1\n");

    const auto j = run_cli("iota --n 2 --fixed-only --format json");
    CHECK(j.status == 0);
    CHECK(nlohmann::json::parse(j.out)["count"] == 4);
}

TEST_CASE("iota usage errors") {
    CHECK(run_cli("iota --window \"1,1\"").status == 2);
    CHECK(run_cli("iota").status == 2);
    CHECK(run_cli("iota --window \"1,2\" --n 2").status == 2);  // mutually exclusive
    CHECK(run_cli("iota --n 3").status == 2);                   // --n requires --fixed-only
    CHECK(run_cli("iota --n 9 --fixed-only").status == 2);      // ceiling without --big
}
