// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "programs.hpp"
#include "widenkit/cli.hpp"
#include "widenkit/lang/analyzer.hpp"
#include "widenkit/lang/parser.hpp"
#include "widenkit/report.hpp"

using namespace widenkit;
using namespace widenkit::lang;
using namespace widenkit::test;
namespace fs = std::filesystem;

namespace {

const char* kCount = "init x in [0,0];\nwhile (x < 100) {\n  x = x + 1;\n}\n";

class TempDir {
  public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("widenkit-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& content) const {
        const fs::path p = path_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }

  private:
    fs::path path_;
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string text_of(const AnalysisReport& r) {
    std::ostringstream ss;
    write_text(ss, r);
    return ss.str();
}

} // namespace

TEST_CASE("interval and env JSON forms", "[report]") {
    CHECK(to_json(Interval{0, ExtInt::pos_inf()}).dump() == R"({"lo":"0","hi":"inf"})");
    CHECK(to_json(Interval{ExtInt::neg_inf(), -3}).dump() == R"({"lo":"-inf","hi":"-3"})");
    CHECK(to_json(env_bottom()).dump() == R"("bottom")");
    CHECK(to_json(AbstractEnv{{{"y", Interval{1, 1}}, {"x", Interval{0, 2}}}}).dump() ==
          R"({"y":{"lo":"1","hi":"1"},"x":{"lo":"0","hi":"2"}})");
    CHECK(interval_from_json(Json::parse(R"({"lo":"-inf","hi":"inf"})")) == Interval::top());
    CHECK_THROWS_AS(interval_from_json(Json::parse(R"({"lo":"3","hi":"1"})")), std::invalid_argument);
    CHECK_THROWS_AS(interval_from_json(Json::parse(R"({"lo":0,"hi":"1"})")), std::invalid_argument);
    CHECK_THROWS_AS(env_from_json(Json::parse(R"([1,2])")), std::invalid_argument);
}

TEST_CASE("report JSON and text", "[report]") {
    const AnalysisReport r = analyze(parse(kCount), WideningStrategy::naive());
    const Json j = to_json(r);
    CHECK(j.dump() ==
          R"({"loops":[{"id":0,"line":2,"env":{"x":{"lo":"0","hi":"inf"}}}],"final":{"x":{"lo":"100","hi":"inf"}},"strategy":"naive","steps":2})");
    CHECK(text_of(r) == "strategy: naive\nloop@L2: x ∈ [0, +inf]\nfinal: x ∈ [100, +inf]\nsteps: 2\n");
}

TEST_CASE("report JSON round trips", "[report][property]") {
    ProgramGenerator gen(53);
    const std::vector<WideningStrategy> strategies{WideningStrategy::naive(), WideningStrategy::ramp({3, 1000}),
                                                   WideningStrategy::delayed(2)};
    for (int trial = 0; trial < 300; ++trial) {
        const AnalysisReport r = analyze(parse(gen.program()), strategies[static_cast<std::size_t>(trial) % 3]);
        const AnalysisReport back = report_from_json(Json::parse(to_json(r).dump()));
        REQUIRE(back == r);
        REQUIRE(text_of(back) == text_of(r));
    }
    // Integers wider than any machine word survive.
    const AnalysisReport big =
        analyze(parse("init x in [123456789012345678901234567890, 123456789012345678901234567891];"), WideningStrategy::naive());
    CHECK(report_from_json(to_json(big)) == big);
}

TEST_CASE("threshold files", "[cli]") {
    CHECK(cli::parse_thresholds("255\n32767\n") == std::vector<Integer>{255, 32767});
    CHECK(cli::parse_thresholds("\n  -5 \n\n7\r\n") == std::vector<Integer>{-5, 7});
    CHECK(cli::parse_thresholds("").empty());
    CHECK_THROWS_WITH(cli::parse_thresholds("1\n1\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(cli::parse_thresholds("1\nabc\n"), Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("analyze subcommand", "[cli]") {
    TempDir dir;
    const auto prog = dir.write("count.while", kCount);
    const auto ts = dir.write("t.txt", "255\n32767\n");

    const Run naive = run_cli({"analyze", prog});
    CHECK(naive.code == cli::kOk);
    CHECK(naive.out.find("loop@L2: x ∈ [0, +inf]") != std::string::npos);

    const Run ramp = run_cli({"analyze", prog, "--widening", "ramp", "--thresholds", ts, "--oracle"});
    CHECK(ramp.code == cli::kOk);
    CHECK(ramp.out.find("loop@L2: x ∈ [0, 255]") != std::string::npos);
    CHECK(ramp.out.find("oracle: pass (101 states checked)") != std::string::npos);

    const Run json = run_cli({"analyze", prog, "--format", "json", "--oracle"});
    CHECK(json.code == cli::kOk);
    CHECK(Json::parse(json.out)["loops"][0]["env"]["x"]["hi"] == "inf");
    CHECK(json.err.find("oracle: pass") != std::string::npos);

    const Run delay = run_cli({"analyze", prog, "--widening", "delay", "--delay", "5", "--format", "json"});
    CHECK(Json::parse(delay.out)["strategy"] == "delay(5, naive)");

    const Run kleene = run_cli({"analyze", prog, "--widening", "kleene"});
    CHECK(kleene.out.find("x ∈ [0, 100]") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
    TempDir dir;
    const auto prog = dir.write("count.while", kCount);
    const auto forever = dir.write("forever.while", "init x in [0,0];\nwhile (x >= 0) {\n  x = x + 1;\n}\n");
    const auto bad = dir.write("bad.while", "init x in [0,0];\nx = y;\n");

    CHECK(run_cli({"analyze", prog, "--inject-fault", "broken-widening"}).code == cli::kSolverDefect);
    const Run fuel = run_cli({"analyze", forever, "--widening", "kleene", "--fuel", "100"});
    CHECK(fuel.code == cli::kSolverDefect);
    CHECK(fuel.err.find("fuel exhausted") != std::string::npos);

    const Run parse_err = run_cli({"analyze", bad});
    CHECK(parse_err.code == cli::kConfigError);
    CHECK(parse_err.err.find("bad.while:2:5: undeclared variable 'y'") != std::string::npos);

    CHECK(run_cli({"analyze", dir.write("none", "") + ".missing"}).code == cli::kConfigError);
    CHECK(run_cli({"analyze", prog, "--widening", "ramp"}).code == cli::kConfigError);
    CHECK(run_cli({"analyze", prog, "--widening", "bogus"}).code == cli::kConfigError);
    CHECK(run_cli({"analyze", prog, "--fuel", "0"}).code == cli::kConfigError);
    CHECK(run_cli({}).code == cli::kConfigError);
    CHECK(run_cli({"--help"}).code == cli::kOk);

    // A hand-corrupted report fails the check.
    const Run good = run_cli({"analyze", prog, "--format", "json"});
    Json j = Json::parse(good.out);
    j["loops"][0]["env"]["x"]["hi"] = "50";
    const auto report = dir.write("report.json", j.dump());
    const Run check = run_cli({"check", prog, "--report", report});
    CHECK(check.code == cli::kCounterexample);
    CHECK(check.out.find("oracle: fail (50 of 101") != std::string::npos);
    CHECK(check.err.find("x = 51") != std::string::npos);

    const auto intact = dir.write("intact.json", good.out);
    CHECK(run_cli({"check", prog, "--report", intact}).code == cli::kOk);
    CHECK(run_cli({"check", prog, "--report", dir.write("junk.json", "{")}).code == cli::kConfigError);
    // A small budget never reaches x = 51.
    const Run shallow = run_cli({"check", prog, "--report", report, "--max-steps", "10"});
    CHECK(shallow.code == cli::kOk);
    CHECK(shallow.out.find("truncated") != std::string::npos);
}

TEST_CASE("WIDENKIT_FUEL sets the default budget", "[cli]") {
    TempDir dir;
    const auto prog = dir.write("count.while", kCount);
    ::setenv("WIDENKIT_FUEL", "50", 1);
    CHECK(run_cli({"analyze", prog, "--widening", "kleene"}).code == cli::kSolverDefect);
    CHECK(run_cli({"analyze", prog, "--widening", "kleene", "--fuel", "500"}).code == cli::kOk);
    ::setenv("WIDENKIT_FUEL", "many", 1);
    CHECK(run_cli({"analyze", prog}).code == cli::kConfigError);
    ::unsetenv("WIDENKIT_FUEL");
    CHECK(run_cli({"analyze", prog, "--widening", "kleene"}).code == cli::kOk);
}
