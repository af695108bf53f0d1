// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "widenkit/lang/analyzer.hpp"
#include "widenkit/lang/parser.hpp"
#include "widenkit/oracle.hpp"
#include "widenkit/report.hpp"

namespace widenkit::cli {

std::vector<Integer> parse_thresholds(const std::string& text) {
    std::vector<Integer> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        try {
            out.push_back(parse_integer(std::string_view(line).substr(first, last - first + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (out.size() > 1 && out[out.size() - 2] >= out.back()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": thresholds must be strictly ascending");
        }
    }
    return out;
}

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

lang::Program load_program(const std::string& path, std::ostream& err) {
    try {
        return lang::parse(read_file(path));
    } catch (const lang::ParseError& e) {
        for (const auto& d : e.diagnostics()) {
            err << path << ':' << d.to_string() << '\n';
        }
        throw ConfigError("parsing failed");
    }
}

struct OracleFlags {
    std::size_t max_steps = 100'000;
    std::size_t max_states = 100'000;
    std::vector<std::string> havoc_window; // "LO" "HI"

    [[nodiscard]] oracle::ExplorationBounds bounds() const {
        oracle::ExplorationBounds b;
        b.max_steps = max_steps;
        b.max_states = max_states;
        if (!havoc_window.empty()) {
            try {
                b.havoc_window = oracle::HavocWindow{parse_integer(havoc_window.at(0)), parse_integer(havoc_window.at(1))};
            } catch (const std::exception& e) {
                throw ConfigError(std::string("bad --havoc-window: ") + e.what());
            }
        }
        return b;
    }
};

void add_oracle_flags(CLI::App& cmd, OracleFlags& flags) {
    cmd.add_option("--max-steps", flags.max_steps, "Oracle: transitions to execute")->check(CLI::PositiveNumber);
    cmd.add_option("--max-states", flags.max_states, "Oracle: distinct configurations to keep")->check(CLI::PositiveNumber);
    cmd.add_option("--havoc-window", flags.havoc_window, "Oracle: LO HI edges of the havoc sample window")
        ->expected(2);
}

// Returns the exit code and prints the oracle line.
int run_oracle(const lang::Program& program, const lang::AnalysisReport& report, const OracleFlags& flags,
               std::ostream& out, std::ostream& err) {
    oracle::Exploration concrete;
    try {
        concrete = oracle::explore(program, flags.bounds());
    } catch (const oracle::ConfigurationError& e) {
        throw ConfigError(e.what());
    }
    oracle::Verdict verdict;
    try {
        verdict = oracle::check_soundness(report, concrete);
    } catch (const oracle::StructuralError& e) {
        throw ConfigError(e.what());
    }
    const std::string truncated = concrete.truncated ? ", truncated" : "";
    if (verdict.pass()) {
        out << "oracle: pass (" << verdict.states_checked << " states checked" << truncated << ")\n";
        return kOk;
    }
    out << "oracle: fail (" << verdict.counterexamples.size() << " of " << verdict.states_checked
        << " states outside the invariant" << truncated << ")\n";
    for (const auto& cx : verdict.counterexamples) {
        const auto* loop = report.loop(cx.loop_id);
        err << "counterexample: loop " << cx.loop_id << " (line " << loop->line << "): " << oracle::to_string(cx.state)
            << '\n';
    }
    return kCounterexample;
}

std::size_t default_fuel() {
    const char* env = std::getenv("WIDENKIT_FUEL");
    if (env == nullptr || *env == '\0') {
        return kDefaultFuel;
    }
    try {
        const Integer n = parse_integer(env);
        if (n <= 0 || n > Integer(std::numeric_limits<std::size_t>::max())) {
            throw std::invalid_argument("out of range");
        }
        return static_cast<std::size_t>(n);
    } catch (const std::invalid_argument&) {
        throw ConfigError(std::string("WIDENKIT_FUEL must be a positive integer, got '") + env + "'");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interval analysis of while-programs with widening trees"};
    app.name("widenkit");
    app.require_subcommand(1);

    std::string input;
    std::string widening = "naive";
    std::string thresholds_path;
    std::size_t delay = 0;
    std::string delay_base = "naive";
    std::optional<std::size_t> fuel;
    std::string format = "text";
    bool with_oracle = false;
    std::string fault;
    OracleFlags oracle_flags;

    auto* analyze = app.add_subcommand("analyze", "Infer loop invariants");
    analyze->add_option("input", input, "Program source")->required();
    analyze->add_option("--widening", widening, "Widening strategy")
        ->check(CLI::IsMember({"naive", "ramp", "delay", "kleene"}));
    analyze->add_option("--thresholds", thresholds_path, "Threshold file for --widening ramp (one integer per line)");
    analyze->add_option("--delay", delay, "Joins between widening steps for --widening delay")->check(CLI::NonNegativeNumber);
    analyze->add_option("--delay-base", delay_base, "Strategy delayed by --widening delay")
        ->check(CLI::IsMember({"naive", "ramp"}));
    analyze->add_option("--fuel", fuel, "Solver step budget per loop (default 10000, or $WIDENKIT_FUEL)")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--oracle", with_oracle, "Cross-check invariants by bounded concrete execution");
    analyze->add_option("--inject-fault", fault, "Swap in a deliberately broken widening (testing aid)")
        ->check(CLI::IsMember({"broken-widening"}));
    add_oracle_flags(*analyze, oracle_flags);

    std::string report_path;
    auto* check = app.add_subcommand("check", "Check a JSON invariant report against bounded concrete execution");
    check->add_option("input", input, "Program source")->required();
    check->add_option("--report", report_path, "Report produced by `analyze --format json`")->required();
    add_oracle_flags(*check, oracle_flags);

    std::vector<std::string> argv_storage{"widenkit"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        const lang::Program program = load_program(input, err);

        if (check->parsed()) {
            lang::AnalysisReport report;
            try {
                report = report_from_json(Json::parse(read_file(report_path)));
            } catch (const std::exception& e) {
                throw ConfigError("cannot load report '" + report_path + "': " + e.what());
            }
            return run_oracle(program, report, oracle_flags, out, err);
        }

        auto strategy_for = [&](const std::string& name) {
            if (name == "ramp") {
                if (thresholds_path.empty()) {
                    throw ConfigError("--widening ramp requires --thresholds");
                }
                try {
                    return lang::WideningStrategy::ramp(parse_thresholds(read_file(thresholds_path)));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(thresholds_path + ": " + e.what());
                }
            }
            return name == "kleene" ? lang::WideningStrategy::kleene() : lang::WideningStrategy::naive();
        };
        lang::WideningStrategy strategy = widening == "delay" ? lang::WideningStrategy::delayed(delay, strategy_for(delay_base))
                                                              : strategy_for(widening);
        if (fault == "broken-widening") {
            strategy = lang::WideningStrategy::broken();
        }

        SolverOptions options;
        options.fuel = fuel ? *fuel : default_fuel();

        lang::AnalysisReport report;
        try {
            report = lang::analyze(program, strategy, options);
        } catch (const lang::AnalysisError& e) {
            err << input << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
            return kSolverDefect;
        }

        if (format == "json") {
            out << to_json(report).dump(2) << '\n';
        } else {
            write_text(out, report);
        }
        // Keep stdout valid JSON; the oracle summary goes to stderr in that case.
        return with_oracle ? run_oracle(program, report, oracle_flags, format == "json" ? err : out, err) : kOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

} // namespace widenkit::cli
