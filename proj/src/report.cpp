// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/report.hpp"

#include <ostream>
#include <stdexcept>

namespace widenkit {

namespace {

std::string bound_to_json(const ExtInt& b) {
    if (b.is_neg_inf()) {
        return "-inf";
    }
    if (b.is_pos_inf()) {
        return "inf";
    }
    return b.value().str();
}

ExtInt bound_from_json(const Json& j, bool lower) {
    if (!j.is_string()) {
        throw std::invalid_argument("interval bound must be a string");
    }
    const auto s = j.get<std::string>();
    if (s == (lower ? "-inf" : "inf")) {
        return lower ? ExtInt::neg_inf() : ExtInt::pos_inf();
    }
    return ExtInt{parse_integer(s)};
}

} // namespace

Json to_json(const Interval& iv) {
    if (iv.is_bottom()) {
        return "bottom";
    }
    return Json{{"lo", bound_to_json(iv.lo())}, {"hi", bound_to_json(iv.hi())}};
}

Json to_json(const AbstractEnv& env) {
    if (env.is_bottom()) {
        return "bottom";
    }
    Json out = Json::object();
    for (const auto& [name, value] : env.bindings()) {
        out[name] = to_json(value);
    }
    return out;
}

Json to_json(const lang::AnalysisReport& report) {
    Json loops = Json::array();
    for (const auto& l : report.loops) {
        loops.push_back(Json{{"id", l.id}, {"line", l.line}, {"env", to_json(l.env)}});
    }
    return Json{{"loops", std::move(loops)},
                {"final", to_json(report.final_env)},
                {"strategy", report.strategy},
                {"steps", report.steps}};
}

Interval interval_from_json(const Json& j) {
    if (j == "bottom") {
        return Interval::bottom();
    }
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi")) {
        throw std::invalid_argument("interval must be \"bottom\" or {\"lo\", \"hi\"}");
    }
    return Interval{bound_from_json(j.at("lo"), true), bound_from_json(j.at("hi"), false)};
}

AbstractEnv env_from_json(const Json& j) {
    if (j == "bottom") {
        return AbstractEnv::bottom();
    }
    if (!j.is_object()) {
        throw std::invalid_argument("environment must be \"bottom\" or an object");
    }
    std::vector<AbstractEnv::Binding> bindings;
    for (const auto& [name, value] : j.items()) {
        bindings.emplace_back(name, interval_from_json(value));
    }
    return AbstractEnv{std::move(bindings)};
}

lang::AnalysisReport report_from_json(const Json& j) {
    try {
        lang::AnalysisReport report;
        for (const auto& l : j.at("loops")) {
            report.loops.push_back({l.at("id").get<int>(), l.at("line").get<int>(), env_from_json(l.at("env"))});
        }
        report.final_env = env_from_json(j.at("final"));
        report.strategy = j.at("strategy").get<std::string>();
        report.steps = j.at("steps").get<std::size_t>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

namespace {

std::string env_text(const AbstractEnv& env) {
    if (env.is_bottom()) {
        return "bottom";
    }
    std::string out;
    for (const auto& [name, iv] : env.bindings()) {
        out += (out.empty() ? "" : ", ") + name + " ∈ [" + iv.lo().to_string() + ", " + iv.hi().to_string() + "]";
    }
    return out.empty() ? "(no variables)" : out;
}

} // namespace

void write_text(std::ostream& os, const lang::AnalysisReport& report) {
    os << "strategy: " << report.strategy << '\n';
    for (const auto& l : report.loops) {
        os << "loop@L" << l.line << ": " << env_text(l.env) << '\n';
    }
    os << "final: " << env_text(report.final_env) << '\n';
    os << "steps: " << report.steps << '\n';
}

} // namespace widenkit
