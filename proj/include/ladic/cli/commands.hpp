#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ladic/selftest/suites.hpp"

namespace ladic {

using OrderedJson = nlohmann::ordered_json;

struct RunOptions {
    std::optional<long long> prime;
    std::optional<int> precision;
    std::optional<int> degree;
    std::optional<int> level;
    std::optional<std::string> ext_poly; // `<kind>:<c0,c1,..>`
    std::optional<std::uint64_t> seed;
    std::string profile = "quick";
    std::string mutate = "none";
};

struct TaskOutcome {
    std::string task;
    int index = 0;
    int exit = 0;
    std::string verdict; // true, false, undecided, error
    std::vector<std::string> lines;
    OrderedJson data = OrderedJson::object();
};

struct Report {
    std::string command;
    OrderedJson config = OrderedJson::object();
    std::vector<TaskOutcome> tasks;
    std::vector<SuiteResult> suites;
    std::uint64_t ops = 0;
    int exit = 0;

    std::string text() const;
    OrderedJson json() const;
};

const std::vector<std::string>& command_names();

// MalformedInput for a bad problem file; per-task failures are recorded in the report.
Report run_command(const std::string& command, const std::optional<std::string>& problem_text, const RunOptions& opts);

} // namespace ladic
