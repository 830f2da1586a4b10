#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ladic {

// One `[task <name>]` block: key=value lines and named series (`series <name>`
// followed by `<exponent> : <scalar>` lines; unnamed lines go to series `g`).
struct TaskBlock {
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> keys;
    std::vector<std::string> series_names;
    std::map<std::string, std::vector<std::string>> series;

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const; // MalformedInput if missing
    std::string get_or(const std::string& key, const std::string& fallback) const;
};

// Header lines before the first block carry prime, kind, poly, precision,
// degree and seed as `key=value` pairs separated by `;`.
struct ProblemFile {
    std::map<std::string, std::string> header;
    std::vector<TaskBlock> tasks;

    static ProblemFile parse(const std::string& text);
};

bool is_task_name(const std::string& name);
const std::vector<std::string>& task_names();

} // namespace ladic
