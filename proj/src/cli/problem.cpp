#include "ladic/cli/problem.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "ladic/core/error.hpp"
#include "ladic/core/text.hpp"

namespace ladic {

namespace {

const std::set<std::string> kMonodromyKeys = {"rank", "zeta", "b", "quotient"};

// allowed keys and whether series lines are accepted
struct TaskShape {
    std::set<std::string> keys;
    bool monodromy = false;
    bool series = false;
    bool components = false;
};

const std::map<std::string, TaskShape>& shapes()
{
    static const std::map<std::string, TaskShape> s = {
        {"unit-cert", {{"vars", "sigma", "alpha", "max_steps"}, false, true}},
        {"grade-check", {{"vars", "sigma", "alpha", "n"}, false, true}},
        {"weil-check", {{"charpoly", "sigma"}}},
        {"explog", {{"direction", "radius", "coords"}}},
        {"group-law-check", {{"vars"}, false, true}},
        {"torsion", {{"vars", "level", "mode", "count"}, false, true}},
        {"divisibility", {{"m", "n"}}},
        {"mellin", {{"level", "limit_levels", "limit_degree"}, true}},
        {"jump", {{"i", "j", "level"}, true}},
        {"verify-qlin", {{"i", "j", "level"}, true, false, true}},
        {"twist", {{"vars"}, false, true}},
    };
    return s;
}

bool allowed(const TaskShape& shape, const std::string& key)
{
    if (shape.keys.count(key)) return true;
    static const std::regex matrix_key("M[0-9]+"), component_key("component[0-9]+");
    if (shape.monodromy && (kMonodromyKeys.count(key) || std::regex_match(key, matrix_key))) return true;
    return shape.components && std::regex_match(key, component_key);
}

} // namespace

const std::vector<std::string>& task_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, s] : shapes()) v.push_back(k);
        return v;
    }();
    return names;
}

bool is_task_name(const std::string& name) { return shapes().count(name) > 0; }

bool TaskBlock::has(const std::string& key) const
{
    return std::any_of(keys.begin(), keys.end(), [&](const auto& kv) { return kv.first == key; });
}

const std::string& TaskBlock::get(const std::string& key) const
{
    for (const auto& kv : keys)
        if (kv.first == key) return kv.second;
    fail(ErrorKind::MalformedInput, "task " + name + " (line " + std::to_string(line) + ") needs " + key + "=");
}

std::string TaskBlock::get_or(const std::string& key, const std::string& fallback) const { return has(key) ? get(key) : fallback; }

ProblemFile ProblemFile::parse(const std::string& text)
{
    static const std::set<std::string> header_keys = {"prime", "kind", "poly", "precision", "degree", "seed"};
    ProblemFile pf;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::string current_series;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim_copy(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const std::string at = " (line " + std::to_string(lineno) + ")";
        if (line.front() == '[') {
            require(line.back() == ']' && starts_with(line, "[task "), ErrorKind::MalformedInput, "expected [task <name>]" + at);
            const std::string name = trim_copy(line.substr(6, line.size() - 7));
            require(is_task_name(name), ErrorKind::MalformedInput, "unknown task '" + name + "'" + at);
            pf.tasks.push_back(TaskBlock{name, lineno, {}, {}, {}});
            current_series.clear();
            continue;
        }
        if (pf.tasks.empty()) {
            for (const auto& part : split(line, ';')) {
                const std::string item = trim_copy(part);
                if (item.empty()) continue;
                const auto eq = item.find('=');
                require(eq != std::string::npos, ErrorKind::MalformedInput, "expected key=value in header" + at);
                const std::string key = trim_copy(item.substr(0, eq));
                require(header_keys.count(key), ErrorKind::MalformedInput, "unknown header key '" + key + "'" + at);
                require(!pf.header.count(key), ErrorKind::MalformedInput, "repeated header key '" + key + "'" + at);
                pf.header[key] = trim_copy(item.substr(eq + 1));
            }
            continue;
        }
        TaskBlock& t = pf.tasks.back();
        const TaskShape& shape = shapes().at(t.name);
        if (starts_with(line, "series ") || line.front() == '(') {
            require(shape.series, ErrorKind::MalformedInput, "task " + t.name + " takes no series" + at);
            if (line.front() != '(') {
                const std::string name = trim_copy(line.substr(7));
                require(!name.empty() && !t.series.count(name), ErrorKind::MalformedInput, "bad or repeated series name" + at);
                t.series_names.push_back(name);
                t.series[name];
                current_series = name;
                continue;
            }
            if (current_series.empty()) {
                current_series = "g";
                require(!t.series.count("g"), ErrorKind::MalformedInput, "repeated series g" + at);
                t.series_names.push_back("g");
            }
            t.series[current_series].push_back(line);
            continue;
        }
        const auto eq = line.find('=');
        require(eq != std::string::npos, ErrorKind::MalformedInput, "expected key=value, series line or [task ..]" + at);
        const std::string key = trim_copy(line.substr(0, eq));
        require(allowed(shape, key), ErrorKind::MalformedInput, "unknown key '" + key + "' for task " + t.name + at);
        require(!t.has(key), ErrorKind::MalformedInput, "repeated key '" + key + "'" + at);
        t.keys.emplace_back(key, trim_copy(line.substr(eq + 1)));
    }
    return pf;
}

} // namespace ladic
