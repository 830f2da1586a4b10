#include "ladic/core/text.hpp"

#include <cctype>
#include <charconv>

#include "ladic/core/error.hpp"

namespace ladic {

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string trim_copy(std::string_view s)
{
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

i64 parse_int(std::string_view s)
{
    const std::string t = trim_copy(s);
    i64 v = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    require(ec == std::errc() && ptr == last && first != last, ErrorKind::MalformedInput, "not an integer: '" + t + "'");
    return v;
}

std::vector<i64> parse_int_list(std::string_view s, char sep)
{
    std::vector<i64> out;
    const std::string t = trim_copy(s);
    if (t.empty()) return out;
    for (const auto& part : split(t, sep)) out.push_back(parse_int(part));
    return out;
}

Rational parse_rational(std::string_view s)
{
    const std::string t = trim_copy(s);
    const auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(parse_int(t));
    const i64 den = parse_int(t.substr(slash + 1));
    require(den != 0, ErrorKind::MalformedInput, "zero denominator");
    return Rational(parse_int(t.substr(0, slash)), den);
}

std::string to_string(const Rational& q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::vector<std::vector<std::string>> parse_matrix_cells(std::string_view s)
{
    std::string t = trim_copy(s);
    std::vector<std::vector<std::string>> rows;
    if (starts_with(t, "[[")) {
        require(t.size() >= 4 && t.substr(t.size() - 2) == "]]", ErrorKind::MalformedInput, "unbalanced matrix brackets: " + t);
        t = t.substr(2, t.size() - 4);
        // rows separated by "],["
        size_t start = 0;
        while (true) {
            size_t pos = t.find("],", start);
            std::string row = t.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
            row = trim_copy(row);
            if (!row.empty() && row.front() == '[') row.erase(row.begin());
            std::vector<std::string> cells;
            for (auto& c : split(row, ',')) cells.push_back(trim_copy(c));
            rows.push_back(std::move(cells));
            if (pos == std::string::npos) break;
            start = pos + 2;
            while (start < t.size() && (t[start] == ' ' || t[start] == '[')) ++start;
        }
    } else {
        for (const auto& row : split(t, ';')) {
            std::vector<std::string> cells;
            for (auto& c : split(row, ',')) cells.push_back(trim_copy(c));
            rows.push_back(std::move(cells));
        }
    }
    for (const auto& r : rows) {
        require(r.size() == rows.front().size(), ErrorKind::MalformedInput, "ragged matrix: " + std::string(s));
        for (const auto& c : r) require(!c.empty(), ErrorKind::MalformedInput, "empty matrix cell: " + std::string(s));
    }
    return rows;
}

} // namespace ladic
