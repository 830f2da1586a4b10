#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ladic/core/integer.hpp"

namespace ladic {

std::vector<std::string> split(std::string_view s, char sep);
std::string trim_copy(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);

// Strict integer parsing; MalformedInput on trailing garbage.
i64 parse_int(std::string_view s);
std::vector<i64> parse_int_list(std::string_view s, char sep);
Rational parse_rational(std::string_view s);

std::string to_string(const Rational& q);

// "[[1,2],[3,4]]" or "1,2;3,4" -> rows
std::vector<std::vector<std::string>> parse_matrix_cells(std::string_view s);

} // namespace ladic
