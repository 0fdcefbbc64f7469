#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace req2road::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool contains(std::string_view s, std::string_view needle);

std::vector<std::string> split(std::string_view s, char sep);

// Splits on '\n', accepting CRLF input; the trailing '\r' is removed per line.
std::vector<std::string> split_lines(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Lowercased alphanumeric tokens. Camel-case humps, letter/digit boundaries and
// every non-alphanumeric character split tokens, so "Vehicle.Cabin.HVACControl"
// yields {vehicle, cabin, hvac, control}.
std::vector<std::string> tokenize(std::string_view s);

// Whitespace-separated words, punctuation kept.
std::vector<std::string> split_words(std::string_view s);

}  // namespace req2road::text
