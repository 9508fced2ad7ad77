#pragma once

// Small helpers shared by the input parsers.

#include <string>
#include <vector>

namespace k2 {

std::string read_file(const std::string& path);
std::string trim(const std::string& s);
/// Lines with `#` comments removed and surrounding blanks trimmed; empty
/// lines dropped. Each entry keeps its 1-based line number.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text);
/// Splits on whitespace and commas.
std::vector<std::string> split_names(const std::string& s);
/// If `line` starts with `key:` returns true and stores the remainder.
bool header_value(const std::string& line, const std::string& key, std::string& value);
/// Splits a word into known variable names: whole tokens, or, for single
/// character names, character by character. Throws InputError otherwise.
std::vector<std::string> split_word(const std::string& word, const std::vector<std::string>& names);

}  // namespace k2
