#include "k2/text.hpp"

#include "k2/field.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace k2 {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool header_value(const std::string& line, const std::string& key, std::string& value) {
  if (line.size() <= key.size() || line.compare(0, key.size(), key) != 0 || line[key.size()] != ':')
    return false;
  value = trim(line.substr(key.size() + 1));
  return true;
}

std::vector<std::string> split_word(const std::string& word, const std::vector<std::string>& names) {
  if (std::find(names.begin(), names.end(), word) != names.end()) return {word};
  bool single = std::all_of(names.begin(), names.end(), [](const auto& n) { return n.size() == 1; });
  if (!single) throw InputError("unknown variable '" + word + "'");
  std::vector<std::string> out;
  for (char c : word) {
    std::string s(1, c);
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw InputError("unknown variable '" + s + "' in '" + word + "'");
    out.push_back(s);
  }
  return out;
}

}  // namespace k2
