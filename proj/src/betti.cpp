#include "k2/betti.hpp"

#include <algorithm>
#include <sstream>

namespace k2 {

void BettiTable::set(int i, int j, std::size_t v) {
  if (v == 0)
    e_.erase({i, j});
  else
    e_[{i, j}] = v;
}

void BettiTable::add(int i, int j, std::size_t v) {
  if (v) e_[{i, j}] += v;
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? 0 : it->second;
}

std::vector<BettiRecord> BettiTable::records() const {
  std::vector<BettiRecord> out;
  for (const auto& [k, v] : e_) out.push_back({k.first, k.second, v, complete(k.first, k.second)});
  return out;
}

std::string BettiTable::to_text() const {
  int hi_i = max_hom_, hi_j = max_deg_;
  for (const auto& [k, v] : e_) {
    hi_i = std::max(hi_i, k.first);
    hi_j = std::max(hi_j, k.second);
  }
  if (hi_i < 0 || hi_j < 0) return "(empty)\n";
  const int w = 4;
  std::ostringstream out;
  out << "i\\j";
  for (int j = 0; j <= hi_j; ++j) {
    std::string s = std::to_string(j);
    out << std::string(w - std::min<int>(w - 1, static_cast<int>(s.size())), ' ') << s;
  }
  out << "\n";
  for (int i = 0; i <= hi_i; ++i) {
    std::string s = std::to_string(i);
    out << s << std::string(3 - std::min<int>(2, static_cast<int>(s.size())), ' ');
    for (int j = 0; j <= hi_j; ++j) {
      std::size_t v = at(i, j);
      std::string c = v ? std::to_string(v) : ".";
      out << std::string(w - std::min<int>(w - 1, static_cast<int>(c.size())), ' ') << c;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace k2
