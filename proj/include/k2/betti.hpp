#pragma once

// Bigraded Betti numbers beta_{i,j}: i is the homological step, j the
// internal degree.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k2 {

struct BettiRecord {
  int i, j;
  std::size_t dim;
  bool complete;
};

class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int max_hom, int max_deg) : max_hom_(max_hom), max_deg_(max_deg) {}

  void set(int i, int j, std::size_t v);
  void add(int i, int j, std::size_t v = 1);
  std::size_t at(int i, int j) const;
  /// Whether (i, j) lies inside the certified range.
  bool complete(int i, int j) const { return i >= 0 && i <= max_hom_ && j <= max_deg_; }

  int max_hom() const { return max_hom_; }
  int max_deg() const { return max_deg_; }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return e_; }

  /// Nonzero entries as records.
  std::vector<BettiRecord> records() const;
  /// Grid with one row per step i and one column per internal degree j.
  std::string to_text() const;

  bool operator==(const BettiTable& o) const { return e_ == o.e_; }

 private:
  std::map<std::pair<int, int>, std::size_t> e_;
  int max_hom_ = -1, max_deg_ = -1;
};

}  // namespace k2
