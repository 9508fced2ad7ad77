#pragma once

// Sparse vectors over an exact field and an incremental echelon form.
//
// Vectors are sorted (key, coefficient) lists without explicit zeros. The
// echelon uses the smallest key of each row as its pivot; `finalize()` turns
// the rows into the reduced row-echelon basis of their span, which is unique
// for a fixed key order.

#include "k2/field.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace k2 {

template <class F, class Key = std::uint32_t>
using SparseVec = std::vector<std::pair<Key, typename F::Elem>>;

/// Sorts by key, merges duplicates and drops zeros.
template <class F, class Key>
void normalize(const F& f, SparseVec<F, Key>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Key k = v[i].first;
    typename F::Elem acc = v[i].second;
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == k; ++j) acc = f.add(acc, v[j].second);
    if (!f.is_zero(acc)) v[out++] = {k, std::move(acc)};
    i = j;
  }
  v.resize(out);
}

/// Returns y + c*x.
template <class F, class Key>
SparseVec<F, Key> axpy(const F& f, const SparseVec<F, Key>& y, const typename F::Elem& c,
                       const SparseVec<F, Key>& x) {
  SparseVec<F, Key> out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      auto t = f.mul(c, x[j].second);
      if (!f.is_zero(t)) out.emplace_back(x[j].first, std::move(t));
      ++j;
    } else {
      auto t = f.add(y[i].second, f.mul(c, x[j].second));
      if (!f.is_zero(t)) out.emplace_back(y[i].first, std::move(t));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F, class Key>
void scale(const F& f, SparseVec<F, Key>& v, const typename F::Elem& c) {
  for (auto& [k, a] : v) a = f.mul(a, c);
}

template <class F, class Key>
typename F::Elem coefficient(const F& f, const SparseVec<F, Key>& v, Key k) {
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const auto& e, Key key) { return e.first < key; });
  return (it != v.end() && it->first == k) ? it->second : f.zero();
}

/// Incremental row echelon form over keys of type Key, optionally tracking
/// for each row the combination of inserted vectors that produced it.
template <class F, class Key = std::uint32_t>
class SparseEchelon {
 public:
  using Elem = typename F::Elem;
  using Vec = SparseVec<F, Key>;
  using Comb = SparseVec<F, std::uint32_t>;

  explicit SparseEchelon(F field) : f_(std::move(field)) {}

  const F& field() const { return f_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(Key k) const { return pivot_.count(k) != 0; }

  /// Rows in insertion order; after finalize() they are fully reduced.
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<Comb>& combinations() const { return combs_; }

  /// Row whose pivot is k, or nullptr.
  const Vec* row_for_pivot(Key k) const {
    auto it = pivot_.find(k);
    return it == pivot_.end() ? nullptr : &rows_[it->second];
  }
  std::optional<std::size_t> row_index_for_pivot(Key k) const {
    auto it = pivot_.find(k);
    if (it == pivot_.end()) return std::nullopt;
    return it->second;
  }

  void reserve(std::size_t n) {
    rows_.reserve(n);
    pivot_.reserve(n);
  }

  /// Eliminates every pivot key from v.
  void reduce(Vec& v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivot_.find(v[pos].first);
      if (it == pivot_.end()) {
        ++pos;
        continue;
      }
      Elem c = f_.neg(v[pos].second);
      v = axpy(f_, v, c, rows_[it->second]);
    }
  }

  /// As reduce(v), applying the same operations to the tracked combination.
  void reduce(Vec& v, Comb& comb) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivot_.find(v[pos].first);
      if (it == pivot_.end()) {
        ++pos;
        continue;
      }
      Elem c = f_.neg(v[pos].second);
      v = axpy(f_, v, c, rows_[it->second]);
      comb = axpy(f_, comb, c, combs_[it->second]);
    }
  }

  /// Inserts v; returns true when the rank grew.
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    add_row(std::move(v), {});
    return true;
  }

  /// Tracked insertion. Returns the combination annihilating the span when v
  /// is dependent on the current rows, std::nullopt when the rank grew.
  std::optional<Comb> insert(Vec v, Comb comb) {
    reduce(v, comb);
    if (v.empty()) return comb;
    add_row(std::move(v), std::move(comb));
    return std::nullopt;
  }

  /// Back-substitutes so every row is zero at every other row's pivot.
  void finalize() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a][0].first > rows_[b][0].first; });
    const bool tracked = !combs_.empty();
    for (std::size_t r : order) {
      Vec& row = rows_[r];
      std::size_t pos = 1;
      while (pos < row.size()) {
        auto it = pivot_.find(row[pos].first);
        if (it == pivot_.end()) {
          ++pos;
          continue;
        }
        Elem c = f_.neg(row[pos].second);
        row = axpy(f_, row, c, rows_[it->second]);
        if (tracked) combs_[r] = axpy(f_, combs_[r], c, combs_[it->second]);
      }
    }
  }

  /// Coordinates of v (assumed in the span of a finalized echelon) with
  /// respect to the rows: the entries of v at the pivots.
  Comb coordinates(const Vec& v) const {
    Comb out;
    for (const auto& [k, a] : v) {
      auto it = pivot_.find(k);
      if (it != pivot_.end()) out.emplace_back(static_cast<std::uint32_t>(it->second), a);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  void add_row(Vec v, Comb comb) {
    Elem lead_inv = f_.inv(v[0].second);
    scale(f_, v, lead_inv);
    if (!comb.empty() || !combs_.empty() || tracking_started_) {
      scale(f_, comb, lead_inv);
      combs_.resize(rows_.size());
      combs_.push_back(std::move(comb));
      tracking_started_ = true;
    }
    pivot_.emplace(v[0].first, rows_.size());
    rows_.push_back(std::move(v));
  }

  F f_;
  std::vector<Vec> rows_;
  std::vector<Comb> combs_;
  std::unordered_map<Key, std::size_t> pivot_;
  bool tracking_started_ = false;
};

/// Kernel of the linear map whose column images are `columns` (column c is
/// the image of the c-th source basis vector), as combinations of columns.
/// Columns are processed in order, so the basis is deterministic.
template <class F, class Key>
std::vector<SparseVec<F, std::uint32_t>> sparse_kernel(const F& f,
                                                       const std::vector<SparseVec<F, Key>>& columns) {
  SparseEchelon<F, Key> ech(f);
  std::vector<SparseVec<F, std::uint32_t>> kernel;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseVec<F, std::uint32_t> comb{{static_cast<std::uint32_t>(c), f.one()}};
    if (auto dep = ech.insert(columns[c], std::move(comb))) kernel.push_back(std::move(*dep));
  }
  return kernel;
}

}  // namespace k2
