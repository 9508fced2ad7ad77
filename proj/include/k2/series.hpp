#pragma once

// Integer power series truncated at degree D, with overflow-checked
// arithmetic.

#include <cstdint>
#include <string>
#include <vector>

namespace k2 {

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {}
  static TruncatedSeries zero(int bound) { return TruncatedSeries(std::vector<std::int64_t>(bound + 1, 0)); }
  static TruncatedSeries one(int bound);

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int d) const;
  std::int64_t& at(int d);
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  /// Truncated at the smaller of the two bounds.
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<std::int64_t> c_;
};

/// Inverse through the same bound; requires constant term 1.
TruncatedSeries series_inverse(const TruncatedSeries& s);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// Binomial coefficient C(n, k), 0 outside 0 <= k <= n; throws on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace k2
