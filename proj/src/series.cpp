#include "k2/series.hpp"

#include "k2/field.hpp"

#include <stdexcept>

namespace k2 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i after the multiplication.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

TruncatedSeries TruncatedSeries::one(int bound) {
  auto s = zero(bound);
  if (bound >= 0) s.c_[0] = 1;
  return s;
}

std::int64_t TruncatedSeries::operator[](int d) const {
  if (d < 0 || d > bound()) throw BoundError("series coefficient " + std::to_string(d) + " beyond bound " +
                                             std::to_string(bound()));
  return c_[static_cast<std::size_t>(d)];
}

std::int64_t& TruncatedSeries::at(int d) {
  if (d < 0 || d > bound()) throw BoundError("series coefficient " + std::to_string(d) + " beyond bound " +
                                             std::to_string(bound()));
  return c_[static_cast<std::size_t>(d)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  int b = std::min(bound(), o.bound());
  auto r = zero(b);
  for (int d = 0; d <= b; ++d) r.c_[d] = checked_add(c_[d], o.c_[d]);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  int b = std::min(bound(), o.bound());
  auto r = zero(b);
  for (int d = 0; d <= b; ++d) r.c_[d] = checked_add(c_[d], checked_mul(-1, o.c_[d]));
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  int b = std::min(bound(), o.bound());
  auto r = zero(b);
  for (int i = 0; i <= b; ++i)
    for (int j = 0; i + j <= b; ++j) r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
  return r;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
  std::string out;
  for (int d = 0; d <= bound(); ++d) {
    std::int64_t c = c_[d];
    if (c == 0) continue;
    std::string mag = std::to_string(c < 0 ? -c : c);
    std::string term = d == 0 ? mag : (mag == "1" ? "" : mag) + var + (d > 1 ? "^" + std::to_string(d) : "");
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (s.bound() < 0 || s[0] != 1) throw InputError("series inverse needs constant term 1");
  auto inv = TruncatedSeries::zero(s.bound());
  inv.at(0) = 1;
  for (int d = 1; d <= s.bound(); ++d) {
    std::int64_t acc = 0;
    for (int k = 1; k <= d; ++k) acc = checked_add(acc, checked_mul(s[k], inv[d - k]));
    inv.at(d) = -acc;
  }
  return inv;
}

}  // namespace k2
