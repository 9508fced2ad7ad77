#include "k2/matrix.hpp"

#include <functional>
#include <stdexcept>

namespace k2 {

template <class F>
ExactMatrix<F> ExactMatrix<F>::from_ints(F field, std::size_t rows, std::size_t cols,
                                         const std::vector<long>& entries) {
  if (entries.size() != rows * cols) throw InputError("matrix entry count does not match its shape");
  ExactMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.a_[i] = m.f_.from_int(entries[i]);
  return m;
}

template <class F>
ExactMatrix<F> ExactMatrix<F>::transpose() const {
  ExactMatrix t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <class F>
ExactMatrix<F> ExactMatrix<F>::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not compose");
  ExactMatrix p(f_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem& a = (*this)(r, k);
      if (f_.is_zero(a)) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) = f_.add(p(r, c), f_.mul(a, o(k, c)));
    }
  return p;
}

template <class F>
std::vector<typename F::Elem> ExactMatrix<F>::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Elem> out(rows_, f_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] = f_.add(out[r], f_.mul((*this)(r, c), v[c]));
  return out;
}

template <class F>
bool ExactMatrix<F>::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

template <class F>
RrefResult<F> rref(const ExactMatrix<F>& m) {
  const F& f = m.field();
  ExactMatrix<F> a = m;
  RrefResult<F> res{0, {}, a};
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && f.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(row, k));
    auto inv = f.inv(a(row, c));
    for (std::size_t k = c; k < a.cols(); ++k) a(row, k) = f.mul(a(row, k), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || f.is_zero(a(r, c))) continue;
      auto factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = f.sub(a(r, k), f.mul(factor, a(row, k)));
    }
    res.pivots.push_back(c);
    ++row;
  }
  res.rank = row;
  res.reduced = std::move(a);
  return res;
}

template <class F>
std::size_t rank(const ExactMatrix<F>& m) {
  return rref(m).rank;
}

template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const ExactMatrix<F>& m) {
  const F& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
bool rows_independent(const ExactMatrix<F>& m) {
  return rank(m) == m.rows();
}

template <class F>
typename F::Elem determinant_by_minors(const ExactMatrix<F>& m) {
  const F& f = m.field();
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return f.one();
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  std::function<typename F::Elem(std::size_t, std::vector<std::size_t>&)> expand =
      [&](std::size_t row, std::vector<std::size_t>& avail) -> typename F::Elem {
    if (row == n) return f.one();
    auto total = f.zero();
    for (std::size_t k = 0; k < avail.size(); ++k) {
      std::size_t c = avail[k];
      if (f.is_zero(m(row, c))) continue;
      std::vector<std::size_t> rest = avail;
      rest.erase(rest.begin() + static_cast<long>(k));
      auto term = f.mul(m(row, c), expand(row + 1, rest));
      total = (k % 2 == 0) ? f.add(total, term) : f.sub(total, term);
    }
    return total;
  };
  return expand(0, cols);
}

template <class F>
std::size_t rank_by_minors(const ExactMatrix<F>& m) {
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t k = lim; k > 0; --k) {
    // Enumerate k-subsets of rows and columns as bitmasks.
    for (std::uint64_t rs = 0; rs < (1ull << m.rows()); ++rs) {
      if (static_cast<std::size_t>(__builtin_popcountll(rs)) != k) continue;
      for (std::uint64_t cs = 0; cs < (1ull << m.cols()); ++cs) {
        if (static_cast<std::size_t>(__builtin_popcountll(cs)) != k) continue;
        ExactMatrix<F> sub(m.field(), k, k);
        std::size_t i = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (!(rs >> r & 1)) continue;
          std::size_t j = 0;
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (cs >> c & 1) sub(i, j++) = m(r, c);
          ++i;
        }
        if (!m.field().is_zero(determinant_by_minors(sub))) return k;
      }
    }
  }
  return 0;
}

#define K2_INSTANTIATE(F)                                                               \
  template class ExactMatrix<F>;                                                        \
  template RrefResult<F> rref(const ExactMatrix<F>&);                                   \
  template std::size_t rank(const ExactMatrix<F>&);                                     \
  template std::vector<std::vector<F::Elem>> kernel_basis(const ExactMatrix<F>&);       \
  template bool rows_independent(const ExactMatrix<F>&);                                \
  template F::Elem determinant_by_minors(const ExactMatrix<F>&);                        \
  template std::size_t rank_by_minors(const ExactMatrix<F>&);

K2_INSTANTIATE(PrimeField)
K2_INSTANTIATE(RationalField)

}  // namespace k2
