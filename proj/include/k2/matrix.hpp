#pragma once

// Dense matrices over an exact field: rref, kernels, rank.

#include "k2/field.hpp"

#include <cstddef>
#include <vector>

namespace k2 {

template <class F>
class ExactMatrix {
 public:
  using Elem = typename F::Elem;

  ExactMatrix(F field, std::size_t rows, std::size_t cols)
      : f_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, f_.zero()) {}

  static ExactMatrix identity(F field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.f_.one();
    return m;
  }
  /// Builds from integer entries, row-major.
  static ExactMatrix from_ints(F field, std::size_t rows, std::size_t cols,
                               const std::vector<long>& entries);

  const F& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;

  bool operator==(const ExactMatrix& o) const;

 private:
  F f_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  ExactMatrix<F> reduced;
};

/// Reduced row-echelon form. Columns are scanned left to right; the pivot
/// row is the topmost remaining row with a nonzero entry.
template <class F>
RrefResult<F> rref(const ExactMatrix<F>& m);

template <class F>
std::size_t rank(const ExactMatrix<F>& m);

/// Basis of the right null space, one vector per free column, in column order.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const ExactMatrix<F>& m);

template <class F>
bool rows_independent(const ExactMatrix<F>& m);

/// Determinant by cofactor expansion; exponential, for small test oracles.
template <class F>
typename F::Elem determinant_by_minors(const ExactMatrix<F>& m);

/// Rank as the largest size of a nonzero minor, enumerating all square
/// submatrices. Only for tiny matrices.
template <class F>
std::size_t rank_by_minors(const ExactMatrix<F>& m);

}  // namespace k2
