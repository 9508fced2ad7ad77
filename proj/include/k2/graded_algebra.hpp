#pragma once

// Degreewise expansion of a presented graded algebra A = T(V)/I.
//
// Words of length d are encoded as base-n integers, so within one degree the
// integer order is the lexicographic word order. Normal words are the words
// that are not leading (smallest) words of elements of I; they are closed
// under taking subwords, and each basis word w of A_d splits as x.w' with w'
// a basis word of A_{d-1}.
//
// Noncommutative algebras are built as A_d = (V ⊗ A_{d-1}) / span{r.b}, with
// r a relation and b a basis word of A_{d-deg r}. Dropping the relations of
// degree exactly d in that construction gives T(V)_d / I'_d with
// I' = V⊗I + I⊗V. Commutative algebras use sorted monomials directly; their
// I' computations go through a noncommutative companion presentation that
// adds the commutators.

#include "k2/presentation.hpp"
#include "k2/series.hpp"
#include "k2/sparse.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace k2 {

template <class F>
class GradedAlgebra {
 public:
  using Elem = typename F::Elem;
  /// Coordinates with respect to the basis of one A_d.
  using Vec = SparseVec<F, std::uint32_t>;
  /// Combination of words of one length, keyed by word code.
  using Tensor = SparseVec<F, std::uint64_t>;

  GradedAlgebra(AlgebraPresentation p, F field, int bound);
  ~GradedAlgebra();
  GradedAlgebra(const GradedAlgebra&) = delete;
  GradedAlgebra& operator=(const GradedAlgebra&) = delete;

  /// Expands further degrees.
  void extend(int bound);

  const AlgebraPresentation& presentation() const { return pres_; }
  const F& field() const { return f_; }
  int bound() const { return static_cast<int>(deg_.size()) - 1; }
  std::size_t n() const { return pres_.n(); }
  bool commutative() const { return pres_.commutative; }
  bool is_polynomial_ring() const { return pres_.commutative && pres_.relations.empty(); }
  /// Identity shared by the regular module and the submodules embedded in it.
  std::uint64_t id() const { return id_; }

  std::size_t dim(int d) const { return level(d).keys.size(); }
  /// dim T(V)_d, or the number of monomials of degree d when commutative.
  std::uint64_t tensor_dim(int d) const;
  std::uint64_t basis_key(int d, std::uint32_t i) const { return level(d).keys[i]; }
  Letters basis_word(int d, std::uint32_t i) const { return decode(basis_key(d, i), d); }
  int first_letter(int d, std::uint32_t i) const { return level(d).first[i]; }
  std::uint32_t rest(int d, std::uint32_t i) const { return level(d).rest[i]; }
  std::optional<std::uint32_t> basis_index(int d, std::uint64_t key) const;

  /// x * b_i for b_i in A_d (result in A_{d+1}).
  const Vec& left_mul(int x, int d, std::uint32_t i) const;
  /// b_i * x.
  const Vec& right_mul(int x, int d, std::uint32_t i) const;
  Vec left_mul(int x, int d, const Vec& v) const;
  Vec right_mul(int x, int d, const Vec& v) const;
  /// a * b with a in A_p, b in A_q.
  Vec multiply(int p, const Vec& a, int q, const Vec& b) const;

  Vec word_normal_form(const Letters& w) const;
  /// Class of a homogeneous polynomial; returns its degree through `deg`.
  Vec element(const Polynomial& p, int& deg) const;
  /// Class in A_d of a combination of words of length d.
  Vec reduce(int d, const Tensor& t) const;
  /// Canonical section: each basis element goes to its normal word.
  Tensor lift(int d, const Vec& v) const;

  /// Coordinates of t in T(V)_d / I'_d, keyed by the surviving columns of a
  /// fixed reduced echelon form. Valid for d <= bound() + 1.
  Tensor reduce_mod_iprime(int d, const Tensor& t) const;
  std::size_t iprime_quotient_dim(int d) const;

  TruncatedSeries hilbert_series() const;

  std::uint64_t encode(const Letters& w) const;
  Letters decode(std::uint64_t key, int d) const;
  std::string to_string(int d, const Vec& v) const;
  std::string word_string(const Letters& w) const { return k2::word_string(w, pres_.vars); }

 private:
  struct Level {
    std::vector<std::uint64_t> keys;    // sorted basis word codes
    std::vector<int> first;             // first letter of each basis word
    std::vector<std::uint32_t> rest;    // index of the remaining word in A_{d-1}
    std::vector<Vec> left;              // [x * dim(d-1) + i] -> x b_i in A_d
    std::vector<Vec> right;             // [x * dim(d-1) + i] -> b_i x in A_d (noncommutative)
    std::unordered_map<std::uint64_t, Vec> reducer;  // commutative: pivot monomial -> normal form
  };
  struct Essential;

  const Level& level(int d) const;
  void expand_noncommutative(int d);
  void expand_commutative(int d);
  /// Relation rows r.b for relations of degree in [lo, hi], in V ⊗ A_{d-1} coordinates.
  std::vector<Tensor> relation_rows(int d, int lo, int hi) const;
  const Essential& essential(int d) const;
  Tensor to_tensor_coords(int d, const Tensor& words) const;

  AlgebraPresentation pres_;
  F f_;
  std::uint64_t id_;
  std::vector<Level> deg_;
  // Relations converted into the field, grouped by degree.
  std::map<int, std::vector<Tensor>> rel_;
  mutable std::map<int, std::unique_ptr<Essential>> essential_;
  mutable std::unique_ptr<GradedAlgebra> companion_;
};

std::uint64_t next_object_id();

}  // namespace k2
