#pragma once

// Minimal graded free resolutions computed degree by degree.
//
// Q^s is the free module on the step-s generators. Its degree-t piece has one
// block per generator g with deg g <= t, in generator order, holding
// A_{t - deg g}. A generator's image d(e_g) is stored in coordinates of
// Q^{s-1}_{deg g}, or of M_{deg g} at step 0.
//
// At internal degree t and step s the images of the old basis are obtained as
// x * (image one degree lower). Exactness gives the rank the image must reach,
// rank(d_s)_t = dim ker(d_{s-1})_t, so new generators are needed exactly when
// the old images fall short; they are then taken from an explicit kernel of
// d_{s-1}, skipping vectors already in the image.

#include "k2/betti.hpp"
#include "k2/module.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace k2 {

template <class F>
class MinimalResolution {
 public:
  using Vec = SparseVec<F, std::uint32_t>;
  using AVec = typename GradedAlgebra<F>::Vec;

  /// Steps 0..max_hom, internal degrees up to max_deg.
  MinimalResolution(ModulePtr<F> m, int max_hom, int max_deg);
  ~MinimalResolution();
  MinimalResolution(const MinimalResolution&) = delete;
  MinimalResolution& operator=(const MinimalResolution&) = delete;

  const ModuleRealization<F>& module() const { return *m_; }
  const GradedAlgebra<F>& algebra() const { return m_->algebra(); }
  const F& field() const { return m_->field(); }
  int max_hom() const { return max_hom_; }
  int max_deg() const { return max_deg_; }

  std::size_t num_generators(int s) const { return gens(s).size(); }
  int degree(int s, std::size_t g) const { return gens(s)[g].degree; }
  const Vec& image(int s, std::size_t g) const { return gens(s)[g].image; }
  /// Entry (r, c) of the matrix of d_s (s >= 1), an element of A_{deg r - deg c}.
  AVec entry(int s, std::size_t r, std::size_t c) const;

  std::size_t free_dim(int s, int t) const;
  /// Start of block g in Q^s_t.
  std::size_t offset(int s, int t, std::size_t g) const;
  /// Block and word index of a basis element of Q^s_t.
  std::pair<std::size_t, std::uint32_t> locate(int s, int t, std::size_t index) const;

  /// x v for v in Q^s_t.
  Vec left_mul(int s, int x, int t, const Vec& v) const;
  /// a v for a in A_p and v in Q^s_t.
  Vec mul_element(int s, int p, const AVec& a, int t, const Vec& v) const;
  /// d_s(v) for v in Q^s_t, in Q^{s-1}_t (or M_t when s = 0).
  Vec apply(int s, int t, const Vec& v) const;
  /// Some x in Q^s_t with d_s(x) = y, or nullopt when y is not in the image.
  std::optional<Vec> solve(int s, int t, const Vec& y) const;

  BettiTable betti() const;
  /// Some step <= max_hom came out empty through max_deg.
  bool terminated() const;
  /// Last nonempty step when terminated (-1 for the zero module).
  std::optional<int> length() const;
  /// Whether the computed data is the whole resolution: it terminated, and
  /// over a polynomial ring max_deg also covers the module's Betti degree bound.
  bool conclusive() const;

  std::string generator_string(int s, std::size_t g) const;

 private:
  struct Generator {
    int degree;
    Vec image;
  };
  struct Solver;

  const std::vector<Generator>& gens(int s) const;
  void compute();
  /// Images under d_s of every basis element of Q^s_t.
  std::vector<Vec> basis_images(int s, int t) const;
  const Solver& solver(int s, int t) const;

  ModulePtr<F> m_;
  int max_hom_, max_deg_;
  std::vector<std::vector<Generator>> steps_;
  // offsets_[s][t][g] for generators with degree <= t, plus the total at the end.
  std::vector<std::vector<std::vector<std::size_t>>> offsets_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<Solver>> solvers_;
};

/// Betti table of the resolution of k over A through (N, D): dim E^{i,j}(A).
template <class F>
BettiTable ext_of_quotient_algebra(std::shared_ptr<const GradedAlgebra<F>> a, int max_hom, int max_deg);

}  // namespace k2
