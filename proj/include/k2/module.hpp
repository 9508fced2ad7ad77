#pragma once

// Graded left modules over a GradedAlgebra, realized degreewise through a
// bound D: a basis of each M_t and the action of the generators of A.
//
// Submodules are stored inside a root module (their ambient) as finalized
// echelon forms, so containment and coordinates are pivot lookups. Regular,
// trivial and quotient modules are their own roots.

#include "k2/graded_algebra.hpp"
#include "k2/stanley_reisner.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace k2 {

template <class F>
struct ModuleBuilder;

template <class F>
class ModuleRealization {
 public:
  using Vec = SparseVec<F, std::uint32_t>;
  using Algebra = GradedAlgebra<F>;
  using Echelon = SparseEchelon<F, std::uint32_t>;
  using Ptr = std::shared_ptr<const ModuleRealization>;

  const Algebra& algebra() const { return *alg_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }
  const F& field() const { return alg_->field(); }
  int bound() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int t) const;
  /// Least t <= bound() with M_t != 0.
  std::optional<int> bottom_degree() const;
  std::size_t total_dim() const;

  /// x m_i for m_i in M_t.
  Vec act(int x, int t, std::uint32_t i) const;
  Vec act(int x, int t, const Vec& v) const;
  /// w v for a word w.
  Vec act_word(const Letters& w, int t, const Vec& v) const;
  /// a v for a in A_p.
  Vec act_element(int p, const typename Algebra::Vec& a, int t, const Vec& v) const;

  const std::string& description() const { return desc_; }
  /// Every beta_{i,j} with j above this vanishes (known for monomial data over
  /// a polynomial ring).
  std::optional<int> betti_degree_bound() const { return betti_bound_; }
  bool is_regular() const { return regular_; }
  /// Monomial generators (over a polynomial ring), when known.
  const std::optional<std::vector<Exponents>>& monomial_generators() const { return monomial_; }

  /// The module this one is embedded in; the module itself when it is a root.
  const ModuleRealization& root() const { return ambient_ ? *ambient_ : *this; }
  bool is_root() const { return !ambient_; }
  const Ptr& ambient_ptr() const { return ambient_; }
  /// Basis vectors of M_t written in root coordinates.
  Vec to_root(int t, const Vec& v) const;
  /// Coordinates of a root vector, or nullopt when it is not in M_t.
  std::optional<Vec> from_root(int t, const Vec& v) const;

  /// Quotients remember the module they were taken from.
  const Ptr& quotient_parent() const { return parent_; }
  /// Parent coordinate index of the i-th quotient basis vector.
  std::uint32_t quotient_lift(int t, std::uint32_t i) const { return lift_[static_cast<std::size_t>(t)][i]; }
  /// Class of a parent vector in the quotient.
  Vec project(int t, const Vec& parent_vec) const;

  std::string element_string(int t, const Vec& v) const;

  friend struct ModuleBuilder<F>;

 private:
  explicit ModuleRealization(std::shared_ptr<const Algebra> a) : alg_(std::move(a)) {}
  void check_degree(int t) const;

  std::shared_ptr<const Algebra> alg_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Vec>> act_;  // [t][x * dim(t) + i], t < bound
  bool regular_ = false;
  std::string desc_;
  std::optional<int> betti_bound_;
  std::optional<std::vector<Exponents>> monomial_;
  Ptr ambient_;
  std::vector<Echelon> embed_;  // finalized, rows = basis, root coordinates
  Ptr parent_;
  std::vector<std::vector<std::uint32_t>> lift_;
  std::vector<std::vector<std::int64_t>> proj_;  // parent index -> quotient index or -1
  std::vector<Echelon> killed_;                  // L inside parent coordinates
  // Ideals of A remember their generators for display.
  struct IdealGen {
    int degree;
    typename Algebra::Vec value;
    std::optional<Letters> word;
  };
  std::vector<IdealGen> ideal_gens_;
  bool two_sided_ = false;
  std::optional<std::string> factored_string(int t, const Vec& root_vec) const;
};

template <class F>
using ModulePtr = std::shared_ptr<const ModuleRealization<F>>;

/// A itself, through degree D.
template <class F>
ModulePtr<F> make_regular(std::shared_ptr<const GradedAlgebra<F>> a, int bound);
/// k = A/A_+.
template <class F>
ModulePtr<F> make_trivial(std::shared_ptr<const GradedAlgebra<F>> a, int bound);
/// Submodule of M generated by homogeneous elements (t, v in M_t). With
/// `two_sided` (M regular) the span is closed under right multiplication too.
template <class F>
ModulePtr<F> make_submodule(const ModulePtr<F>& m, const std::vector<std::pair<int, SparseVec<F, std::uint32_t>>>& gens,
                            bool two_sided, std::string desc);
/// Left (or two-sided) ideal of A generated by polynomials. Generators of
/// degree < 2 are refused unless `allow_linear`.
template <class F>
ModulePtr<F> make_ideal(std::shared_ptr<const GradedAlgebra<F>> a, const std::vector<Polynomial>& gens,
                        bool two_sided, int bound, bool allow_linear = false);
/// M/L for L inside M (both in the same root). Throws InputError otherwise.
template <class F>
ModulePtr<F> make_quotient(const ModulePtr<F>& m, const ModulePtr<F>& l);
/// M_<i,j> = sum of A M_t for i <= t <= j.
template <class F>
ModulePtr<F> make_component(const ModulePtr<F>& m, int i, int j);

/// Degree of the lcm of monomial generators.
int lcm_degree(const std::vector<Exponents>& gens);

}  // namespace k2
