#pragma once

// Bounded decision procedures on minimal resolutions: the K1/K2 matrix
// criteria, Koszul purity, Koszul and componentwise linear modules, strongly
// K2 modules, the Yoneda-span cross-check, the trivial-action hypothesis for
// quotients A/J, and the sign test on inverse Hilbert series.
//
// Every verdict is relative to the bounds (N, D) it was computed with. It is
// conclusive when the resolution it rests on is known to be complete.

#include "k2/module.hpp"
#include "k2/resolution.hpp"
#include "k2/series.hpp"

#include <optional>
#include <string>

namespace k2 {

enum class Outcome { holds, fails, inconclusive };

struct Verdict {
  std::string check;
  Outcome outcome = Outcome::holds;
  bool conclusive = false;
  /// Location of a failure: homological step and internal degree (-1 if n/a).
  int step = -1;
  int degree = -1;
  std::string witness;
  int max_hom = 0, max_deg = 0;
  std::string note;

  bool holds() const { return outcome == Outcome::holds; }
  bool fails() const { return outcome == Outcome::fails; }
  /// "holds_up_to(N, D)", "fails_at(step i, degree j)" or "inconclusive".
  std::string outcome_string() const;
  std::string to_text() const;
};

std::string outcome_name(Outcome o);

struct Bounds {
  int max_hom;
  int max_deg;
};

/// N = n + 1 and D = the module's Betti degree bound (else 2N) over a
/// polynomial ring; N = 5, D = 8 otherwise. D never exceeds the realization.
template <class F>
Bounds default_bounds(const ModuleRealization<F>& m);
/// Bounds for algebra-level checks (the trivial module).
template <class F>
Bounds default_algebra_bounds(const GradedAlgebra<F>& a);

/// Rows of L(f_i) independent for 1 <= i <= min(N, pd).
template <class F>
Verdict k1_check(const MinimalResolution<F>& r);
/// Rows of [(f_{i+1} f_i)_ess  L(f_{i+1})] independent for 0 <= i < min(N, pd).
template <class F>
Verdict k2_check(const MinimalResolution<F>& r);

/// k2_check on the resolution of k. The algebra must be expanded through D.
template <class F>
Verdict algebra_k2_check(std::shared_ptr<const GradedAlgebra<F>> a, std::optional<Bounds> b = std::nullopt);
/// E^{i,j}(A) = 0 for i != j, within bounds.
template <class F>
Verdict koszul_check(std::shared_ptr<const GradedAlgebra<F>> a, std::optional<Bounds> b = std::nullopt);
/// Generated in a single degree and K1.
template <class F>
Verdict koszul_module_check(const MinimalResolution<F>& r);
/// A M_i Koszul for every i from the bottom degree up to the top generator
/// degree (higher components are truncations of the top one).
template <class F>
Verdict componentwise_linear_check(const ModulePtr<F>& m, std::optional<Bounds> b = std::nullopt);
/// M_<b,j> K2 for every j from the bottom degree up to the top generator degree.
template <class F>
Verdict strongly_k2_check(const ModulePtr<F>& m, std::optional<Bounds> b = std::nullopt);

/// Whether Ext^m(M,k) is spanned by E^1 Ext^{m-1} (max_factor 1) or by
/// E^1 Ext^{m-1} + E^2 Ext^{m-2} (max_factor 2) for 1 <= m <= N, with
/// products computed by lifting chain maps into the resolution of k.
template <class F>
Verdict yoneda_generation_check(const MinimalResolution<F>& k_res, const MinimalResolution<F>& m_res, int max_factor);

/// Whether B = A/J acts trivially on Ext_A(B, k), J given as a submodule of A.
/// Holds outright for commutative A; inconclusive when J is not closed under
/// right multiplication within the realization.
template <class F>
Verdict trivial_action_check(const ModulePtr<F>& j, std::optional<Bounds> b = std::nullopt);

/// First j with (-1)^j [t^j] 1/H < 0, a certificate of non-Koszulity.
std::optional<int> froberg_obstruction(const TruncatedSeries& h);

}  // namespace k2
