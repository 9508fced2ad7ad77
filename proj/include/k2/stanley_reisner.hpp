#pragma once

// Monomial ideals in a commutative polynomial ring and the Stanley-Reisner
// correspondence with simplicial complexes.

#include "k2/betti.hpp"
#include "k2/field.hpp"
#include "k2/series.hpp"
#include "k2/simplicial.hpp"

#include <map>
#include <string>
#include <vector>

namespace k2 {

using Exponents = std::vector<int>;

class MonomialIdeal {
 public:
  /// Keeps the minimal generators. Generators must have degree >= 2.
  MonomialIdeal(std::vector<std::string> vars, std::vector<Exponents> gens);
  static MonomialIdeal from_masks(std::vector<std::string> vars, const std::vector<Face>& gens);

  std::size_t n() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  /// Minimal generators, sorted by degree then exponent vector (descending).
  const std::vector<Exponents>& gens() const { return gens_; }
  bool is_squarefree() const;
  /// Generators as bitmasks; throws InputError when not squarefree.
  std::vector<Face> squarefree_gens() const;
  std::vector<int> generator_degrees() const;
  /// Degree of the lcm of all generators (0 for the zero ideal).
  int lcm_degree() const;
  std::string monomial_string(const Exponents& e) const;

  bool operator==(const MonomialIdeal& o) const { return vars_ == o.vars_ && gens_ == o.gens_; }

 private:
  std::vector<std::string> vars_;
  std::vector<Exponents> gens_;
};

/// Generators are the minimal non-faces. Throws if some vertex is a non-face.
MonomialIdeal ideal_from_complex(const SimplicialComplex& d);
SimplicialComplex complex_from_ideal(const MonomialIdeal& i);

/// beta_{i,j}(S/I_Δ) via the Eagon-Reiner form of Hochster's formula,
/// summing link homology over faces of the dual. Link homology is
/// computed once per face and reused across queries.
class HochsterBetti {
 public:
  HochsterBetti(const SimplicialComplex& d, const FieldSpec& field);
  std::size_t operator()(int i, int j) const;
  /// Every nonzero entry (i from 0 to n).
  const BettiTable& table() const { return table_; }

 private:
  BettiTable table_;
};

std::size_t betti_via_hochster(const SimplicialComplex& d, int i, int j, const FieldSpec& field);

/// Requires a single generator degree d; true iff beta_{i,j}(S/I) vanishes
/// for i >= 1 off j = d + i - 1. Cross-checked against the Cohen-Macaulay
/// property of the dual complex.
bool has_linear_resolution(const MonomialIdeal& i, const FieldSpec& field);
/// Topological route: the dual complex is sequentially Cohen-Macaulay.
bool is_componentwise_linear_ideal(const MonomialIdeal& i, const FieldSpec& field);

/// dim (S/I)_d for d <= D by inclusion-exclusion over generator lcms.
TruncatedSeries hilbert_series_quotient(const MonomialIdeal& i, int bound);
/// dim I_d for d <= D.
TruncatedSeries hilbert_series_ideal(const MonomialIdeal& i, int bound);
/// Face-ring formula: sum over faces of t^|σ| / (1 - t)^|σ|.
TruncatedSeries hilbert_series_face_ring(const SimplicialComplex& d, int bound);
/// dim S_d = C(n + d - 1, d).
TruncatedSeries hilbert_series_polynomial_ring(std::size_t n, int bound);

/// `vars: ...` followed by one monomial per line.
MonomialIdeal parse_monomial_ideal(const std::string& text);
MonomialIdeal read_monomial_ideal_file(const std::string& path);
std::string to_text(const MonomialIdeal& i);

}  // namespace k2
