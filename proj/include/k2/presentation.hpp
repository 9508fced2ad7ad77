#pragma once

// Presentations of graded algebras generated in degree one, and the text
// parsers for algebras, polynomials and ideal files.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace k2 {

/// A word in the generators, letters indexed from 0.
using Letters = std::vector<int>;

struct Term {
  mpq_class coeff;
  Letters word;
};

/// Linear combination of words with rational coefficients. For commutative
/// algebras words are kept sorted.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  /// Common length of the words; throws InputError when the terms disagree.
  int degree() const;
  /// Combines equal words and drops zero terms; sorts letters when commutative.
  void normalize(bool commutative);
};

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars, bool commutative);
std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);
std::string word_string(const Letters& w, const std::vector<std::string>& vars);

struct AlgebraPresentation {
  std::vector<std::string> vars;
  bool commutative = false;
  std::vector<Polynomial> relations;

  std::size_t n() const { return vars.size(); }
  static AlgebraPresentation polynomial_ring(std::vector<std::string> vars);
  /// Relations must be nonzero and homogeneous of degree at least 2.
  void validate() const;
  std::size_t max_relation_degree() const;
};

/// `vars: a b c`, `commutative: true|false`, then `rel: ...` lines.
AlgebraPresentation parse_algebra(const std::string& text);
AlgebraPresentation read_algebra_file(const std::string& path);

/// Generators of an ideal file (`vars:`, optional `two-sided: true`, one
/// element per line), expressed over `vars` of the ambient algebra.
struct IdealSpec {
  std::vector<std::string> vars;
  bool two_sided = false;
  std::vector<Polynomial> gens;
};
IdealSpec parse_ideal_spec(const std::string& text, bool commutative);
/// Rewrites the generators over the ambient variable list.
std::vector<Polynomial> rebase(const IdealSpec& spec, const std::vector<std::string>& ambient, bool commutative);

}  // namespace k2
