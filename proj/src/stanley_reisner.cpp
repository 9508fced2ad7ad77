#include "k2/stanley_reisner.hpp"

#include "k2/presentation.hpp"
#include "k2/text.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace k2 {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

int degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Exponents> gens) : vars_(std::move(vars)) {
  for (const auto& g : gens) {
    if (g.size() != vars_.size()) throw InputError("exponent vector length does not match the ring");
    for (int x : g)
      if (x < 0) throw InputError("negative exponent");
    if (degree(g) < 2) throw InputError("ideal generators must have degree at least 2");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (&h != &g && divides(h, g)) redundant = true;
    if (!redundant) gens_.push_back(g);
  }
  std::stable_sort(gens_.begin(), gens_.end(), [](const Exponents& a, const Exponents& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
  });
}

MonomialIdeal MonomialIdeal::from_masks(std::vector<std::string> vars, const std::vector<Face>& gens) {
  std::vector<Exponents> e;
  for (Face g : gens) {
    Exponents x(vars.size(), 0);
    for (std::size_t k = 0; k < vars.size(); ++k) x[k] = (g >> k & 1) ? 1 : 0;
    if (g >> vars.size()) throw InputError("generator uses a variable outside the ring");
    e.push_back(std::move(x));
  }
  return MonomialIdeal(std::move(vars), std::move(e));
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (int x : g)
      if (x > 1) return false;
  return true;
}

std::vector<Face> MonomialIdeal::squarefree_gens() const {
  if (!is_squarefree()) throw InputError("ideal is not squarefree");
  std::vector<Face> out;
  for (const auto& g : gens_) {
    Face f = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k]) f |= Face{1} << k;
    out.push_back(f);
  }
  return out;
}

std::vector<int> MonomialIdeal::generator_degrees() const {
  std::vector<int> d;
  for (const auto& g : gens_) d.push_back(degree(g));
  return d;
}

int MonomialIdeal::lcm_degree() const {
  Exponents l(n(), 0);
  for (const auto& g : gens_)
    for (std::size_t k = 0; k < n(); ++k) l[k] = std::max(l[k], g[k]);
  return degree(l);
}

std::string MonomialIdeal::monomial_string(const Exponents& e) const {
  Letters w;
  for (std::size_t k = 0; k < e.size(); ++k)
    for (int r = 0; r < e[k]; ++r) w.push_back(static_cast<int>(k));
  return word_string(w, vars_);
}

MonomialIdeal ideal_from_complex(const SimplicialComplex& d) {
  for (std::size_t v = 0; v < d.n(); ++v)
    if (!d.contains(Face{1} << v))
      throw InputError("vertex " + d.vertices()[v] + " is not a face, so the ideal has a linear generator");
  return MonomialIdeal::from_masks(d.vertices(), minimal_nonfaces(d));
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& i) {
  auto gens = i.squarefree_gens();
  // The dual has the complements of the minimal non-faces as facets.
  std::vector<Face> dual_facets;
  Face full = i.n() == 64 ? ~Face{0} : (Face{1} << i.n()) - 1;
  for (Face g : gens) dual_facets.push_back(full & ~g);
  auto dual = SimplicialComplex::from_masks(i.vars(), dual_facets);
  return alexander_dual(dual);
}

HochsterBetti::HochsterBetti(const SimplicialComplex& d, const FieldSpec& field) {
  const int n = static_cast<int>(d.n());
  table_ = BettiTable(n, n);
  table_.set(0, 0, 1);
  SimplicialComplex dual = alexander_dual(d);
  if (dual.is_void()) return;
  with_field(field, [&](const auto& f) {
    for (Face s : dual.faces()) {
      HomologyProfile h = reduced_homology(link(dual, s), f);
      int j = n - face_size(s);
      for (const auto& [q, dimh] : h.dims) table_.add(q + 2, j, dimh);
    }
  });
}

std::size_t HochsterBetti::operator()(int i, int j) const { return table_.at(i, j); }

std::size_t betti_via_hochster(const SimplicialComplex& d, int i, int j, const FieldSpec& field) {
  return HochsterBetti(d, field)(i, j);
}

bool has_linear_resolution(const MonomialIdeal& i, const FieldSpec& field) {
  auto degs = i.generator_degrees();
  if (degs.empty()) return true;
  for (int x : degs)
    if (x != degs.front()) throw InputError("generators have mixed degrees; use the componentwise check");
  const int d = degs.front();
  SimplicialComplex delta = complex_from_ideal(i);
  HochsterBetti hb(delta, field);
  bool linear = true;
  for (const auto& [k, v] : hb.table().entries())
    if (k.first >= 1 && v && k.second != d + k.first - 1) linear = false;
  bool cm = is_cohen_macaulay(alexander_dual(delta), field);
  if (cm != linear) throw std::logic_error("Eagon-Reiner cross-check failed for " + to_text(i));
  return linear;
}

bool is_componentwise_linear_ideal(const MonomialIdeal& i, const FieldSpec& field) {
  return is_sequentially_cm(alexander_dual(complex_from_ideal(i)), field);
}

TruncatedSeries hilbert_series_polynomial_ring(std::size_t n, int bound) {
  auto s = TruncatedSeries::zero(bound);
  for (int d = 0; d <= bound; ++d) s.at(d) = n == 0 ? (d == 0) : binomial(static_cast<std::int64_t>(n) + d - 1, d);
  return s;
}

TruncatedSeries hilbert_series_quotient(const MonomialIdeal& i, int bound) {
  if (i.gens().size() > 25)
    throw InputError("inclusion-exclusion over " + std::to_string(i.gens().size()) +
                     " generators is refused; use the face-ring formula for squarefree ideals");
  const auto& g = i.gens();
  const std::int64_t n = static_cast<std::int64_t>(i.n());
  auto s = TruncatedSeries::zero(bound);
  std::function<void(std::size_t, const Exponents&, int)> walk = [&](std::size_t from, const Exponents& l, int sign) {
    int e = degree(l);
    for (int d = e; d <= bound; ++d) s.at(d) = checked_add(s[d], sign * (n == 0 ? (d == e) : binomial(n - 1 + d - e, n - 1)));
    for (std::size_t k = from; k < g.size(); ++k) {
      Exponents m = l;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::max(m[v], g[k][v]);
      if (degree(m) > bound) continue;  // every superset has an lcm at least as large
      walk(k + 1, m, -sign);
    }
  };
  walk(0, Exponents(i.n(), 0), 1);
  return s;
}

TruncatedSeries hilbert_series_ideal(const MonomialIdeal& i, int bound) {
  return hilbert_series_polynomial_ring(i.n(), bound) - hilbert_series_quotient(i, bound);
}

TruncatedSeries hilbert_series_face_ring(const SimplicialComplex& d, int bound) {
  auto s = TruncatedSeries::zero(bound);
  for (Face f : d.faces()) {
    int k = face_size(f);
    if (k == 0) {
      s.at(0) += 1;
      continue;
    }
    for (int t = k; t <= bound; ++t) s.at(t) = checked_add(s[t], binomial(t - 1, k - 1));
  }
  return s;
}

MonomialIdeal parse_monomial_ideal(const std::string& text) {
  IdealSpec spec = parse_ideal_spec(text, true);
  std::vector<Exponents> gens;
  for (const auto& p : spec.gens) {
    if (p.terms.size() != 1 || p.terms[0].coeff != 1)
      throw InputError("monomial ideal generators must be single monomials, got " + to_string(p, spec.vars));
    Exponents e(spec.vars.size(), 0);
    for (int l : p.terms[0].word) ++e[static_cast<std::size_t>(l)];
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(spec.vars, std::move(gens));
}

MonomialIdeal read_monomial_ideal_file(const std::string& path) { return parse_monomial_ideal(read_file(path)); }

std::string to_text(const MonomialIdeal& i) {
  std::string out = "vars:";
  for (const auto& v : i.vars()) out += " " + v;
  out += "\n";
  for (const auto& g : i.gens()) out += i.monomial_string(g) + "\n";
  return out;
}

}  // namespace k2
