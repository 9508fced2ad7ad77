#include "k2/koszul.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace k2 {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    default: return "inconclusive";
  }
}

std::string Verdict::outcome_string() const {
  if (outcome == Outcome::holds)
    return "holds_up_to(" + std::to_string(max_hom) + ", " + std::to_string(max_deg) + ")";
  if (outcome == Outcome::fails) {
    std::string s = "fails_at(step " + std::to_string(step);
    if (degree >= 0) s += ", degree " + std::to_string(degree);
    return s + ")";
  }
  return "inconclusive";
}

std::string Verdict::to_text() const {
  std::string s = check + ": " + outcome_string() + (conclusive ? " [conclusive]" : " [bounded]");
  if (!witness.empty()) s += "\n  witness: " + witness;
  if (!note.empty()) s += "\n  note: " + note;
  return s;
}

std::optional<int> froberg_obstruction(const TruncatedSeries& h) {
  auto p = series_inverse(h);
  for (int j = 0; j <= p.bound(); ++j) {
    const std::int64_t c = p[j];
    if ((j % 2 == 0 && c < 0) || (j % 2 == 1 && c > 0)) return j;
  }
  return std::nullopt;
}

namespace {

template <class F>
Verdict start(std::string name, const MinimalResolution<F>& r) {
  Verdict v;
  v.check = std::move(name);
  v.max_hom = r.max_hom();
  v.max_deg = r.max_deg();
  return v;
}

// Largest step whose differential the criteria look at: min(N, pd).
template <class F>
int top_step(const MinimalResolution<F>& r) {
  if (auto l = r.length()) return std::min(r.max_hom(), *l);
  return r.max_hom();
}

// Dense numbering of flattened column keys.
class Columns {
 public:
  std::uint32_t operator()(int block, std::size_t c, std::uint64_t key) {
    auto [it, fresh] = ids_.try_emplace(std::make_tuple(block, c, key), static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }

 private:
  std::map<std::tuple<int, std::size_t, std::uint64_t>, std::uint32_t> ids_;
};

// Combination of rows that vanishes, if any.
template <class F>
std::optional<SparseVec<F, std::uint32_t>> dependent_rows(const F& f, std::vector<SparseVec<F, std::uint32_t>> rows) {
  SparseEchelon<F, std::uint32_t> e(f);
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    normalize(f, rows[r]);
    if (auto dep = e.insert(std::move(rows[r]), SparseVec<F, std::uint32_t>{{r, f.one()}})) return dep;
  }
  return std::nullopt;
}

// Wide rows list only their nonzero entries, by column.
template <class F>
std::string row_string(const MinimalResolution<F>& r, int s, std::size_t g) {
  if (s == 0 || r.num_generators(s - 1) <= 4) return r.generator_string(s, g);
  std::string out;
  for (std::size_t c = 0; c < r.num_generators(s - 1); ++c) {
    const int d = r.degree(s, g) - r.degree(s - 1, c);
    if (d < 0) continue;
    auto e = r.entry(s, g, c);
    if (e.empty()) continue;
    out += (out.empty() ? "" : ", ") + std::string("col ") + std::to_string(c) + ": " + r.algebra().to_string(d, e);
  }
  return out.empty() ? "0" : out;
}

template <class F>
std::string combination_string(const MinimalResolution<F>& r, int s, const SparseVec<F, std::uint32_t>& comb) {
  std::string out;
  for (const auto& [g, c] : comb) {
    std::string cs = r.field().to_string(c);
    if (!out.empty()) out += " + ";
    out += (cs == "1" ? "" : cs + "*") + "[" + row_string(r, s, g) + "]";
  }
  return out;
}

// L(f_s) row of generator g: coefficient of each letter in each column.
template <class F>
void add_linear_part(const MinimalResolution<F>& r, int s, std::size_t g, Columns& cols, SparseVec<F, std::uint32_t>& row) {
  const auto& a = r.algebra();
  const int dr = r.degree(s, g);
  for (std::size_t c = 0; c < r.num_generators(s - 1); ++c) {
    if (dr - r.degree(s - 1, c) != 1) continue;
    for (const auto& [i, v] : r.entry(s, g, c)) row.emplace_back(cols(1, c, a.basis_key(1, i)), v);
  }
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t p = 1;
  while (e-- > 0) p *= b;
  return p;
}

template <class F>
void finish_holds(Verdict& v, bool conclusive) {
  v.outcome = Outcome::holds;
  v.conclusive = conclusive;
}

}  // namespace

template <class F>
Bounds default_bounds(const ModuleRealization<F>& m) {
  const auto& a = m.algebra();
  Bounds b{5, 8};
  if (a.is_polynomial_ring()) {
    b.max_hom = static_cast<int>(a.n()) + 1;
    b.max_deg = m.betti_degree_bound() ? *m.betti_degree_bound() : 2 * b.max_hom;
  }
  b.max_deg = std::min(b.max_deg, m.bound());
  return b;
}

template <class F>
Bounds default_algebra_bounds(const GradedAlgebra<F>& a) {
  if (a.is_polynomial_ring()) return {static_cast<int>(a.n()) + 1, static_cast<int>(a.n())};
  return {5, 8};
}

template <class F>
Verdict k1_check(const MinimalResolution<F>& r) {
  Verdict v = start("k1", r);
  const int top = top_step(r);
  for (int s = 1; s <= top; ++s) {
    Columns cols;
    std::vector<SparseVec<F, std::uint32_t>> rows(r.num_generators(s));
    for (std::size_t g = 0; g < rows.size(); ++g) add_linear_part(r, s, g, cols, rows[g]);
    if (auto dep = dependent_rows(r.field(), rows)) {
      v.outcome = Outcome::fails;
      v.conclusive = true;
      v.step = s;
      v.degree = r.degree(s, dep->back().first);
      v.witness = "linear parts of rows " + combination_string(r, s, *dep) + " are dependent";
      return v;
    }
  }
  finish_holds<F>(v, r.conclusive());
  return v;
}

template <class F>
Verdict k2_check(const MinimalResolution<F>& r) {
  Verdict v = start("k2", r);
  const auto& a = r.algebra();
  const F& f = r.field();
  const std::uint64_t n = a.n();
  const int top = top_step(r);
  for (int i = 0; i < top; ++i) {
    const int s = i + 1;
    Columns cols;
    std::vector<SparseVec<F, std::uint32_t>> rows(r.num_generators(s));
    for (std::size_t g = 0; g < rows.size(); ++g) {
      auto& row = rows[g];
      const int dr = r.degree(s, g);
      if (i > 0) {
        // (f_{i+1} f_i)_ess, one entry per step-(i-1) generator c.
        for (std::size_t c = 0; c < r.num_generators(i - 1); ++c) {
          const int dc = r.degree(i - 1, c);
          if (dr - dc < 2) continue;
          typename GradedAlgebra<F>::Tensor prod;
          for (std::size_t k = 0; k < r.num_generators(i); ++k) {
            const int dk = r.degree(i, k);
            if (dk >= dr || dk <= dc) continue;
            auto left = r.entry(s, g, k);
            if (left.empty()) continue;
            auto right = r.entry(i, k, c);
            if (right.empty()) continue;
            const std::uint64_t shift = ipow(n, dk - dc);
            for (const auto& [lk, lc] : a.lift(dr - dk, left))
              for (const auto& [rk, rc] : a.lift(dk - dc, right)) prod.emplace_back(lk * shift + rk, f.mul(lc, rc));
          }
          normalize(f, prod);
          if (prod.empty()) continue;
          for (const auto& [key, val] : a.reduce_mod_iprime(dr - dc, prod)) row.emplace_back(cols(0, c, key), val);
        }
      }
      add_linear_part(r, s, g, cols, row);
    }
    if (auto dep = dependent_rows(f, rows)) {
      v.outcome = Outcome::fails;
      v.conclusive = true;
      v.step = i;
      v.degree = r.degree(s, dep->back().first);
      v.witness = "rows " + combination_string(r, s, *dep) + " of step " + std::to_string(s) + " are dependent";
      return v;
    }
  }
  finish_holds<F>(v, r.conclusive());
  return v;
}

template <class F>
Verdict algebra_k2_check(std::shared_ptr<const GradedAlgebra<F>> a, std::optional<Bounds> b) {
  Bounds bd = b ? *b : default_algebra_bounds(*a);
  auto k = make_trivial<F>(a, bd.max_deg);
  MinimalResolution<F> r(k, bd.max_hom, bd.max_deg);
  Verdict v = k2_check(r);
  v.check = "algebra_k2";
  return v;
}

template <class F>
Verdict koszul_check(std::shared_ptr<const GradedAlgebra<F>> a, std::optional<Bounds> b) {
  Bounds bd = b ? *b : default_algebra_bounds(*a);
  auto k = make_trivial<F>(a, bd.max_deg);
  MinimalResolution<F> r(k, bd.max_hom, bd.max_deg);
  Verdict v = start("koszul", r);
  for (const auto& rel : a->presentation().relations)
    if (rel.degree() != 2) {
      v.note = "presentation is not quadratic";
      break;
    }
  const auto betti = r.betti();
  std::optional<std::pair<int, int>> bad;
  for (const auto& [ij, dim] : betti.entries())
    if (dim && ij.first != ij.second && (!bad || ij.second < bad->second)) bad = ij;
  if (bad) {
    v.outcome = Outcome::fails;
    v.conclusive = true;
    v.step = bad->first;
    v.degree = bad->second;
    v.witness = "E^{" + std::to_string(bad->first) + "," + std::to_string(bad->second) +
                "} = " + std::to_string(betti.at(bad->first, bad->second));
    return v;
  }
  finish_holds<F>(v, r.conclusive());
  return v;
}

template <class F>
Verdict koszul_module_check(const MinimalResolution<F>& r) {
  Verdict v = start("koszul_module", r);
  for (std::size_t g = 1; g < r.num_generators(0); ++g) {
    if (r.degree(0, g) != r.degree(0, 0)) {
      v.outcome = Outcome::fails;
      v.conclusive = true;
      v.step = 0;
      v.degree = r.degree(0, g);
      v.witness = "generators in degrees " + std::to_string(r.degree(0, 0)) + " and " + std::to_string(r.degree(0, g));
      return v;
    }
  }
  Verdict k1 = k1_check(r);
  k1.check = v.check;
  return k1;
}

namespace {

template <class F>
std::optional<int> top_generator_degree(const ModulePtr<F>& m, int max_deg) {
  MinimalResolution<F> r0(m, 0, max_deg);
  std::optional<int> top;
  for (std::size_t g = 0; g < r0.num_generators(0); ++g) top = std::max(top.value_or(0), r0.degree(0, g));
  return top;
}

// Bound for resolving a component: its own Betti bound when known.
template <class F>
int component_degree(const ModulePtr<F>& c, const Bounds& b, const ModuleRealization<F>& parent, bool& exact) {
  if (auto bb = c->betti_degree_bound()) {
    if (*bb <= parent.bound()) return std::max(*bb, 0);
    exact = false;
    return parent.bound();
  }
  return b.max_deg;
}

}  // namespace

template <class F>
Verdict componentwise_linear_check(const ModulePtr<F>& m, std::optional<Bounds> b) {
  Bounds bd = b ? *b : default_bounds(*m);
  Verdict v;
  v.check = "componentwise_linear";
  v.max_hom = bd.max_hom;
  v.max_deg = bd.max_deg;
  auto bottom = m->bottom_degree();
  auto gtop = bottom ? top_generator_degree(m, bd.max_deg) : std::nullopt;
  if (!bottom || !gtop) {
    finish_holds<F>(v, true);
    return v;
  }
  bool conclusive = true;
  for (int i = *bottom; i <= *gtop; ++i) {
    auto c = make_component(m, i, i);
    bool exact = true;
    const int d = component_degree(c, bd, *m, exact);
    MinimalResolution<F> r(c, bd.max_hom, d);
    Verdict kv = koszul_module_check(r);
    if (kv.fails()) {
      v.outcome = Outcome::fails;
      v.conclusive = true;
      v.step = kv.step;
      v.degree = i;
      v.witness = "component <" + std::to_string(i) + ">: " + kv.witness;
      return v;
    }
    conclusive = conclusive && exact && kv.conclusive;
  }
  finish_holds<F>(v, conclusive);
  return v;
}

template <class F>
Verdict strongly_k2_check(const ModulePtr<F>& m, std::optional<Bounds> b) {
  Bounds bd = b ? *b : default_bounds(*m);
  Verdict v;
  v.check = "strongly_k2";
  v.max_hom = bd.max_hom;
  v.max_deg = bd.max_deg;
  auto bottom = m->bottom_degree();
  auto gtop = bottom ? top_generator_degree(m, bd.max_deg) : std::nullopt;
  if (!bottom || !gtop) {
    finish_holds<F>(v, true);
    return v;
  }
  bool conclusive = true;
  for (int j = *bottom; j <= *gtop; ++j) {
    auto c = make_component(m, *bottom, j);
    bool exact = true;
    const int d = component_degree(c, bd, *m, exact);
    MinimalResolution<F> r(c, bd.max_hom, d);
    Verdict kv = k2_check(r);
    if (kv.fails()) {
      v.outcome = Outcome::fails;
      v.conclusive = true;
      v.step = kv.step;
      v.degree = j;
      v.witness = "component <" + std::to_string(*bottom) + "," + std::to_string(j) + ">: " + kv.witness;
      return v;
    }
    conclusive = conclusive && exact && kv.conclusive;
  }
  finish_holds<F>(v, conclusive);
  return v;
}

template <class F>
Verdict yoneda_generation_check(const MinimalResolution<F>& kr, const MinimalResolution<F>& mr, int max_factor) {
  if (max_factor < 1 || max_factor > 2) throw InputError("yoneda_generation_check: factor degree must be 1 or 2");
  if (&kr.algebra() != &mr.algebra()) throw InputError("yoneda_generation_check: resolutions over different algebras");
  Verdict v = start(max_factor == 1 ? "yoneda_d1" : "yoneda_d2", mr);
  const F& f = mr.field();
  const int N = mr.max_hom();
  if (kr.max_hom() < std::min(max_factor, N)) throw BoundError("resolution of k is too short for the products");
  int bottom = mr.max_deg();
  for (std::size_t g = 0; g < mr.num_generators(0); ++g) bottom = std::min(bottom, mr.degree(0, g));
  if (mr.num_generators(0) && kr.max_deg() < mr.max_deg() - bottom)
    throw BoundError("resolution of k must reach degree " + std::to_string(mr.max_deg() - bottom));

  using Vec = SparseVec<F, std::uint32_t>;
  // spans[m][j]: span of products landing in Ext^{m, j}(M, k), keyed by generator.
  std::vector<std::map<int, SparseEchelon<F, std::uint32_t>>> spans(static_cast<std::size_t>(N + 1));
  auto span_at = [&](int m, int j) -> SparseEchelon<F, std::uint32_t>& {
    return spans[static_cast<std::size_t>(m)].try_emplace(j, f).first->second;
  };

  for (int src = 0; src < N; ++src) {
    const int reach = std::min(max_factor, N - src);
    for (std::size_t g = 0; g < mr.num_generators(src); ++g) {
      const int dg = mr.degree(src, g);
      // phi[k]: image of step-(src+s) generator k in the resolution of k, step s.
      std::vector<std::optional<Vec>> phi(mr.num_generators(src));
      phi[g] = Vec{{0, f.one()}};
      for (int s = 1; s <= reach; ++s) {
        const int step = src + s;
        std::vector<std::optional<Vec>> next(mr.num_generators(step));
        for (std::size_t r = 0; r < next.size(); ++r) {
          const int dr = mr.degree(step, r);
          if (dr - dg > kr.max_deg() || dr <= dg) continue;
          Vec y;
          for (std::size_t k = 0; k < phi.size(); ++k) {
            if (!phi[k] || phi[k]->empty()) continue;
            const int dk = mr.degree(step - 1, k);
            if (dk >= dr) continue;
            auto e = mr.entry(step, r, k);
            if (e.empty()) continue;
            Vec term = kr.mul_element(s - 1, dr - dk, e, dk - dg, *phi[k]);
            y.insert(y.end(), term.begin(), term.end());
          }
          normalize(f, y);
          auto x = kr.solve(s, dr - dg, y);
          if (!x) throw std::logic_error("yoneda: chain map lift failed");
          next[r] = std::move(*x);
        }
        // Product of the dual of h with [g]: r -> constant coefficient of phi(r) at h.
        std::map<std::size_t, Vec> prods;
        for (std::size_t r = 0; r < next.size(); ++r) {
          if (!next[r]) continue;
          const int t = mr.degree(step, r) - dg;
          for (const auto& [idx, c] : *next[r]) {
            auto [h, w] = kr.locate(s, t, idx);
            if (kr.degree(s, h) == t) prods[h].emplace_back(static_cast<std::uint32_t>(r), c);
          }
        }
        for (auto& [h, vec] : prods) span_at(step, dg + kr.degree(s, h)).insert(std::move(vec));
        phi = std::move(next);
      }
    }
  }

  const auto betti = mr.betti();
  for (int m = 1; m <= N; ++m) {
    std::map<int, std::size_t> need;
    for (std::size_t r = 0; r < mr.num_generators(m); ++r) ++need[mr.degree(m, r)];
    for (const auto& [j, dim] : need) {
      auto& sp = spans[static_cast<std::size_t>(m)];
      auto it = sp.find(j);
      const std::size_t rank = it == sp.end() ? 0 : it->second.rank();
      if (rank < dim) {
        v.outcome = Outcome::fails;
        v.conclusive = true;
        v.step = m;
        v.degree = j;
        v.witness = "Ext^{" + std::to_string(m) + "," + std::to_string(j) + "} has dimension " + std::to_string(dim) +
                    " but products span " + std::to_string(rank);
        return v;
      }
    }
  }
  finish_holds<F>(v, mr.conclusive());
  return v;
}

template <class F>
Verdict trivial_action_check(const ModulePtr<F>& j, std::optional<Bounds> b) {
  const auto& a = j->algebra();
  const F& f = j->field();
  Bounds bd = b ? *b : default_bounds(*j);
  bd.max_deg = std::min(bd.max_deg, j->bound());
  Verdict v;
  v.check = "trivial_action";
  v.max_hom = bd.max_hom;
  v.max_deg = bd.max_deg;
  if (a.commutative()) {
    v.conclusive = true;
    v.note = "commutative algebra";
    return v;
  }
  if (!j->root().is_regular()) throw InputError("trivial_action_check: J must be a submodule of A");
  using Vec = SparseVec<F, std::uint32_t>;
  for (int t = 0; t < j->bound(); ++t) {
    for (std::uint32_t i = 0; i < j->dim(t); ++i) {
      Vec row = j->to_root(t, Vec{{i, f.one()}});
      for (int x = 0; x < static_cast<int>(a.n()); ++x) {
        if (!j->from_root(t + 1, a.right_mul(x, t, row))) {
          v.outcome = Outcome::inconclusive;
          v.note = "J is not closed under right multiplication by " + a.presentation().vars[static_cast<std::size_t>(x)] +
                   " in degree " + std::to_string(t + 1) + ", so B has no right action";
          return v;
        }
      }
    }
  }
  auto quo = make_quotient<F>(make_regular<F>(j->algebra_ptr(), j->bound()), j);
  MinimalResolution<F> r(quo, bd.max_hom, bd.max_deg);
  const int D = bd.max_deg;

  // Names of generators; step 1 elements are rendered as elements of J.
  auto name = [&](int s, std::size_t g) {
    if (s == 1 && r.num_generators(0) == 1 && r.degree(0, 0) == 0) {
      const int d = r.degree(1, g);
      auto e = r.entry(1, g, 0);
      if (auto in_j = j->from_root(d, e)) return j->element_string(d, *in_j);
    }
    return r.generator_string(s, g);
  };

  for (int x = 0; x < static_cast<int>(a.n()); ++x) {
    // psi[g]: lift of right multiplication by x at the current step (degree +1).
    std::vector<std::optional<Vec>> psi(r.num_generators(0));
    for (std::size_t g = 0; g < psi.size(); ++g) {
      const int dg = r.degree(0, g);
      if (dg + 1 > D) continue;
      Vec y;
      for (const auto& [i, c] : r.image(0, g)) {
        Vec lifted{{quo->quotient_lift(dg, i), c}};
        for (const auto& [k, e] : quo->project(dg + 1, a.right_mul(x, dg, lifted))) y.emplace_back(k, e);
      }
      normalize(f, y);
      psi[g] = r.solve(0, dg + 1, y);
      if (!psi[g]) throw std::logic_error("trivial_action: lift failed at step 0");
    }
    for (int s = 0;; ++s) {
      for (std::size_t g = 0; g < psi.size(); ++g) {
        if (!psi[g]) continue;
        const int t = r.degree(s, g) + 1;
        for (const auto& [idx, c] : *psi[g]) {
          auto [h, w] = r.locate(s, t, idx);
          if (r.degree(s, h) != t) continue;
          v.outcome = Outcome::fails;
          v.conclusive = true;
          v.step = s;
          v.degree = t;
          v.witness = name(s, g) + " ↦ " + name(s, h);
          v.note = "right multiplication by " + a.presentation().vars[static_cast<std::size_t>(x)] +
                   " acts nontrivially on Ext^" + std::to_string(s);
          return v;
        }
      }
      if (s + 1 > bd.max_hom) break;
      const int step = s + 1;
      std::vector<std::optional<Vec>> next(r.num_generators(step));
      for (std::size_t g = 0; g < next.size(); ++g) {
        const int dg = r.degree(step, g);
        if (dg + 1 > D) continue;
        Vec y;
        for (std::size_t k = 0; k < psi.size(); ++k) {
          const int dk = r.degree(s, k);
          if (dk >= dg) continue;
          if (!psi[k]) throw std::logic_error("trivial_action: missing lower lift");
          auto e = r.entry(step, g, k);
          if (e.empty()) continue;
          Vec term = r.mul_element(s, dg - dk, e, dk + 1, *psi[k]);
          y.insert(y.end(), term.begin(), term.end());
        }
        normalize(f, y);
        next[g] = r.solve(step, dg + 1, y);
        if (!next[g]) throw std::logic_error("trivial_action: lift failed");
      }
      psi = std::move(next);
    }
  }
  bool top_untested = false;
  for (int s = 0; s <= bd.max_hom; ++s)
    for (std::size_t g = 0; g < r.num_generators(s); ++g) top_untested = top_untested || r.degree(s, g) == D;
  v.outcome = Outcome::holds;
  v.conclusive = r.conclusive() && !top_untested;
  if (top_untested) v.note = "generators of degree " + std::to_string(D) + " are not tested";
  return v;
}

#define K2_INSTANTIATE(F)                                                                              \
  template Bounds default_bounds<F>(const ModuleRealization<F>&);                                      \
  template Bounds default_algebra_bounds<F>(const GradedAlgebra<F>&);                                  \
  template Verdict k1_check<F>(const MinimalResolution<F>&);                                           \
  template Verdict k2_check<F>(const MinimalResolution<F>&);                                           \
  template Verdict algebra_k2_check<F>(std::shared_ptr<const GradedAlgebra<F>>, std::optional<Bounds>); \
  template Verdict koszul_check<F>(std::shared_ptr<const GradedAlgebra<F>>, std::optional<Bounds>);     \
  template Verdict koszul_module_check<F>(const MinimalResolution<F>&);                                \
  template Verdict componentwise_linear_check<F>(const ModulePtr<F>&, std::optional<Bounds>);          \
  template Verdict strongly_k2_check<F>(const ModulePtr<F>&, std::optional<Bounds>);                   \
  template Verdict yoneda_generation_check<F>(const MinimalResolution<F>&, const MinimalResolution<F>&, int); \
  template Verdict trivial_action_check<F>(const ModulePtr<F>&, std::optional<Bounds>);

K2_INSTANTIATE(PrimeField)
K2_INSTANTIATE(RationalField)

}  // namespace k2
