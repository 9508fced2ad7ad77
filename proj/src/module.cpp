#include "k2/module.hpp"

#include <algorithm>
#include <functional>

namespace k2 {

int lcm_degree(const std::vector<Exponents>& gens) {
  Exponents top;
  for (const auto& g : gens) {
    if (top.size() < g.size()) top.resize(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) top[i] = std::max(top[i], g[i]);
  }
  int d = 0;
  for (int e : top) d += e;
  return d;
}

namespace {

int exp_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

template <class F>
void add_scaled(const F& f, SparseVec<F, std::uint32_t>& acc, const typename F::Elem& c,
                const SparseVec<F, std::uint32_t>& v) {
  for (const auto& [k, a] : v) acc.emplace_back(k, f.mul(c, a));
}

}  // namespace

template <class F>
void ModuleRealization<F>::check_degree(int t) const {
  if (t > bound())
    throw BoundError("module degree " + std::to_string(t) + " is beyond its bound " + std::to_string(bound()));
}

template <class F>
std::size_t ModuleRealization<F>::dim(int t) const {
  if (t < 0) return 0;
  check_degree(t);
  return dims_[static_cast<std::size_t>(t)];
}

template <class F>
std::optional<int> ModuleRealization<F>::bottom_degree() const {
  for (int t = 0; t <= bound(); ++t)
    if (dims_[static_cast<std::size_t>(t)] > 0) return t;
  return std::nullopt;
}

template <class F>
std::size_t ModuleRealization<F>::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

template <class F>
typename ModuleRealization<F>::Vec ModuleRealization<F>::act(int x, int t, std::uint32_t i) const {
  check_degree(t + 1);
  if (regular_) return alg_->left_mul(x, t, i);
  return act_[static_cast<std::size_t>(t)][static_cast<std::size_t>(x) * dims_[static_cast<std::size_t>(t)] + i];
}

template <class F>
typename ModuleRealization<F>::Vec ModuleRealization<F>::act(int x, int t, const Vec& v) const {
  check_degree(t + 1);
  if (regular_) return alg_->left_mul(x, t, v);
  Vec out;
  const auto& table = act_[static_cast<std::size_t>(t)];
  const std::size_t base = static_cast<std::size_t>(x) * dims_[static_cast<std::size_t>(t)];
  for (const auto& [i, c] : v) add_scaled(field(), out, c, table[base + i]);
  normalize(field(), out);
  return out;
}

template <class F>
typename ModuleRealization<F>::Vec ModuleRealization<F>::act_word(const Letters& w, int t, const Vec& v) const {
  Vec out = v;
  int cur = t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (out.empty()) break;
    out = act(*it, cur++, out);
  }
  if (out.empty()) check_degree(t + static_cast<int>(w.size()));
  return out;
}

template <class F>
typename ModuleRealization<F>::Vec ModuleRealization<F>::act_element(int p, const typename Algebra::Vec& a, int t,
                                                                     const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : a) add_scaled(field(), out, c, act_word(alg_->basis_word(p, i), t, v));
  normalize(field(), out);
  return out;
}

template <class F>
typename ModuleRealization<F>::Vec ModuleRealization<F>::to_root(int t, const Vec& v) const {
  if (!ambient_) return v;
  const auto& rows = embed_[static_cast<std::size_t>(t)].rows();
  Vec out;
  for (const auto& [i, c] : v) add_scaled(field(), out, c, rows[i]);
  normalize(field(), out);
  return out;
}

template <class F>
std::optional<typename ModuleRealization<F>::Vec> ModuleRealization<F>::from_root(int t, const Vec& v) const {
  if (!ambient_) return v;
  check_degree(t);
  const auto& e = embed_[static_cast<std::size_t>(t)];
  Vec r = v;
  e.reduce(r);
  if (!r.empty()) return std::nullopt;
  return e.coordinates(v);
}

template <class F>
typename ModuleRealization<F>::Vec ModuleRealization<F>::project(int t, const Vec& parent_vec) const {
  Vec r = parent_vec;
  killed_[static_cast<std::size_t>(t)].reduce(r);
  const auto& map = proj_[static_cast<std::size_t>(t)];
  Vec out;
  for (const auto& [k, c] : r) out.emplace_back(static_cast<std::uint32_t>(map[k]), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Writes an ideal element as c g u (or c u g for left ideals) with g a
// monomial generator and u a word of length at most 2, when possible.
template <class F>
std::optional<std::string> ModuleRealization<F>::factored_string(int t, const Vec& root_vec) const {
  if (root_vec.empty()) return std::nullopt;
  const F& f = field();
  const std::size_t n = alg_->n();
  for (const auto& g : ideal_gens_) {
    const int len = t - g.degree;
    if (!g.word || len < 0 || len > 2) continue;
    std::size_t count = 1;
    for (int k = 0; k < len; ++k) count *= n;
    for (std::size_t code = 0; code < count; ++code) {
      Letters u(static_cast<std::size_t>(len));
      std::size_t c = code;
      for (int k = len - 1; k >= 0; --k) {
        u[static_cast<std::size_t>(k)] = static_cast<int>(c % n);
        c /= n;
      }
      Letters w = *g.word;
      if (two_sided_)
        w.insert(w.end(), u.begin(), u.end());
      else
        w.insert(w.begin(), u.begin(), u.end());
      auto nf = alg_->word_normal_form(w);
      if (nf.size() != root_vec.size() || nf.empty()) continue;
      auto ratio = f.div(root_vec[0].second, nf[0].second);
      bool same = true;
      for (std::size_t k = 0; k < nf.size() && same; ++k)
        same = nf[k].first == root_vec[k].first && f.mul(ratio, nf[k].second) == root_vec[k].second;
      if (!same) continue;
      std::string body = alg_->word_string(w);
      std::string cs = f.to_string(ratio);
      if (cs == "1") return body;
      if (cs == "-1") return "-" + body;
      return cs + "*" + body;
    }
  }
  return std::nullopt;
}

template <class F>
std::string ModuleRealization<F>::element_string(int t, const Vec& v) const {
  if (regular_) return alg_->to_string(t, v);
  if (ambient_) {
    Vec r = to_root(t, v);
    if (auto s = factored_string(t, r)) return *s;
    return ambient_->element_string(t, r);
  }
  if (parent_) {
    Vec up;
    for (const auto& [i, c] : v) up.emplace_back(quotient_lift(t, i), c);
    std::sort(up.begin(), up.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return parent_->element_string(t, up);
  }
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    if (!out.empty()) out += " + ";
    out += field().to_string(c) + "*m" + std::to_string(t) + "_" + std::to_string(i);
  }
  return out;
}

namespace {

// Minimal monomial generators of the ideal spanned by the monomials of
// degree i..j in <gens>; nullopt when there are too many monomials to list.
std::optional<std::vector<Exponents>> component_monomials(const std::vector<Exponents>& gens, std::size_t n, int i,
                                                          int j) {
  std::vector<Exponents> out;
  for (int t = std::max(i, 0); t <= j; ++t) {
    if (binomial(static_cast<std::int64_t>(n) + t - 1, t) > 100000) return std::nullopt;
    Exponents e(n, 0);
    // Enumerate exponent vectors of degree t.
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
      if (v + 1 == n) {
        e[v] = left;
        auto divides = [&](const Exponents& g) {
          for (std::size_t k = 0; k < n; ++k)
            if (g[k] > e[k]) return false;
          return true;
        };
        if (std::any_of(gens.begin(), gens.end(), divides) && std::none_of(out.begin(), out.end(), divides))
          out.push_back(e);
        return;
      }
      for (int c = left; c >= 0; --c) {
        e[v] = c;
        rec(v + 1, left - c);
      }
    };
    if (n == 0) continue;
    rec(0, t);
  }
  return out;
}

}  // namespace

template <class F>
struct ModuleBuilder {
  using M = ModuleRealization<F>;
  using Vec = typename M::Vec;

  static std::shared_ptr<M> blank(std::shared_ptr<const GradedAlgebra<F>> a) {
    return std::shared_ptr<M>(new M(std::move(a)));
  }

  static ModulePtr<F> regular(std::shared_ptr<const GradedAlgebra<F>> a, int bound) {
    if (bound > a->bound()) throw BoundError("algebra is expanded only through degree " + std::to_string(a->bound()));
    auto m = blank(a);
    m->regular_ = true;
    for (int t = 0; t <= bound; ++t) m->dims_.push_back(a->dim(t));
    m->desc_ = "A";
    if (a->is_polynomial_ring()) {
      m->betti_bound_ = 0;
      m->monomial_ = std::vector<Exponents>{Exponents(a->n(), 0)};
    }
    return m;
  }

  static ModulePtr<F> trivial(std::shared_ptr<const GradedAlgebra<F>> a, int bound) {
    auto m = blank(a);
    for (int t = 0; t <= bound; ++t) m->dims_.push_back(t == 0 ? 1 : 0);
    m->act_.resize(static_cast<std::size_t>(bound));
    if (bound > 0) m->act_[0].assign(a->n(), Vec{});
    m->desc_ = "k";
    if (a->is_polynomial_ring()) m->betti_bound_ = static_cast<int>(a->n());
    return m;
  }

  static ModulePtr<F> submodule(const ModulePtr<F>& m, const std::vector<std::pair<int, Vec>>& gens, bool two_sided,
                                std::string desc) {
    const M& root = m->root();
    if (two_sided && !root.is_regular()) throw InputError("two-sided closure needs a submodule of A");
    const GradedAlgebra<F>& a = m->algebra();
    const F& f = m->field();
    const int bound = m->bound();
    auto s = blank(m->algebra_ptr());
    s->ambient_ = m->is_root() ? m : m->ambient_ptr();
    s->desc_ = std::move(desc);
    for (int t = 0; t <= bound; ++t) {
      SparseEchelon<F, std::uint32_t> e(f);
      if (t > 0) {
        for (const auto& row : s->embed_.back().rows()) {
          for (int x = 0; x < static_cast<int>(a.n()); ++x) {
            e.insert(root.act(x, t - 1, row));
            if (two_sided) e.insert(a.right_mul(x, t - 1, row));
          }
        }
      }
      for (const auto& [d, v] : gens)
        if (d == t) e.insert(m->to_root(t, v));
      e.finalize();
      s->dims_.push_back(e.rank());
      s->embed_.push_back(std::move(e));
    }
    s->act_.resize(static_cast<std::size_t>(bound));
    for (int t = 0; t < bound; ++t) {
      const auto& rows = s->embed_[static_cast<std::size_t>(t)].rows();
      const auto& next = s->embed_[static_cast<std::size_t>(t + 1)];
      auto& table = s->act_[static_cast<std::size_t>(t)];
      table.resize(a.n() * rows.size());
      for (int x = 0; x < static_cast<int>(a.n()); ++x)
        for (std::size_t i = 0; i < rows.size(); ++i)
          table[static_cast<std::size_t>(x) * rows.size() + i] = next.coordinates(root.act(x, t, rows[i]));
    }
    return s;
  }

  static ModulePtr<F> ideal(std::shared_ptr<const GradedAlgebra<F>> a, const std::vector<Polynomial>& polys,
                            bool two_sided, int bound, bool allow_linear) {
    auto reg = regular(a, bound);
    std::vector<std::pair<int, Vec>> gens;
    std::vector<Exponents> monos;
    std::vector<typename M::IdealGen> ideal_info;
    bool monomial = a->is_polynomial_ring();
    std::string desc;
    for (const auto& p : polys) {
      if (p.is_zero()) continue;
      int d = 0;
      Vec v;
      d = p.degree();
      if (d == 0 || (d < 2 && !allow_linear))
        throw InputError("ideal generator " + to_string(p, a->presentation().vars) + " has degree " +
                         std::to_string(d) + "; generators need degree at least 2");
      if (d <= bound) v = a->element(p, d);
      std::optional<Letters> word;
      if (p.terms.size() == 1) word = p.terms[0].word;
      if (!v.empty()) {
        gens.emplace_back(d, v);
        ideal_info.push_back({d, v, word});
      }
      if (p.terms.size() == 1) {
        Exponents e(a->n(), 0);
        for (int l : p.terms[0].word) ++e[static_cast<std::size_t>(l)];
        monos.push_back(std::move(e));
      } else {
        monomial = false;
      }
      desc += (desc.empty() ? "" : ", ") + to_string(p, a->presentation().vars);
    }
    auto s = submodule(reg, gens, two_sided, std::string(two_sided ? "two-sided ideal <" : "ideal <") + desc + ">");
    auto* w = const_cast<M*>(s.get());
    w->ideal_gens_ = std::move(ideal_info);
    w->two_sided_ = two_sided;
    if (monomial) {
      w->monomial_ = monos;
      w->betti_bound_ = lcm_degree(monos);
    }
    return s;
  }

  static ModulePtr<F> quotient(const ModulePtr<F>& m, const ModulePtr<F>& l) {
    const auto& lr = l->root();
    const auto& mr = m->root();
    const bool same = &lr == &mr || (lr.is_regular() && mr.is_regular() && &lr.algebra() == &mr.algebra());
    if (!same)
      throw InputError("quotient: " + l->description() + " is not a submodule of " + m->description());
    const int bound = std::min(m->bound(), l->bound());
    const F& f = m->field();
    auto q = blank(m->algebra_ptr());
    q->parent_ = m;
    q->desc_ = "(" + m->description() + ")/(" + l->description() + ")";
    for (int t = 0; t <= bound; ++t) {
      SparseEchelon<F, std::uint32_t> e(f);
      for (std::uint32_t i = 0; i < l->dim(t); ++i) {
        auto in_m = m->from_root(t, l->to_root(t, Vec{{i, f.one()}}));
        if (!in_m)
          throw InputError("quotient: " + l->description() + " is not contained in " + m->description() +
                           " in degree " + std::to_string(t));
        e.insert(std::move(*in_m));
      }
      e.finalize();
      std::vector<std::uint32_t> lift;
      std::vector<std::int64_t> proj(m->dim(t), -1);
      for (std::uint32_t c = 0; c < m->dim(t); ++c) {
        if (e.is_pivot(c)) continue;
        proj[c] = static_cast<std::int64_t>(lift.size());
        lift.push_back(c);
      }
      q->dims_.push_back(lift.size());
      q->lift_.push_back(std::move(lift));
      q->proj_.push_back(std::move(proj));
      q->killed_.push_back(std::move(e));
    }
    const std::size_t n = m->algebra().n();
    q->act_.resize(static_cast<std::size_t>(bound));
    for (int t = 0; t < bound; ++t) {
      auto& table = q->act_[static_cast<std::size_t>(t)];
      const auto& lift = q->lift_[static_cast<std::size_t>(t)];
      table.resize(n * lift.size());
      for (int x = 0; x < static_cast<int>(n); ++x)
        for (std::size_t j = 0; j < lift.size(); ++j)
          table[static_cast<std::size_t>(x) * lift.size() + j] = q->project(t + 1, m->act(x, t, lift[j]));
    }
    if (m->betti_degree_bound() && l->betti_degree_bound())
      q->betti_bound_ = std::max(*m->betti_degree_bound(), *l->betti_degree_bound());
    return q;
  }

  static ModulePtr<F> component(const ModulePtr<F>& m, int i, int j) {
    if (i > j) throw InputError("component: need i <= j");
    std::vector<std::pair<int, Vec>> gens;
    for (int t = std::max(i, 0); t <= std::min(j, m->bound()); ++t)
      for (std::uint32_t k = 0; k < m->dim(t); ++k) gens.emplace_back(t, Vec{{k, m->field().one()}});
    auto s = submodule(m, gens, false,
                       m->description() + "_<" + std::to_string(i) + "," + std::to_string(j) + ">");
    if (const auto& monos = m->monomial_generators()) {
      auto* w = const_cast<M*>(s.get());
      if (auto gens_c = component_monomials(*monos, m->algebra().n(), i, std::min(j, m->bound()))) {
        w->betti_bound_ = lcm_degree(*gens_c);
        w->monomial_ = std::move(*gens_c);
      } else {
        // A truncation N_{>=i}: its regularity is at most max(i, reg N), and
        // reg N is at most the lcm degree of N.
        std::vector<Exponents> low;
        for (const auto& g : *monos)
          if (exp_degree(g) <= j) low.push_back(g);
        w->betti_bound_ = std::max(i, lcm_degree(low)) + static_cast<int>(m->algebra().n());
      }
    }
    return s;
  }
};

template <class F>
ModulePtr<F> make_regular(std::shared_ptr<const GradedAlgebra<F>> a, int bound) {
  return ModuleBuilder<F>::regular(std::move(a), bound);
}
template <class F>
ModulePtr<F> make_trivial(std::shared_ptr<const GradedAlgebra<F>> a, int bound) {
  return ModuleBuilder<F>::trivial(std::move(a), bound);
}
template <class F>
ModulePtr<F> make_submodule(const ModulePtr<F>& m, const std::vector<std::pair<int, SparseVec<F, std::uint32_t>>>& gens,
                            bool two_sided, std::string desc) {
  return ModuleBuilder<F>::submodule(m, gens, two_sided, std::move(desc));
}
template <class F>
ModulePtr<F> make_ideal(std::shared_ptr<const GradedAlgebra<F>> a, const std::vector<Polynomial>& gens,
                        bool two_sided, int bound, bool allow_linear) {
  return ModuleBuilder<F>::ideal(std::move(a), gens, two_sided, bound, allow_linear);
}
template <class F>
ModulePtr<F> make_quotient(const ModulePtr<F>& m, const ModulePtr<F>& l) {
  return ModuleBuilder<F>::quotient(m, l);
}
template <class F>
ModulePtr<F> make_component(const ModulePtr<F>& m, int i, int j) {
  return ModuleBuilder<F>::component(m, i, j);
}

#define K2_INSTANTIATE(F)                                                                                         \
  template class ModuleRealization<F>;                                                                            \
  template ModulePtr<F> make_regular<F>(std::shared_ptr<const GradedAlgebra<F>>, int);                            \
  template ModulePtr<F> make_trivial<F>(std::shared_ptr<const GradedAlgebra<F>>, int);                            \
  template ModulePtr<F> make_submodule<F>(const ModulePtr<F>&,                                                    \
                                          const std::vector<std::pair<int, SparseVec<F, std::uint32_t>>>&, bool, \
                                          std::string);                                                           \
  template ModulePtr<F> make_ideal<F>(std::shared_ptr<const GradedAlgebra<F>>, const std::vector<Polynomial>&,    \
                                      bool, int, bool);                                                           \
  template ModulePtr<F> make_quotient<F>(const ModulePtr<F>&, const ModulePtr<F>&);                               \
  template ModulePtr<F> make_component<F>(const ModulePtr<F>&, int, int);

K2_INSTANTIATE(PrimeField)
K2_INSTANTIATE(RationalField)

}  // namespace k2
