#include "k2/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace k2 {

template <class F>
struct MinimalResolution<F>::Solver {
  SparseEchelon<F, std::uint32_t> ech;
  explicit Solver(const F& f) : ech(f) {}
};

template <class F>
MinimalResolution<F>::MinimalResolution(ModulePtr<F> m, int max_hom, int max_deg)
    : m_(std::move(m)), max_hom_(max_hom), max_deg_(max_deg) {
  if (max_hom < 0 || max_deg < 0) throw InputError("resolution bounds must be nonnegative");
  if (max_deg > m_->bound())
    throw BoundError("module is realized only through degree " + std::to_string(m_->bound()) +
                     ", resolution asked for degree " + std::to_string(max_deg));
  compute();
}

template <class F>
MinimalResolution<F>::~MinimalResolution() = default;

template <class F>
const std::vector<typename MinimalResolution<F>::Generator>& MinimalResolution<F>::gens(int s) const {
  if (s < 0 || s > max_hom_)
    throw BoundError("step " + std::to_string(s) + " is outside the computed range 0.." + std::to_string(max_hom_));
  return steps_[static_cast<std::size_t>(s)];
}

template <class F>
void MinimalResolution<F>::compute() {
  const auto& a = algebra();
  const F& f = field();
  const int N = max_hom_, D = max_deg_;
  const auto S = static_cast<std::size_t>(N + 1);
  steps_.assign(S, {});
  offsets_.assign(S, std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(D + 1)));
  std::vector<std::vector<Vec>> prev(S), cur(S);

  for (int t = 0; t <= D; ++t) {
    std::vector<std::size_t> z(S, 0);
    for (int s = 0; s <= N; ++s) {
      auto& gs = steps_[static_cast<std::size_t>(s)];
      std::vector<std::size_t> off;
      std::size_t total = 0;
      for (const auto& g : gs) {
        off.push_back(total);
        total += a.dim(t - g.degree);
      }
      std::vector<Vec> images(total);
      for (std::size_t g = 0; g < gs.size(); ++g) {
        const int u = t - gs[g].degree;
        const std::size_t base_prev = offsets_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - 1)][g];
        for (std::uint32_t w = 0; w < a.dim(u); ++w) {
          const int x = a.first_letter(u, w);
          const Vec& pv = prev[static_cast<std::size_t>(s)][base_prev + a.rest(u, w)];
          images[off[g] + w] = s == 0 ? m_->act(x, t - 1, pv) : left_mul(s - 1, x, t - 1, pv);
        }
      }

      const std::size_t needed = s == 0 ? m_->dim(t) : z[static_cast<std::size_t>(s - 1)];
      SparseEchelon<F, std::uint32_t> img(f);
      for (const auto& v : images) {
        if (img.rank() == needed) break;
        img.insert(v);
      }
      const std::size_t count = needed - img.rank();
      std::size_t found = 0;
      std::vector<Vec> fresh;
      if (count > 0 && s == 0) {
        for (std::uint32_t i = 0; i < m_->dim(t) && found < count; ++i) {
          Vec e{{i, f.one()}};
          if (img.insert(e)) {
            fresh.push_back(std::move(e));
            ++found;
          }
        }
      } else if (count > 0) {
        const auto& cols = cur[static_cast<std::size_t>(s - 1)];
        SparseEchelon<F, std::uint32_t> ker(f);
        for (std::uint32_t c = 0; c < cols.size() && found < count; ++c) {
          auto dep = ker.insert(cols[c], Vec{{c, f.one()}});
          if (dep && img.insert(*dep)) {
            fresh.push_back(std::move(*dep));
            ++found;
          }
        }
      }
      if (found < count)
        throw std::logic_error("resolution: kernel at step " + std::to_string(s) + ", degree " + std::to_string(t) +
                               " is smaller than exactness requires");
      for (auto& v : fresh) {
        off.push_back(total);
        images.push_back(Vec{});
        ++total;
        gs.push_back(Generator{t, v});
        images.back() = std::move(v);
      }
      off.push_back(total);
      offsets_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = std::move(off);
      z[static_cast<std::size_t>(s)] = total - needed;
      cur[static_cast<std::size_t>(s)] = std::move(images);
    }
    prev.swap(cur);
    for (auto& c : cur) c.clear();
  }
}

template <class F>
typename MinimalResolution<F>::AVec MinimalResolution<F>::entry(int s, std::size_t r, std::size_t c) const {
  if (s < 1) throw std::out_of_range("matrix entries exist from step 1 on");
  const int dr = degree(s, r), dc = degree(s - 1, c);
  AVec out;
  if (dc > dr) return out;
  const std::size_t lo = offset(s - 1, dr, c), hi = lo + algebra().dim(dr - dc);
  for (const auto& [k, v] : image(s, r))
    if (k >= lo && k < hi) out.emplace_back(static_cast<std::uint32_t>(k - lo), v);
  return out;
}

template <class F>
std::size_t MinimalResolution<F>::free_dim(int s, int t) const {
  if (t < 0) return 0;
  if (t > max_deg_) throw BoundError("degree " + std::to_string(t) + " is beyond the resolution bound");
  gens(s);
  return offsets_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)].back();
}

template <class F>
std::size_t MinimalResolution<F>::offset(int s, int t, std::size_t g) const {
  return offsets_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)][g];
}

template <class F>
std::pair<std::size_t, std::uint32_t> MinimalResolution<F>::locate(int s, int t, std::size_t index) const {
  const auto& off = offsets_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
  auto it = std::upper_bound(off.begin(), off.end() - 1, index);
  std::size_t g = static_cast<std::size_t>(it - off.begin()) - 1;
  return {g, static_cast<std::uint32_t>(index - off[g])};
}

template <class F>
typename MinimalResolution<F>::Vec MinimalResolution<F>::left_mul(int s, int x, int t, const Vec& v) const {
  if (t + 1 > max_deg_) throw BoundError("degree " + std::to_string(t + 1) + " is beyond the resolution bound");
  const auto& a = algebra();
  const F& f = field();
  const auto& off2 = offsets_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t + 1)];
  Vec out;
  for (const auto& [idx, c] : v) {
    auto [g, w] = locate(s, t, idx);
    const int u = t - degree(s, g);
    for (const auto& [j, e] : a.left_mul(x, u, w)) out.emplace_back(off2[g] + j, f.mul(c, e));
  }
  normalize(f, out);
  return out;
}

template <class F>
typename MinimalResolution<F>::Vec MinimalResolution<F>::mul_element(int s, int p, const AVec& a, int t,
                                                                     const Vec& v) const {
  const F& f = field();
  Vec out;
  for (const auto& [i, c] : a) {
    Letters w = algebra().basis_word(p, i);
    Vec r = v;
    int cur = t;
    for (auto it = w.rbegin(); it != w.rend() && !r.empty(); ++it) r = left_mul(s, *it, cur++, r);
    for (const auto& [k, e] : r) out.emplace_back(k, f.mul(c, e));
  }
  normalize(f, out);
  return out;
}

template <class F>
typename MinimalResolution<F>::Vec MinimalResolution<F>::apply(int s, int t, const Vec& v) const {
  const F& f = field();
  Vec out;
  for (const auto& [idx, c] : v) {
    auto [g, w] = locate(s, t, idx);
    const int dg = degree(s, g);
    Letters word = algebra().basis_word(t - dg, w);
    Vec r = image(s, g);
    int cur = dg;
    for (auto it = word.rbegin(); it != word.rend() && !r.empty(); ++it, ++cur)
      r = s == 0 ? m_->act(*it, cur, r) : left_mul(s - 1, *it, cur, r);
    for (const auto& [k, e] : r) out.emplace_back(k, f.mul(c, e));
  }
  normalize(f, out);
  return out;
}

template <class F>
std::vector<typename MinimalResolution<F>::Vec> MinimalResolution<F>::basis_images(int s, int t) const {
  const auto& a = algebra();
  std::vector<Vec> out(free_dim(s, t));
  const auto& gs = gens(s);
  for (std::size_t g = 0; g < gs.size() && gs[g].degree <= t; ++g) {
    const int dg = gs[g].degree;
    std::vector<Vec> level{gs[g].image};
    for (int u = 1; u <= t - dg; ++u) {
      std::vector<Vec> next(a.dim(u));
      for (std::uint32_t w = 0; w < a.dim(u); ++w) {
        const int x = a.first_letter(u, w);
        const Vec& pv = level[a.rest(u, w)];
        next[w] = s == 0 ? m_->act(x, dg + u - 1, pv) : left_mul(s - 1, x, dg + u - 1, pv);
      }
      level.swap(next);
    }
    const std::size_t base = offset(s, t, g);
    for (std::size_t w = 0; w < level.size(); ++w) out[base + w] = std::move(level[w]);
  }
  return out;
}

template <class F>
const typename MinimalResolution<F>::Solver& MinimalResolution<F>::solver(int s, int t) const {
  auto key = std::make_pair(s, t);
  auto it = solvers_.find(key);
  if (it != solvers_.end()) return *it->second;
  auto sv = std::make_unique<Solver>(field());
  auto imgs = basis_images(s, t);
  for (std::uint32_t i = 0; i < imgs.size(); ++i) sv->ech.insert(std::move(imgs[i]), Vec{{i, field().one()}});
  return *solvers_.emplace(key, std::move(sv)).first->second;
}

template <class F>
std::optional<typename MinimalResolution<F>::Vec> MinimalResolution<F>::solve(int s, int t, const Vec& y) const {
  if (y.empty()) return Vec{};
  const Solver& sv = solver(s, t);
  Vec r = y, comb;
  sv.ech.reduce(r, comb);
  if (!r.empty()) return std::nullopt;
  for (auto& [k, c] : comb) c = field().neg(c);
  return comb;
}

template <class F>
BettiTable MinimalResolution<F>::betti() const {
  BettiTable b(max_hom_, max_deg_);
  for (int s = 0; s <= max_hom_; ++s)
    for (const auto& g : steps_[static_cast<std::size_t>(s)]) b.add(s, g.degree);
  return b;
}

template <class F>
bool MinimalResolution<F>::terminated() const {
  return length().has_value();
}

template <class F>
std::optional<int> MinimalResolution<F>::length() const {
  for (int s = 0; s <= max_hom_; ++s)
    if (steps_[static_cast<std::size_t>(s)].empty()) return s - 1;
  return std::nullopt;
}

template <class F>
bool MinimalResolution<F>::conclusive() const {
  if (!terminated()) return false;
  if (!algebra().is_polynomial_ring()) return true;
  auto b = m_->betti_degree_bound();
  return b && *b <= max_deg_;
}

template <class F>
std::string MinimalResolution<F>::generator_string(int s, std::size_t g) const {
  if (s == 0) return m_->element_string(degree(0, g), image(0, g));
  const std::size_t cols = num_generators(s - 1);
  const int dr = degree(s, g);
  auto one = [&](std::size_t c) {
    int dc = degree(s - 1, c);
    return dc > dr ? std::string("0") : algebra().to_string(dr - dc, entry(s, g, c));
  };
  if (cols == 1) return one(0);
  std::string out = "(";
  for (std::size_t c = 0; c < cols; ++c) out += (c ? ", " : "") + one(c);
  return out + ")";
}

template <class F>
BettiTable ext_of_quotient_algebra(std::shared_ptr<const GradedAlgebra<F>> a, int max_hom, int max_deg) {
  return MinimalResolution<F>(make_trivial<F>(std::move(a), max_deg), max_hom, max_deg).betti();
}

template BettiTable ext_of_quotient_algebra<PrimeField>(std::shared_ptr<const GradedAlgebra<PrimeField>>, int, int);
template BettiTable ext_of_quotient_algebra<RationalField>(std::shared_ptr<const GradedAlgebra<RationalField>>, int,
                                                           int);

template class MinimalResolution<PrimeField>;
template class MinimalResolution<RationalField>;

}  // namespace k2
