#include "k2/graded_algebra.hpp"

#include "k2/field.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace k2 {

std::uint64_t next_object_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

template <class F>
struct GradedAlgebra<F>::Essential {
  SparseEchelon<F, std::uint64_t> ech;
  std::uint64_t cols = 0;
  explicit Essential(const F& f) : ech(f) {}
};

namespace {

template <class F>
void add_scaled(const F& f, SparseVec<F, std::uint32_t>& acc, const typename F::Elem& c,
                const SparseVec<F, std::uint32_t>& v) {
  for (const auto& [k, a] : v) acc.emplace_back(k, f.mul(c, a));
}

}  // namespace

template <class F>
GradedAlgebra<F>::GradedAlgebra(AlgebraPresentation p, F field, int bound)
    : pres_(std::move(p)), f_(std::move(field)), id_(next_object_id()) {
  pres_.validate();
  if (bound < 0) throw InputError("degree bound must be nonnegative");
  for (const auto& r : pres_.relations) {
    if (r.degree() > 62) throw InputError("relation degree too large");
    Tensor t;
    for (const auto& term : r.terms) t.emplace_back(encode(term.word), f_.from_rational(term.coeff));
    normalize(f_, t);
    if (!t.empty()) rel_[r.degree()].push_back(std::move(t));
  }
  deg_.push_back(Level{});
  deg_[0].keys = {0};
  deg_[0].first = {-1};
  deg_[0].rest = {0};
  extend(bound);
}

template <class F>
GradedAlgebra<F>::~GradedAlgebra() = default;

template <class F>
void GradedAlgebra<F>::extend(int bound) {
  if (bound <= this->bound()) return;
  // n^(bound+1) must fit so that V ⊗ A_bound and I' at bound+1 are addressable.
  std::uint64_t p = 1;
  for (int d = 0; d <= bound + 1; ++d) {
    if (d > 0 && p > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(n(), 1))
      throw BoundError("degree bound " + std::to_string(bound) + " too large for " + std::to_string(n()) +
                       " generators");
    if (d > 0) p *= std::max<std::uint64_t>(n(), 1);
  }
  for (int d = this->bound() + 1; d <= bound; ++d) {
    if (commutative())
      expand_commutative(d);
    else
      expand_noncommutative(d);
  }
}

template <class F>
const typename GradedAlgebra<F>::Level& GradedAlgebra<F>::level(int d) const {
  if (d < 0) throw std::out_of_range("negative degree");
  if (d > bound())
    throw BoundError("degree " + std::to_string(d) + " is beyond the expansion bound " + std::to_string(bound()));
  return deg_[static_cast<std::size_t>(d)];
}

template <class F>
std::uint64_t GradedAlgebra<F>::tensor_dim(int d) const {
  if (commutative()) return static_cast<std::uint64_t>(binomial(static_cast<std::int64_t>(n()) + d - 1, d));
  std::uint64_t p = 1;
  for (int k = 0; k < d; ++k) p *= n();
  return p;
}

template <class F>
std::uint64_t GradedAlgebra<F>::encode(const Letters& w) const {
  std::uint64_t k = 0;
  for (int l : w) k = k * n() + static_cast<std::uint64_t>(l);
  return k;
}

template <class F>
Letters GradedAlgebra<F>::decode(std::uint64_t key, int d) const {
  Letters w(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(key % n());
    key /= n();
  }
  return w;
}

template <class F>
std::optional<std::uint32_t> GradedAlgebra<F>::basis_index(int d, std::uint64_t key) const {
  const auto& keys = level(d).keys;
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys.begin());
}

template <class F>
std::vector<typename GradedAlgebra<F>::Tensor> GradedAlgebra<F>::relation_rows(int d, int lo, int hi) const {
  const std::uint64_t below = dim(d - 1);
  std::vector<Tensor> rows;
  for (const auto& [k, rels] : rel_) {
    if (k < lo || k > hi || k > d) continue;
    const int free_deg = d - k;
    for (const auto& r : rels) {
      std::vector<std::pair<int, Letters>> split;
      for (const auto& [key, c] : r) {
        Letters w = decode(key, k);
        split.emplace_back(w[0], Letters(w.begin() + 1, w.end()));
      }
      for (std::uint32_t b = 0; b < dim(free_deg); ++b) {
        Tensor row;
        for (std::size_t t = 0; t < r.size(); ++t) {
          const auto& [y, rest] = split[t];
          Vec v{{b, f_.one()}};
          int cur = free_deg;
          for (auto it = rest.rbegin(); it != rest.rend(); ++it) v = left_mul(*it, cur++, v);
          for (const auto& [i, a] : v)
            row.emplace_back(static_cast<std::uint64_t>(y) * below + i, f_.mul(r[t].second, a));
        }
        normalize(f_, row);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

template <class F>
void GradedAlgebra<F>::expand_noncommutative(int d) {
  const std::uint64_t below = dim(d - 1);
  const std::uint64_t cols = below * n();
  SparseEchelon<F, std::uint64_t> ech(f_);
  // Only relations of degree <= d are present in rel_ with k <= d.
  for (auto& row : relation_rows(d, 2, d)) ech.insert(std::move(row));
  ech.finalize();

  Level lv;
  std::vector<std::int64_t> col_to_basis(cols, -1);
  std::uint64_t stride = 1;
  for (int k = 0; k < d - 1; ++k) stride *= n();
  const Level& prev = deg_[static_cast<std::size_t>(d - 1)];
  for (std::uint64_t c = 0; c < cols; ++c) {
    if (ech.is_pivot(c)) continue;
    col_to_basis[c] = static_cast<std::int64_t>(lv.keys.size());
    std::uint64_t y = c / below, i = c % below;
    lv.keys.push_back(y * stride + prev.keys[i]);
    lv.first.push_back(static_cast<int>(y));
    lv.rest.push_back(static_cast<std::uint32_t>(i));
  }
  lv.left.resize(cols);
  for (std::uint64_t c = 0; c < cols; ++c) {
    if (col_to_basis[c] >= 0) {
      lv.left[c] = Vec{{static_cast<std::uint32_t>(col_to_basis[c]), f_.one()}};
      continue;
    }
    const auto* row = ech.row_for_pivot(c);
    Vec v;
    for (std::size_t k = 1; k < row->size(); ++k)
      v.emplace_back(static_cast<std::uint32_t>(col_to_basis[(*row)[k].first]), f_.neg((*row)[k].second));
    lv.left[c] = std::move(v);
  }
  deg_.push_back(std::move(lv));
  Level& cur = deg_.back();
  // b_i x = y (b' x) where b_i = y b'.
  cur.right.resize(cols);
  for (int x = 0; x < static_cast<int>(n()); ++x) {
    for (std::uint32_t i = 0; i < below; ++i) {
      Vec out;
      if (d == 1) {
        out = cur.left[static_cast<std::size_t>(x)];
      } else {
        const Level& p = deg_[static_cast<std::size_t>(d - 1)];
        int y = p.first[i];
        const Vec& inner = p.right[static_cast<std::size_t>(x) * dim(d - 2) + p.rest[i]];
        for (const auto& [j, a] : inner) add_scaled(f_, out, a, cur.left[static_cast<std::size_t>(y) * below + j]);
        normalize(f_, out);
      }
      cur.right[static_cast<std::size_t>(x) * below + i] = std::move(out);
    }
  }
}

template <class F>
void GradedAlgebra<F>::expand_commutative(int d) {
  const Level& prev = deg_[static_cast<std::size_t>(d - 1)];
  // All monomials of degree d as sorted words, in increasing code order.
  std::vector<std::uint64_t> monos;
  Letters w(static_cast<std::size_t>(d));
  std::function<void(int, int)> gen = [&](int pos, int from) {
    if (pos == d) {
      monos.push_back(encode(w));
      return;
    }
    for (int l = from; l < static_cast<int>(n()); ++l) {
      w[static_cast<std::size_t>(pos)] = l;
      gen(pos + 1, l);
    }
  };
  gen(0, 0);

  auto times = [&](int x, std::uint64_t key, int len) {
    Letters u = decode(key, len);
    u.insert(std::upper_bound(u.begin(), u.end(), x), x);
    return encode(u);
  };

  SparseEchelon<F, std::uint64_t> ech(f_);
  for (const auto& [m, nf] : prev.reducer) {
    for (int x = 0; x < static_cast<int>(n()); ++x) {
      Tensor row{{times(x, m, d - 1), f_.one()}};
      for (const auto& [i, a] : nf) row.emplace_back(times(x, prev.keys[i], d - 1), f_.neg(a));
      normalize(f_, row);
      ech.insert(std::move(row));
    }
  }
  if (auto it = rel_.find(d); it != rel_.end())
    for (const auto& r : it->second) ech.insert(r);
  ech.finalize();

  Level lv;
  for (std::uint64_t m : monos)
    if (!ech.is_pivot(m)) lv.keys.push_back(m);
  auto index_of = [&](std::uint64_t key) {
    return static_cast<std::uint32_t>(std::lower_bound(lv.keys.begin(), lv.keys.end(), key) - lv.keys.begin());
  };
  for (std::uint64_t m : lv.keys) {
    Letters u = decode(m, d);
    lv.first.push_back(u[0]);
    u.erase(u.begin());
    std::uint64_t rk = encode(u);
    auto it = std::lower_bound(prev.keys.begin(), prev.keys.end(), rk);
    if (it == prev.keys.end() || *it != rk) throw std::logic_error("normal monomials not closed under division");
    lv.rest.push_back(static_cast<std::uint32_t>(it - prev.keys.begin()));
  }
  for (const auto& row : ech.rows()) {
    Vec v;
    for (std::size_t k = 1; k < row.size(); ++k) v.emplace_back(index_of(row[k].first), f_.neg(row[k].second));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    lv.reducer.emplace(row[0].first, std::move(v));
  }
  const std::size_t below = prev.keys.size();
  lv.left.resize(below * n());
  for (int x = 0; x < static_cast<int>(n()); ++x) {
    for (std::uint32_t i = 0; i < below; ++i) {
      std::uint64_t key = times(x, prev.keys[i], d - 1);
      auto it = std::lower_bound(lv.keys.begin(), lv.keys.end(), key);
      Vec v;
      if (it != lv.keys.end() && *it == key)
        v = Vec{{static_cast<std::uint32_t>(it - lv.keys.begin()), f_.one()}};
      else
        v = lv.reducer.at(key);
      lv.left[static_cast<std::size_t>(x) * below + i] = std::move(v);
    }
  }
  deg_.push_back(std::move(lv));
}

template <class F>
const typename GradedAlgebra<F>::Vec& GradedAlgebra<F>::left_mul(int x, int d, std::uint32_t i) const {
  return level(d + 1).left[static_cast<std::size_t>(x) * dim(d) + i];
}

template <class F>
const typename GradedAlgebra<F>::Vec& GradedAlgebra<F>::right_mul(int x, int d, std::uint32_t i) const {
  if (commutative()) return left_mul(x, d, i);
  return level(d + 1).right[static_cast<std::size_t>(x) * dim(d) + i];
}

template <class F>
typename GradedAlgebra<F>::Vec GradedAlgebra<F>::left_mul(int x, int d, const Vec& v) const {
  Vec out;
  for (const auto& [i, a] : v) add_scaled(f_, out, a, left_mul(x, d, i));
  normalize(f_, out);
  return out;
}

template <class F>
typename GradedAlgebra<F>::Vec GradedAlgebra<F>::right_mul(int x, int d, const Vec& v) const {
  Vec out;
  for (const auto& [i, a] : v) add_scaled(f_, out, a, right_mul(x, d, i));
  normalize(f_, out);
  return out;
}

template <class F>
typename GradedAlgebra<F>::Vec GradedAlgebra<F>::multiply(int p, const Vec& a, int q, const Vec& b) const {
  if (p + q > bound())
    throw BoundError("product of degree " + std::to_string(p + q) + " is beyond the bound " + std::to_string(bound()));
  Vec out;
  for (const auto& [i, c] : a) {
    Letters w = basis_word(p, i);
    Vec v = b;
    int cur = q;
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = left_mul(*it, cur++, v);
    add_scaled(f_, out, c, v);
  }
  normalize(f_, out);
  return out;
}

template <class F>
typename GradedAlgebra<F>::Vec GradedAlgebra<F>::word_normal_form(const Letters& w) const {
  if (static_cast<int>(w.size()) > bound())
    throw BoundError("word of length " + std::to_string(w.size()) + " is beyond the bound");
  Vec v{{0, f_.one()}};
  int cur = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = left_mul(*it, cur++, v);
  return v;
}

template <class F>
typename GradedAlgebra<F>::Vec GradedAlgebra<F>::element(const Polynomial& p, int& deg) const {
  deg = p.degree();
  Vec out;
  for (const auto& t : p.terms) add_scaled(f_, out, f_.from_rational(t.coeff), word_normal_form(t.word));
  normalize(f_, out);
  return out;
}

template <class F>
typename GradedAlgebra<F>::Vec GradedAlgebra<F>::reduce(int d, const Tensor& t) const {
  Vec out;
  for (const auto& [key, c] : t) {
    Letters w = decode(key, d);
    if (commutative()) std::sort(w.begin(), w.end());
    add_scaled(f_, out, c, word_normal_form(w));
  }
  normalize(f_, out);
  return out;
}

template <class F>
typename GradedAlgebra<F>::Tensor GradedAlgebra<F>::lift(int d, const Vec& v) const {
  Tensor t;
  for (const auto& [i, c] : v) t.emplace_back(basis_key(d, i), c);
  return t;
}

template <class F>
const typename GradedAlgebra<F>::Essential& GradedAlgebra<F>::essential(int d) const {
  auto it = essential_.find(d);
  if (it != essential_.end()) return *it->second;
  if (d - 1 > bound())
    throw BoundError("I' at degree " + std::to_string(d) + " needs the algebra through degree " +
                     std::to_string(d - 1));
  auto e = std::make_unique<Essential>(f_);
  e->cols = dim(d - 1) * n();
  if (d >= 3)
    for (auto& row : relation_rows(d, 2, d - 1)) e->ech.insert(std::move(row));
  e->ech.finalize();
  return *essential_.emplace(d, std::move(e)).first->second;
}

template <class F>
typename GradedAlgebra<F>::Tensor GradedAlgebra<F>::to_tensor_coords(int d, const Tensor& words) const {
  const std::uint64_t below = dim(d - 1);
  Tensor out;
  for (const auto& [key, c] : words) {
    Letters w = decode(key, d);
    Vec nf = word_normal_form(Letters(w.begin() + 1, w.end()));
    for (const auto& [i, a] : nf) out.emplace_back(static_cast<std::uint64_t>(w[0]) * below + i, f_.mul(c, a));
  }
  normalize(f_, out);
  return out;
}

template <class F>
typename GradedAlgebra<F>::Tensor GradedAlgebra<F>::reduce_mod_iprime(int d, const Tensor& t) const {
  if (d <= 0) return t;
  if (commutative()) {
    if (!companion_) {
      AlgebraPresentation cp;
      cp.vars = pres_.vars;
      cp.commutative = false;
      for (int i = 0; i < static_cast<int>(n()); ++i)
        for (int j = i + 1; j < static_cast<int>(n()); ++j)
          cp.relations.push_back(Polynomial{{{mpq_class(1), {j, i}}, {mpq_class(-1), {i, j}}}});
      for (const auto& r : pres_.relations) cp.relations.push_back(r);
      companion_ = std::make_unique<GradedAlgebra>(std::move(cp), f_, std::max(1, d - 1));
    }
    companion_->extend(d - 1);
    return companion_->reduce_mod_iprime(d, t);
  }
  const Essential& e = essential(d);
  Tensor v = to_tensor_coords(d, t);
  e.ech.reduce(v);
  return v;
}

template <class F>
std::size_t GradedAlgebra<F>::iprime_quotient_dim(int d) const {
  if (d <= 0) return 1;
  if (commutative()) {
    reduce_mod_iprime(d, {});
    return companion_->iprime_quotient_dim(d);
  }
  const Essential& e = essential(d);
  return static_cast<std::size_t>(e.cols - e.ech.rank());
}

template <class F>
TruncatedSeries GradedAlgebra<F>::hilbert_series() const {
  auto s = TruncatedSeries::zero(bound());
  for (int d = 0; d <= bound(); ++d) s.at(d) = static_cast<std::int64_t>(dim(d));
  return s;
}

template <class F>
std::string GradedAlgebra<F>::to_string(int d, const Vec& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    std::string cs = f_.to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    std::string w = word_string(basis_word(d, i));
    std::string body = cs == "1" ? w : (w == "1" ? cs : cs + "*" + w);
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

template class GradedAlgebra<PrimeField>;
template class GradedAlgebra<RationalField>;

}  // namespace k2
