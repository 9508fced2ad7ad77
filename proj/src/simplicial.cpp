#include "k2/simplicial.hpp"

#include "k2/sparse.hpp"
#include "k2/text.hpp"

#include <algorithm>
#include <unordered_set>

namespace k2 {

namespace {

std::vector<Face> maximal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Larger sets first so a set is kept only when no kept set contains it.
  std::vector<Face> by_size = sets;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](Face a, Face b) { return face_size(a) > face_size(b); });
  std::vector<Face> kept;
  for (Face s : by_size) {
    bool covered = false;
    for (Face k : kept)
      if ((s & k) == s) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void check_names(const std::vector<std::string>& names) {
  if (names.size() > 64) throw InputError("at most 64 vertices are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw InputError("duplicate vertex name '" + n + "'");
}

// Compresses the bits of f that lie in `keep` into consecutive positions.
Face compress(Face f, Face keep) {
  Face out = 0;
  int pos = 0;
  for (int b = 0; b < 64; ++b) {
    if (!(keep >> b & 1)) continue;
    if (f >> b & 1) out |= Face{1} << pos;
    ++pos;
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_masks(std::vector<std::string> vertices, std::vector<Face> facets) {
  check_names(vertices);
  SimplicialComplex d;
  d.names_ = std::move(vertices);
  for (Face f : facets)
    if ((f & ~d.full_mask()) != 0) throw InputError("facet uses a vertex outside the vertex set");
  d.facets_ = maximal_sets(std::move(facets));
  return d;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<std::string>>& facets) {
  SimplicialComplex tmp;
  check_names(vertices);
  tmp.names_ = vertices;
  std::vector<Face> masks;
  for (const auto& f : facets) masks.push_back(tmp.face_from_names(f));
  return from_masks(std::move(vertices), std::move(masks));
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> vertices) {
  return from_masks(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::irrelevant(std::vector<std::string> vertices) {
  return from_masks(std::move(vertices), {Face{0}});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> vertices) {
  SimplicialComplex d = from_masks(std::move(vertices), {});
  d.facets_ = {d.full_mask()};
  return d;
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  int m = 0;
  for (Face f : facets_) m = std::max(m, face_size(f));
  return m - 1;
}

bool SimplicialComplex::contains(Face f) const {
  for (Face g : facets_)
    if ((f & g) == f) return true;
  return false;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face> seen;
  for (Face g : facets_) {
    for (Face s = g;; s = (s - 1) & g) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
  std::vector<Face> out;
  for (Face f : faces())
    if (face_size(f) == d + 1) out.push_back(f);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  if (is_void()) return {};
  std::vector<std::size_t> fv(static_cast<std::size_t>(dim() + 2), 0);
  for (Face f : faces()) ++fv[static_cast<std::size_t>(face_size(f))];
  return fv;
}

std::string SimplicialComplex::face_name(Face f, const std::string& sep) const {
  if (f == 0) return "{}";
  std::string out;
  for (std::size_t i = 0; i < n(); ++i)
    if (f >> i & 1) {
      if (!out.empty()) out += sep;
      out += names_[i];
    }
  return out;
}

Face SimplicialComplex::face_from_names(const std::vector<std::string>& names) const {
  Face f = 0;
  for (const auto& nm : names) {
    auto it = std::find(names_.begin(), names_.end(), nm);
    if (it == names_.end()) throw InputError("unknown vertex '" + nm + "'");
    f |= Face{1} << (it - names_.begin());
  }
  return f;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& d) {
  if (d.is_void()) return {Face{0}};
  std::unordered_set<Face> seen;
  std::vector<Face> out;
  for (Face s : d.faces()) {
    for (std::size_t v = 0; v < d.n(); ++v) {
      Face c = s | (Face{1} << v);
      if (c == s || d.contains(c) || seen.count(c)) continue;
      bool minimal = true;
      for (Face r = c; r; r &= r - 1) {
        Face bit = r & -r;
        if (!d.contains(c & ~bit)) {
          minimal = false;
          break;
        }
      }
      seen.insert(c);
      if (minimal) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d) {
  std::vector<Face> facets;
  for (Face m : minimal_nonfaces(d)) facets.push_back(d.full_mask() & ~m);
  return SimplicialComplex::from_masks(d.vertices(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, Face tau) {
  if (!d.contains(tau)) throw InputError("link of a set that is not a face");
  Face keep = d.full_mask() & ~tau;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d.n(); ++i)
    if (keep >> i & 1) names.push_back(d.vertices()[i]);
  std::vector<Face> facets;
  for (Face g : d.facets())
    if ((g & tau) == tau) facets.push_back(compress(g & ~tau, keep));
  return SimplicialComplex::from_masks(std::move(names), std::move(facets));
}

SimplicialComplex skeleton_pure(const SimplicialComplex& d, int q) {
  if (q < 0) throw InputError("skeleton dimension must be nonnegative");
  return SimplicialComplex::from_masks(d.vertices(), d.faces_of_dim(q));
}

template <class F>
HomologyProfile reduced_homology(const SimplicialComplex& d, const F& field) {
  HomologyProfile h;
  if (d.is_void()) return h;
  const int top = d.dim();
  // by_dim[k] holds the faces with k vertices, sorted by bitmask.
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top + 2));
  for (Face f : d.faces()) by_dim[static_cast<std::size_t>(face_size(f))].push_back(f);
  // rank_bd[k]: rank of the boundary from k-vertex chains to (k-1)-vertex chains.
  std::vector<std::size_t> rank_bd(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    const auto& lower = by_dim[k - 1];
    SparseEchelon<F> ech(field);
    for (Face f : by_dim[k]) {
      SparseVec<F> v;
      int sign_pos = 0;
      for (Face r = f; r; r &= r - 1) {
        Face bit = r & -r;
        auto idx = std::lower_bound(lower.begin(), lower.end(), f & ~bit) - lower.begin();
        v.emplace_back(static_cast<std::uint32_t>(idx), sign_pos % 2 ? field.neg(field.one()) : field.one());
        ++sign_pos;
      }
      normalize(field, v);
      ech.insert(std::move(v));
    }
    rank_bd[k] = ech.rank();
  }
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    std::size_t dimh = by_dim[k].size() - rank_bd[k] - rank_bd[k + 1];
    if (dimh) h.dims[static_cast<int>(k) - 1] = dimh;
  }
  return h;
}

HomologyProfile reduced_homology(const SimplicialComplex& d, const FieldSpec& field) {
  return with_field(field, [&](const auto& f) { return reduced_homology(d, f); });
}

bool is_pure(const SimplicialComplex& d) {
  if (d.is_void()) return true;
  int s = face_size(d.facets().front());
  for (Face f : d.facets())
    if (face_size(f) != s) return false;
  return true;
}

namespace {

bool links_vanish(const SimplicialComplex& d, const FieldSpec& field, bool include_empty) {
  return with_field(field, [&](const auto& f) {
    for (Face tau : d.faces()) {
      if (tau == 0 && !include_empty) continue;
      SimplicialComplex l = link(d, tau);
      int ld = l.dim();
      if (ld < 0) continue;
      HomologyProfile h = reduced_homology(l, f);
      for (const auto& [i, dimh] : h.dims)
        if (i < ld && dimh != 0) return false;
    }
    return true;
  });
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& d, const FieldSpec& field) {
  return is_pure(d) && links_vanish(d, field, true);
}

bool is_buchsbaum(const SimplicialComplex& d, const FieldSpec& field) {
  return is_pure(d) && links_vanish(d, field, false);
}

bool is_sequentially_cm(const SimplicialComplex& d, const FieldSpec& field) {
  for (int q = 0; q <= d.dim(); ++q)
    if (!is_cohen_macaulay(skeleton_pure(d, q), field)) return false;
  return true;
}

SimplicialComplex parse_complex(const std::string& text) {
  auto lines = content_lines(text);
  std::string value;
  if (lines.empty() || !header_value(lines[0].second, "vertices", value))
    throw InputError("complex: first line must be 'vertices: ...'");
  std::vector<std::string> names = split_names(value);
  check_names(names);
  SimplicialComplex base = SimplicialComplex::from_masks(names, {});
  std::vector<Face> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    if (line == "{}") {
      facets.push_back(0);
      continue;
    }
    std::vector<std::string> verts;
    try {
      for (const auto& tok : split_names(line))
        for (auto& v : split_word(tok, names)) verts.push_back(v);
      facets.push_back(base.face_from_names(verts));
    } catch (const InputError& e) {
      throw InputError("complex line " + std::to_string(no) + ": " + e.what());
    }
  }
  return SimplicialComplex::from_masks(names, std::move(facets));
}

SimplicialComplex read_complex_file(const std::string& path) { return parse_complex(read_file(path)); }

std::string to_text(const SimplicialComplex& d) {
  std::string out = "vertices:";
  for (const auto& v : d.vertices()) out += " " + v;
  out += "\n";
  for (Face f : d.facets()) out += d.face_name(f, " ") + "\n";
  return out;
}

template HomologyProfile reduced_homology(const SimplicialComplex&, const PrimeField&);
template HomologyProfile reduced_homology(const SimplicialComplex&, const RationalField&);

}  // namespace k2
