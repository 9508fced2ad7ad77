#pragma once

// Finite simplicial complexes on at most 64 named vertices, with faces stored
// as bitmasks. The void complex (no faces) and the irrelevant complex {∅}
// are different values.

#include "k2/field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace k2 {

using Face = std::uint64_t;

inline int face_size(Face f) { return __builtin_popcountll(f); }

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal sets; throws InputError on unknown names.
  static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                       const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex from_masks(std::vector<std::string> vertices, std::vector<Face> facets);
  static SimplicialComplex void_complex(std::vector<std::string> vertices);
  static SimplicialComplex irrelevant(std::vector<std::string> vertices);
  static SimplicialComplex simplex(std::vector<std::string> vertices);

  std::size_t n() const { return names_.size(); }
  const std::vector<std::string>& vertices() const { return names_; }
  Face full_mask() const { return n() == 64 ? ~Face{0} : (Face{1} << n()) - 1; }

  /// Facets sorted by bitmask.
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; the void complex reports -2.
  int dim() const;
  bool contains(Face f) const;

  /// All faces sorted by bitmask (the empty face first when present).
  std::vector<Face> faces() const;
  /// faces_of_dim(d) for -1 <= d <= dim, sorted by bitmask.
  std::vector<Face> faces_of_dim(int d) const;
  /// f_{-1}, f_0, ..., f_dim; empty for the void complex.
  std::vector<std::size_t> f_vector() const;

  std::string face_name(Face f, const std::string& sep = "") const;
  Face face_from_names(const std::vector<std::string>& names) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.names_ == b.names_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Face> facets_;
};

std::vector<Face> minimal_nonfaces(const SimplicialComplex& d);
SimplicialComplex alexander_dual(const SimplicialComplex& d);
/// Link of tau, on the vertices outside tau. Throws InputError if tau is not a face.
SimplicialComplex link(const SimplicialComplex& d, Face tau);
/// Subcomplex generated by the q-dimensional faces.
SimplicialComplex skeleton_pure(const SimplicialComplex& d, int q);

/// dim H̃_i over the field, keyed by i >= -1; zero entries omitted.
struct HomologyProfile {
  std::map<int, std::size_t> dims;
  std::size_t at(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  bool operator==(const HomologyProfile& o) const { return dims == o.dims; }
};

template <class F>
HomologyProfile reduced_homology(const SimplicialComplex& d, const F& field);
HomologyProfile reduced_homology(const SimplicialComplex& d, const FieldSpec& field);

bool is_pure(const SimplicialComplex& d);
bool is_cohen_macaulay(const SimplicialComplex& d, const FieldSpec& field);
bool is_sequentially_cm(const SimplicialComplex& d, const FieldSpec& field);
bool is_buchsbaum(const SimplicialComplex& d, const FieldSpec& field);

/// Text format: `vertices: a b c`, then one facet per line. Names may be
/// separated by spaces or commas; with single-letter names a facet may also
/// be written as one word (`abc`). `{}` denotes the empty facet.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex_file(const std::string& path);
std::string to_text(const SimplicialComplex& d);

}  // namespace k2
