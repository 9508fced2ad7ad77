#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k2/stanley_reisner.hpp"
#include "oracles.hpp"

#include <functional>

using namespace k2;
using oracle::letters;
using oracle::masks;

namespace {

const FieldSpec kGF = FieldSpec::prime(32003);

MonomialIdeal ideal(std::size_t n, const std::vector<std::string>& words) {
  return MonomialIdeal::from_masks(letters(n), masks(words));
}

// Number of monomials of degree d in n variables divisible by no generator.
std::int64_t count_standard(const MonomialIdeal& I, int d) {
  std::int64_t count = 0;
  Exponents e(I.n(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == I.n()) {
      e[k] = left;
      bool inside = false;
      for (const auto& g : I.gens()) {
        bool div = true;
        for (std::size_t v = 0; v < I.n(); ++v) div = div && g[v] <= e[v];
        inside = inside || div;
      }
      if (!inside) ++count;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[k] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, d);
  return count;
}

}  // namespace

TEST_CASE("ideal and complex correspondence") {
  auto tri = SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  auto I = ideal_from_complex(tri);
  REQUIRE(I.gens().size() == 1);
  CHECK(I.gens()[0] == Exponents{1, 1, 1});

  auto d7 = oracle::complex_avoiding(7, masks({"abc", "bcd", "cde", "def", "efg"}));
  CHECK(ideal_from_complex(d7) == ideal(7, {"abc", "bcd", "cde", "def", "efg"}));

  auto two_points = complex_from_ideal(ideal(2, {"ab"}));
  CHECK(two_points.facets() == std::vector<Face>{1, 2});

  auto d71 = complex_from_ideal(ideal(6, {"abc", "cde", "ae"}));
  CHECK(d71 == oracle::complex_avoiding(6, masks({"abc", "cde", "ae"})));
  auto d72 = complex_from_ideal(ideal(6, {"abc", "def", "abef"}));
  auto sk = skeleton_pure(alexander_dual(d72), 2);
  CHECK(reduced_homology(sk, kGF).at(0) >= 1);

  CHECK_THROWS_AS(ideal_from_complex(SimplicialComplex::from_masks(letters(3), {3})), InputError);
  CHECK_THROWS_AS(MonomialIdeal(letters(2), {{1, 0}}), InputError);
  CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal(letters(2), {{2, 0}})), InputError);
}

TEST_CASE("random ideals: generators are exactly the minimal non-faces") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 5;
    auto d = oracle::complex_avoiding(n, oracle::random_generators(n, rng));
    bool all_vertices = true;
    for (std::size_t v = 0; v < n; ++v) all_vertices = all_vertices && d.contains(Face{1} << v);
    if (!all_vertices) continue;
    auto I = ideal_from_complex(d);
    auto g = I.squarefree_gens();
    for (Face s = 0; s < (Face{1} << n); ++s) {
      bool divisible = false;
      for (Face x : g) divisible = divisible || (x & s) == x;
      CHECK(divisible == !d.contains(s));
    }
    for (Face x : g) CHECK_FALSE(d.contains(x));
    CHECK(complex_from_ideal(I) == d);
  }
}

TEST_CASE("Hochster table of the seven-vertex path") {
  auto d7 = oracle::complex_avoiding(7, masks({"abc", "bcd", "cde", "def", "efg"}));
  HochsterBetti hb(d7, kGF);
  BettiTable expect;
  expect.set(0, 0, 1);
  expect.set(1, 3, 5);
  expect.set(2, 4, 4);
  expect.set(2, 6, 1);
  expect.set(3, 7, 1);
  CHECK(hb.table() == expect);

  auto tri = complex_from_ideal(ideal(3, {"abc"}));
  HochsterBetti ht(tri, kGF);
  CHECK(ht(1, 3) == 1);
  CHECK(ht.table().entries().size() == 2);

  auto full = SimplicialComplex::simplex(letters(4));
  HochsterBetti hf(full, kGF);
  CHECK(hf.table().entries().size() == 1);
  CHECK(betti_via_hochster(full, 2, 3, kGF) == 0);
}

TEST_CASE("linear and componentwise linear resolutions") {
  CHECK(has_linear_resolution(ideal(6, {"abc", "bcd", "cde", "def"}), kGF));
  CHECK_FALSE(has_linear_resolution(ideal(6, {"abc", "cde"}), kGF));
  CHECK(has_linear_resolution(ideal(3, {"abc"}), kGF));
  CHECK_THROWS_AS(has_linear_resolution(ideal(6, {"abc", "ae"}), kGF), InputError);
  CHECK(is_componentwise_linear_ideal(ideal(6, {"abc", "cde", "ae"}), kGF));
  CHECK_FALSE(is_componentwise_linear_ideal(ideal(6, {"abc", "def", "abef"}), kGF));
}

TEST_CASE("Eagon-Reiner cross-check on random equigenerated ideals") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    std::size_t n = 3 + rng() % 5;
    std::size_t deg = 2 + rng() % 2;
    std::vector<Face> gens;
    for (Face s = 0; s < (Face{1} << n); ++s)
      if (static_cast<std::size_t>(face_size(s)) == deg && rng() % 4 == 0) gens.push_back(s);
    if (gens.empty()) continue;
    // has_linear_resolution throws if the two routes disagree.
    CHECK_NOTHROW(has_linear_resolution(MonomialIdeal::from_masks(letters(n), gens), kGF));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("Hilbert series of monomial quotients") {
  auto J = ideal(5, {"abc", "cde"});
  CHECK(hilbert_series_quotient(J, 5).coeffs() == std::vector<std::int64_t>{1, 5, 15, 33, 60, 97});
  CHECK(hilbert_series_ideal(J, 5).coeffs() == std::vector<std::int64_t>{0, 0, 0, 2, 10, 29});
  auto zero = MonomialIdeal(letters(4), {});
  CHECK(hilbert_series_quotient(zero, 5).coeffs() == std::vector<std::int64_t>{1, 4, 10, 20, 35, 56});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + rng() % 5;
    auto gens = oracle::random_generators(n, rng);
    auto I = MonomialIdeal::from_masks(letters(n), gens);
    auto hs = hilbert_series_quotient(I, 6);
    CHECK(hs == hilbert_series_face_ring(complex_from_ideal(I), 6));
    for (int d = 0; d <= 6; ++d) CHECK(hs[d] == count_standard(I, d));
  }
  // A non-squarefree ideal against direct counting.
  MonomialIdeal sq(letters(3), {{2, 0, 0}, {0, 1, 1}});
  for (int d = 0; d <= 6; ++d) CHECK(hilbert_series_quotient(sq, 6)[d] == count_standard(sq, d));

  std::vector<Face> many;
  for (Face s = 0; s < (Face{1} << 8); ++s)
    if (face_size(s) == 3) many.push_back(s);
  CHECK_THROWS_AS(hilbert_series_quotient(MonomialIdeal::from_masks(letters(8), many), 5), InputError);
}

TEST_CASE("monomial ideal text format") {
  auto I = parse_monomial_ideal("vars: a b c d e\n# J\nabc\nc*d*e\n");
  CHECK(I == ideal(5, {"abc", "cde"}));
  CHECK(parse_monomial_ideal(to_text(I)) == I);
  auto sq = parse_monomial_ideal("vars: x y\nx^2\nxy\n");
  CHECK(sq.gens().size() == 2);
  CHECK_THROWS_AS(parse_monomial_ideal("vars: a b\nab + b^2\n"), InputError);
  CHECK_THROWS_AS(parse_monomial_ideal("vars: a b\naq\n"), InputError);
}
