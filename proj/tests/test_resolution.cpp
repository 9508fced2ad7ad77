#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "k2/series.hpp"
#include "k2/stanley_reisner.hpp"

using namespace k2;
using namespace fx;

namespace {

std::map<std::pair<int, int>, std::size_t> table(const Res& r) { return r.betti().entries(); }

// d_{s-1} d_s = 0 on every basis element, and no entry of a differential
// has degree 0.
void check_complex(const Res& r) {
  for (int s = 1; s <= r.max_hom(); ++s) {
    for (std::size_t g = 0; g < r.num_generators(s); ++g)
      for (std::size_t c = 0; c < r.num_generators(s - 1); ++c)
        if (r.degree(s - 1, c) == r.degree(s, g)) CHECK(r.entry(s, g, c).empty());
    for (int t = 0; t <= r.max_deg(); ++t) {
      for (std::uint32_t i = 0; i < r.free_dim(s, t); ++i) {
        auto img = r.apply(s, t, {{i, kF.one()}});
        CHECK(r.apply(s - 1, t, img).empty());
      }
    }
  }
}

}  // namespace

TEST_CASE("trivial module over polynomial rings") {
  auto s2 = poly(2, 4);
  Res r2(make_trivial<GF>(s2, 4), 3, 4);
  CHECK(table(r2) == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
  CHECK(r2.terminated());
  CHECK(r2.conclusive());
  check_complex(r2);
  auto s4 = poly(4, 5);
  Res r4(make_trivial<GF>(s4, 5), 5, 5);
  for (int i = 0; i <= 4; ++i) CHECK(r4.betti().at(i, i) == static_cast<std::size_t>(binomial(4, i)));
  CHECK(r4.length() == 4);
  // Step 1 is left multiplication by the variables.
  for (std::size_t g = 0; g < 4; ++g) CHECK(r4.generator_string(1, g) == std::string(1, static_cast<char>('a' + g)));
}

TEST_CASE("J = <abc, cde> over k[a..f]") {
  auto s = poly(6, 6);
  auto j = ideal(s, {"abc", "cde"}, 6);
  // Inclusion-exclusion: abc S + cde S, overlapping in abcde S.
  for (int t = 0; t <= 6; ++t) {
    auto c = [](int d) { return d < 0 ? 0 : binomial(d + 5, 5); };
    CHECK(j->dim(t) == static_cast<std::size_t>(2 * c(t - 3) - c(t - 5)));
  }
  Res r(j, 7, 5);
  CHECK(table(r) == std::map<std::pair<int, int>, std::size_t>{{{0, 3}, 2}, {{1, 5}, 1}});
  CHECK(r.conclusive());
  CHECK(r.generator_string(0, 0) == "abc");
  CHECK(r.generator_string(0, 1) == "cde");
  // (de, -ab) up to a scalar.
  auto row = r.generator_string(1, 0);
  CHECK((row == "(de, -ab)" || row == "(-de, ab)"));
  check_complex(r);
}

TEST_CASE("dimensions of <abc, cde> in k[a..e]") {
  auto s = poly(5, 5);
  auto j = ideal(s, {"abc", "cde"}, 5);
  CHECK(dims(j) == std::vector<std::size_t>{0, 0, 0, 2, 10, 29});
  auto c = make_quotient<GF>(make_regular<GF>(s, 5), j);
  CHECK(dims(c) == std::vector<std::size_t>{1, 5, 15, 33, 60, 97});
}

TEST_CASE("resolutions of <abc, def, abef> and a quotient") {
  auto s = poly(6, 6);
  auto i = ideal(s, {"abc", "def", "abef"}, 6);
  Res r(i, 7, 6);
  CHECK(table(r) == std::map<std::pair<int, int>, std::size_t>{{{0, 3}, 2}, {{0, 4}, 1}, {{1, 5}, 2}});
  CHECK(r.conclusive());
  check_complex(r);
  auto j = ideal(s, {"abc", "abef"}, 6);
  auto q = make_quotient<GF>(i, j);
  Res rq(q, 7, 6);
  CHECK(table(rq) == std::map<std::pair<int, int>, std::size_t>{{{0, 3}, 1}, {{1, 5}, 1}});
  CHECK(rq.generator_string(0, 0) == "def");
  CHECK(rq.generator_string(1, 0) == "ab");
  CHECK(rq.conclusive());
  CHECK_THROWS_AS(make_quotient<GF>(j, i), InputError);
  auto zero = make_quotient<GF>(i, i);
  Res rz(zero, 3, 6);
  CHECK(rz.betti().entries().empty());
  CHECK(rz.length() == -1);
}

TEST_CASE("components of <abc, cde, ae>") {
  auto s = poly(6, 7);
  auto i = ideal(s, {"abc", "cde", "ae"}, 7);
  auto c2 = make_component<GF>(i, 2, 2);
  CHECK(dims(c2) == dims(ideal(s, {"ae"}, 7)));
  for (int j = 2; j <= 5; ++j) {
    auto cj = make_component<GF>(i, j, j);
    auto cij = make_component<GF>(i, 2, j);
    for (int t = 0; t <= 7; ++t)
      for (std::uint32_t k = 0; k < cj->dim(t); ++k)
        CHECK(cij->from_root(t, cj->to_root(t, {{k, kF.one()}})).has_value());
  }
  CHECK(dims(make_component<GF>(i, 2, 7)) == dims(i));
}

TEST_CASE("Betti table of the seven-vertex path ring through the engine") {
  auto s = poly(7, 7);
  auto c = quotient_ring(s, {"abc", "bcd", "cde", "def", "efg"}, 7);
  Res r(c, 8, 7);
  CHECK(table(r) == std::map<std::pair<int, int>, std::size_t>{
                        {{0, 0}, 1}, {{1, 3}, 5}, {{2, 4}, 4}, {{2, 6}, 1}, {{3, 7}, 1}});
  CHECK(r.conclusive());
}

TEST_CASE("Hochster agreement and the ideal shift on random ideals") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + trial % 4;
    auto gens = oracle::random_generators(n, rng);
    auto mi = MonomialIdeal::from_masks(oracle::letters(n), gens);
    int lcm = mi.lcm_degree();
    auto s = poly(n, lcm);
    std::vector<std::string> words;
    for (auto g : gens) {
      std::string w;
      for (std::size_t v = 0; v < n; ++v)
        if (g >> v & 1) w += static_cast<char>('a' + v);
      words.push_back(w);
    }
    auto i = ideal(s, words, lcm);
    auto q = make_quotient<GF>(make_regular<GF>(s, lcm), i);
    Res rq(q, static_cast<int>(n) + 1, lcm);
    Res ri(i, static_cast<int>(n) + 1, lcm);
    CHECK(rq.conclusive());
    CHECK(ri.conclusive());
    HochsterBetti h(complex_from_ideal(mi), FieldSpec::prime(32003));
    CHECK(rq.betti() == h.table());
    const auto bi = ri.betti(), bq = rq.betti();
    for (const auto& [ij, v] : bi.entries()) CHECK(bq.at(ij.first + 1, ij.second) == v);
    if (trial < 6) check_complex(rq);
  }
}

TEST_CASE("resolution of k over C = k[a..e]/<abc, cde>") {
  auto s = poly(5, 5);
  auto c = algebra("vars: a b c d e\ncommutative: true\nrel: abc\nrel: cde\n", 5);
  Res r(make_trivial<GF>(c, 5), 5, 5);
  auto b = r.betti();
  CHECK(b.at(2, 2) == 10);
  CHECK(b.at(3, 5) == 1);
  CHECK(b.at(4, 5) == 20);
  CHECK(b.at(5, 5) == 1);
  CHECK(b.at(2, 3) == 2);
  CHECK_FALSE(r.terminated());
  // Euler / Hilbert identity.
  auto inv = series_inverse(c->hilbert_series());
  for (int j = 0; j <= 5; ++j) {
    std::int64_t sum = 0;
    for (int i = 0; i <= 5; ++i) sum += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(b.at(i, j));
    CHECK(sum == inv.at(j));
  }
  for (const auto& [ij, v] : b.entries()) CHECK(ij.second >= ij.first);
}

TEST_CASE("K = <efg> over B = k[a..g]/<abc,bcd,cde,def>") {
  auto b = algebra("vars: a b c d e f g\ncommutative: true\nrel: abc\nrel: bcd\nrel: cde\nrel: def\n", 6);
  auto k = ideal(b, {"efg"}, 6);
  Res r(k, 2, 6);
  CHECK(table(r) == std::map<std::pair<int, int>, std::size_t>{{{0, 3}, 1}, {{1, 4}, 1}, {{2, 6}, 3}});
  CHECK(r.generator_string(1, 0) == "d");
  std::vector<std::string> col;
  for (std::size_t g = 0; g < 3; ++g) col.push_back(r.generator_string(2, g));
  std::sort(col.begin(), col.end());
  CHECK(col == std::vector<std::string>{"bc", "ce", "ef"});
  auto c = make_quotient<GF>(make_regular<GF>(b, 6), k);
  Res rc(c, 3, 6);
  CHECK(table(rc) == std::map<std::pair<int, int>, std::size_t>{
                         {{0, 0}, 1}, {{1, 3}, 1}, {{2, 4}, 1}, {{3, 6}, 3}});
}

TEST_CASE("the left ideal A yx in k<x,y>/(x^2 - xy)") {
  auto a = algebra("vars: x y\nrel: x^2 - xy\n", 7);
  auto j = ideal(a, {"yx"}, 7, true);
  Res r(j, 3, 7);
  CHECK(table(r) == std::map<std::pair<int, int>, std::size_t>{{{0, 2}, 1}, {{0, 3}, 1}, {{1, 4}, 1}});
  CHECK(r.generator_string(0, 0) == "yx");
  CHECK(r.generator_string(0, 1) == "yx^2");
  CHECK(r.length() == 1);
  CHECK(r.conclusive());
}

TEST_CASE("rationals agree with the prime field") {
  auto sq = std::make_shared<const GradedAlgebra<RationalField>>(AlgebraPresentation::polynomial_ring(vars(6)),
                                                                  RationalField{}, 6);
  auto iq = make_ideal<RationalField>(sq, polys(*poly(6, 1), {"abc", "def", "abef"}), false, 6);
  MinimalResolution<RationalField> rq(iq, 7, 6);
  auto s = poly(6, 6);
  Res rp(ideal(s, {"abc", "def", "abef"}, 6), 7, 6);
  CHECK(rq.betti() == rp.betti());
}

TEST_CASE("bounds are enforced") {
  auto s = poly(3, 3);
  auto i = ideal(s, {"ab"}, 3);
  CHECK_THROWS_AS(Res(i, 2, 4), BoundError);
  Res r(i, 1, 3);
  CHECK_THROWS_AS(r.num_generators(2), BoundError);
  CHECK_THROWS_AS(ideal(s, {"a"}, 3), InputError);
}
