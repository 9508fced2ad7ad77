#pragma once

// Small builders shared by the engine tests.

#include "k2/module.hpp"
#include "k2/resolution.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fx {

using GF = k2::PrimeField;
using Alg = k2::GradedAlgebra<GF>;
using AlgPtr = std::shared_ptr<const Alg>;
using Mod = k2::ModulePtr<GF>;
using Res = k2::MinimalResolution<GF>;

inline const GF kF(32003);

inline std::vector<std::string> vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(1, static_cast<char>('a' + i));
  return v;
}

inline AlgPtr poly(std::size_t n, int bound) {
  return std::make_shared<const Alg>(k2::AlgebraPresentation::polynomial_ring(vars(n)), kF, bound);
}

inline AlgPtr algebra(const std::string& text, int bound) {
  return std::make_shared<const Alg>(k2::parse_algebra(text), kF, bound);
}

inline std::vector<k2::Polynomial> polys(const Alg& a, const std::vector<std::string>& gens) {
  std::vector<k2::Polynomial> out;
  for (const auto& g : gens) out.push_back(k2::parse_polynomial(g, a.presentation().vars, a.commutative()));
  return out;
}

inline Mod ideal(const AlgPtr& a, const std::vector<std::string>& gens, int bound, bool two_sided = false) {
  return k2::make_ideal<GF>(a, polys(*a, gens), two_sided, bound);
}

inline Mod quotient_ring(const AlgPtr& a, const std::vector<std::string>& gens, int bound) {
  return k2::make_quotient<GF>(k2::make_regular<GF>(a, bound), ideal(a, gens, bound));
}

inline std::vector<std::size_t> dims(const Mod& m) {
  std::vector<std::size_t> d;
  for (int t = 0; t <= m->bound(); ++t) d.push_back(m->dim(t));
  return d;
}

}  // namespace fx
