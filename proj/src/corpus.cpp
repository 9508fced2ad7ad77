#include "k2/corpus.hpp"

#include "k2/koszul.hpp"
#include "k2/module_spec.hpp"
#include "k2/stanley_reisner.hpp"
#include "k2/text.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

namespace k2 {

using nlohmann::json;

json load_corpus(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("items") || !j["items"].is_array())
    throw InputError(path + ": expected an object with an \"items\" array");
  return j;
}

bool corpus_id_matches(const std::string& id, const std::string& only) {
  if (only.empty() || id == only) return true;
  std::string label = id.substr(0, id.find(':'));
  std::size_t k = 0;
  while (k < label.size() && std::isalpha(static_cast<unsigned char>(label[k]))) ++k;
  return label.substr(k) == only;
}

namespace {

json betti_json(const BettiTable& t) {
  json out = json::array();
  for (const auto& [ij, v] : t.entries())
    if (v) out.push_back({ij.first, ij.second, v});
  return out;
}

json verdict_json(const Verdict& v) {
  return {{"outcome", outcome_name(v.outcome)}, {"conclusive", v.conclusive}, {"step", v.step},
          {"degree", v.degree},                 {"witness", v.witness},       {"summary", v.outcome_string()}};
}

json series_json(const TruncatedSeries& s) { return s.coeffs(); }

int get_int(const json& item, const char* key, int fallback) {
  return item.contains(key) ? item[key].get<int>() : fallback;
}

std::optional<Bounds> item_bounds(const json& item) {
  if (item.contains("max_hom") && item.contains("max_deg"))
    return Bounds{item["max_hom"].get<int>(), item["max_deg"].get<int>()};
  return std::nullopt;
}

std::string input_path(const json& item, const char* key, const std::string& base) {
  if (!item.contains(key)) throw InputError(std::string("corpus item needs \"") + key + "\"");
  return join_path(base, item[key].get<std::string>());
}

template <class F>
std::shared_ptr<const GradedAlgebra<F>> load_algebra(const std::string& path, const F& f, int bound) {
  return std::make_shared<const GradedAlgebra<F>>(read_algebra_file(path), f, bound);
}

template <class F>
std::pair<std::shared_ptr<const GradedAlgebra<F>>, Bounds> algebra_with_bounds(const json& item, const std::string& base,
                                                                               const F& f) {
  const auto path = input_path(item, "algebra", base);
  auto b = item_bounds(item);
  if (!b) b = default_algebra_bounds(*load_algebra(path, f, 1));
  return {load_algebra(path, f, b->max_deg), *b};
}

template <class F>
RealizedModule<F> module_of(const json& item, const std::string& base, const F& f, bool components) {
  auto spec = read_module_spec_file(input_path(item, "module", base));
  const int bound = get_int(item, "realize", get_int(item, "max_deg", 8));
  return realize_for_checks(spec, f, bound, components);
}

template <class F>
Bounds module_bounds(const json& item, const ModuleRealization<F>& m) {
  auto b = item_bounds(item);
  return b ? *b : default_bounds(m);
}

template <class F>
json run_verdict(const json& item, const std::string& base, const F& f) {
  const std::string check = item.at("check").get<std::string>();
  if (check == "algebra_k2" || check == "koszul") {
    auto [a, b] = algebra_with_bounds(item, base, f);
    return verdict_json(check == "koszul" ? koszul_check(a, b) : algebra_k2_check(a, b));
  }
  const bool comp = check == "componentwise_linear" || check == "strongly_k2";
  auto rm = module_of(item, base, f, comp);
  const Bounds b = module_bounds(item, *rm.module);
  if (check == "componentwise_linear") return verdict_json(componentwise_linear_check(rm.module, b));
  if (check == "strongly_k2") return verdict_json(strongly_k2_check(rm.module, b));
  if (check == "trivial_action") return verdict_json(trivial_action_check(rm.module, b));
  MinimalResolution<F> r(rm.module, b.max_hom, b.max_deg);
  if (check == "k1") return verdict_json(k1_check(r));
  if (check == "k2") return verdict_json(k2_check(r));
  if (check == "koszul_module") return verdict_json(koszul_module_check(r));
  if (check == "yoneda_d1" || check == "yoneda_d2") {
    MinimalResolution<F> kr(make_trivial<F>(rm.algebra, rm.module->bound()), std::min(2, b.max_hom), b.max_deg);
    return verdict_json(yoneda_generation_check(kr, r, check == "yoneda_d1" ? 1 : 2));
  }
  throw InputError("corpus: unknown check '" + check + "'");
}

template <class F>
json resolution_steps(const MinimalResolution<F>& r, int first, int count) {
  json steps = json::array();
  for (int s = first; s < first + count; ++s) {
    std::vector<int> d;
    if (s <= r.max_hom())
      for (std::size_t g = 0; g < r.num_generators(s); ++g) d.push_back(r.degree(s, g));
    std::sort(d.begin(), d.end());
    steps.push_back(d);
  }
  return steps;
}

Polynomial monomial_of(Face f, std::size_t n) {
  Polynomial p;
  Letters w;
  for (std::size_t v = 0; v < n; ++v)
    if (f >> v & 1) w.push_back(static_cast<int>(v));
  p.terms.push_back({mpq_class(1), w});
  return p;
}

template <class F>
json run_hochster(const json& item, const std::string& base, const F& f, const FieldSpec& spec) {
  const auto d = read_complex_file(input_path(item, "complex", base));
  const HochsterBetti h(d, spec);
  json actual{{"betti", betti_json(h.table())}};
  if (item.value("compare_resolution", false)) {
    const int n = static_cast<int>(d.n());
    auto s = std::make_shared<const GradedAlgebra<F>>(AlgebraPresentation::polynomial_ring(d.vertices()), f, n);
    std::vector<Polynomial> gens;
    for (Face g : minimal_nonfaces(d)) gens.push_back(monomial_of(g, d.n()));
    auto q = make_quotient<F>(make_regular<F>(s, n), make_ideal<F>(s, gens, false, n));
    MinimalResolution<F> r(q, n, n);
    actual["resolution_agrees"] = r.betti() == h.table();
  }
  return actual;
}

json run_complex(const json& item, const std::string& base, const FieldSpec& spec) {
  auto d = read_complex_file(input_path(item, "complex", base));
  if (item.value("dual", false)) d = alexander_dual(d);
  json hom = json::object();
  for (const auto& [i, v] : reduced_homology(d, spec).dims)
    if (v) hom[std::to_string(i)] = v;
  return {{"pure", is_pure(d)},
          {"cohen_macaulay", is_cohen_macaulay(d, spec)},
          {"sequentially_cm", is_sequentially_cm(d, spec)},
          {"buchsbaum", is_buchsbaum(d, spec)},
          {"homology", hom}};
}

template <class F>
json run_series(const json& item, const std::string& base, const F& f) {
  const int bound = item.at("bound").get<int>();
  if (item.contains("ideal")) {
    const auto i = read_monomial_ideal_file(input_path(item, "ideal", base));
    const auto h = hilbert_series_quotient(i, bound);
    return {{"hilbert_quotient", series_json(h)},
            {"ideal_dims", series_json(hilbert_series_ideal(i, bound))},
            {"inverse", series_json(series_inverse(h))}};
  }
  auto a = load_algebra(input_path(item, "algebra", base), f, bound);
  const auto h = a->hilbert_series();
  auto inv = series_inverse(h).coeffs();
  const auto want = item["expect"].value("inverse_prefix", json::array()).size();
  if (want && want < inv.size()) inv.resize(want);
  return {{"hilbert", series_json(h)}, {"inverse_prefix", inv}};
}

template <class F>
json run_euler(const json& item, const std::string& base, const F& f) {
  auto [a, b] = algebra_with_bounds(item, base, f);
  const auto e = ext_of_quotient_algebra(a, b.max_hom, b.max_deg);
  const auto inv = series_inverse(a->hilbert_series());
  // H_A(t) * sum (-1)^i beta_{i,j} t^j = 1, read in degrees j <= N where
  // every contributing step is present.
  json bad = json::array();
  for (int j = 0; j <= std::min(b.max_hom, b.max_deg); ++j) {
    std::int64_t alt = 0;
    for (int i = 0; i <= j; ++i) alt += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(e.at(i, j));
    if (alt != inv[j]) bad.push_back(j);
  }
  return {{"holds", bad.empty()}, {"mismatched_degrees", bad}};
}

template <class F>
json run_kind(const json& item, const std::string& base, const F& f, const FieldSpec& spec) {
  const std::string kind = item.at("kind").get<std::string>();
  if (kind == "verdict") return run_verdict(item, base, f);
  if (kind == "betti") {
    auto rm = module_of(item, base, f, false);
    const Bounds b = module_bounds(item, *rm.module);
    MinimalResolution<F> r(rm.module, b.max_hom, b.max_deg);
    return {{"betti", betti_json(r.betti())}};
  }
  if (kind == "generators") {
    auto rm = module_of(item, base, f, false);
    const Bounds b = module_bounds(item, *rm.module);
    MinimalResolution<F> r(rm.module, b.max_hom, b.max_deg);
    const auto& steps = item["expect"].at("steps");
    return {{"steps", resolution_steps(r, item["expect"].value("first_step", 0), static_cast<int>(steps.size()))},
            {"first_step", item["expect"].value("first_step", 0)}};
  }
  if (kind == "row") {
    auto rm = module_of(item, base, f, false);
    const Bounds b = module_bounds(item, *rm.module);
    MinimalResolution<F> r(rm.module, b.max_hom, b.max_deg);
    const int s = item.at("step").get<int>();
    json rows = json::array();
    if (s <= r.max_hom())
      for (std::size_t g = 0; g < r.num_generators(s); ++g) rows.push_back(r.generator_string(s, g));
    return {{"rows", rows}};
  }
  if (kind == "dims") {
    const int bound = item.at("bound").get<int>();
    json d = json::array();
    if (item.contains("algebra")) {
      auto a = load_algebra(input_path(item, "algebra", base), f, bound);
      for (int t = 0; t <= bound; ++t) d.push_back(a->dim(t));
    } else {
      auto rm = realize(read_module_spec_file(input_path(item, "module", base)), f, bound);
      for (int t = 0; t <= bound; ++t) d.push_back(rm.module->dim(t));
    }
    return {{"dims", d}};
  }
  if (kind == "series") return run_series(item, base, f);
  if (kind == "froberg") {
    auto o = froberg_obstruction(TruncatedSeries(item.at("series").get<std::vector<std::int64_t>>()));
    return {{"degree", o ? json(*o) : json(nullptr)}};
  }
  if (kind == "ext") {
    auto [a, b] = algebra_with_bounds(item, base, f);
    const auto e = ext_of_quotient_algebra(a, b.max_hom, b.max_deg);
    json entries = json::array();
    for (const auto& x : item["expect"].at("entries")) {
      const int i = x[0].get<int>(), j = x[1].get<int>();
      entries.push_back({i, j, e.at(i, j)});
    }
    return {{"entries", entries}};
  }
  if (kind == "euler") return run_euler(item, base, f);
  if (kind == "hochster") return run_hochster(item, base, f, spec);
  if (kind == "complex") return run_complex(item, base, spec);
  throw InputError("corpus: unknown kind '" + kind + "'");
}

bool matches(const json& item, const json& expect, const json& actual) {
  if (item.value("compare_resolution", false) && !actual.value("resolution_agrees", false)) return false;
  for (const auto& [key, want] : expect.items()) {
    if (key == "any_of") {
      const auto& rows = actual.at("rows");
      if (std::none_of(want.begin(), want.end(),
                       [&](const json& w) { return std::find(rows.begin(), rows.end(), w) != rows.end(); }))
        return false;
      continue;
    }
    if (!actual.contains(key) || actual[key] != want) return false;
  }
  return true;
}

}  // namespace

CorpusResult run_corpus_item(const json& item, const std::string& base_dir, const FieldSpec& field) {
  CorpusResult r;
  r.id = item.value("id", "");
  r.criterion = item.value("criterion", 0);
  r.source = item.value("source", "");
  r.known_failure = item.value("known_failure", "");
  const json expect = item.value("expect", json::object());
  r.expected = expect.dump();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    json actual = with_field(field, [&](const auto& f) { return run_kind(item, base_dir, f, field); });
    r.pass = matches(item, expect, actual);
    r.actual = actual.dump();
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = e.what();
    r.actual = "error: " + r.error;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CorpusResult> run_corpus(const json& corpus, const std::string& base_dir, const FieldSpec& field,
                                     const std::string& only) {
  const std::string base = corpus.contains("base_dir") ? join_path(base_dir, corpus["base_dir"].get<std::string>()) : base_dir;
  std::vector<CorpusResult> out;
  for (const auto& item : corpus.at("items"))
    if (corpus_id_matches(item.value("id", ""), only)) out.push_back(run_corpus_item(item, base, field));
  return out;
}

json to_json(const CorpusResult& r) {
  json j{{"id", r.id},
         {"criterion", r.criterion},
         {"source", r.source},
         {"pass", r.pass},
         {"expected", json::parse(r.expected)},
         {"seconds", r.seconds}};
  if (r.error.empty())
    j["actual"] = json::parse(r.actual);
  else
    j["error"] = r.error;
  if (!r.known_failure.empty()) j["known_failure"] = r.known_failure;
  return j;
}

}  // namespace k2
