// k2: resolutions, K1/K2 verdicts and Stanley-Reisner analysis from the
// command line. Every report is built as JSON first; the text form is
// rendered from that JSON so both carry the same numbers.

#include "k2/corpus.hpp"
#include "k2/koszul.hpp"
#include "k2/module_spec.hpp"
#include "k2/stanley_reisner.hpp"
#include "k2/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#ifndef K2_DATA_DIR
#define K2_DATA_DIR "data"
#endif

using nlohmann::json;
using namespace k2;

namespace {

enum Exit { ok = 0, other = 1, input = 2, bound = 3, mismatch = 4 };

struct Flags {
  std::string field = "gf:32003";
  std::string format = "text";
  int max_hom = -1;
  int max_deg = -1;
};

std::optional<Bounds> flag_bounds(const Flags& fl, std::optional<Bounds> fallback) {
  if (fl.max_hom < 0 && fl.max_deg < 0) return fallback;
  Bounds b = fallback ? *fallback : Bounds{5, 8};
  if (fl.max_hom >= 0) b.max_hom = fl.max_hom;
  if (fl.max_deg >= 0) b.max_deg = fl.max_deg;
  return b;
}

json verdict_json(const Verdict& v) {
  json j{{"check", v.check},
         {"outcome", outcome_name(v.outcome)},
         {"summary", v.outcome_string()},
         {"conclusive", v.conclusive},
         {"step", v.step},
         {"degree", v.degree},
         {"witness", v.witness},
         {"bounds", {{"max_hom", v.max_hom}, {"max_deg", v.max_deg}}}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json betti_json(const BettiTable& t) {
  json out = json::array();
  for (const auto& [ij, v] : t.entries())
    if (v) out.push_back({ij.first, ij.second, v});
  return out;
}

BettiTable betti_from_json(const json& entries) {
  BettiTable t;
  for (const auto& e : entries) t.set(e[0].get<int>(), e[1].get<int>(), e[2].get<std::size_t>());
  return t;
}

json facets_json(const SimplicialComplex& d) {
  json f = json::array();
  for (Face x : d.facets()) f.push_back(x ? d.face_name(x, " ") : "");
  return f;
}

json homology_json(const HomologyProfile& h) {
  json j = json::object();
  for (const auto& [i, v] : h.dims)
    if (v) j[std::to_string(i)] = v;
  return j;
}

json properties_json(const SimplicialComplex& d, const FieldSpec& fs) {
  return {{"pure", is_pure(d)},
          {"cohen_macaulay", is_cohen_macaulay(d, fs)},
          {"sequentially_cm", is_sequentially_cm(d, fs)},
          {"buchsbaum", is_buchsbaum(d, fs)},
          {"homology", homology_json(reduced_homology(d, fs))}};
}

// ---- resolve

template <class F>
json resolve_report(const ModuleSpec& spec, const Flags& fl, const F& f) {
  const int start = fl.max_deg >= 0 ? fl.max_deg : 8;
  auto rm = realize_for_checks(spec, f, start, false);
  Bounds b = *flag_bounds(fl, default_bounds(*rm.module));
  if (b.max_deg > rm.module->bound()) rm = realize(spec, f, b.max_deg);
  MinimalResolution<F> r(rm.module, b.max_hom, b.max_deg);

  json steps = json::array();
  for (int s = 0; s <= r.max_hom(); ++s) {
    json degs = json::array();
    for (std::size_t g = 0; g < r.num_generators(s); ++g) degs.push_back(r.degree(s, g));
    steps.push_back({{"step", s}, {"degrees", degs}});
  }
  auto len = r.length();
  json rep{{"command", "resolve"},
           {"input", {{"algebra", spec.algebra_file}, {"module", spec.text()}}},
           {"field", f.name()},
           {"bounds", {{"max_hom", b.max_hom}, {"max_deg", b.max_deg}}},
           {"realized_through", rm.module->bound()},
           {"resolution",
            {{"terminated", r.terminated()},
             {"conclusive", r.conclusive()},
             {"length", len ? json(*len) : json(nullptr)},
             {"steps", steps},
             {"betti", betti_json(r.betti())}}}};
  json verdicts = json::array();
  if (b.max_hom >= 1) {
    verdicts.push_back(verdict_json(k1_check(r)));
    verdicts.push_back(verdict_json(k2_check(r)));
  }
  rep["verdicts"] = verdicts;
  if (spec.kind == "trivial") {
    // H_A(t) * sum_{i,j} (-1)^i beta_{i,j} t^j = 1 in degrees j <= min(N, D).
    const auto inv = series_inverse(rm.algebra->hilbert_series());
    const auto bt = r.betti();
    json rows = json::array();
    bool holds = true;
    for (int j = 0; j <= std::min(b.max_hom, b.max_deg); ++j) {
      std::int64_t alt = 0;
      for (int i = 0; i <= j; ++i) alt += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(bt.at(i, j));
      rows.push_back({{"degree", j}, {"alternating_sum", alt}, {"inverse_series", inv[j]}});
      holds = holds && alt == inv[j];
    }
    rep["euler"] = {{"holds", holds}, {"degrees", rows}};
  }
  return rep;
}

std::string render_resolve(const json& rep) {
  std::ostringstream o;
  o << "module: " << rep["input"]["module"].get<std::string>() << " over "
    << rep["input"]["algebra"].get<std::string>() << "\n";
  o << "field: " << rep["field"].get<std::string>() << "\n";
  o << "bounds: N = " << rep["bounds"]["max_hom"] << ", D = " << rep["bounds"]["max_deg"]
    << " (realized through degree " << rep["realized_through"] << ")\n";
  const auto& res = rep["resolution"];
  o << "resolution: " << (res["terminated"].get<bool>() ? "terminated" : "not terminated within bounds");
  if (!res["length"].is_null()) o << ", length " << res["length"];
  o << (res["conclusive"].get<bool>() ? ", conclusive" : ", bounded") << "\n";
  for (const auto& s : res["steps"]) {
    o << "  step " << s["step"] << ":";
    if (s["degrees"].empty()) o << " -";
    for (const auto& d : s["degrees"]) o << " " << d;
    o << "\n";
  }
  o << "betti:\n" << betti_from_json(res["betti"]).to_text();
  for (const auto& v : rep["verdicts"]) {
    o << v["check"].get<std::string>() << ": " << v["summary"].get<std::string>()
      << (v["conclusive"].get<bool>() ? " [conclusive]" : " [bounded]") << "\n";
    if (!v["witness"].get<std::string>().empty()) o << "  witness: " << v["witness"].get<std::string>() << "\n";
    if (v.contains("note")) o << "  note: " << v["note"].get<std::string>() << "\n";
  }
  if (rep.contains("euler")) {
    o << "euler/hilbert identity: " << (rep["euler"]["holds"].get<bool>() ? "holds" : "VIOLATED") << "\n";
    for (const auto& r : rep["euler"]["degrees"])
      o << "  j = " << r["degree"] << ": sum (-1)^i beta_{i,j} = " << r["alternating_sum"] << ", [t^j] 1/H = "
        << r["inverse_series"] << "\n";
  }
  return o.str();
}

// ---- analyze

Polynomial monomial_of(Face f, std::size_t n) {
  Letters w;
  for (std::size_t v = 0; v < n; ++v)
    if (f >> v & 1) w.push_back(static_cast<int>(v));
  Polynomial p;
  p.terms.push_back({mpq_class(1), w});
  return p;
}

template <class F>
json analyze_report(const std::string& path, const Flags& fl, const F& f, const FieldSpec& fs) {
  const auto d = read_complex_file(path);
  const auto dual = alexander_dual(d);
  const auto ideal = ideal_from_complex(d);
  const auto nonfaces = minimal_nonfaces(d);
  const std::size_t n = d.n();

  json rep{{"command", "analyze"}, {"input", path}, {"field", f.name()}};
  rep["complex"] = {{"vertices", d.vertices()}, {"facets", facets_json(d)}, {"dim", d.dim()}, {"f_vector", d.f_vector()}};
  rep["dual"] = {{"facets", facets_json(dual)}, {"dim", dual.dim()}};
  rep["properties"] = {{"complex", properties_json(d, fs)}, {"dual", properties_json(dual, fs)}};

  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(ideal.monomial_string(g));
  rep["ideal"] = {{"generators", gens}, {"lcm_degree", ideal.lcm_degree()}};
  const auto degs = ideal.generator_degrees();
  const bool equigenerated = !degs.empty() && std::all_of(degs.begin(), degs.end(), [&](int x) { return x == degs[0]; });
  rep["ideal"]["linear_resolution"] = equigenerated ? json(has_linear_resolution(ideal, fs)) : json(nullptr);

  rep["hochster"] = betti_json(HochsterBetti(d, fs).table());

  // I_Delta as a module over S.
  auto s_pres = AlgebraPresentation::polynomial_ring(d.vertices());
  std::vector<Polynomial> polys;
  for (Face g : nonfaces) polys.push_back(monomial_of(g, n));
  auto build_ideal = [&](int bound) {
    auto s = std::make_shared<const GradedAlgebra<F>>(s_pres, f, bound);
    return make_ideal<F>(s, polys, false, bound);
  };
  const int lcm = std::max(ideal.lcm_degree(), 1);
  auto im = build_ideal(lcm);
  const int need = std::min(realization_needed(im, true), kRealizationCap);
  if (need > lcm) im = build_ideal(need);
  const Bounds ib = *flag_bounds(Flags{}, default_bounds(*im));
  MinimalResolution<F> ir(im, ib.max_hom, ib.max_deg);
  const Verdict k2i = k2_check(ir);
  const Verdict cli = componentwise_linear_check(im, ib);

  // k[Delta] as an algebra.
  AlgebraPresentation q_pres = s_pres;
  q_pres.relations = polys;
  auto a1 = std::make_shared<const GradedAlgebra<F>>(q_pres, f, 1);
  const Bounds ab = *flag_bounds(fl, default_algebra_bounds(*a1));
  auto a = std::make_shared<const GradedAlgebra<F>>(q_pres, f, ab.max_deg);
  const Verdict k2a = algebra_k2_check(a, ab);
  rep["hilbert_series"] = hilbert_series_face_ring(d, ab.max_deg).coeffs();
  rep["verdicts"] = {verdict_json(k2i), verdict_json(cli), verdict_json(k2a)};

  const bool dual_cm = rep["properties"]["dual"]["cohen_macaulay"].get<bool>();
  const bool dual_scm = rep["properties"]["dual"]["sequentially_cm"].get<bool>();
  json cons = json::array();
  auto add = [&](const std::string& name, bool applies, bool holds) {
    cons.push_back({{"statement", name}, {"applies", applies}, {"holds", !applies || holds}});
  };
  add("I K2 over S => k[Delta] K2 (no failure found)", k2i.holds() && k2i.conclusive, !k2a.fails());
  if (equigenerated)
    add("Delta* CM <=> I has a linear resolution", true,
        dual_cm == rep["ideal"]["linear_resolution"].get<bool>());
  else
    add("Delta* CM => I equigenerated", dual_cm, false);
  add("Delta* sequentially CM <=> I componentwise linear", cli.conclusive || cli.fails(),
      dual_scm == cli.holds());
  add("Delta* sequentially CM => k[Delta] K2 (no failure found)", dual_scm, !k2a.fails());
  bool all = true;
  for (const auto& c : cons) all = all && c["holds"].get<bool>();
  rep["consistency"] = cons;
  rep["consistent"] = all;
  return rep;
}

std::string yes_no(const json& b) { return b.is_null() ? "n/a" : b.get<bool>() ? "yes" : "no"; }

std::string render_properties(const json& p) {
  std::ostringstream o;
  o << "pure " << yes_no(p["pure"]) << ", CM " << yes_no(p["cohen_macaulay"]) << ", sequentially CM "
    << yes_no(p["sequentially_cm"]) << ", Buchsbaum " << yes_no(p["buchsbaum"]) << ", reduced homology";
  if (p["homology"].empty()) o << " 0";
  for (const auto& [i, v] : p["homology"].items()) o << " H~" << i << "=" << v;
  return o.str();
}

std::string render_analyze(const json& rep) {
  std::ostringstream o;
  o << "complex: " << rep["input"].get<std::string>() << "\n";
  o << "field: " << rep["field"].get<std::string>() << "\n";
  o << "Delta: dim " << rep["complex"]["dim"] << ", facets";
  for (const auto& f : rep["complex"]["facets"]) o << " {" << f.get<std::string>() << "}";
  o << "\n  f-vector:";
  for (const auto& x : rep["complex"]["f_vector"]) o << " " << x;
  o << "\n  " << render_properties(rep["properties"]["complex"]) << "\n";
  o << "Delta*: dim " << rep["dual"]["dim"] << ", facets";
  for (const auto& f : rep["dual"]["facets"]) o << " {" << f.get<std::string>() << "}";
  o << "\n  " << render_properties(rep["properties"]["dual"]) << "\n";
  o << "I_Delta:";
  for (const auto& g : rep["ideal"]["generators"]) o << " " << g.get<std::string>();
  o << "\n  lcm degree " << rep["ideal"]["lcm_degree"] << ", linear resolution "
    << yes_no(rep["ideal"]["linear_resolution"]) << "\n";
  o << "Betti numbers of k[Delta] (Hochster):\n" << betti_from_json(rep["hochster"]).to_text();
  o << "Hilbert series:";
  for (const auto& c : rep["hilbert_series"]) o << " " << c;
  o << "\n";
  for (const auto& v : rep["verdicts"]) {
    o << v["check"].get<std::string>() << ": " << v["summary"].get<std::string>()
      << (v["conclusive"].get<bool>() ? " [conclusive]" : " [bounded]") << "\n";
    if (!v["witness"].get<std::string>().empty()) o << "  witness: " << v["witness"].get<std::string>() << "\n";
  }
  o << "consistency:\n";
  for (const auto& c : rep["consistency"])
    o << "  " << (c["applies"].get<bool>() ? (c["holds"].get<bool>() ? "ok       " : "VIOLATED ") : "n/a      ")
      << c["statement"].get<std::string>() << "\n";
  return o.str();
}

// ---- corpus

json corpus_report(const std::string& path, const std::string& only, const FieldSpec& fs) {
  const auto corpus = load_corpus(path);
  const auto results = run_corpus(corpus, directory_of(path), fs, only);
  json items = json::array();
  int passed = 0;
  for (const auto& r : results) {
    items.push_back(to_json(r));
    passed += r.pass;
  }
  return {{"command", "corpus"},
          {"corpus", path},
          {"field", fs.name()},
          {"items", items},
          {"passed", passed},
          {"failed", static_cast<int>(results.size()) - passed}};
}

std::string render_corpus(const json& rep) {
  std::ostringstream o;
  for (const auto& it : rep["items"]) {
    o << (it["pass"].get<bool>() ? "PASS " : "FAIL ") << it["id"].get<std::string>() << "  ("
      << it["source"].get<std::string>() << ", criterion " << it["criterion"] << ")";
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %.2fs", it["seconds"].get<double>());
    o << buf << "\n";
    o << "  expected: " << it["expected"].dump() << "\n";
    if (it.contains("error"))
      o << "  error: " << it["error"].get<std::string>() << "\n";
    else
      o << "  actual:   " << it["actual"].dump() << "\n";
    if (it.contains("known_failure")) o << "  known failure: " << it["known_failure"].get<std::string>() << "\n";
  }
  o << rep["passed"] << " passed, " << rep["failed"] << " failed\n";
  return o.str();
}

void emit(const json& rep, const Flags& fl, std::string (*render)(const json&)) {
  if (fl.format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << render(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k2: minimal resolutions, K2 verdicts and Stanley-Reisner analysis"};
  app.require_subcommand(1);
  Flags fl;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--field", fl.field, "q or gf:<p>")->capture_default_str();
    c->add_option("--format", fl.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--max-hom", fl.max_hom, "homological bound N")->check(CLI::NonNegativeNumber);
    c->add_option("--max-deg", fl.max_deg, "internal degree bound D")->check(CLI::NonNegativeNumber);
  };

  std::string complex_file;
  auto* analyze = app.add_subcommand("analyze", "Stanley-Reisner pipeline for a simplicial complex");
  analyze->add_option("complex", complex_file, "complex file")->required();
  add_common(analyze);
  add_bounds(analyze);

  std::string spec_file, algebra_file, module_text;
  auto* resolve = app.add_subcommand("resolve", "minimal resolution of a module");
  resolve->add_option("spec", spec_file, "module spec file");
  resolve->add_option("--algebra", algebra_file, "algebra file");
  resolve->add_option("--module", module_text, "trivial | regular | ideal:<f> | quotient:<f>,<f> | component:<i>,<j>,<f>");
  add_common(resolve);
  add_bounds(resolve);

  std::string corpus_file = std::string(K2_DATA_DIR) + "/corpus.json", only;
  auto* corpus = app.add_subcommand("corpus", "run the example corpus");
  corpus->add_option("--corpus", corpus_file, "corpus file")->capture_default_str();
  corpus->add_option("--only", only, "item id or label, e.g. 8.1");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Exit::ok : Exit::input;
  }

  try {
    const FieldSpec fs = FieldSpec::parse(fl.field);
    if (*analyze) {
      json rep = with_field(fs, [&](const auto& f) { return analyze_report(complex_file, fl, f, fs); });
      emit(rep, fl, render_analyze);
      return rep["consistent"].get<bool>() ? Exit::ok : Exit::mismatch;
    }
    if (*resolve) {
      ModuleSpec spec;
      if (!spec_file.empty()) {
        if (!algebra_file.empty() || !module_text.empty())
          throw InputError("give either a spec file or --algebra/--module, not both");
        spec = read_module_spec_file(spec_file);
      } else {
        if (algebra_file.empty() || module_text.empty()) throw InputError("resolve needs a spec file or --algebra and --module");
        spec = module_spec_from_flags(algebra_file, module_text, ".");
      }
      json rep = with_field(fs, [&](const auto& f) { return resolve_report(spec, fl, f); });
      emit(rep, fl, render_resolve);
      return Exit::ok;
    }
    json rep = corpus_report(corpus_file, only, fs);
    if (rep["items"].empty()) throw InputError("no corpus item matches '" + only + "'");
    emit(rep, fl, render_corpus);
    return rep["failed"].get<int>() == 0 ? Exit::ok : Exit::mismatch;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return Exit::input;
  } catch (const BoundError& e) {
    std::cerr << "bound error: " << e.what() << "\n"
              << "raise --max-deg/--max-hom, or lower them if the expansion is too large\n";
    return Exit::bound;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return Exit::input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::other;
  }
}
