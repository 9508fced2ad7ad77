#pragma once

// The example corpus: a JSON list of items, each naming an input under the
// data directory, a computation, and the values it should produce.
//
//   {"id": "Ex7.1:J-betti", "criterion": 1, "source": "...", "kind": "betti",
//    "module": "examples/ex71_J.mod", "max_hom": 7, "max_deg": 6,
//    "expect": {"betti": [[0, 3, 2], [1, 5, 1]]}}
//
// An item passes when every key under "expect" matches the computed value.
// "known_failure" marks an expectation the engine is known to contradict;
// the item still runs and still reports its real outcome.

#include "k2/field.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace k2 {

struct CorpusResult {
  std::string id;
  int criterion = 0;
  std::string source;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string known_failure;
  std::string error;
  double seconds = 0;
};

nlohmann::json load_corpus(const std::string& path);

/// True when `only` is empty, equals the id, or equals the id's label with
/// its leading letters dropped and cut at ':' ("8.1" selects "L8.1:...").
bool corpus_id_matches(const std::string& id, const std::string& only);

/// Runs every selected item. Relative inputs resolve against `base_dir`, or
/// against the corpus's own "base_dir" key (itself relative to `base_dir`).
/// Errors inside an item become a failing result, not an exception.
std::vector<CorpusResult> run_corpus(const nlohmann::json& corpus, const std::string& base_dir, const FieldSpec& field,
                                     const std::string& only = "");

CorpusResult run_corpus_item(const nlohmann::json& item, const std::string& base_dir, const FieldSpec& field);

nlohmann::json to_json(const CorpusResult& r);

}  // namespace k2
