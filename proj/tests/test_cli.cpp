#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using nlohmann::json;

namespace {

const std::string kBin = K2_BIN;
const std::string kData = K2_DATA_DIR;
const std::string kEx = kData + "/examples/";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = kBin + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expect_code = 0) {
  auto r = run(args + " --format json");
  CHECK(r.code == expect_code);
  return json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "k2_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

/// Betti grid from the text rendering: header "i\j 0 1 ...", rows "i v v ...".
std::map<std::pair<int, int>, long> grid_from_text(const std::string& text) {
  std::map<std::pair<int, int>, long> g;
  std::istringstream in(text);
  std::string line;
  std::vector<int> cols;
  bool inside = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "i\\j") {
      inside = true;
      int c;
      while (ls >> c) cols.push_back(c);
      continue;
    }
    if (!inside) continue;
    if (first.empty() || !std::isdigit(static_cast<unsigned char>(first[0]))) break;
    const int i = std::stoi(first);
    std::string cell;
    for (int c : cols) {
      ls >> cell;
      if (cell != ".") g[{i, c}] = std::stol(cell);
    }
  }
  return g;
}

std::map<std::pair<int, int>, long> grid_from_json(const json& entries) {
  std::map<std::pair<int, int>, long> g;
  for (const auto& e : entries) g[{e[0].get<int>(), e[1].get<int>()}] = e[2].get<long>();
  return g;
}

std::set<std::string> failing(const json& rep) {
  std::set<std::string> f;
  for (const auto& it : rep["items"])
    if (!it["pass"].get<bool>()) f.insert(it["id"].get<std::string>());
  return f;
}

}  // namespace

TEST_CASE("resolve the trivial module of C through (5, 5)") {
  const std::string args = "resolve --algebra " + kEx + "C.alg --module trivial --max-hom 5 --max-deg 5";
  auto rep = run_json(args);
  auto g = grid_from_json(rep["resolution"]["betti"]);
  CHECK(g[{3, 5}] == 1);
  CHECK(g[{4, 5}] == 20);
  CHECK(g[{5, 5}] == 1);
  CHECK(g[{2, 2}] == 10);
  CHECK(rep["euler"]["holds"].get<bool>());

  auto text = run(args);
  CHECK(text.code == 0);
  CHECK(grid_from_text(text.out) == g);
  for (const auto& v : rep["verdicts"]) CHECK(text.out.find(v["summary"].get<std::string>()) != std::string::npos);
}

TEST_CASE("resolve a spec file: <abc, cde> over k[a..e]") {
  auto rep = run_json("resolve " + kEx + "ex71_J.mod");
  CHECK(rep["resolution"]["betti"] == json::parse("[[0,3,2],[1,5,1]]"));
  CHECK(rep["resolution"]["conclusive"].get<bool>());
  auto flags = run_json("resolve --algebra " + kEx + "S5.alg --module ideal:" + kEx + "J.ideal");
  CHECK(flags["resolution"]["betti"] == rep["resolution"]["betti"]);
}

TEST_CASE("rationals and the prime field agree on C") {
  const std::string args = "resolve --algebra " + kEx + "C.alg --module trivial --max-hom 4 --max-deg 5";
  auto q = run_json(args + " --field q");
  auto p = run_json(args + " --field gf:32003");
  CHECK(q["field"] != p["field"]);
  CHECK(q["resolution"]["betti"] == p["resolution"]["betti"]);
}

TEST_CASE("zero module gives an empty table") {
  const auto f = scratch("zero.ideal");
  std::ofstream(f) << "vars: a b\n";
  const std::string args = "resolve --algebra " + kEx + "S5.alg --module ideal:" + f.string();
  auto rep = run_json(args);
  CHECK(rep["resolution"]["betti"].empty());
  auto text = run(args);
  CHECK(text.out.find("(empty)") != std::string::npos);
}

TEST_CASE("analyze: the path complexes and the hollow triangle") {
  auto d7 = run_json("analyze " + kEx + "delta7.complex");
  CHECK_FALSE(d7["properties"]["dual"]["sequentially_cm"].get<bool>());
  CHECK_FALSE(d7["properties"]["dual"]["buchsbaum"].get<bool>());
  CHECK(d7["verdicts"][0]["check"] == "k2");
  CHECK(d7["verdicts"][0]["outcome"] == "fails");
  CHECK(d7["verdicts"][2]["check"] == "algebra_k2");
  CHECK(d7["verdicts"][2]["outcome"] != "fails");
  CHECK(d7["hochster"] == json::parse("[[0,0,1],[1,3,5],[2,4,4],[2,6,1],[3,7,1]]"));
  CHECK(d7["consistent"].get<bool>());

  auto e71 = run_json("analyze " + kEx + "ex71.complex");
  CHECK(e71["properties"]["dual"]["sequentially_cm"].get<bool>());
  CHECK(e71["verdicts"][0]["outcome"] == "holds");
  CHECK(e71["verdicts"][0]["conclusive"].get<bool>());

  auto ht = run_json("analyze " + kEx + "hollow_triangle.complex");
  CHECK(ht["properties"]["dual"]["cohen_macaulay"].get<bool>());
  CHECK(ht["ideal"]["linear_resolution"].get<bool>());
  for (const auto& v : ht["verdicts"]) CHECK(v["outcome"] == "holds");

  auto text = run("analyze " + kEx + "delta7.complex");
  CHECK(text.code == 0);
  CHECK(grid_from_text(text.out) == grid_from_json(d7["hochster"]));
}

TEST_CASE("exit codes") {
  CHECK(run("resolve --algebra " + kEx + "missing.alg --module trivial").code == 2);
  CHECK(run("resolve --algebra " + kEx + "C.alg --module bogus").code == 2);
  CHECK(run("resolve --algebra " + kEx + "C.alg --module trivial --field gf:abc").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("resolve --algebra " + kEx + "S6.alg --module trivial --max-deg 40").code == 3);
  CHECK(run("corpus --only 8.1").code == 0);
  CHECK(run("corpus --only no-such-item").code == 2);
  CHECK(run("resolve --help").code == 0);
}

TEST_CASE("corpus filter and perturbation") {
  auto only = run_json("corpus --only 8.1");
  REQUIRE(only["items"].size() == 1);
  CHECK(only["items"][0]["id"] == "L8.1");
  CHECK(only["items"][0]["pass"].get<bool>());
  CHECK(run_json("corpus --only 7.1")["items"].size() == 6);

  json corpus = json::parse(std::ifstream(kData + "/corpus.json"));
  const auto base = run_json("corpus", 4);
  // Every failure of the shipped corpus is a documented one.
  for (const auto& it : base["items"])
    if (!it["pass"].get<bool>()) CHECK(it.contains("known_failure"));

  for (auto& item : corpus["items"])
    if (item["id"] == "L8.1") item["expect"]["betti"][1][2] = 6;
  corpus["base_dir"] = kData;
  const auto f = scratch("perturbed.json");
  std::ofstream(f) << corpus.dump();
  const auto pert = run_json("corpus --corpus " + f.string(), 4);
  auto before = failing(base), after = failing(pert);
  std::set<std::string> added;
  for (const auto& id : after)
    if (!before.count(id)) added.insert(id);
  CHECK(added == std::set<std::string>{"L8.1"});
  for (const auto& id : before) CHECK(after.count(id));

  auto text = run("corpus --corpus " + f.string() + " --only 8.1");
  CHECK(text.code == 4);
  CHECK(text.out.find("FAIL L8.1") != std::string::npos);
  CHECK(text.out.find("expected:") != std::string::npos);
}
