#include "k2/presentation.hpp"

#include "k2/field.hpp"
#include "k2/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace k2 {

int Polynomial::degree() const {
  if (terms.empty()) return -1;
  int d = static_cast<int>(terms.front().word.size());
  for (const auto& t : terms)
    if (static_cast<int>(t.word.size()) != d) throw InputError("inhomogeneous element");
  return d;
}

void Polynomial::normalize(bool commutative) {
  std::map<Letters, mpq_class> acc;
  for (auto& t : terms) {
    if (commutative) std::sort(t.word.begin(), t.word.end());
    acc[t.word] += t.coeff;
  }
  terms.clear();
  // Length-then-lex order.
  std::vector<std::pair<Letters, mpq_class>> v(acc.begin(), acc.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  for (auto& [w, c] : v)
    if (sgn(c) != 0) terms.push_back({c, w});
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(b, pos - b);
  }
  std::string ident() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    return s.substr(b, pos - b);
  }
};

int var_index(const std::string& name, const std::vector<std::string>& vars) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw InputError("unknown variable '" + name + "'");
  return static_cast<int>(it - vars.begin());
}

bool starts_ident(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars, bool commutative) {
  Lexer lx{text};
  Polynomial p;
  bool first = true;
  while (!lx.done()) {
    mpq_class sign = 1;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw InputError("expected '+' or '-' in '" + text + "' at position " + std::to_string(lx.pos));
    }
    first = false;
    Term t{sign, {}};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      mpq_class c(mpz_class(lx.number()));
      if (lx.accept('/')) {
        std::string d = lx.number();
        if (d.empty() || mpz_class(d) == 0) throw InputError("bad denominator in '" + text + "'");
        c /= mpq_class(mpz_class(d));
      }
      t.coeff *= c;
      any = true;
      lx.accept('*');
    }
    while (starts_ident(lx.peek())) {
      std::string id = lx.ident();
      std::vector<std::string> parts = split_word(id, vars);
      long power = 1;
      if (lx.accept('^')) {
        std::string e = lx.number();
        if (e.empty()) throw InputError("missing exponent in '" + text + "'");
        power = std::stol(e);
      }
      for (std::size_t k = 0; k < parts.size(); ++k) {
        int v = var_index(parts[k], vars);
        long reps = (k + 1 == parts.size()) ? power : 1;
        for (long r = 0; r < reps; ++r) t.word.push_back(v);
      }
      any = true;
      lx.accept('*');
    }
    if (!any) throw InputError("expected a term in '" + text + "' at position " + std::to_string(lx.pos));
    p.terms.push_back(std::move(t));
  }
  p.normalize(commutative);
  return p;
}

std::string word_string(const Letters& w, const std::vector<std::string>& vars) {
  if (w.empty()) return "1";
  bool single = std::all_of(vars.begin(), vars.end(), [](const auto& v) { return v.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty() && !single) out += "*";
    out += vars[static_cast<std::size_t>(w[i])];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& t : p.terms) {
    mpq_class mag = abs(t.coeff);
    bool neg = sgn(t.coeff) < 0;
    std::string body = word_string(t.word, vars);
    if (mag != 1) body = mag.get_str() + (t.word.empty() ? "" : "*" + body);
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

AlgebraPresentation AlgebraPresentation::polynomial_ring(std::vector<std::string> vars) {
  AlgebraPresentation a;
  a.vars = std::move(vars);
  a.commutative = true;
  return a;
}

void AlgebraPresentation::validate() const {
  if (vars.empty()) throw InputError("algebra has no generators");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw InputError("duplicate generator '" + vars[i] + "'");
  for (const auto& r : relations) {
    if (r.is_zero()) throw InputError("zero relation");
    int d = r.degree();
    if (d < 2) throw InputError("relation " + to_string(r, vars) + " has degree below 2");
  }
}

std::size_t AlgebraPresentation::max_relation_degree() const {
  std::size_t m = 0;
  for (const auto& r : relations) m = std::max<std::size_t>(m, static_cast<std::size_t>(r.degree()));
  return m;
}

AlgebraPresentation parse_algebra(const std::string& text) {
  AlgebraPresentation a;
  bool have_vars = false;
  std::vector<std::pair<int, std::string>> rels;
  for (const auto& [no, line] : content_lines(text)) {
    std::string v;
    if (header_value(line, "vars", v)) {
      a.vars = split_names(v);
      have_vars = true;
    } else if (header_value(line, "commutative", v)) {
      if (v == "true")
        a.commutative = true;
      else if (v == "false")
        a.commutative = false;
      else
        throw InputError("algebra line " + std::to_string(no) + ": commutative must be true or false");
    } else if (header_value(line, "rel", v)) {
      rels.emplace_back(no, v);
    } else {
      throw InputError("algebra line " + std::to_string(no) + ": expected vars:, commutative: or rel:");
    }
  }
  if (!have_vars) throw InputError("algebra: missing 'vars:' line");
  for (const auto& [no, r] : rels) {
    try {
      a.relations.push_back(parse_polynomial(r, a.vars, a.commutative));
      if (a.relations.back().is_zero()) a.relations.pop_back();
    } catch (const InputError& e) {
      throw InputError("algebra line " + std::to_string(no) + ": " + e.what());
    }
  }
  a.validate();
  return a;
}

AlgebraPresentation read_algebra_file(const std::string& path) { return parse_algebra(read_file(path)); }

IdealSpec parse_ideal_spec(const std::string& text, bool commutative) {
  IdealSpec s;
  bool have_vars = false;
  for (const auto& [no, line] : content_lines(text)) {
    std::string v;
    if (header_value(line, "vars", v)) {
      s.vars = split_names(v);
      have_vars = true;
    } else if (header_value(line, "two-sided", v)) {
      if (v != "true" && v != "false")
        throw InputError("ideal line " + std::to_string(no) + ": two-sided must be true or false");
      s.two_sided = v == "true";
    } else {
      if (!have_vars) throw InputError("ideal: 'vars:' must come before the generators");
      try {
        auto p = parse_polynomial(line, s.vars, commutative);
        if (!p.is_zero()) {
          p.degree();
          s.gens.push_back(std::move(p));
        }
      } catch (const InputError& e) {
        throw InputError("ideal line " + std::to_string(no) + ": " + e.what());
      }
    }
  }
  if (!have_vars) throw InputError("ideal: missing 'vars:' line");
  return s;
}

std::vector<Polynomial> rebase(const IdealSpec& spec, const std::vector<std::string>& ambient, bool commutative) {
  std::vector<int> map;
  for (const auto& v : spec.vars) map.push_back(var_index(v, ambient));
  std::vector<Polynomial> out;
  for (auto p : spec.gens) {
    for (auto& t : p.terms)
      for (auto& l : t.word) l = map[static_cast<std::size_t>(l)];
    p.normalize(commutative);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace k2
