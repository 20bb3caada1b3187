#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "laa/algebra.hpp"

namespace laa {

/// Parse failure with 1-based line position.
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string &msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

namespace parse_detail {

inline std::string strip(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> tokens(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline bool looks_like_number(const std::string &t) {
  if (t.empty()) return false;
  char c = t[0];
  return isdigit(static_cast<unsigned char>(c)) ||
         ((c == '-' || c == '+') && t.size() > 1 &&
          isdigit(static_cast<unsigned char>(t[1])));
}

/// Parses "c1 g1 + c2 g2 - g3" or "0". Coefficients are optional and
/// default to 1; names are resolved through `known`.
inline Element parse_element(const std::vector<std::string> &toks, std::size_t from,
                             const std::map<std::string, GenId> &known, int line) {
  Element out;
  int sign = 1;
  std::size_t i = from;
  if (i >= toks.size()) throw parse_error(line, "empty right-hand side");
  if (i + 1 == toks.size() && toks[i] == "0") return out;
  while (i < toks.size()) {
    if (toks[i] == "+") { sign = 1; ++i; continue; }
    if (toks[i] == "-") { sign = -1; ++i; continue; }
    Rational c(1);
    if (looks_like_number(toks[i])) {
      try {
        c = Rational::parse(toks[i]);
      } catch (const std::invalid_argument &) {
        throw parse_error(line, "bad coefficient '" + toks[i] + "'");
      }
      ++i;
      if (i >= toks.size() || toks[i] == "+" || toks[i] == "-")
        throw parse_error(line, "coefficient without generator");
    }
    auto it = known.find(toks[i]);
    if (it == known.end())
      throw parse_error(line, "unknown generator '" + toks[i] + "'");
    out.add(it->second, Rational(sign) * c);
    ++i;
    sign = 1;
  }
  return out;
}

struct Document {
  std::string kind;   // "algebra" or "representation"
  std::string name;
  std::string target; // representation files only
  bool bracket = false;
  std::vector<Generator> carrier;
  // (lhs name, rhs name, element, line) in file order
  std::vector<std::tuple<std::string, std::string, Element, int>> entries;
};

inline Document parse_document(std::istream &in) {
  Document doc;
  std::map<std::string, GenId> known;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string ln = strip(raw);
    if (ln.empty()) continue;
    auto toks = tokens(ln);

    if (doc.kind.empty()) {
      if (toks[0] == "algebra" && toks.size() >= 2) {
        doc.kind = "algebra";
        doc.name = toks[1];
        doc.bracket = toks.size() >= 3 && toks[2] == "bracket";
        continue;
      }
      if (toks[0] == "representation" && toks.size() >= 4 && toks[2] == "of") {
        doc.kind = "representation";
        doc.name = toks[1];
        doc.target = toks[3];
        continue;
      }
      throw parse_error(line, "expected 'algebra NAME' or 'representation NAME of TARGET'");
    }

    if (toks[0] == "even" || toks[0] == "odd") {
      // e.g.  odd a : weight 1/2
      if (toks.size() != 5 || toks[2] != ":" || toks[3] != "weight")
        throw parse_error(line, "expected '" + toks[0] + " NAME : weight W'");
      if (known.count(toks[1]))
        throw parse_error(line, "duplicate generator '" + toks[1] + "'");
      GenId id{toks[1]};
      Weight w(Weight::of_int(0));
      try {
        w = Weight::parse(toks[4]);
      } catch (const std::invalid_argument &e) {
        throw parse_error(line, e.what());
      }
      known.emplace(toks[1], id);
      doc.carrier.push_back({id, toks[0] == "even" ? even_parity : odd_parity, w});
      continue;
    }

    // product line "u*v = rhs" or action line "g | v = rhs"
    std::string head = toks[0];
    std::size_t eq = 0;
    while (eq < toks.size() && toks[eq] != "=") ++eq;
    if (eq == toks.size()) throw parse_error(line, "missing '='");

    std::string lhs, rhs;
    if (doc.kind == "algebra") {
      std::string prod;
      for (std::size_t i = 0; i < eq; ++i) prod += toks[i];
      auto star = prod.find('*');
      if (star == std::string::npos)
        throw parse_error(line, "product line needs 'u*v = ...'");
      lhs = prod.substr(0, star);
      rhs = prod.substr(star + 1);
    } else {
      std::string act;
      for (std::size_t i = 0; i < eq; ++i) act += (i ? " " : "") + toks[i];
      auto bar = act.find('|');
      if (bar == std::string::npos)
        throw parse_error(line, "action line needs 'gen | vec = ...'");
      lhs = strip(act.substr(0, bar));
      rhs = strip(act.substr(bar + 1));
    }
    Element val = parse_element(toks, eq + 1, known, line);
    doc.entries.emplace_back(lhs, rhs, val, line);
  }
  if (doc.kind.empty()) throw parse_error(line ? line : 1, "empty document");
  return doc;
}

} // namespace parse_detail

/// Loads a finite algebra from the line-oriented definition format.
/// Unlisted products default to zero; supercommutative (or graded
/// antisymmetric) transposes are filled automatically and conflicting
/// entries are rejected.
inline AlgebraSpec load_spec(std::istream &in) {
  using namespace parse_detail;
  Document doc = parse_document(in);
  if (doc.kind != "algebra")
    throw parse_error(1, "expected an algebra document");

  AlgebraSpec spec(doc.name, doc.bracket ? ProductStyle::bracket : ProductStyle::product,
                   doc.carrier);
  for (const auto &[lname, rname, val, line] : doc.entries) {
    if (!spec.has_generator(GenId{lname}))
      throw parse_error(line, "unknown generator '" + lname + "'");
    if (!spec.has_generator(GenId{rname}))
      throw parse_error(line, "unknown generator '" + rname + "'");
    try {
      spec.set_product(GenId{lname}, GenId{rname}, val);
    } catch (const std::domain_error &e) {
      throw parse_error(line, e.what());
    }
  }
  for (const auto &u : spec.generators())
    for (const auto &v : spec.generators())
      if (!spec.entry_defined(u.id, v.id)) spec.set_product(u.id, v.id, Element{});
  return spec;
}

inline AlgebraSpec load_spec(const std::string &text) {
  std::istringstream is(text);
  return load_spec(is);
}

inline AlgebraSpec load_spec_file(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return load_spec(f);
}

/// Parsed representation file: a graded carrier plus generator actions
/// given column-by-column over the carrier basis.
struct RepDocument {
  std::string name;
  std::string target;
  std::vector<Generator> carrier;
  std::map<std::pair<GenId, GenId>, Element> actions; // (gen, carrier vec) -> image
};

inline RepDocument load_rep(std::istream &in) {
  using namespace parse_detail;
  Document doc = parse_document(in);
  if (doc.kind != "representation")
    throw parse_error(1, "expected a representation document");
  RepDocument out;
  out.name = doc.name;
  out.target = doc.target;
  out.carrier = doc.carrier;
  std::map<std::string, GenId> carrier_names;
  for (const auto &g : doc.carrier) carrier_names.emplace(g.id.name, g.id);
  for (const auto &[gname, vname, val, line] : doc.entries) {
    if (!carrier_names.count(vname))
      throw parse_error(line, "unknown carrier vector '" + vname + "'");
    auto key = std::make_pair(GenId{gname}, GenId{vname});
    if (out.actions.count(key))
      throw parse_error(line, "duplicate action entry");
    out.actions.emplace(key, val);
  }
  return out;
}

inline RepDocument load_rep_file(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return load_rep(f);
}

} // namespace laa
