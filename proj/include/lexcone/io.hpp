#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lexcone/classify.hpp"
#include "lexcone/cone.hpp"
#include "lexcone/error.hpp"
#include "lexcone/generators.hpp"
#include "lexcone/lattice.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/poset.hpp"
#include "lexcone/tensor.hpp"

// JSON encodings. Rationals are strings ("p/q" or "p"); integers are accepted
// on input.
namespace lexcone::io {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON if the argument starts with '{' or '[', a path otherwise.
inline Json load(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
  return parse_json(read_file(arg));
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  throw ParseError("expected a rational string, got " + j.dump());
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline std::string expect_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string("expected a string for ") + what + ", got " + j.dump());
  return j.get<std::string>();
}

// {"elements": [...], "covers": [[lo, hi], ...]}
inline Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements")) throw ParseError("poset JSON needs an \"elements\" list");
  const Json& elements = j.at("elements");
  if (!elements.is_array()) throw ParseError("\"elements\" must be a list");
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(expect_string(e, "element label"));
  Poset::Relation covers;
  if (j.contains("covers")) {
    if (!j.at("covers").is_array()) throw ParseError("\"covers\" must be a list");
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a [lower, upper] pair");
      covers.emplace_back(expect_string(c[0], "cover"), expect_string(c[1], "cover"));
    }
  }
  return Poset::from_covers(labels, covers);
}

inline Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
  return Json{{"elements", p.labels()}, {"covers", covers}};
}

// {"a": "3/2", "b": "-1"}
inline LexVector vector_from_json(const Poset& p, const Json& j) {
  if (!j.is_object()) throw ParseError("vector JSON must be an object of label -> rational");
  LexVector v(p);
  for (const auto& [label, value] : j.items()) v.add_to(p.index(label), rational_from_json(value));
  return v;
}

inline Json to_json(const LexVector& v) {
  Json out = Json::object();
  for (const auto& [i, q] : v.entries()) out[v.poset().label(i)] = to_json(q);
  return out;
}

inline Json to_json(const std::vector<LexVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

// {"single": "a"} or {"pair": ["s", "t", "lambda"]}
inline Json to_json(const Poset& p, const Generator& gen) {
  if (const auto* one = std::get_if<Single>(&gen)) return Json{{"single", p.label(one->s)}};
  const auto& pair = std::get<Pair>(gen);
  return Json{{"pair", {p.label(pair.s), p.label(pair.t), to_string(pair.lambda)}}};
}

inline Json to_json(const Poset& p, const Decomposition& d) {
  Json out = Json::array();
  for (const auto& term : d) out.push_back(Json{{"mu", to_json(term.mu)}, {"gen", to_json(p, term.gen)}});
  return out;
}

inline Decomposition decomposition_from_json(const Poset& p, const Json& j) {
  if (!j.is_array()) throw ParseError("decomposition JSON must be a list");
  Decomposition out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("mu") || !t.contains("gen")) throw ParseError("term needs mu and gen");
    Term term{rational_from_json(t.at("mu")), Single{}};
    const Json& g = t.at("gen");
    if (g.contains("single")) {
      term.gen = Single{p.index(expect_string(g.at("single"), "single"))};
    } else if (g.contains("pair") && g.at("pair").is_array() && g.at("pair").size() == 3) {
      const Json& pr = g.at("pair");
      term.gen = Pair{p.index(expect_string(pr[0], "pair")), p.index(expect_string(pr[1], "pair")),
                      rational_from_json(pr[2])};
    } else {
      throw ParseError("generator must be {\"single\": s} or {\"pair\": [s, t, lambda]}");
    }
    out.push_back(std::move(term));
  }
  return out;
}

// [{"left": vector on S, "right": vector on T}, ...]
inline Json to_json(const TensorRep& rep) {
  Json out = Json::array();
  for (const auto& t : rep) out.push_back(Json{{"left", to_json(t.left)}, {"right", to_json(t.right)}});
  return out;
}

inline TensorRep tensor_rep_from_json(const Poset& s, const Poset& t, const Json& j) {
  if (!j.is_array()) throw ParseError("tensor representation must be a list");
  TensorRep rep;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("left") || !term.contains("right"))
      throw ParseError("tensor term needs left and right");
    rep.push_back({vector_from_json(s, term.at("left")), vector_from_json(t, term.at("right"))});
  }
  return rep;
}

inline Vec rational_list_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of rationals");
  Vec v;
  for (const auto& q : j) v.push_back(rational_from_json(q));
  return v;
}

inline Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  Matrix m;
  for (const auto& row : j) m.push_back(rational_list_from_json(row));
  return m;
}

inline Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

// {"dim": 2, "generators": [["1","0"],["0","1"]]}
inline FinCone cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_unsigned())
    throw ParseError("cone JSON needs a positive integer \"dim\"");
  const Json gens = j.value("generators", Json::array());
  std::vector<Vec> out;
  for (const auto& g : gens) out.push_back(rational_list_from_json(g));
  return FinCone(j.at("dim").get<std::size_t>(), std::move(out));
}

inline Json to_json(const FinCone& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators()) gens.push_back(to_json(g));
  return Json{{"dim", c.dim()}, {"generators", gens}};
}

// {"sum": [{"root": {"sum": [...]}}, ...]}
inline LexUnionTerm term_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sum") || !j.at("sum").is_array())
    throw ParseError("term JSON must be {\"sum\": [...]}");
  LexUnionTerm t;
  for (const auto& r : j.at("sum")) {
    if (!r.is_object() || !r.contains("root")) throw ParseError("summand must be {\"root\": term}");
    t.roots.push_back(LexUnionRoot{term_from_json(r.at("root"))});
  }
  return t;
}

inline Json to_json(const LexUnionTerm& t) {
  Json sum = Json::array();
  for (const auto& r : t.roots) sum.push_back(Json{{"root", to_json(r.child)}});
  return Json{{"sum", sum}};
}

inline Json to_json(const ForestReport& r) {
  Json out{{"is_forest", r.is_forest}};
  if (r.witness) out["witness"] = {r.witness->s, r.witness->t, r.witness->m};
  if (r.is_forest) {
    Json trees = Json::array();
    for (const auto& t : r.trees) trees.push_back(Json{{"root", t.root}, {"members", t.members}});
    out["trees"] = trees;
  }
  return out;
}

inline Json to_json(const DescentChain& c) {
  return Json{{"f", to_json(c.f)}, {"upper_bounds", to_json(c.upper_bounds)}};
}

inline Json to_json(const KpCheckReport& r) {
  return Json{{"trials", r.trials},
              {"members", r.members},
              {"double_members", r.double_members},
              {"lp_route_ok", r.lp_route_ok},
              {"generators_checked", r.generators_checked},
              {"embedding_route_ok", r.embedding_route_ok},
              {"embed_x", to_json(r.embed_x)},
              {"embed_y", to_json(r.embed_y)}};
}

}  // namespace lexcone::io
