#include "bidual/term/serialize.hpp"

#include <stdexcept>

namespace bidual {

namespace {

nlohmann::json atom_json(const Atom& a) {
  return {{"name", a.name}, {"level", a.level == Level::Algebra ? "algebra" : "bidual"}, {"star", a.starred}};
}

Atom atom_from_json(const nlohmann::json& j) {
  Atom a;
  a.name = j.at("name").get<std::string>();
  std::string level = j.value("level", "bidual");
  if (level == "algebra") {
    a.level = Level::Algebra;
  } else if (level == "bidual") {
    a.level = Level::Bidual;
  } else {
    throw std::invalid_argument("unknown atom level '" + level + "'");
  }
  a.starred = j.value("star", false);
  return a;
}

ProductOp op_from_name(const std::string& s) {
  if (s == "box") return ProductOp::Box;
  if (s == "loz") return ProductOp::Loz;
  if (s == "flat") return ProductOp::Flat;
  throw std::invalid_argument("unknown product op '" + s + "'");
}

}  // namespace

const char* op_name(ProductOp op) {
  switch (op) {
    case ProductOp::Box:
      return "box";
    case ProductOp::Loz:
      return "loz";
    case ProductOp::Flat:
      return "flat";
  }
  return "flat";
}

nlohmann::json to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Unit:
      return {{"unit", true}};
    case Term::Kind::Atom:
      return {{"atom", atom_json(t.atom())}};
    case Term::Kind::Pairing:
      return {{"pair", {{"atom", atom_json(t.paired_atom())}, {"functional", t.functional()}}}};
    case Term::Kind::Func:
      return {{"func", {{"name", t.functional()}, {"arg", to_json(t.func_arg())}}}};
    case Term::Kind::Product: {
      auto factors = nlohmann::json::array();
      for (const auto& f : t.factors()) factors.push_back(to_json(f));
      return {{"prod", {{"op", op_name(t.op())}, {"factors", factors}}}};
    }
    case Term::Kind::Star:
      return {{"star", to_json(t.star_arg())}};
    case Term::Kind::Sum: {
      auto addends = nlohmann::json::array();
      for (const auto& [c, a] : t.addends()) addends.push_back({{"coeff", c.to_string()}, {"term", to_json(a)}});
      return {{"sum", addends}};
    }
  }
  return nullptr;
}

Term term_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("term JSON must be a single-key object");
  auto it = j.begin();
  const std::string key = it.key();
  const nlohmann::json& v = it.value();
  try {
    if (key == "unit") return unit();
    if (key == "atom") return atom(atom_from_json(v));
    if (key == "pair") return pairing(atom_from_json(v.at("atom")), v.at("functional").get<std::string>());
    if (key == "func") return func(v.at("name").get<std::string>(), term_from_json(v.at("arg")));
    if (key == "star") return star(term_from_json(v));
    if (key == "prod") {
      std::vector<Term> factors;
      for (const auto& f : v.at("factors")) factors.push_back(term_from_json(f));
      if (factors.size() < 2) throw std::invalid_argument("product needs at least two factors");
      return product(op_from_name(v.at("op").get<std::string>()), std::move(factors));
    }
    if (key == "sum") {
      std::vector<std::pair<Scalar, Term>> addends;
      for (const auto& a : v) addends.emplace_back(Scalar::parse(a.at("coeff").get<std::string>()), term_from_json(a.at("term")));
      return sum(std::move(addends));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed term JSON: ") + e.what());
  }
  throw std::invalid_argument("unknown term tag '" + key + "'");
}

}  // namespace bidual
