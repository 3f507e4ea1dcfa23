#include "bidual/term/normalize.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace bidual {

RelationSet RelationSet::parse(std::string_view text) {
  RelationSet r;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty() || item == "none") continue;
    if (item == "commutative") {
      r.commutative = true;
    } else if (item == "regular") {
      r.regular = true;
    } else if (item.rfind("trace:", 0) == 0 && item.size() > 6) {
      std::string name = item.substr(6);
      if (name == "φ") name = "phi";
      if (name == "ψ") name = "psi";
      r.trace.insert(name);
    } else {
      throw std::invalid_argument("unknown relation '" + item + "'");
    }
  }
  return r;
}

std::string RelationSet::to_string() const {
  std::string out;
  auto add = [&out](const std::string& s) {
    if (!out.empty()) out += ",";
    out += s;
  };
  if (commutative) add("commutative");
  if (regular) add("regular");
  for (const auto& t : trace) add("trace:" + t);
  return out.empty() ? "none" : out;
}

namespace {

bool is_letter(const Term& t) { return t.is_atom() && t.atom().level == Level::Algebra; }

// A vector word split into algebra letters around at most one bidual core.
struct Seg {
  std::vector<Term> left;
  std::optional<Term> core;
  std::vector<Term> right;
};

void append(std::vector<Term>& dst, const std::vector<Term>& src) { dst.insert(dst.end(), src.begin(), src.end()); }

std::vector<Term> splice(const Term& core, ProductOp op) {
  if (core.is_product() && core.op() == op) return core.factors();
  return {core};
}

Seg join(ProductOp op, Seg a, Seg b) {
  if (!a.core) {
    append(a.left, b.left);
    b.left = std::move(a.left);
    return b;
  }
  if (!b.core) {
    append(a.right, b.left);
    return a;
  }
  if (op == ProductOp::Flat) throw StructuralError("flat product joins two bidual blocks");
  std::vector<Term> children = splice(*a.core, op);
  append(children, a.right);
  append(children, b.left);
  append(children, splice(*b.core, op));
  Seg out;
  out.left = std::move(a.left);
  out.core = product(op, std::move(children));
  out.right = std::move(b.right);
  return out;
}

Seg segment(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Unit:
      return {};
    case Term::Kind::Atom:
      if (is_letter(t)) return {{t}, std::nullopt, {}};
      return {{}, t, {}};
    case Term::Kind::Product: {
      Seg acc;
      for (const auto& f : t.factors()) acc = join(t.op(), std::move(acc), segment(f));
      return acc;
    }
    default:
      throw std::logic_error("unexpected node in vector word");
  }
}

Term letters_term(std::vector<Term> letters) {
  if (letters.empty()) return unit();
  return flat(std::move(letters));
}

Term assemble(const Seg& s) {
  if (!s.core) return letters_term(s.left);
  if (s.left.empty() && s.right.empty()) return *s.core;
  ProductOp op = s.core->is_product() ? s.core->op() : ProductOp::Flat;
  std::vector<Term> children = s.left;
  append(children, splice(*s.core, op));
  append(children, s.right);
  return product(op, std::move(children));
}

Term restructure(const Term& t) { return assemble(segment(t)); }

// Replace every ◊ node bottom-up: reversed into □ under commutativity, kept
// in order under regularity.
Term drop_loz(const Term& t, bool reverse) {
  if (!t.is_product()) return t;
  std::vector<Term> children;
  children.reserve(t.factors().size());
  for (const auto& f : t.factors()) children.push_back(drop_loz(f, reverse));
  if (t.op() != ProductOp::Loz) return product(t.op(), std::move(children));
  if (reverse) std::reverse(children.begin(), children.end());
  return product(ProductOp::Box, std::move(children));
}

Term canon_vec(const Term& t, const RelationSet& r) {
  Term out = restructure(t);
  if (!r.commutative && !r.regular) return out;
  out = restructure(drop_loz(out, r.commutative));
  if (!r.commutative) return out;

  std::vector<Term> items = out.is_product() ? out.factors() : std::vector<Term>{out};
  std::vector<Term> letters;
  std::vector<Term> rest;
  for (auto& it : items) {
    if (it.is_unit()) continue;
    (is_letter(it) ? letters : rest).push_back(it);
  }
  std::sort(letters.begin(), letters.end());
  if (r.regular) std::sort(rest.begin(), rest.end());
  if (rest.empty()) return letters_term(std::move(letters));
  if (rest.size() == 1) {
    if (letters.empty()) return rest.front();
    letters.push_back(rest.front());
    return flat(std::move(letters));
  }
  append(letters, rest);
  return box(std::move(letters));
}

struct Mono {
  Scalar coeff;
  std::vector<Term> scalars;
  Term vec;
};

using Poly = std::vector<Mono>;

Poly nf(const Term& t, const RelationSet& r);

Term canon_func(const std::string& name, const Term& vec, const RelationSet& r) {
  if (vec.is_atom()) return pairing(vec.atom(), name);
  if (r.trace.count(name) && vec.is_product() && vec.op() != ProductOp::Loz) {
    const auto& ch = vec.factors();
    if (r.commutative) {
      // Commutative and tracial: all factors commute under the functional.
      std::vector<Term> sorted(ch.begin(), ch.end());
      std::sort(sorted.begin(), sorted.end());
      return func(name, canon_vec(product(vec.op(), std::move(sorted)), r));
    }
    Term best = vec;
    for (std::size_t k = 1; k < ch.size(); ++k) {
      std::vector<Term> rot(ch.begin() + static_cast<std::ptrdiff_t>(k), ch.end());
      rot.insert(rot.end(), ch.begin(), ch.begin() + static_cast<std::ptrdiff_t>(k));
      Term cand = canon_vec(product(vec.op(), std::move(rot)), r);
      if (cand < best) best = cand;
    }
    return func(name, best);
  }
  return func(name, vec);
}

Poly nf_product(const Term& t, const RelationSet& r) {
  Poly acc{{Scalar(1), {}, unit()}};
  std::vector<std::vector<Term>> vecs{{}};
  for (const auto& f : t.factors()) {
    Poly pf = nf(f, r);
    Poly next;
    std::vector<std::vector<Term>> next_vecs;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (const auto& m : pf) {
        Mono out{acc[i].coeff * m.coeff, acc[i].scalars, unit()};
        append(out.scalars, m.scalars);
        std::vector<Term> v = vecs[i];
        if (!m.vec.is_unit()) v.push_back(m.vec);
        next.push_back(std::move(out));
        next_vecs.push_back(std::move(v));
      }
    }
    acc = std::move(next);
    vecs = std::move(next_vecs);
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i].vec = canon_vec(product(t.op(), vecs[i]), r);
  return acc;
}

Poly nf(const Term& t, const RelationSet& r) {
  switch (t.kind()) {
    case Term::Kind::Unit:
    case Term::Kind::Atom:
      return {{Scalar(1), {}, t}};
    case Term::Kind::Pairing:
      return {{Scalar(1), {t}, unit()}};
    case Term::Kind::Func: {
      Poly out;
      for (auto& m : nf(t.func_arg(), r)) {
        m.scalars.push_back(canon_func(t.functional(), m.vec, r));
        m.vec = unit();
        out.push_back(std::move(m));
      }
      return out;
    }
    case Term::Kind::Product:
      return nf_product(t, r);
    case Term::Kind::Star:
      return nf(involute(t.star_arg()), r);
    case Term::Kind::Sum: {
      Poly out;
      for (const auto& [c, a] : t.addends()) {
        if (c.is_zero()) continue;
        for (auto& m : nf(a, r)) {
          m.coeff *= c;
          out.push_back(std::move(m));
        }
      }
      return out;
    }
  }
  return {};
}

Term body(Mono m) {
  std::sort(m.scalars.begin(), m.scalars.end());
  std::vector<Term> pieces = std::move(m.scalars);
  if (!m.vec.is_unit()) pieces.push_back(m.vec);
  if (pieces.empty()) return unit();
  return flat(std::move(pieces));
}

}  // namespace

Term normalize(const Term& t, const RelationSet& r) {
  check_well_formed(t);
  std::map<Term, Scalar> merged;
  for (auto& m : nf(t, r)) {
    Scalar c = m.coeff;
    merged[body(std::move(m))] += c;
  }
  std::vector<std::pair<Scalar, Term>> addends;
  for (auto& [b, c] : merged) {
    if (!c.is_zero()) addends.emplace_back(c, b);
  }
  if (addends.size() == 1 && addends.front().first.is_one()) return addends.front().second;
  return sum(std::move(addends));
}

bool equal(const Term& t1, const Term& t2, const RelationSet& r) { return normalize(t1, r) == normalize(t2, r); }

}  // namespace bidual
