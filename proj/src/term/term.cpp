#include "bidual/term/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace bidual {

namespace {

const TermNode& unit_node() {
  static const TermNode node{UnitData{}};
  return node;
}

template <class T>
const T& expect(const std::shared_ptr<const TermNode>& node, const char* what) {
  if (const auto* p = std::get_if<T>(&node->data)) return *p;
  throw std::logic_error(std::string("term is not a ") + what);
}

std::strong_ordering cmp_string(const std::string& a, const std::string& b) {
  int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_atom(const Atom& a, const Atom& b) {
  if (auto c = cmp_string(a.name, b.name); c != 0) return c;
  if (auto c = a.level <=> b.level; c != 0) return c;
  return a.starred <=> b.starred;
}

}  // namespace

Term make_node(TermNode node) { return Term(std::make_shared<const TermNode>(std::move(node))); }

Term::Term() : node_(std::shared_ptr<const TermNode>(std::shared_ptr<const TermNode>{}, &unit_node())) {}

Term::Kind Term::kind() const { return static_cast<Kind>(node_->data.index()); }

bool Term::is_zero() const { return is_sum() && addends().empty(); }

const Atom& Term::atom() const { return expect<Atom>(node_, "atom"); }
ProductOp Term::op() const { return expect<ProductData>(node_, "product").op; }
const std::vector<Term>& Term::factors() const { return expect<ProductData>(node_, "product").factors; }
const std::vector<std::pair<Scalar, Term>>& Term::addends() const { return expect<SumData>(node_, "sum").addends; }
const Term& Term::star_arg() const { return expect<StarData>(node_, "star").arg; }

const std::string& Term::functional() const {
  if (const auto* f = std::get_if<FuncData>(&node_->data)) return f->name;
  return expect<PairingData>(node_, "functional or pairing").functional;
}

const Term& Term::func_arg() const { return expect<FuncData>(node_, "functional application").arg; }
const Atom& Term::paired_atom() const { return expect<PairingData>(node_, "pairing").atom; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::Unit:
      return std::strong_ordering::equal;
    case Term::Kind::Atom:
      return cmp_atom(a.atom(), b.atom());
    case Term::Kind::Pairing:
      if (auto c = cmp_string(a.functional(), b.functional()); c != 0) return c;
      return cmp_atom(a.paired_atom(), b.paired_atom());
    case Term::Kind::Func:
      if (auto c = cmp_string(a.functional(), b.functional()); c != 0) return c;
      return a.func_arg() <=> b.func_arg();
    case Term::Kind::Product: {
      if (auto c = a.op() <=> b.op(); c != 0) return c;
      const auto& fa = a.factors();
      const auto& fb = b.factors();
      return std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
    }
    case Term::Kind::Star:
      return a.star_arg() <=> b.star_arg();
    case Term::Kind::Sum: {
      const auto& xa = a.addends();
      const auto& xb = b.addends();
      return std::lexicographical_compare_three_way(
          xa.begin(), xa.end(), xb.begin(), xb.end(), [](const auto& l, const auto& r) {
            if (auto c = l.second <=> r.second; c != 0) return c;
            return l.first <=> r.first;
          });
    }
  }
  return std::strong_ordering::equal;
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

Term unit() { return Term(); }

Term atom(std::string name, Level level, bool starred) {
  if (name.empty()) throw StructuralError("atom name must be nonempty");
  return make_node(TermNode{Atom{std::move(name), level, starred}});
}

Term atom(const Atom& a) { return atom(a.name, a.level, a.starred); }

Term product(ProductOp op, std::vector<Term> factors) {
  std::vector<Term> flat_factors;
  flat_factors.reserve(factors.size());
  for (auto& f : factors) {
    if (f.is_product() && f.op() == op) {
      const auto& inner = f.factors();
      flat_factors.insert(flat_factors.end(), inner.begin(), inner.end());
    } else {
      flat_factors.push_back(std::move(f));
    }
  }
  if (flat_factors.empty()) return unit();
  if (flat_factors.size() == 1) return flat_factors.front();
  return make_node(TermNode{ProductData{op, std::move(flat_factors)}});
}

Term box(std::vector<Term> factors) { return product(ProductOp::Box, std::move(factors)); }
Term loz(std::vector<Term> factors) { return product(ProductOp::Loz, std::move(factors)); }
Term flat(std::vector<Term> factors) { return product(ProductOp::Flat, std::move(factors)); }

Term sum(std::vector<std::pair<Scalar, Term>> addends) { return make_node(TermNode{SumData{std::move(addends)}}); }
Term zero() { return sum({}); }
Term scaled(const Scalar& c, const Term& t) { return sum({{c, t}}); }
Term plus(const Term& a, const Term& b) { return sum({{Scalar(1), a}, {Scalar(1), b}}); }
Term minus(const Term& a, const Term& b) { return sum({{Scalar(1), a}, {Scalar(-1), b}}); }
Term star(const Term& t) { return make_node(TermNode{StarData{t}}); }

Term func(std::string name, const Term& arg) {
  if (name.empty()) throw StructuralError("functional name must be nonempty");
  return make_node(TermNode{FuncData{std::move(name), arg}});
}

Term pairing(const Atom& a, std::string functional) {
  if (functional.empty()) throw StructuralError("functional name must be nonempty");
  return make_node(TermNode{PairingData{a, std::move(functional)}});
}

bool bears_bidual(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      return t.atom().level == Level::Bidual;
    case Term::Kind::Product:
      return std::any_of(t.factors().begin(), t.factors().end(), bears_bidual);
    case Term::Kind::Star:
      return bears_bidual(t.star_arg());
    case Term::Kind::Sum:
      return std::any_of(t.addends().begin(), t.addends().end(),
                         [](const auto& a) { return bears_bidual(a.second); });
    default:
      return false;
  }
}

void check_well_formed(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Product: {
      int bidual_blocks = 0;
      for (const auto& f : t.factors()) {
        check_well_formed(f);
        if (t.op() == ProductOp::Flat) {
          if (bears_bidual(f)) ++bidual_blocks;
        } else if (f.is_scalar_valued()) {
          throw StructuralError("scalar-valued factor under an Arens product");
        }
      }
      if (bidual_blocks > 1) throw StructuralError("flat product joins two bidual blocks");
      return;
    }
    case Term::Kind::Star:
      check_well_formed(t.star_arg());
      return;
    case Term::Kind::Func:
      check_well_formed(t.func_arg());
      return;
    case Term::Kind::Sum:
      for (const auto& [c, a] : t.addends()) check_well_formed(a);
      return;
    default:
      return;
  }
}

Term involute(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Unit:
      return t;
    case Term::Kind::Atom:
      return atom(t.atom().toggled());
    case Term::Kind::Pairing:
      return pairing(t.paired_atom().toggled(), t.functional());
    case Term::Kind::Func:
      return func(t.functional(), involute(t.func_arg()));
    case Term::Kind::Product: {
      std::vector<Term> rev;
      rev.reserve(t.factors().size());
      for (auto it = t.factors().rbegin(); it != t.factors().rend(); ++it) rev.push_back(involute(*it));
      ProductOp op = t.op();
      if (op == ProductOp::Box) {
        op = ProductOp::Loz;
      } else if (op == ProductOp::Loz) {
        op = ProductOp::Box;
      }
      return product(op, std::move(rev));
    }
    case Term::Kind::Star:
      return t.star_arg();
    case Term::Kind::Sum: {
      std::vector<std::pair<Scalar, Term>> out;
      out.reserve(t.addends().size());
      for (const auto& [c, a] : t.addends()) out.emplace_back(c.conj(), involute(a));
      return sum(std::move(out));
    }
  }
  return t;
}

namespace {

Term substitute_rec(const Term& t, const std::map<std::string, Term>& bindings) {
  switch (t.kind()) {
    case Term::Kind::Atom: {
      auto it = bindings.find(t.atom().name);
      if (it == bindings.end()) return t;
      return t.atom().starred ? involute(it->second) : it->second;
    }
    case Term::Kind::Pairing: {
      auto it = bindings.find(t.paired_atom().name);
      if (it == bindings.end()) return t;
      const Term& b = it->second;
      if (b.is_atom()) {
        Atom a = b.atom();
        if (t.paired_atom().starred) a = a.toggled();
        return pairing(a, t.functional());
      }
      return func(t.functional(), t.paired_atom().starred ? involute(b) : b);
    }
    case Term::Kind::Func:
      return func(t.functional(), substitute_rec(t.func_arg(), bindings));
    case Term::Kind::Product: {
      std::vector<Term> out;
      out.reserve(t.factors().size());
      for (const auto& f : t.factors()) out.push_back(substitute_rec(f, bindings));
      return product(t.op(), std::move(out));
    }
    case Term::Kind::Star:
      return star(substitute_rec(t.star_arg(), bindings));
    case Term::Kind::Sum: {
      std::vector<std::pair<Scalar, Term>> out;
      out.reserve(t.addends().size());
      for (const auto& [c, a] : t.addends()) out.emplace_back(c, substitute_rec(a, bindings));
      return sum(std::move(out));
    }
    default:
      return t;
  }
}

void collect_functionals(const Term& t, std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::Func:
    case Term::Kind::Pairing:
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      return;
    case Term::Kind::Product:
      for (const auto& f : t.factors()) collect_functionals(f, out);
      return;
    case Term::Kind::Star:
      collect_functionals(t.star_arg(), out);
      return;
    case Term::Kind::Sum:
      for (const auto& [c, a] : t.addends()) collect_functionals(a, out);
      return;
    default:
      return;
  }
}

}  // namespace

Term substitute(const Term& t, const std::map<std::string, Term>& bindings) {
  if (bindings.empty()) return t;
  Term out = substitute_rec(t, bindings);
  check_well_formed(out);
  return out;
}

std::vector<Term> functional_nodes(const Term& t) {
  std::vector<Term> out;
  collect_functionals(t, out);
  return out;
}

}  // namespace bidual
