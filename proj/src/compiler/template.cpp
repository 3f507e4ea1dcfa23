#include "bidual/compiler/template.hpp"

#include "bidual/term/parse.hpp"
#include "bidual/term/print.hpp"

#include <algorithm>

namespace bidual {

namespace {

bool has_arens(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Product:
      if (t.op() != ProductOp::Flat) return true;
      return std::any_of(t.factors().begin(), t.factors().end(), has_arens);
    case Term::Kind::Star:
      return has_arens(t.star_arg());
    case Term::Kind::Func:
      return has_arens(t.func_arg());
    case Term::Kind::Sum:
      return std::any_of(t.addends().begin(), t.addends().end(), [](const auto& a) { return has_arens(a.second); });
    default:
      return false;
  }
}

int slot_of(const std::string& name) {
  if (name == "a") return 1;
  if (name == "b") return 2;
  if (name == "c") return 3;
  return 0;
}

Item letter_item(const Atom& a) {
  if (int k = slot_of(a.name)) return Item::make_slot(k, a.starred);
  return Item::make_constant(a.name, a.starred);
}

void word_from_vector(const Term& t, std::vector<Item>& out) {
  switch (t.kind()) {
    case Term::Kind::Unit:
      return;
    case Term::Kind::Atom:
      out.push_back(letter_item(t.atom()));
      return;
    case Term::Kind::Product:
      if (t.op() != ProductOp::Flat) throw TemplateError("templates use juxtaposition only, not Arens products");
      for (const auto& f : t.factors()) word_from_vector(f, out);
      return;
    default:
      throw TemplateError("unexpected node in template word");
  }
}

Item item_from_piece(const Term& piece) {
  if (piece.kind() == Term::Kind::Pairing) return Item::make_wrapper(piece.functional(), {letter_item(piece.paired_atom())});
  if (piece.kind() == Term::Kind::Func) {
    std::vector<Item> body;
    word_from_vector(piece.func_arg(), body);
    return Item::make_wrapper(piece.functional(), std::move(body));
  }
  throw TemplateError("unexpected node in template word");
}

std::vector<Item> word_from_body(const Term& body) {
  std::vector<Item> out;
  std::vector<Term> pieces = body.is_product() && body.op() == ProductOp::Flat ? body.factors() : std::vector<Term>{body};
  for (const auto& p : pieces) {
    if (p.is_scalar_valued()) {
      out.push_back(item_from_piece(p));
    } else {
      word_from_vector(p, out);
    }
  }
  return out;
}

void count_slots(const std::vector<Item>& word, std::array<int, 3>& counts) {
  for (const auto& it : word) {
    if (it.kind == Item::Kind::Slot) ++counts[static_cast<std::size_t>(it.slot - 1)];
    if (it.kind == Item::Kind::Wrapper) count_slots(it.sub, counts);
  }
}

Term word_term(const std::vector<Item>& word) {
  std::vector<Term> parts;
  for (const auto& it : word) {
    switch (it.kind) {
      case Item::Kind::Slot:
        parts.push_back(slot_atom(it.slot, Level::Algebra, it.starred));
        break;
      case Item::Kind::Constant:
        parts.push_back(atom(it.name, Level::Algebra, it.starred));
        break;
      case Item::Kind::Wrapper:
        parts.push_back(func(it.name, word_term(it.sub)));
        break;
    }
  }
  return flat(std::move(parts));
}

}  // namespace

std::string slot_name(int k, Level level) {
  static const char* bidual_names[] = {"m", "n", "p"};
  static const char* algebra_names[] = {"a", "b", "c"};
  if (k < 1 || k > 3) throw std::out_of_range("slot index must be 1..3");
  return level == Level::Bidual ? bidual_names[k - 1] : algebra_names[k - 1];
}

Term slot_atom(int k, Level level, bool starred) { return atom(slot_name(k, level), level, starred); }

TrilinearTemplate::TrilinearTemplate(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) { validate(); }

void TrilinearTemplate::validate() const {
  if (monomials_.empty()) throw TemplateError("template has no monomials");
  for (const auto& m : monomials_) {
    std::array<int, 3> counts{0, 0, 0};
    count_slots(m.word, counts);
    for (int k = 0; k < 3; ++k) {
      if (counts[static_cast<std::size_t>(k)] != 1) {
        throw TemplateError("slot " + slot_name(k + 1, Level::Algebra) + " must occur exactly once in every monomial");
      }
    }
  }
}

TrilinearTemplate TrilinearTemplate::parse(std::string_view text) {
  ParseOptions opts;
  opts.level_of = [](const std::string&) { return Level::Algebra; };
  Term t;
  try {
    Term raw = parse_term(text, opts);
    if (has_arens(raw)) throw TemplateError("templates use juxtaposition only, not Arens products");
    t = normalize(raw);
  } catch (const StructuralError& e) {
    throw TemplateError(e.what());
  }
  std::vector<Monomial> monos;
  if (t.is_sum()) {
    for (const auto& [c, body] : t.addends()) monos.push_back({c, word_from_body(body)});
  } else {
    monos.push_back({Scalar(1), word_from_body(t)});
  }
  return TrilinearTemplate(std::move(monos));
}

Term TrilinearTemplate::as_term() const {
  std::vector<std::pair<Scalar, Term>> addends;
  for (const auto& m : monomials_) addends.emplace_back(m.coeff, word_term(m.word));
  return sum(std::move(addends));
}

std::string TrilinearTemplate::to_string() const { return bidual::to_string(normalize(as_term()), PrintStyle::Ascii); }

bool TrilinearTemplate::outer_symmetric() const {
  Term t = as_term();
  Term swapped = substitute(t, {{"a", slot_atom(3, Level::Algebra)}, {"c", slot_atom(1, Level::Algebra)}});
  return equal(t, swapped);
}

bool TrilinearTemplate::has_wrappers() const {
  for (const auto& m : monomials_) {
    for (const auto& it : m.word) {
      if (it.kind == Item::Kind::Wrapper) return true;
    }
  }
  return false;
}

}  // namespace bidual
