#include "bidual/term/print.hpp"

namespace bidual {

namespace {

std::string atom_text(const Atom& a) { return a.starred ? a.name + "*" : a.name; }

std::string op_text(ProductOp op, PrintStyle style) {
  switch (op) {
    case ProductOp::Box:
      return style == PrintStyle::Unicode ? " □ " : " [] ";
    case ProductOp::Loz:
      return style == PrintStyle::Unicode ? " ◊ " : " <> ";
    case ProductOp::Flat:
      return " ";
  }
  return " ";
}

std::string coeff_text(const Scalar& c) {
  if (c.is_real()) return c.to_string();
  return "{" + c.to_string() + "}";
}

std::string render(const Term& t, PrintStyle style);

std::string render_child(const Term& t, PrintStyle style) {
  if (t.is_product() || (t.is_sum() && !t.is_zero())) return "(" + render(t, style) + ")";
  return render(t, style);
}

std::string render_addend(const Scalar& c, const Term& body, PrintStyle style) {
  bool wrap = body.is_sum() || (body.is_product() && body.op() != ProductOp::Flat);
  if (c.is_one()) return body.is_sum() && !body.is_zero() ? "(" + render(body, style) + ")" : render(body, style);
  if (c == Scalar(-1)) {
    if (body.is_unit()) return "-1";
    return "-" + (wrap ? "(" + render(body, style) + ")" : render(body, style));
  }
  if (body.is_unit()) return coeff_text(c);
  return coeff_text(c) + " " + (wrap ? "(" + render(body, style) + ")" : render(body, style));
}

std::string render(const Term& t, PrintStyle style) {
  switch (t.kind()) {
    case Term::Kind::Unit:
      return "1";
    case Term::Kind::Atom:
      return atom_text(t.atom());
    case Term::Kind::Pairing: {
      std::string name = functional_symbol(t.functional(), style);
      if (style == PrintStyle::Unicode) return "⟨" + atom_text(t.paired_atom()) + "," + name + "⟩";
      return "<" + atom_text(t.paired_atom()) + "," + name + ">";
    }
    case Term::Kind::Func:
      return functional_symbol(t.functional(), style) + "(" + render(t.func_arg(), style) + ")";
    case Term::Kind::Product: {
      std::string out;
      const std::string sep = op_text(t.op(), style);
      for (std::size_t i = 0; i < t.factors().size(); ++i) {
        if (i) out += sep;
        out += render_child(t.factors()[i], style);
      }
      return out;
    }
    case Term::Kind::Star:
      return "(" + render(t.star_arg(), style) + ")*";
    case Term::Kind::Sum: {
      if (t.addends().empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < t.addends().size(); ++i) {
        const auto& [c, body] = t.addends()[i];
        if (i == 0) {
          out = render_addend(c, body, style);
        } else if (c.is_real() && c.re().numerator() < 0) {
          out += " - " + render_addend(-c, body, style);
        } else {
          out += " + " + render_addend(c, body, style);
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string functional_symbol(const std::string& name, PrintStyle style) {
  if (style == PrintStyle::Unicode) {
    if (name == "phi") return "φ";
    if (name == "psi") return "ψ";
  }
  return name;
}

std::string to_string(const Term& t, PrintStyle style) { return render(t, style); }

}  // namespace bidual
