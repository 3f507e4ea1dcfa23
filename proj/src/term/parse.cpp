#include "bidual/term/parse.hpp"

#include <cctype>
#include <optional>

namespace bidual {

Level default_level(const std::string& name) {
  if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'l') return Level::Algebra;
  return Level::Bidual;
}

namespace {

// Functional symbols are multi-letter names without trailing digits (phi, psi, tr).
bool looks_functional(const std::string& name) {
  return name.size() > 1 && !std::isdigit(static_cast<unsigned char>(name.back()));
}

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& opts) : s_(src), opts_(opts) {}

  Term run() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Term t = parse_sum();
    skip_ws();
    if (!at_end()) fail("unexpected input");
    check_well_formed(t);
    return t;
  }

 private:
  std::string_view s_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool at_end() const { return pos_ >= s_.size(); }
  bool looking_at(std::string_view tok) const { return s_.substr(pos_, tok.size()) == tok; }

  bool eat(std::string_view tok) {
    skip_ws();
    if (!looking_at(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  void skip_ws() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (looking_at("·")) {
        pos_ += std::string_view("·").size();
      } else {
        break;
      }
    }
  }

  bool at_box() const { return looking_at("□") || looking_at("[]"); }
  bool at_loz() const { return looking_at("◊") || looking_at("<>"); }
  bool at_pair_open() const { return looking_at("⟨") || (looking_at("<") && !looking_at("<>")); }
  bool at_ident() const {
    if (at_end()) return false;
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalpha(c) || c == '_' || looking_at("φ") || looking_at("ψ");
  }
  bool at_primary() {
    skip_ws();
    return !at_end() && (s_[pos_] == '(' || s_[pos_] == '1' || at_pair_open() || at_ident());
  }
  bool at_coeff() {
    skip_ws();
    return !at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '{');
  }

  std::string ident() {
    skip_ws();
    if (eat("φ")) return "phi";
    if (eat("ψ")) return "psi";
    if (!at_ident()) fail("expected a name");
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Level level_of(const std::string& name) const {
    return opts_.level_of ? opts_.level_of(name) : default_level(name);
  }

  Scalar coefficient() {
    skip_ws();
    std::size_t start = pos_;
    if (s_[pos_] == '{') {
      std::size_t close = s_.find('}', pos_);
      if (close == std::string_view::npos) fail("unterminated '{'");
      pos_ = close + 1;
    } else {
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    }
    try {
      return Scalar::parse(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  bool at_mono_end() {
    skip_ws();
    return at_end() || s_[pos_] == '+' || s_[pos_] == '-' || s_[pos_] == ')';
  }

  Term parse_sum() {
    std::vector<std::pair<Scalar, Term>> monos;
    bool negative = false;
    if (eat("-")) {
      negative = true;
    } else {
      eat("+");
    }
    while (true) {
      auto [c, body] = parse_mono();
      monos.emplace_back(negative ? -c : c, body);
      if (eat("+")) {
        negative = false;
      } else if (eat("-")) {
        negative = true;
      } else {
        break;
      }
    }
    if (monos.size() == 1) {
      auto& [c, body] = monos.front();
      if (c.is_one()) return body;
      if (c.is_zero() && body.is_unit()) return zero();
    }
    return sum(std::move(monos));
  }

  std::pair<Scalar, Term> parse_mono() {
    Scalar c(1);
    if (at_coeff()) {
      std::size_t save = pos_;
      Scalar k = coefficient();
      if (at_mono_end()) return {k, unit()};
      if (at_primary()) {
        c = k;
      } else {
        pos_ = save;
      }
    }
    return {c, parse_product()};
  }

  Term parse_product() {
    std::vector<Term> words{parse_word()};
    std::optional<ProductOp> op;
    while (true) {
      skip_ws();
      ProductOp next;
      if (at_box()) {
        next = ProductOp::Box;
        pos_ += looking_at("[]") ? 2 : std::string_view("□").size();
      } else if (at_loz()) {
        next = ProductOp::Loz;
        pos_ += looking_at("<>") ? 2 : std::string_view("◊").size();
      } else {
        break;
      }
      if (op && *op != next) fail("mixed □ and ◊ need parentheses");
      op = next;
      words.push_back(parse_word());
    }
    if (!op) return words.front();
    return product(*op, std::move(words));
  }

  Term parse_word() {
    if (!at_primary()) fail("expected a term");
    std::vector<Term> items;
    while (at_primary()) items.push_back(parse_postfix());
    if (items.size() == 1) return items.front();
    return flat(std::move(items));
  }

  Term parse_postfix() {
    Term t = parse_primary();
    while (eat("*") || eat("♯") || eat("✻")) {
      t = t.is_atom() ? atom(t.atom().toggled()) : star(t);
    }
    return t;
  }

  Term parse_primary() {
    skip_ws();
    if (eat("(")) {
      Term inner = parse_sum();
      expect(")");
      return inner;
    }
    if (s_[pos_] == '1') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("numbers other than 1 must lead a monomial");
      return unit();
    }
    if (at_pair_open()) {
      bool unicode = looking_at("⟨");
      pos_ += unicode ? std::string_view("⟨").size() : 1;
      std::string first = ident();
      bool starred = false;
      while (eat("*") || eat("♯") || eat("✻")) starred = !starred;
      expect(",");
      std::string second = ident();
      while (eat("*") || eat("♯") || eat("✻")) starred = !starred;
      expect(unicode ? "⟩" : ">");
      if (looks_functional(first) && !looks_functional(second)) std::swap(first, second);
      return pairing(Atom{first, level_of(first), starred}, second);
    }
    std::string name = ident();
    if (!at_end() && s_[pos_] == '(') {
      ++pos_;
      Term arg = parse_sum();
      expect(")");
      return func(name, arg);
    }
    return atom(name, level_of(name));
  }
};

}  // namespace

Term parse_term(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).run(); }

}  // namespace bidual
