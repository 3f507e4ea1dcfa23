#pragma once

#include "bidual/term/normalize.hpp"
#include "bidual/term/scalar.hpp"
#include "bidual/term/term.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bidual {

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Item {
  enum class Kind { Slot, Constant, Wrapper };
  Kind kind = Kind::Slot;
  int slot = 0;          // 1..3 for Slot
  bool starred = false;  // Slot and Constant
  std::string name;      // Constant name or functional symbol
  std::vector<Item> sub;  // Wrapper body

  static Item make_slot(int k, bool starred = false) { return {Kind::Slot, k, starred, {}, {}}; }
  static Item make_constant(std::string n, bool starred = false) { return {Kind::Constant, 0, starred, std::move(n), {}}; }
  static Item make_wrapper(std::string fn, std::vector<Item> body) { return {Kind::Wrapper, 0, false, std::move(fn), std::move(body)}; }
};

struct Monomial {
  Scalar coeff{1};
  std::vector<Item> word;
};

/// Per-slot level for mixed-level compilation.
using LevelPattern = std::array<Level, 3>;
inline constexpr LevelPattern kAllBidual{Level::Bidual, Level::Bidual, Level::Bidual};

/// A formal trilinear map: a sum of monomials, each a word in the slots
/// a, b, c (each exactly once), constants, and functional wrappers.
class TrilinearTemplate {
 public:
  TrilinearTemplate() = default;
  explicit TrilinearTemplate(std::vector<Monomial> monomials);

  /// DSL: `a b* c`, `1/2 (a b* c + c b* a)`, `phi(a b*) c + phi(c b*) a`,
  /// `<phi,a><psi,b> c`. Slots are a, b, c; other names are constants of E.
  static TrilinearTemplate parse(std::string_view text);

  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// The template as a term over algebra atoms a, b, c and its constants.
  Term as_term() const;
  std::string to_string() const;

  /// Monomial multiset invariant under swapping slots 1 and 3.
  bool outer_symmetric() const;

  /// Some monomial applies a functional (phi(...) or a pairing).
  bool has_wrappers() const;

 private:
  std::vector<Monomial> monomials_;
  void validate() const;
};

/// Slot k (1-based) as it appears in compiled output: m, n, p in the bidual,
/// a, b, c when held at the algebra level.
Term slot_atom(int k, Level level, bool starred = false);
std::string slot_name(int k, Level level);

}  // namespace bidual
