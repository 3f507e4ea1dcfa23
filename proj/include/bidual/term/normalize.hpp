#pragma once

#include "bidual/term/term.hpp"

#include <set>
#include <string>
#include <string_view>

namespace bidual {

/// Extra relations imposed on top of the always-on rules (associativity of
/// each Arens product, the anti-homomorphic involution, multilinearity).
struct RelationSet {
  bool commutative = false;     // E commutative: x ◊ y = y □ x, E central
  bool regular = false;         // Arens regular: ◊ = □
  std::set<std::string> trace;  // φ(x □ y) = φ(y □ x); with commutative, factors commute under φ

  /// Comma-separated: `commutative`, `regular`, `trace:phi`; empty or `none` is ∅.
  static RelationSet parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

/// Canonical form: stars pushed to atoms, sums expanded into monomials with
/// sorted scalar factors, algebra letters hoisted to the nearest enclosing
/// Arens node, like terms merged and addends sorted.
Term normalize(const Term& t, const RelationSet& r = {});

bool equal(const Term& t1, const Term& t2, const RelationSet& r = {});

}  // namespace bidual
