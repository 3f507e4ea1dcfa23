#pragma once

#include "bidual/term/term.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bidual {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ParseOptions {
  /// Level assigned to an atom name. Default: single letters a..l are algebra
  /// elements, everything else lives in the bidual.
  std::function<Level(const std::string&)> level_of;
};

Level default_level(const std::string& name);

/// Grammar (juxtaposition binds tighter than □/◊; mixing □ and ◊ at one
/// level needs parentheses):
///   sum     := ['-'] mono (('+' | '-') mono)*
///   mono    := [coeff] word ((□ | ◊) word)*
///   word    := postfix+
///   postfix := primary '*'*
///   primary := '(' sum ')' | name | name '(' sum ')' | '<' name ',' name '>' | '1'
/// `[]` and `<>` are ASCII spellings of □ and ◊; ⟨ ⟩ may replace < >; ♯ and ✻
/// are accepted as stars; coefficients are rationals or `{re+imi}`. A pairing
/// may list the functional on either side; the functional is the multi-letter
/// name, e.g. `<phi,a>` and `<m*,phi>`.
Term parse_term(std::string_view text, const ParseOptions& opts = {});

}  // namespace bidual
