#pragma once

#include "bidual/term/term.hpp"

#include <string>

namespace bidual {

enum class PrintStyle { Unicode, Ascii };

/// Human-readable rendering, e.g. `1/2 (m □ n*) + φ(m ◊ n*) p`. The ASCII
/// style writes `[]`, `<>`, `<m,phi>`. Output re-parses to the same term.
std::string to_string(const Term& t, PrintStyle style = PrintStyle::Unicode);

/// Display name of a functional symbol: `phi` becomes `φ`, `psi` becomes `ψ`
/// in the Unicode style.
std::string functional_symbol(const std::string& name, PrintStyle style);

}  // namespace bidual
