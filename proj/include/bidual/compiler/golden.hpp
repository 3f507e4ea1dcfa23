#pragma once

#include "bidual/compiler/compile.hpp"

#include <string>
#include <vector>

namespace bidual {

struct GoldenCase {
  std::string group;     // template family
  std::string tpl;       // template DSL
  int perm = 0;          // extension label
  std::string expected;  // expected bidual formula (ASCII syntax)
};

/// Reference formulas for the six extensions of the standard templates.
const std::vector<GoldenCase>& golden_corpus();

/// A level pattern with the coincidence classes it forces.
struct MixedCase {
  std::string label;
  LevelPattern levels;
  Partition stated;
};

/// Patterns with at most one bidual slot (single class) and the three
/// two-bidual patterns with their two classes.
const std::vector<MixedCase>& mixed_level_cases();

/// True when every class of `stated` lies inside a class of `computed`.
bool refines(const Partition& stated, const Partition& computed);

/// Templates used by invariant sweeps.
const std::vector<std::string>& corpus_templates();

}  // namespace bidual
