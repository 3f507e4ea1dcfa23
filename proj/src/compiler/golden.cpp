#include "bidual/compiler/golden.hpp"

#include <algorithm>

namespace bidual {

const std::vector<GoldenCase>& golden_corpus() {
  static const std::vector<GoldenCase> cases{
      {"star-product", "a b* c", 0, "m [] n* [] p"},
      {"star-product", "a b* c", 1, "m [] (n* <> p)"},
      {"star-product", "a b* c", 2, "m <> n* <> p"},
      {"star-product", "a b* c", 3, "(m <> n*) [] p"},
      {"star-product", "a b* c", 4, "(m [] n*) <> p"},
      {"star-product", "a b* c", 5, "m <> (n* [] p)"},

      {"product", "a b c", 0, "m [] n [] p"},
      {"product", "a b c", 1, "m [] (n <> p)"},
      {"product", "a b c", 2, "m <> n <> p"},
      {"product", "a b c", 3, "(m <> n) [] p"},

      {"jordan-product", "1/2 (a b* c + c b* a)", 0, "1/2 (m [] n* [] p + p <> n* <> m)"},
      {"jordan-product", "1/2 (a b* c + c b* a)", 1, "1/2 (m [] (n* <> p) + (p [] n*) <> m)"},
      {"jordan-product", "1/2 (a b* c + c b* a)", 2, "1/2 (m <> n* <> p + p [] n* [] m)"},
      {"jordan-product", "1/2 (a b* c + c b* a)", 3, "1/2 ((m <> n*) [] p + p <> (n* [] m))"},

      {"functional", "phi(a b*) c + phi(c b*) a", 0, "phi(m [] n*) p + phi(p <> n*) m"},
      {"functional", "phi(a b*) c + phi(c b*) a", 1, "phi(m [] n*) p + phi(p [] n*) m"},
      {"functional", "phi(a b*) c + phi(c b*) a", 2, "phi(m <> n*) p + phi(p [] n*) m"},
      {"functional", "phi(a b*) c + phi(c b*) a", 3, "phi(m <> n*) p + phi(p <> n*) m"},
      {"functional", "phi(a b*) c + phi(c b*) a", 4, "phi(m [] n*) p + phi(p [] n*) m"},
      {"functional", "phi(a b*) c + phi(c b*) a", 5, "phi(m <> n*) p + phi(p <> n*) m"},
  };
  return cases;
}

const std::vector<MixedCase>& mixed_level_cases() {
  constexpr Level E = Level::Algebra;
  constexpr Level B = Level::Bidual;
  static const std::vector<MixedCase> cases{
      {"E,E,E", {E, E, E}, {{0, 1, 2, 3, 4, 5}}},
      {"E,E,E**", {E, E, B}, {{0, 1, 2, 3, 4, 5}}},
      {"E,E**,E", {E, B, E}, {{0, 1, 2, 3, 4, 5}}},
      {"E**,E,E", {B, E, E}, {{0, 1, 2, 3, 4, 5}}},
      {"E,E**,E**", {E, B, B}, {{0, 3, 5}, {1, 2, 4}}},
      {"E**,E,E**", {B, E, B}, {{0, 1, 3}, {2, 4, 5}}},
      {"E**,E**,E", {B, B, E}, {{0, 1, 4}, {2, 3, 5}}},
  };
  return cases;
}

bool refines(const Partition& stated, const Partition& computed) {
  for (const auto& cls : stated) {
    bool inside = false;
    for (const auto& c : computed) {
      if (std::includes(c.begin(), c.end(), cls.begin(), cls.end())) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

const std::vector<std::string>& corpus_templates() {
  static const std::vector<std::string> templates{
      "a b* c",
      "a b c",
      "1/2 (a b* c + c b* a)",
      "phi(a b*) c + phi(c b*) a",
      "<phi,a><psi,b> c",
      "c a b",
      "b* a c",
      "a d b e c",
      "phi(a b* c) d",
      "<phi,b*> a c - 2 c <phi,b> a",
      "a b* c + {i} c* b a*",
  };
  return templates;
}

}  // namespace bidual
