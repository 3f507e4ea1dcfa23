#include "process.hpp"

#include "bidual/compiler/compile.hpp"
#include "bidual/compiler/golden.hpp"
#include "bidual/jordan/checks.hpp"
#include "bidual/jordan/peirce.hpp"
#include "bidual/jordan/tensor.hpp"
#include "bidual/term/parse.hpp"
#include "bidual/term/print.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

using namespace bidual;
using bidual::testing::quote;
using bidual::testing::run_command;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::vector<RelationSet>& relation_grid() {
  static const std::vector<RelationSet> grid{RelationSet::parse("none"), RelationSet::parse("commutative"),
                                             RelationSet::parse("regular"), RelationSet::parse("commutative,regular"),
                                             RelationSet::parse("commutative,trace:phi")};
  return grid;
}

Outcome golden_corpus_check() {
  std::ifstream in(BIDUAL_GOLDEN_DIR "/extensions.json");
  if (!in) return {false, "golden file missing"};
  nlohmann::json doc = nlohmann::json::parse(in);
  std::map<std::string, int> per_group;
  int ok = 0, total = 0;
  std::string first_bad;
  for (const auto& c : doc.at("cases")) {
    ++total;
    std::string tpl = c.at("template"), expected = c.at("expected");
    int perm = c.at("perm");
    std::string got = to_string(compile_extension(TrilinearTemplate::parse(tpl), Perm3::from_label(perm)),
                                PrintStyle::Ascii);
    std::string want = to_string(normalize(parse_term(expected)), PrintStyle::Ascii);
    if (got == want) {
      ++ok;
      ++per_group[c.at("group").get<std::string>()];
    } else if (first_bad.empty()) {
      first_bad = "; first mismatch " + tpl + " s" + std::to_string(perm) + ": " + got + " vs " + want;
    }
  }
  bool counts = per_group["star-product"] == 6 && per_group["product"] == 4 && per_group["jordan-product"] == 4 &&
                per_group["functional"] == 6;
  return {ok == 20 && total == 20 && counts, std::to_string(ok) + "/" + std::to_string(total) + " formulas" + first_bad};
}

Outcome mixed_level_check() {
  int exact = 0, contained = 0, total = 0, wrapper_free = 0;
  bool pass = true;
  for (const auto& text : corpus_templates()) {
    TrilinearTemplate tpl = TrilinearTemplate::parse(text);
    for (const auto& mc : mixed_level_cases()) {
      ++total;
      Partition p = coincidence_on_mixed(tpl, mc.levels);
      bool refine = refines(mc.stated, p);
      bool is_exact = p == mc.stated;
      contained += refine;
      exact += is_exact;
      if (!tpl.has_wrappers()) {
        ++wrapper_free;
        pass = pass && is_exact;
      }
      pass = pass && refine;
    }
  }
  std::ostringstream os;
  os << corpus_templates().size() << " templates x " << mixed_level_cases().size() << " patterns: stated classes hold in "
     << contained << "/" << total << ", exact in " << exact << "/" << total << " (all " << wrapper_free
     << " wrapper-free cases exact; functional templates may merge further)";
  return {pass, os.str()};
}

Outcome triples_check() {
  auto v = valid_triples();
  std::set<std::array<int, 3>> labels;
  for (const auto& t : v) labels.insert({t[0].label(), t[1].label(), t[2].label()});
  const std::set<std::array<int, 3>> expected{{0, 2, 3}, {0, 2, 5}, {0, 3, 4}, {0, 4, 5},
                                              {1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}};
  bool list_ok = v.size() == 8 && labels == expected;
  int checked = 0, failures = 0;
  for (const auto& text : corpus_templates()) {
    TrilinearTemplate tpl = TrilinearTemplate::parse(text);
    for (const auto& r : relation_grid()) {
      ExtensionReport rep = all_extensions(tpl, r);
      for (const auto& t : v) {
        ++checked;
        failures += !triple_implies_regular(rep, t);
      }
    }
  }
  std::ostringstream os;
  os << "valid_triples " << (list_ok ? "matches" : "DIFFERS from") << " the 8 listed; implication held in "
     << checked - failures << "/" << checked << " template x relations x triple cases";
  return {list_ok && failures == 0, os.str()};
}

Outcome regularity_check() {
  auto classes = [](const char* t, const char* r) {
    return all_extensions(TrilinearTemplate::parse(t), RelationSet::parse(r)).classes.size();
  };
  bool irregular = classes("a b* c", "commutative") == 6;
  bool regular = classes("a b* c", "commutative,regular") == 1;
  bool pairing = classes("<phi,a><psi,b> c", "none") == 1;
  bool pairs = true;
  for (const char* t : {"1/2 (a b* c + c b* a)", "phi(a b*) c + phi(c b*) a"}) {
    for (const auto& p : symmetry_pairs_check(TrilinearTemplate::parse(t))) pairs = pairs && p.holds;
  }
  JordanBindings units{{"c", unit()}, {"d", unit()}, {"e", unit()}};
  auto tpl = TrilinearTemplate::parse("phi(a b*) c + phi(c b*) a");
  Term obstruction = jordan_identity_residual(tpl, 1, units, RelationSet::parse("commutative"));
  std::set<std::string> atoms;
  for (const auto& node : functional_nodes(obstruction)) {
    if (node.kind() == Term::Kind::Func && bears_bidual(node.func_arg())) atoms.insert(to_string(node));
  }
  bool atoms_ok = !obstruction.is_zero() && atoms == std::set<std::string>{"φ(m □ n*)", "φ(n* □ m)"};
  bool vanishes = jordan_identity_residual(tpl, 1, units, RelationSet::parse("commutative,trace:phi")).is_zero();
  std::ostringstream os;
  os << "a b* c: " << classes("a b* c", "commutative") << " classes commutative, "
     << classes("a b* c", "commutative,regular") << " commutative+regular; pairing template "
     << (pairing ? "regular" : "IRREGULAR") << "; symmetry pairs " << (pairs ? "hold" : "FAIL") << "; obstruction "
     << to_string(obstruction) << (vanishes ? ", zero under trace" : ", NONZERO under trace");
  return {irregular && regular && pairing && pairs && atoms_ok && vanishes, os.str()};
}

Outcome jordan_numeric_check() {
  bool pass = true;
  double worst_alg = 0, worst_cube = 0, worst_qq = 0;
  for (const char* spec : {"cstar:2", "cstar:3", "rect:2x3", "hilbert:4", "jbstar:3"}) {
    auto checks = jordan_suite(TripleSystem::parse(spec), 100, 42);
    pass = pass && all_pass(checks) && checks.size() == 6;
    for (const auto& c : checks) {
      if (c.name == "jordan_identity" || c.name == "outer_symmetry") worst_alg = std::max(worst_alg, c.worst);
      if (c.name == "cube_norm") worst_cube = std::max(worst_cube, c.worst);
      if (c.name == "qq_identity") worst_qq = std::max(worst_qq, c.worst);
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "5 systems x 100 trials: identities %.1e, cube norm %.1e, operator identity %.1e",
                worst_alg, worst_cube, worst_qq);
  return {pass, buf};
}

Outcome peirce_check() {
  TripleSystem sys = TripleSystem::parse("cstar:3");
  bool pass = true;
  double worst = 0;
  std::string ranks;
  for (const char* name : {"0", "e11", "e11+e22", "id"}) {
    CVec e = named_tripotent(sys, name);
    PeirceDecomposition pd = peirce(sys, e);
    auto checks = peirce_projection_checks(sys, e, pd);
    for (const auto& c : peirce_rules_residual(sys, e, 100, 42)) checks.push_back(c);
    pass = pass && all_pass(checks);
    for (const auto& c : checks) worst = std::max(worst, c.worst);
    auto r = pd.ranks();
    ranks += std::string(ranks.empty() ? "" : ", ") + name + " " + std::to_string(r[0]) + "/" + std::to_string(r[1]) +
             "/" + std::to_string(r[2]);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "; worst residual %.1e", worst);
  return {pass, "ranks " + ranks + buf};
}

Outcome tensor_check() {
  double circ = 0, perm = 0;
  int tensors = 0;
  std::uint64_t index = 0;
  for (int d1 = 1; d1 <= 3; ++d1)
    for (int d2 = 1; d2 <= 3; ++d2)
      for (int d3 = 1; d3 <= 3; ++d3)
        for (int dy = 1; dy <= 3; ++dy) {
          Rng rng(derive_seed(42, index++));
          TrilinearTensor t = TrilinearTensor::random({d1, d2, d3, dy}, rng);
          ++tensors;
          circ = std::max(circ, max_abs_difference(circledast(t), t));
          for (const auto& p : Perm3::all()) perm = std::max(perm, max_abs_difference(permuted_extension(t, p), t));
        }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d tensors: four-fold adjoint %.1e, permuted extensions %.1e", tensors, circ, perm);
  return {circ <= 1e-12 && perm <= 1e-12, buf};
}

Outcome witness_check() {
  auto z = run_command(quote(BIDUAL_CLI) + " witness --space l1z --functional heaviside --N 100 --json");
  auto n = run_command(quote(BIDUAL_CLI) + " witness --space l1n --functional heaviside --N 100 --json");
  if (z.status != 0 || n.status != 0) return {false, "witness exited with a failure status"};
  auto jz = nlohmann::json::parse(z.out), jn = nlohmann::json::parse(n.out);
  auto values_ok = [](const nlohmann::json& rep) {
    return rep["orders"][0]["value"] == "0" && rep["orders"][1]["value"] == "1" && rep["gap"] == 1.0;
  };
  bool zok = values_ok(jz["bilinear"]) && values_ok(jz["triple"]);
  int zero_pairs = 0;
  for (const auto& p : jn["all_orders"]["pairwise"]) zero_pairs += (p["gap"] == 0.0);
  bool nok = zero_pairs == 15 && jn["bilinear"]["gap"] == 0.0;
  std::ostringstream os;
  os << "l1z bilinear " << jz["bilinear"]["orders"][0]["value"].get<std::string>() << "/"
     << jz["bilinear"]["orders"][1]["value"].get<std::string>() << " gap " << jz["bilinear"]["gap"].get<double>()
     << ", triple s0/s2 " << jz["triple"]["orders"][0]["value"].get<std::string>() << "/"
     << jz["triple"]["orders"][1]["value"].get<std::string>() << " gap " << jz["triple"]["gap"].get<double>()
     << "; l1n zero gap in " << zero_pairs << "/15 order pairs";
  return {zok && nok, os.str()};
}

Outcome determinism_check() {
  std::string cmd = quote(BIDUAL_CLI) + " selftest --seed 42 --json";
  auto a = run_command(cmd), b = run_command(cmd);
  bool same = !a.out.empty() && a.out == b.out;
  return {same && a.status == b.status,
          std::string(same ? "identical" : "DIFFERENT") + " output (" + std::to_string(a.out.size()) +
              " bytes), selftest status " + std::to_string(a.status)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden corpus", 1.0, golden_corpus_check},
      {2, "mixed-level coincidences", 1.0, mixed_level_check},
      {3, "valid triples decide regularity", 5.0, triples_check},
      {4, "regularity verdicts", 1.0, regularity_check},
      {5, "numerical Jordan suite", 30.0, jordan_numeric_check},
      {6, "Peirce suite", 10.0, peirce_check},
      {7, "finite-dimensional adjoints", 5.0, tensor_check},
      {8, "irregularity witness", 5.0, witness_check},
      {9, "selftest determinism", 60.0, determinism_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %d %s: %s (%.3fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", TOO SLOW");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
