#include "commands.hpp"

#include "bidual/compiler/compile.hpp"
#include "bidual/compiler/golden.hpp"
#include "bidual/jordan/checks.hpp"
#include "bidual/jordan/peirce.hpp"
#include "bidual/jordan/tensor.hpp"
#include "bidual/limits/iterated.hpp"
#include "bidual/term/parse.hpp"
#include "bidual/term/print.hpp"

#include <fstream>
#include <sstream>

namespace bidual::cli {

namespace {

struct Section {
  std::string name;
  bool pass = true;
  nlohmann::json checks = nlohmann::json::array();

  void add(const std::string& check, bool ok, nlohmann::json detail = nullptr) {
    nlohmann::json c{{"check", check}, {"pass", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
  void add(const std::vector<CheckResult>& cs, const std::string& prefix) {
    for (const auto& c : cs) add(prefix + c.name, c.pass(), {{"worst", c.worst}, {"tol", c.tol}});
  }
};

std::vector<GoldenCase> load_golden(const std::string& path) {
  if (path.empty()) return golden_corpus();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open golden file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("golden file '" + path + "' is not valid JSON");
  }
  std::vector<GoldenCase> out;
  for (const auto& c : j.at("cases")) {
    out.push_back({c.at("group").get<std::string>(), c.at("template").get<std::string>(), c.at("perm").get<int>(),
                   c.at("expected").get<std::string>()});
  }
  return out;
}

Section golden_section(const std::string& path) {
  Section s{"golden_formulas"};
  for (const auto& g : load_golden(path)) {
    Term got = compile_extension(TrilinearTemplate::parse(g.tpl), Perm3::from_label(g.perm));
    Term want = normalize(parse_term(g.expected));
    std::string got_text = to_string(got, PrintStyle::Ascii);
    s.add(g.group + "/" + Perm3::from_label(g.perm).name(true), got_text == to_string(want, PrintStyle::Ascii),
          {{"got", got_text}, {"expected", g.expected}});
  }
  return s;
}

Section compiler_section() {
  Section s{"compiler_invariants"};
  s.add("valid_triples_count", valid_triples().size() == 8);
  const std::vector<RelationSet> grid{RelationSet::parse("none"), RelationSet::parse("commutative"),
                                      RelationSet::parse("regular"), RelationSet::parse("commutative,regular"),
                                      RelationSet::parse("commutative,trace:phi")};
  for (const auto& text : corpus_templates()) {
    TrilinearTemplate tpl = TrilinearTemplate::parse(text);
    bool mixed_ok = true;
    for (const auto& mc : mixed_level_cases()) {
      Partition p = coincidence_on_mixed(tpl, mc.levels);
      mixed_ok = mixed_ok && refines(mc.stated, p) && (tpl.has_wrappers() || p == mc.stated);
    }
    s.add("mixed_levels[" + text + "]", mixed_ok);
    bool triples_ok = true;
    for (const auto& r : grid) {
      ExtensionReport rep = all_extensions(tpl, r);
      for (const auto& t : valid_triples()) triples_ok = triples_ok && triple_implies_regular(rep, t);
    }
    s.add("triples_decide_regularity[" + text + "]", triples_ok);
  }
  auto classes = [](const std::string& t, const std::string& r) {
    return all_extensions(TrilinearTemplate::parse(t), RelationSet::parse(r)).classes.size();
  };
  s.add("star_product_irregular_commutative", classes("a b* c", "commutative") == 6);
  s.add("star_product_regular_commutative_regular", classes("a b* c", "commutative,regular") == 1);
  s.add("pairing_template_regular", classes("<phi,a><psi,b> c", "none") == 1);
  for (const auto& t : {"1/2 (a b* c + c b* a)", "phi(a b*) c + phi(c b*) a"}) {
    bool ok = true;
    for (const auto& p : symmetry_pairs_check(TrilinearTemplate::parse(t))) ok = ok && p.holds;
    s.add(std::string("symmetry_pairs[") + t + "]", ok);
  }
  return s;
}

Section jordan_section(std::uint64_t seed) {
  Section s{"jordan_suite"};
  for (const auto& spec : {"cstar:2", "cstar:3", "rect:2x3", "hilbert:4", "jbstar:3"}) {
    TripleSystem sys = TripleSystem::parse(spec);
    s.add(jordan_suite(sys, 100, seed), sys.name() + "/");
  }
  return s;
}

Section peirce_section(std::uint64_t seed) {
  Section s{"peirce_suite"};
  TripleSystem sys = TripleSystem::parse("cstar:3");
  for (const auto& name : {"0", "e11", "e11+e22", "id"}) {
    CVec e = named_tripotent(sys, name);
    PeirceDecomposition pd = peirce(sys, e);
    s.add(peirce_projection_checks(sys, e, pd), std::string(name) + "/");
    s.add(peirce_rules_residual(sys, e, 100, seed), std::string(name) + "/");
  }
  return s;
}

Section tensor_section(std::uint64_t seed) {
  Section s{"adjoint_suite"};
  double circ = 0.0, perm = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng(derive_seed(seed, i));
    std::uniform_int_distribution<int> dim(1, 3);
    TrilinearTensor t = TrilinearTensor::random({dim(rng), dim(rng), dim(rng), dim(rng)}, rng);
    circ = std::max(circ, max_abs_difference(circledast(t), t));
    for (const auto& p : Perm3::all()) perm = std::max(perm, max_abs_difference(permuted_extension(t, p), t));
  }
  s.add("fourfold_adjoint_identity", circ <= 1e-12, {{"worst", circ}, {"tol", 1e-12}});
  s.add("permuted_extensions_coincide", perm <= 1e-12, {{"worst", perm}, {"tol", 1e-12}});
  return s;
}

Section witness_section() {
  Section s{"limit_witnesses"};
  WitnessReport z = run_witness(GroupTag::ZConv, TestFunctional::heaviside());
  s.add("l1z_bilinear_gap_1", z.bilinear.all_converged() && z.bilinear.gap() == 1.0, {{"gap", z.bilinear.gap()}});
  s.add("l1z_triple_gap_1", z.triple.all_converged() && z.triple.gap() == 1.0, {{"gap", z.triple.gap()}});
  WitnessReport n = run_witness(GroupTag::NPointwise, TestFunctional::heaviside());
  s.add("l1n_all_pairs_gap_0", n.expected(), {{"gap", n.all_orders.gap()}});
  return s;
}

}  // namespace

Result cmd_selftest(const Options& o) {
  std::vector<Section> sections{golden_section(o.golden), compiler_section(),  jordan_section(o.seed),
                                peirce_section(o.seed),   tensor_section(o.seed), witness_section()};
  Result res;
  res.doc = {{"schema", "bidual.selftest/1"}, {"seed", o.seed}};
  auto arr = nlohmann::json::array();
  std::ostringstream os;
  for (const auto& sec : sections) {
    arr.push_back({{"section", sec.name}, {"pass", sec.pass}, {"checks", sec.checks}});
    if (!sec.pass) res.status = kFail;
    os << (sec.pass ? "PASS " : "FAIL ") << sec.name << " (" << sec.checks.size() << " checks)\n";
    if (!sec.pass) {
      for (const auto& c : sec.checks) {
        if (!c["pass"].get<bool>()) os << "     failed: " << c["check"].get<std::string>() << "\n";
      }
    }
  }
  res.doc["sections"] = arr;
  res.doc["pass"] = res.status == kPass;
  res.text = os.str();
  return res;
}

}  // namespace bidual::cli
