#include "commands.hpp"

#include "bidual/compiler/compile.hpp"
#include "bidual/jordan/checks.hpp"
#include "bidual/jordan/matrix_io.hpp"
#include "bidual/jordan/peirce.hpp"
#include "bidual/limits/iterated.hpp"
#include "bidual/term/print.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

namespace bidual::cli {

namespace {

const std::vector<std::string> kDefaultSystems{"cstar:2", "cstar:3", "rect:2x3", "hilbert:4", "jbstar:3"};

std::string check_line(const CheckResult& c) {
  std::ostringstream os;
  os << "  " << std::left << std::setw(34) << c.name << std::scientific << std::setprecision(3) << c.worst
     << "  <= " << c.tol << "  " << (c.pass() ? "pass" : "FAIL") << "\n";
  return os.str();
}

Result symbolic_jordan(const Options& o) {
  TrilinearTemplate tpl = TrilinearTemplate::parse(o.tpl);
  RelationSet r = RelationSet::parse(o.relations);
  std::vector<int> perms;
  if (o.all || o.perm == "all") {
    perms = {0, 1, 2, 3, 4, 5};
  } else if (o.perm.size() == 1 && o.perm[0] >= '0' && o.perm[0] <= '5') {
    perms = {o.perm[0] - '0'};
  } else {
    throw UsageError("permutation label '" + o.perm + "' is not in 0..5");
  }
  Result res;
  res.doc = {{"schema", "bidual.jordan-symbolic/1"}, {"template", tpl.to_string()}, {"relations", r.to_string()}};
  auto arr = nlohmann::json::array();
  std::ostringstream os;
  PrintStyle st = o.ascii ? PrintStyle::Ascii : PrintStyle::Unicode;
  for (int i : perms) {
    Term residual = jordan_identity_residual(tpl, i, {}, r);
    bool zero = residual.is_zero();
    if (!zero) res.status = kFail;
    arr.push_back({{"perm", i}, {"residual", to_string(residual, st)}, {"holds", zero}});
    os << Perm3::from_label(i).name(o.ascii) << "  " << (zero ? "holds" : "residual " + to_string(residual, st)) << "\n";
  }
  res.doc["results"] = arr;
  res.text = os.str();
  return res;
}

bool looks_like_file(const std::string& s) {
  return s.find(".json") != std::string::npos || s.find('/') != std::string::npos || std::filesystem::exists(s);
}

}  // namespace

Result cmd_jordan(const Options& o) {
  if (!o.tpl.empty()) return symbolic_jordan(o);
  if (o.trials <= 0) throw UsageError("--trials must be positive");
  Tolerances tol;
  if (o.tol > 0) tol.algebraic = o.tol;
  const auto& systems = o.systems.empty() ? kDefaultSystems : o.systems;
  Result res;
  res.doc = {{"schema", "bidual.jordan/1"}, {"seed", o.seed}, {"trials", o.trials}};
  auto arr = nlohmann::json::array();
  std::ostringstream os;
  for (const auto& spec : systems) {
    TripleSystem sys = TripleSystem::parse(spec);
    auto checks = jordan_suite(sys, o.trials, o.seed, tol);
    bool ok = all_pass(checks);
    if (!ok) res.status = kFail;
    arr.push_back({{"system", sys.name()}, {"checks", to_json(checks)}, {"pass", ok}});
    os << sys.name() << " (" << o.trials << " trials, seed " << o.seed << ")\n";
    for (const auto& c : checks) os << check_line(c);
  }
  res.doc["systems"] = arr;
  res.doc["pass"] = res.status == kPass;
  os << (res.status == kPass ? "all checks pass\n" : "some checks FAILED\n");
  res.text = os.str();
  return res;
}

Result cmd_peirce(const Options& o) {
  if (o.trials <= 0) throw UsageError("--trials must be positive");
  if (o.systems.size() > 1) throw UsageError("peirce takes a single --system");
  TripleSystem sys = TripleSystem::parse(o.systems.empty() ? "cstar:3" : o.systems.front());
  Tolerances tol;
  if (o.tol > 0) tol.algebraic = o.tol;
  std::vector<std::pair<std::string, CVec>> tripotents;
  if (o.tripotent.empty()) {
    tripotents = canonical_tripotents(sys);
  } else if (looks_like_file(o.tripotent)) {
    tripotents.emplace_back(std::filesystem::path(o.tripotent).filename().string(), load_element(sys, o.tripotent));
  } else {
    tripotents.emplace_back(o.tripotent, named_tripotent(sys, o.tripotent));
  }
  Result res;
  res.doc = {{"schema", "bidual.peirce/1"}, {"system", sys.name()}, {"seed", o.seed}, {"samples", o.trials}};
  auto arr = nlohmann::json::array();
  std::ostringstream os;
  for (const auto& [name, e] : tripotents) {
    PeirceDecomposition pd = peirce(sys, e, tol.algebraic);
    auto ranks = pd.ranks();
    auto checks = peirce_projection_checks(sys, e, pd, tol);
    for (auto& c : peirce_rules_residual(sys, e, o.trials, o.seed, tol.algebraic)) checks.push_back(c);
    bool ok = all_pass(checks);
    if (!ok) res.status = kFail;
    arr.push_back({{"tripotent", name},
                   {"tripotent_residual", check_tripotent(sys, e).residual},
                   {"ranks", {ranks[0], ranks[1], ranks[2]}},
                   {"checks", to_json(checks)},
                   {"pass", ok}});
    os << sys.name() << "  e = " << name << "  ranks P0/P1/P2 = " << ranks[0] << "/" << ranks[1] << "/" << ranks[2]
       << "\n";
    for (const auto& c : checks) os << check_line(c);
  }
  res.doc["tripotents"] = arr;
  res.doc["pass"] = res.status == kPass;
  res.text = os.str();
  return res;
}

Result cmd_witness(const Options& o) {
  GroupTag space = parse_space(o.space);
  TestFunctional psi = TestFunctional::parse(o.functional);
  if (o.N < 1 || o.window < 1) throw UsageError("--N and --window must be positive");
  LimitSettings s{o.N, o.window};
  Result res;
  if (o.families.empty()) {
    WitnessReport w = run_witness(space, psi, s);
    res.doc = w.to_json();
    if (!(w.bilinear.all_converged() && w.triple.all_converged() && w.all_orders.all_converged())) res.status = kFail;
    res.text = w.to_text();
  } else {
    std::vector<Family> fams;
    std::stringstream ss(o.families);
    std::string item;
    while (std::getline(ss, item, ',')) fams.push_back(Family::parse(space, item));
    IteratedLimitReport rep;
    if (fams.size() == 2) {
      rep = arens_gap(fams[0], fams[1], psi, s);
    } else if (fams.size() == 3) {
      rep = triple_all_orders({fams[0], fams[1], fams[2]}, psi, s);
    } else {
      throw UsageError("--families takes two or three comma-separated families");
    }
    res.doc = {{"report", rep.to_json()}};
    if (!rep.all_converged()) res.status = kFail;
    res.text = rep.to_table();
  }
  res.doc["schema"] = "bidual.witness/1";
  return res;
}

}  // namespace bidual::cli
