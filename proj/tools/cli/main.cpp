#include "commands.hpp"

#include "bidual/term/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace bidual::cli;

namespace {

void add_output(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Emit JSON");
  sub->add_option("--out", o.out, "Write output to FILE");
}

void add_template(CLI::App* sub, Options& o, bool required) {
  auto* opt = sub->add_option("--template", o.tpl, "Trilinear template, e.g. \"a b* c\"");
  if (required) opt->required();
  sub->add_option("--relations", o.relations, "Relation set: none or commutative,regular,trace:phi");
  sub->add_flag("--ascii", o.ascii, "ASCII rendering ([] and <>)");
}

void add_perm(CLI::App* sub, Options& o) {
  sub->add_option("--perm", o.perm, "Extension label 0..5 or all");
  sub->add_flag("--all", o.all, "All six extensions");
}

int emit(const Result& r, const Options& o) {
  std::string body = o.json ? r.doc.dump(2) + "\n" : r.text;
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kUsage;
    }
    f << body;
  }
  return r.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aron-Berner extensions of trilinear maps, Jordan triple checks and iterated-limit witnesses", "bidual"};
  app.require_subcommand(1);
  Options o;
  std::function<Result(const Options&)> run;

  auto* extend = app.add_subcommand("extend", "Compile the permuted extensions of a template");
  add_template(extend, o, true);
  add_perm(extend, o);
  extend->add_option("--levels", o.levels, "Per-slot levels, e.g. E,E**,E**");
  add_output(extend, o);
  extend->callback([&] { run = cmd_extend; });

  auto* norm = app.add_subcommand("normalize", "Normal form of a bidual expression");
  norm->add_option("--term", o.term, "Expression, e.g. \"m [] (n* <> p)\"")->required();
  norm->add_option("--relations", o.relations, "Relation set");
  norm->add_flag("--ascii", o.ascii, "ASCII rendering");
  add_output(norm, o);
  norm->callback([&] { run = cmd_normalize; });

  auto* centers = app.add_subcommand("centers", "Defining equations of topological centers");
  add_template(centers, o, true);
  centers->add_option("--center", o.center, "Center index j")->check(CLI::Range(1, 3));
  centers->add_option("--triple", o.triple, "Three extension labels, e.g. 0,2,3");
  add_output(centers, o);
  centers->callback([&] { run = cmd_centers; });

  auto* jordan = app.add_subcommand("jordan", "Jordan triple identities, numerically or on a template");
  jordan->add_option("--system", o.systems, "cstar:n, rect:pxq, hilbert:n or jbstar:n (repeatable)");
  jordan->add_option("--trials", o.trials, "Random trials per system");
  jordan->add_option("--tol", o.tol, "Tolerance for the algebraic identities");
  jordan->add_option("--seed", o.seed, "Random seed");
  add_template(jordan, o, false);
  add_perm(jordan, o);
  add_output(jordan, o);
  jordan->callback([&] { run = cmd_jordan; });

  auto* peirce = app.add_subcommand("peirce", "Peirce projections of a tripotent");
  peirce->add_option("--system", o.systems, "Triple system");
  peirce->add_option("--tripotent", o.tripotent, "Name (0, id, e11, e11+e22, e12) or JSON matrix file");
  peirce->add_option("--trials", o.trials, "Random samples for the multiplication rules");
  peirce->add_option("--tol", o.tol, "Tolerance for the algebraic identities");
  peirce->add_option("--seed", o.seed, "Random seed");
  add_output(peirce, o);
  peirce->callback([&] { run = cmd_peirce; });

  auto* witness = app.add_subcommand("witness", "Iterated-limit witnesses on l1(Z) and l1(N)");
  witness->add_option("--space", o.space, "l1z or l1n")->check(CLI::IsMember({"l1z", "l1n"}));
  witness->add_option("--functional", o.functional, "heaviside, parity, constant[:c], window:v0,v1,...[@offset]");
  witness->add_option("--families", o.families, "Two or three index families, e.g. n,-n or n,0,-n");
  witness->add_option("--N", o.N, "Truncation bound");
  witness->add_option("--window", o.window, "Trailing window for stabilization");
  add_output(witness, o);
  witness->callback([&] { run = cmd_witness; });

  auto* selftest = app.add_subcommand("selftest", "Golden corpus and invariant sweeps");
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--golden", o.golden, "Golden formula file (JSON)");
  add_output(selftest, o);
  selftest->callback([&] { run = cmd_selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    return emit(run(o), o);
  } catch (const bidual::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
