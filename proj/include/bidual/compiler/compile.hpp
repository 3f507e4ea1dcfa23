#pragma once

#include "bidual/compiler/perm3.hpp"
#include "bidual/compiler/template.hpp"
#include "bidual/term/normalize.hpp"
#include "bidual/term/term.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bidual {

/// The extension of `tpl` indexed by σ, as a normalized term (relation set ∅).
/// Slots at Level::Algebra in `levels` are never limited and compile as a, b, c.
Term compile_extension(const TrilinearTemplate& tpl, const Perm3& sigma, const LevelPattern& levels = kAllBidual);

using Partition = std::vector<std::vector<int>>;

/// Classes of {0..5} under equality of normal forms, ordered by least member.
Partition partition_by_equality(const std::array<Term, 6>& terms, const RelationSet& r);

struct ExtensionReport {
  std::array<Term, 6> extensions;
  RelationSet relations;
  Partition classes;
  bool regular = false;

  nlohmann::json to_json() const;
};

ExtensionReport all_extensions(const TrilinearTemplate& tpl, const RelationSet& r = {},
                               const LevelPattern& levels = kAllBidual);

/// Partition of the six extensions with the given slots held in E, under ∅.
Partition coincidence_on_mixed(const TrilinearTemplate& tpl, const LevelPattern& levels);

/// If the three extensions of `triple` coincide under r then all six do.
/// Returns false only when that implication fails.
bool triple_implies_regular(const ExtensionReport& report, const PermTriple& triple);

struct SymmetryResult {
  bool holds = false;
  Term residual;
};

/// residual = normalize(π^i(m,n,p) − π^i(p,n,m), r).
SymmetryResult outer_symmetry_check(const TrilinearTemplate& tpl, int i, const RelationSet& r = {});

/// π^0(m,n,p)=π^2(p,n,m), π^1(m,n,p)=π^4(p,n,m), π^3(m,n,p)=π^5(p,n,m) under ∅.
/// Throws TemplateError unless the template is outer-symmetric.
struct PairIdentity {
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
  Term residual;
};
std::vector<PairIdentity> symmetry_pairs_check(const TrilinearTemplate& tpl);

/// π^i applied to three terms: simultaneous substitution into the compiled body.
Term apply_extension(const Term& compiled, const Term& x, const Term& y, const Term& z);

/// Bindings for the Jordan variables a..e; unbound variables default to the
/// bidual atoms a→m, b→n, c→x, d→y, e→z.
using JordanBindings = std::map<std::string, Term>;

/// normalize(π(a,b,π(c,d,e)) − π(π(a,b,c),d,e) + π(c,π(b,a,d),e) − π(c,d,π(a,b,e)), r) with π = π^i.
Term jordan_identity_residual(const TrilinearTemplate& tpl, int i, const JordanBindings& bindings = {},
                              const RelationSet& r = {});

struct CenterEquation {
  int lhs = 0;  // extension labels
  int rhs = 0;
  Term difference;  // normalized under ∅
};

/// Defining equations of the j-th topological center for (σ,τ,ρ): the three
/// pairwise differences of the compiled extensions, slot j distinguished.
/// Throws std::invalid_argument unless the triple takes distinct values at j.
std::vector<CenterEquation> center_equations(const TrilinearTemplate& tpl, int j, const PermTriple& triple);

}  // namespace bidual
