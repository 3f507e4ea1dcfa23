#pragma once

#include "bidual/jordan/triple_system.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bidual {

struct Tolerances {
  double algebraic = 1e-10;  // identities, relative
  double spectral = 1e-8;    // norms and spectra
  double qq = 1e-9;          // operator identity, relative
};

struct CheckResult {
  std::string name;
  double worst = 0.0;  // largest residual seen
  double tol = 0.0;
  bool pass() const { return worst <= tol; }
};

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const std::vector<CheckResult>& cs);
bool all_pass(const std::vector<CheckResult>& cs);

/// Per sample a: |‖{a,a,a}‖ − ‖a‖³| / ‖a‖³, self-adjointness of L(a,a) in the
/// coordinate inner product, and its least eigenvalue over ‖a‖².
std::vector<CheckResult> jbstar_axiom_checks(const TripleSystem& sys, const std::vector<CVec>& samples,
                                             double tol = 1e-8);

/// Random sweep with `trials` independent draws seeded from `seed`: relative
/// Jordan identity, outer symmetry, JB* axioms, and the QQ operator identity.
std::vector<CheckResult> jordan_suite(const TripleSystem& sys, int trials, std::uint64_t seed,
                                      const Tolerances& tol = {});

}  // namespace bidual
