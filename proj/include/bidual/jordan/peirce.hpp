#pragma once

#include "bidual/jordan/checks.hpp"
#include "bidual/jordan/triple_system.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bidual {

class NotTripotentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TripotentRecord {
  CVec e;
  double residual = 0.0;  // ‖{e,e,e} − e‖
};

TripotentRecord check_tripotent(const TripleSystem& sys, const CVec& e);

/// Named tripotents: `0`, `id`, and sums of matrix units such as `e11+e22`
/// or `e12` (for vector systems `e1`, `e2+e3`, coordinate units).
CVec named_tripotent(const TripleSystem& sys, const std::string& spec);

/// Canonical partial isometries of a system: zero, single units, a sum of two
/// diagonal units, the identity (or a truncated unitary for rectangular shapes).
std::vector<std::pair<std::string, CVec>> canonical_tripotents(const TripleSystem& sys);

struct PeirceDecomposition {
  std::array<CMat, 3> P;  // P[k] projects onto E_k(e)

  std::array<int, 3> ranks(double tol = 1e-8) const;
};

/// P2 = Q(e)², P1 = 2(L(e,e) − Q(e)²), P0 = Id − 2L(e,e) + Q(e)².
/// Throws NotTripotentError when ‖{e,e,e} − e‖ > tol.
PeirceDecomposition peirce(const TripleSystem& sys, const CVec& e, double tol = 1e-10);

/// Resolution of identity, idempotence, mutual orthogonality, the spectrum of
/// L(e,e) against {0, ½, 1}, and L(e,e)P_k = (k/2)P_k.
std::vector<CheckResult> peirce_projection_checks(const TripleSystem& sys, const CVec& e,
                                                  const PeirceDecomposition& pd, const Tolerances& tol = {});

/// Peirce multiplication rules on random x_k ∈ E_k(e): {x_i,x_j,x_k} ∈ E_{i−j+k}
/// (zero outside 0..2), {E_0,E_2,E} = {E_2,E_0,E} = 0, and Q(a,b)(Id − P2) = 0
/// for a, b ∈ E_2(e). Residuals relative to the input norms.
std::vector<CheckResult> peirce_rules_residual(const TripleSystem& sys, const CVec& e, int samples,
                                               std::uint64_t seed, double tol = 1e-10);

}  // namespace bidual
