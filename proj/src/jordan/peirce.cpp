#include "bidual/jordan/peirce.hpp"

#include "bidual/common/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace bidual {

TripotentRecord check_tripotent(const TripleSystem& sys, const CVec& e) {
  return {e, sys.norm(sys.product(e, e, e) - e)};
}

namespace {

int unit_index(const TripleSystem& sys, const std::string& term) {
  if (term.size() < 2 || term[0] != 'e') throw std::invalid_argument("bad tripotent unit '" + term + "'");
  std::string digits = term.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("bad tripotent unit '" + term + "'");
  }
  if (sys.is_matrix()) {
    if (digits.size() != 2) throw std::invalid_argument("matrix units are written eij with single digits");
    int i = digits[0] - '1', j = digits[1] - '1';
    if (i < 0 || j < 0 || i >= sys.rows() || j >= sys.cols()) throw std::invalid_argument("unit '" + term + "' out of range");
    return j * sys.rows() + i;
  }
  int i = std::stoi(digits) - 1;
  if (i < 0 || i >= sys.dim()) throw std::invalid_argument("unit '" + term + "' out of range");
  return i;
}

}  // namespace

CVec named_tripotent(const TripleSystem& sys, const std::string& spec) {
  CVec e = sys.zero();
  if (spec == "0") return e;
  if (spec == "id") {
    if (sys.is_matrix()) {
      return sys.from_matrix(CMat::Identity(sys.rows(), sys.cols()));
    }
    if (sys.kind() == SystemKind::Hilbert) {
      e(0) = 1.0;
      return e;
    }
    return CVec::Ones(sys.dim());
  }
  std::stringstream ss(spec);
  std::string term;
  while (std::getline(ss, term, '+')) e(unit_index(sys, term)) += 1.0;
  return e;
}

std::vector<std::pair<std::string, CVec>> canonical_tripotents(const TripleSystem& sys) {
  std::vector<std::pair<std::string, CVec>> out{{"0", sys.zero()}};
  if (sys.is_matrix()) {
    out.emplace_back("e11", named_tripotent(sys, "e11"));
    if (sys.rows() >= 2 && sys.cols() >= 2) out.emplace_back("e11+e22", named_tripotent(sys, "e11+e22"));
    if (sys.cols() >= 2) out.emplace_back("e12", named_tripotent(sys, "e12"));
  } else {
    out.emplace_back("e1", named_tripotent(sys, "e1"));
    if (sys.kind() == SystemKind::JBStarAlgebra && sys.dim() >= 2) out.emplace_back("e1+e2", named_tripotent(sys, "e1+e2"));
  }
  out.emplace_back("id", named_tripotent(sys, "id"));
  return out;
}

std::array<int, 3> PeirceDecomposition::ranks(double tol) const {
  std::array<int, 3> r{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (P[k].size() == 0) continue;
    Eigen::JacobiSVD<CMat> svd(P[k]);
    r[k] = static_cast<int>((svd.singularValues().array() > tol).count());
  }
  return r;
}

PeirceDecomposition peirce(const TripleSystem& sys, const CVec& e, double tol) {
  auto rec = check_tripotent(sys, e);
  if (rec.residual > tol) {
    throw NotTripotentError("element is not a tripotent: ‖{e,e,e} − e‖ = " + std::to_string(rec.residual));
  }
  const int d = sys.dim();
  CMat Q2 = complexify(RMat(Q_operator(sys, e) * Q_operator(sys, e)));
  CMat L = L_operator(sys, e, e);
  PeirceDecomposition pd;
  pd.P[2] = Q2;
  pd.P[1] = 2.0 * (L - Q2);
  pd.P[0] = CMat::Identity(d, d) - 2.0 * L + Q2;
  return pd;
}

std::vector<CheckResult> peirce_projection_checks(const TripleSystem& sys, const CVec& e,
                                                  const PeirceDecomposition& pd, const Tolerances& tol) {
  const int d = sys.dim();
  CheckResult sum{"resolution_of_identity", 0.0, tol.algebraic};
  CheckResult idem{"idempotent", 0.0, tol.algebraic};
  CheckResult orth{"mutually_orthogonal", 0.0, tol.algebraic};
  CheckResult spec{"L(e,e)_spectrum_in_{0,1/2,1}", 0.0, tol.spectral};
  CheckResult eig{"ranges_are_eigenspaces", 0.0, tol.algebraic};

  sum.worst = spectral_norm(CMat(pd.P[0] + pd.P[1] + pd.P[2] - CMat::Identity(d, d)));
  for (std::size_t i = 0; i < 3; ++i) {
    idem.worst = std::max(idem.worst, spectral_norm(CMat(pd.P[i] * pd.P[i] - pd.P[i])));
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) orth.worst = std::max(orth.worst, spectral_norm(CMat(pd.P[i] * pd.P[j])));
    }
  }
  CMat L = L_operator(sys, e, e);
  Eigen::ComplexEigenSolver<CMat> es(L, false);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    cplx lambda = es.eigenvalues()(k);
    double dist = std::min({std::abs(lambda), std::abs(lambda - 0.5), std::abs(lambda - 1.0)});
    spec.worst = std::max(spec.worst, dist);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    eig.worst = std::max(eig.worst, spectral_norm(CMat(L * pd.P[k] - (0.5 * static_cast<double>(k)) * pd.P[k])));
  }
  return {sum, idem, orth, spec, eig};
}

namespace {

struct RuleSample {
  double rule = 0.0;
  double vanish = 0.0;
  double q2 = 0.0;
};

double safe_ratio(double num, double den) { return den > 0 ? num / den : num; }

RuleSample rule_sample(const TripleSystem& sys, const PeirceDecomposition& pd, std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, index));
  std::array<CVec, 3> x;
  for (std::size_t k = 0; k < 3; ++k) x[k] = pd.P[k] * sys.random_element(rng);
  CVec y = sys.random_element(rng);
  RuleSample s;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const CVec& xi = x[static_cast<std::size_t>(i)];
        const CVec& xj = x[static_cast<std::size_t>(j)];
        const CVec& xk = x[static_cast<std::size_t>(k)];
        double scale = sys.norm(xi) * sys.norm(xj) * sys.norm(xk);
        CVec t = sys.product(xi, xj, xk);
        int target = i - j + k;
        CVec off = (target >= 0 && target <= 2) ? CVec(t - pd.P[static_cast<std::size_t>(target)] * t) : t;
        s.rule = std::max(s.rule, safe_ratio(sys.norm(off), scale));
      }
    }
  }
  double scale02 = sys.norm(x[0]) * sys.norm(x[2]) * sys.norm(y);
  s.vanish = std::max(safe_ratio(sys.norm(sys.product(x[0], x[2], y)), scale02),
                      safe_ratio(sys.norm(sys.product(x[2], x[0], y)), scale02));
  CVec a = pd.P[2] * sys.random_element(rng);
  CVec b = pd.P[2] * sys.random_element(rng);
  const int d = sys.dim();
  RMat residual = Q_operator(sys, a, b) * realify(CMat(CMat::Identity(d, d) - pd.P[2]));
  s.q2 = safe_ratio(spectral_norm(residual), sys.norm(a) * sys.norm(b));
  return s;
}

}  // namespace

std::vector<CheckResult> peirce_rules_residual(const TripleSystem& sys, const CVec& e, int samples, std::uint64_t seed,
                                               double tol) {
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  PeirceDecomposition pd = peirce(sys, e, tol);
  auto results = parallel_map(static_cast<std::size_t>(samples),
                              [&](std::size_t i) { return rule_sample(sys, pd, seed, i); });
  CheckResult rule{"peirce_multiplication_rules", 0.0, tol};
  CheckResult vanish{"E0_E2_products_vanish", 0.0, tol};
  CheckResult q2{"Q(a,b)_kills_complement_of_E2", 0.0, tol};
  for (const auto& s : results) {
    rule.worst = std::max(rule.worst, s.rule);
    vanish.worst = std::max(vanish.worst, s.vanish);
    q2.worst = std::max(q2.worst, s.q2);
  }
  return {rule, vanish, q2};
}

}  // namespace bidual
