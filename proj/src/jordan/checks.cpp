#include "bidual/jordan/checks.hpp"

#include "bidual/common/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace bidual {

nlohmann::json to_json(const CheckResult& c) {
  return {{"check", c.name}, {"worst", c.worst}, {"tol", c.tol}, {"pass", c.pass()}};
}

nlohmann::json to_json(const std::vector<CheckResult>& cs) {
  auto out = nlohmann::json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

bool all_pass(const std::vector<CheckResult>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const CheckResult& c) { return c.pass(); });
}

namespace {

struct AxiomSample {
  double cube = 0.0;
  double hermitian = 0.0;
  double negativity = 0.0;
};

AxiomSample axiom_sample(const TripleSystem& sys, const CVec& a) {
  AxiomSample s;
  double na = sys.norm(a);
  if (na == 0.0) return s;
  double n3 = na * na * na;
  s.cube = std::abs(sys.norm(sys.product(a, a, a)) - n3) / n3;
  CMat L = L_operator(sys, a, a);
  s.hermitian = spectral_norm(CMat(L - L.adjoint())) / (na * na);
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (L + L.adjoint()), Eigen::EigenvaluesOnly);
  s.negativity = std::max(0.0, -es.eigenvalues().minCoeff() / (na * na));
  return s;
}

}  // namespace

std::vector<CheckResult> jbstar_axiom_checks(const TripleSystem& sys, const std::vector<CVec>& samples, double tol) {
  CheckResult cube{"cube_norm", 0.0, tol};
  CheckResult herm{"L(a,a)_selfadjoint", 0.0, tol};
  CheckResult pos{"L(a,a)_spectrum_nonnegative", 0.0, tol};
  auto results = parallel_map(samples.size(), [&](std::size_t i) { return axiom_sample(sys, samples[i]); });
  for (const auto& s : results) {
    cube.worst = std::max(cube.worst, s.cube);
    herm.worst = std::max(herm.worst, s.hermitian);
    pos.worst = std::max(pos.worst, s.negativity);
  }
  return {cube, herm, pos};
}

namespace {

struct Trial {
  double jordan = 0.0;
  double symmetry = 0.0;
  double qq = 0.0;
  CVec sample;
};

Trial run_trial(const TripleSystem& sys, std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, index));
  CVec a = sys.random_element(rng), b = sys.random_element(rng), c = sys.random_element(rng),
       d = sys.random_element(rng), e = sys.random_element(rng);
  double na = sys.norm(a), nb = sys.norm(b), nc = sys.norm(c), nd = sys.norm(d), ne = sys.norm(e);
  Trial t;
  double s5 = na * nb * nc * nd * ne;
  double s3 = na * nb * nc;
  double s4 = na * na * nb * nb;
  t.jordan = s5 > 0 ? jordan_residual(sys, a, b, c, d, e) / s5 : 0.0;
  t.symmetry = s3 > 0 ? outer_symmetry_residual(sys, a, b, c) / s3 : 0.0;
  t.qq = s4 > 0 ? qq_identity_residual(sys, a, b) / s4 : 0.0;
  t.sample = a;
  return t;
}

}  // namespace

std::vector<CheckResult> jordan_suite(const TripleSystem& sys, int trials, std::uint64_t seed, const Tolerances& tol) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  auto results = parallel_map(static_cast<std::size_t>(trials), [&](std::size_t i) { return run_trial(sys, seed, i); });
  CheckResult jordan{"jordan_identity", 0.0, tol.algebraic};
  CheckResult sym{"outer_symmetry", 0.0, tol.algebraic};
  CheckResult qq{"qq_identity", 0.0, tol.qq};
  std::vector<CVec> samples;
  for (const auto& t : results) {
    jordan.worst = std::max(jordan.worst, t.jordan);
    sym.worst = std::max(sym.worst, t.symmetry);
    qq.worst = std::max(qq.worst, t.qq);
    samples.push_back(t.sample);
  }
  std::vector<CheckResult> out{jordan, sym};
  for (auto& c : jbstar_axiom_checks(sys, samples, tol.spectral)) out.push_back(c);
  out.push_back(qq);
  return out;
}

}  // namespace bidual
