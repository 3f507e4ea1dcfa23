#include "bidual/jordan/triple_system.hpp"

#include <charconv>

namespace bidual {

namespace {

int parse_positive(std::string_view s, std::string_view spec) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0) {
    throw std::invalid_argument("bad dimension in system spec '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

TripleSystem::TripleSystem(SystemKind kind, int rows, int cols) : kind_(kind), rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("system dimensions must be positive");
  if (kind == SystemKind::CStarMatrix && rows != cols) throw std::invalid_argument("cstar systems are square");
  if ((kind == SystemKind::Hilbert || kind == SystemKind::JBStarAlgebra) && cols != 1) {
    throw std::invalid_argument("vector systems have one column");
  }
  dim_ = rows * cols;
}

TripleSystem TripleSystem::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("system spec must look like kind:dim");
  std::string_view kind = spec.substr(0, colon);
  std::string_view dims = spec.substr(colon + 1);
  if (kind == "cstar") {
    int n = parse_positive(dims, spec);
    return {SystemKind::CStarMatrix, n, n};
  }
  if (kind == "rect") {
    auto x = dims.find('x');
    if (x == std::string_view::npos) throw std::invalid_argument("rect systems are written rect:pxq");
    return {SystemKind::RectMatrix, parse_positive(dims.substr(0, x), spec), parse_positive(dims.substr(x + 1), spec)};
  }
  if (kind == "hilbert") return {SystemKind::Hilbert, parse_positive(dims, spec), 1};
  if (kind == "jbstar") return {SystemKind::JBStarAlgebra, parse_positive(dims, spec), 1};
  throw std::invalid_argument("unknown system kind '" + std::string(kind) + "'");
}

std::string TripleSystem::name() const {
  switch (kind_) {
    case SystemKind::RectMatrix:
      return "rect:" + std::to_string(rows_) + "x" + std::to_string(cols_);
    case SystemKind::CStarMatrix:
      return "cstar:" + std::to_string(rows_);
    case SystemKind::Hilbert:
      return "hilbert:" + std::to_string(rows_);
    case SystemKind::JBStarAlgebra:
      return "jbstar:" + std::to_string(rows_);
  }
  return {};
}

void TripleSystem::check(const CVec& v) const {
  if (v.size() != dim_) {
    throw DimensionError("element of dimension " + std::to_string(v.size()) + " passed to " + name());
  }
}

CMat TripleSystem::as_matrix(const CVec& v) const {
  check(v);
  return Eigen::Map<const CMat>(v.data(), rows_, cols_);
}

CVec TripleSystem::from_matrix(const CMat& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw DimensionError("matrix shape does not match " + name());
  return Eigen::Map<const CVec>(m.data(), dim_);
}

CVec TripleSystem::product(const CVec& a, const CVec& b, const CVec& c) const {
  check(a);
  check(b);
  check(c);
  switch (kind_) {
    case SystemKind::RectMatrix:
    case SystemKind::CStarMatrix: {
      CMat A = as_matrix(a), B = as_matrix(b), C = as_matrix(c);
      CMat Bs = B.adjoint();
      return from_matrix(0.5 * (A * Bs * C + C * Bs * A));
    }
    case SystemKind::Hilbert: {
      cplx ab = b.dot(a);  // ⟨a,b⟩, linear in a
      cplx cb = b.dot(c);
      return 0.5 * (ab * c + cb * a);
    }
    case SystemKind::JBStarAlgebra: {
      auto circ = [](const CVec& x, const CVec& y) -> CVec { return x.cwiseProduct(y); };
      CVec bs = b.conjugate();
      return circ(circ(a, bs), c) + circ(circ(c, bs), a) - circ(circ(a, c), bs);
    }
  }
  return {};
}

double TripleSystem::norm(const CVec& a) const {
  check(a);
  switch (kind_) {
    case SystemKind::RectMatrix:
    case SystemKind::CStarMatrix:
      return spectral_norm(as_matrix(a));
    case SystemKind::Hilbert:
      return a.norm();
    case SystemKind::JBStarAlgebra:
      return a.cwiseAbs().maxCoeff();
  }
  return 0.0;
}

CVec TripleSystem::random_element(Rng& rng) const {
  CVec v(dim_);
  for (int i = 0; i < dim_; ++i) v(i) = unit_disc(rng);
  return v;
}

RVec realify(const CVec& v) {
  RVec out(2 * v.size());
  out << v.real(), v.imag();
  return out;
}

CVec complexify(const RVec& v) {
  const Eigen::Index d = v.size() / 2;
  CVec out(d);
  for (Eigen::Index i = 0; i < d; ++i) out(i) = cplx(v(i), v(d + i));
  return out;
}

RMat realify(const CMat& m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  RMat out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = m.real();
  out.topRightCorner(r, c) = -m.imag();
  out.bottomLeftCorner(r, c) = m.imag();
  out.bottomRightCorner(r, c) = m.real();
  return out;
}

CMat complexify(const RMat& m) {
  const Eigen::Index r = m.rows() / 2, c = m.cols() / 2;
  CMat out(r, c);
  out.real() = m.topLeftCorner(r, c);
  out.imag() = m.bottomLeftCorner(r, c);
  return out;
}

double spectral_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

double spectral_norm(const RMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<RMat> svd(m);
  return svd.singularValues()(0);
}

CMat L_operator(const TripleSystem& sys, const CVec& a, const CVec& b) {
  const int d = sys.dim();
  CMat L(d, d);
  for (int k = 0; k < d; ++k) L.col(k) = sys.product(a, b, CVec::Unit(d, k));
  return L;
}

RMat Q_operator(const TripleSystem& sys, const CVec& a, const CVec& b) {
  const int d = sys.dim();
  RMat Q(2 * d, 2 * d);
  for (int k = 0; k < d; ++k) {
    CVec e = CVec::Unit(d, k);
    Q.col(k) = realify(sys.product(a, e, b));
    Q.col(d + k) = realify(sys.product(a, cplx(0, 1) * e, b));
  }
  return Q;
}

double jordan_residual(const TripleSystem& sys, const CVec& a, const CVec& b, const CVec& c, const CVec& d,
                       const CVec& e) {
  auto P = [&sys](const CVec& x, const CVec& y, const CVec& z) { return sys.product(x, y, z); };
  CVec r = P(a, b, P(c, d, e)) - P(P(a, b, c), d, e) + P(c, P(b, a, d), e) - P(c, d, P(a, b, e));
  return sys.norm(r);
}

double abelian_residual(const TripleSystem& sys, const CVec& a, const CVec& b, const CVec& c, const CVec& d,
                        const CVec& e) {
  return sys.norm(sys.product(a, b, sys.product(c, d, e)) - sys.product(sys.product(a, b, c), d, e));
}

double outer_symmetry_residual(const TripleSystem& sys, const CVec& a, const CVec& b, const CVec& c) {
  return sys.norm(sys.product(a, b, c) - sys.product(c, b, a));
}

double qq_identity_residual(const TripleSystem& sys, const CVec& a, const CVec& b) {
  RMat lhs = Q_operator(sys, a) * Q_operator(sys, b);
  RMat Lab = realify(L_operator(sys, a, b));
  CVec qab = sys.product(a, b, a);
  RMat rhs = 2.0 * Lab * Lab - realify(L_operator(sys, qab, b));
  return spectral_norm(RMat(lhs - rhs));
}

}  // namespace bidual
