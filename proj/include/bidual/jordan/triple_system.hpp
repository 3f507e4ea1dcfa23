#pragma once

#include "bidual/common/random.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bidual {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

enum class SystemKind { RectMatrix, CStarMatrix, Hilbert, JBStarAlgebra };

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional Jordan triple system on coordinate vectors.
///   rect:pxq, cstar:n   {a,b,c} = ½(a b* c + c b* a), operator norm; matrices
///                       are vectorized column-major, so the coordinate inner
///                       product is the trace inner product.
///   hilbert:n           {a,b,c} = ½(⟨a,b⟩c + ⟨c,b⟩a), Euclidean norm.
///   jbstar:n            {a,b,c} = (a∘b*)∘c + (c∘b*)∘a − (a∘c)∘b* on the diagonal
///                       commutative C*-algebra ℂⁿ, sup norm.
class TripleSystem {
 public:
  TripleSystem(SystemKind kind, int rows, int cols);
  /// `cstar:3`, `rect:2x3`, `hilbert:4`, `jbstar:3`.
  static TripleSystem parse(std::string_view spec);

  SystemKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_matrix() const { return kind_ == SystemKind::RectMatrix || kind_ == SystemKind::CStarMatrix; }
  std::string name() const;

  CVec product(const CVec& a, const CVec& b, const CVec& c) const;
  double norm(const CVec& a) const;

  CMat as_matrix(const CVec& v) const;
  CVec from_matrix(const CMat& m) const;

  CVec random_element(Rng& rng) const;
  CVec zero() const { return CVec::Zero(dim_); }

 private:
  SystemKind kind_;
  int rows_;
  int cols_;
  int dim_;
  void check(const CVec& v) const;
};

/// Realified coordinates [Re v; Im v].
RVec realify(const CVec& v);
CVec complexify(const RVec& v);
/// Real 2d×2d form of a complex-linear operator.
RMat realify(const CMat& m);
/// Inverse of realify for operators that are complex-linear.
CMat complexify(const RMat& m);

double spectral_norm(const CMat& m);
double spectral_norm(const RMat& m);

/// L(a,b)x = {a,b,x} as a complex d×d matrix.
CMat L_operator(const TripleSystem& sys, const CVec& a, const CVec& b);
/// Q(a,b)x = {a,x,b} (conjugate-linear) on the realified space.
RMat Q_operator(const TripleSystem& sys, const CVec& a, const CVec& b);
inline RMat Q_operator(const TripleSystem& sys, const CVec& a) { return Q_operator(sys, a, a); }

/// ‖{a,b,{c,d,e}} − {{a,b,c},d,e} + {c,{b,a,d},e} − {c,d,{a,b,e}}‖.
double jordan_residual(const TripleSystem& sys, const CVec& a, const CVec& b, const CVec& c, const CVec& d,
                       const CVec& e);
/// ‖{a,b,{c,d,e}} − {{a,b,c},d,e}‖.
double abelian_residual(const TripleSystem& sys, const CVec& a, const CVec& b, const CVec& c, const CVec& d,
                        const CVec& e);
/// ‖{a,b,c} − {c,b,a}‖.
double outer_symmetry_residual(const TripleSystem& sys, const CVec& a, const CVec& b, const CVec& c);
/// Operator norm of Q(a)Q(b) − 2 L(a,b)² + L(Q(a)b, b) on the realified space.
double qq_identity_residual(const TripleSystem& sys, const CVec& a, const CVec& b);

}  // namespace bidual
