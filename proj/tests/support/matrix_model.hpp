#pragma once

#include "bidual/common/random.hpp"
#include "bidual/term/normalize.hpp"
#include "bidual/term/term.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace bidual::testing {

/// Concrete algebras in which a relation set holds, used to check that
/// normalization preserves values.
///   none / trace: 3×3 matrices, □ = AB, ◊ = BA, * = entrywise conjugation
///   regular: 3×3 matrices, □ = ◊ = AB, * = conjugate transpose
///   commutative: diagonal matrices
/// Algebra letters are central (scalar matrices) outside the commutative model.
/// Functionals are real-weighted entry sums, or the trace when tracial.
class MatrixModel {
 public:
  using Mat = Eigen::Matrix3cd;

  MatrixModel(const RelationSet& r, std::uint64_t seed) : r_(r) {
    Rng rng(seed);
    for (const char* name : {"m", "n", "p", "x", "y", "z"}) values_[name] = element(rng, false);
    for (const char* name : {"a", "b", "c", "d", "e"}) values_[name] = element(rng, true);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto* w : {&phi_, &psi_}) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) (*w)(i, j) = u(rng);
      if (r_.regular && !r_.commutative) *w = 0.5 * (*w + w->transpose()).eval();
    }
  }

  Mat eval(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Unit:
        return Mat::Identity();
      case Term::Kind::Atom:
        return atom_value(t.atom());
      case Term::Kind::Pairing:
        return functional(t.functional(), atom_value(Atom{t.paired_atom()})) * Mat::Identity();
      case Term::Kind::Func:
        return functional(t.functional(), eval(t.func_arg())) * Mat::Identity();
      case Term::Kind::Star:
        return involution(eval(t.star_arg()));
      case Term::Kind::Sum: {
        Mat s = Mat::Zero();
        for (const auto& [c, a] : t.addends()) s += std::complex<double>(to_double(c.re()), to_double(c.im())) * eval(a);
        return s;
      }
      case Term::Kind::Product: {
        Mat acc = Mat::Identity();
        for (const auto& f : t.factors()) {
          Mat v = eval(f);
          acc = (t.op() == ProductOp::Loz && !r_.regular && !r_.commutative) ? Mat(v * acc) : Mat(acc * v);
        }
        return acc;
      }
    }
    throw std::logic_error("unknown term kind");
  }

 private:
  RelationSet r_;
  std::map<std::string, Mat> values_;
  Eigen::Matrix3d phi_, psi_;

  static double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
  }

  Mat element(Rng& rng, bool letter) const {
    Mat m = Mat::Zero();
    if (r_.commutative) {
      for (int i = 0; i < 3; ++i) m(i, i) = unit_disc(rng);
    } else if (letter) {
      m = unit_disc(rng) * Mat::Identity();
    } else {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = unit_disc(rng);
    }
    return m;
  }

  Mat involution(const Mat& m) const { return (r_.regular && !r_.commutative) ? Mat(m.adjoint()) : Mat(m.conjugate()); }

  Mat atom_value(const Atom& a) const {
    auto it = values_.find(a.name);
    if (it == values_.end()) throw std::invalid_argument("no model value for atom " + a.name);
    return a.starred ? involution(it->second) : it->second;
  }

  std::complex<double> functional(const std::string& name, const Mat& x) const {
    if (r_.trace.count(name) && !r_.commutative) return x.trace();
    const Eigen::Matrix3d& w = name == "phi" ? phi_ : psi_;
    std::complex<double> s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += w(i, j) * x(i, j);
    return s;
  }
};

}  // namespace bidual::testing
