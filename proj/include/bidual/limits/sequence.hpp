#pragma once

#include "bidual/term/scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bidual {

enum class GroupTag { ZConv, NPointwise };

GroupTag parse_space(std::string_view name);  // "l1z" | "l1n"
std::string space_name(GroupTag tag);

class SequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finitely supported sequence on ℤ (convolution) or ℕ (pointwise product)
/// with exact coefficients. Indices must stay within [−bound, bound]
/// (or [0, bound] on ℕ).
class TruncatedSeq {
 public:
  static constexpr std::int64_t kDefaultBound = 1'000'000;

  explicit TruncatedSeq(GroupTag tag, std::int64_t bound = kDefaultBound);
  static TruncatedSeq delta(GroupTag tag, std::int64_t j, std::int64_t bound = kDefaultBound);

  GroupTag tag() const { return tag_; }
  std::int64_t bound() const { return bound_; }
  const std::map<std::int64_t, Scalar>& support() const { return coeffs_; }

  Scalar operator[](std::int64_t j) const;
  void add(std::int64_t j, const Scalar& v);

  double l1_norm() const;
  std::string to_string() const;

  friend bool operator==(const TruncatedSeq& a, const TruncatedSeq& b) {
    return a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GroupTag tag_;
  std::int64_t bound_;
  std::map<std::int64_t, Scalar> coeffs_;  // nonzero entries only

  void check_index(std::int64_t j) const;
};

TruncatedSeq convolve(const TruncatedSeq& x, const TruncatedSeq& y);
TruncatedSeq pointwise(const TruncatedSeq& x, const TruncatedSeq& y);
/// The algebra product of the tag: convolution on ℤ, pointwise on ℕ.
TruncatedSeq multiply(const TruncatedSeq& x, const TruncatedSeq& y);
/// x*(j) = conj(x(−j)) on ℤ, conj(x(j)) on ℕ.
TruncatedSeq involution(const TruncatedSeq& x);

/// Bounded functional j ↦ ψ(j), acting by ⟨ψ, x⟩ = Σ ψ(j) x(j).
class TestFunctional {
 public:
  static TestFunctional heaviside();
  static TestFunctional parity();
  static TestFunctional constant(const Scalar& c);
  static TestFunctional window(std::int64_t offset, std::vector<Scalar> values);
  /// `heaviside`, `parity`, `constant[:c]`, `window:v0,v1,...[@offset]`.
  static TestFunctional parse(std::string_view spec);

  const std::string& name() const { return name_; }
  Scalar operator()(std::int64_t j) const;
  /// Declared sup-norm bound.
  double bound() const { return bound_; }

 private:
  enum class Kind { Heaviside, Parity, Constant, Window };
  Kind kind_ = Kind::Constant;
  std::string name_;
  Scalar constant_;
  std::int64_t offset_ = 0;
  std::vector<Scalar> values_;
  double bound_ = 0.0;
};

Scalar pair(const TestFunctional& psi, const TruncatedSeq& x);

}  // namespace bidual
