#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bidual {

using Rational = boost::rational<std::int64_t>;

/// Exact complex scalar with rational real and imaginary parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(re) {}      // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(re), im_(im) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }

  /// Accepts `3`, `-1/2`, `i`, `2/3i`, `1/2+1/3i`, `-i`, optionally wrapped in braces.
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.numerator() == 0 && im_.numerator() == 0; }
  bool is_one() const { return re_ == Rational(1) && im_.numerator() == 0; }
  bool is_real() const { return im_.numerator() == 0; }

  Scalar conj() const { return {re_, -im_}; }
  double abs() const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  /// Total order: real part first, then imaginary part.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical text: `1/2`, `-3`, `i`, `1/2-2i`. Round-trips through parse().
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const Rational& r);

}  // namespace bidual
