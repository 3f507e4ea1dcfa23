#include "bidual/term/scalar.hpp"

#include <boost/rational.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bidual {

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in scalar literal: '" + std::string(s) + "'");
  }
  return v;
}

// Unsigned rational `p` or `p/q`; empty means 1 (as in `i` or `-i`).
Rational parse_magnitude(std::string_view s) {
  if (s.empty()) return Rational(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  auto den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in scalar literal");
  return Rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace

double Scalar::abs() const {
  return std::hypot(boost::rational_cast<double>(re_), boost::rational_cast<double>(im_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  if (den.numerator() == 0) throw std::domain_error("division by zero scalar");
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = re;
  im_ = im;
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = cmp(a.re_, b.re_); c != 0) return c;
  return cmp(a.im_, b.im_);
}

std::string rational_to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

std::string Scalar::to_string() const {
  if (im_.numerator() == 0) return rational_to_string(re_);
  std::string out;
  if (re_.numerator() != 0) out = rational_to_string(re_);
  Rational mag = im_.numerator() < 0 ? -im_ : im_;
  if (im_.numerator() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (mag != Rational(1)) out += rational_to_string(mag);
  out += "i";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");

  // Split into at most two signed terms at a sign that is not the leading one.
  Scalar result;
  std::size_t start = 0;
  int terms = 0;
  while (start < s.size()) {
    std::size_t end = start + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + start, end - start);
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    bool imaginary = !term.empty() && term.back() == 'i';
    if (imaginary) term.remove_suffix(1);
    if (!imaginary && term.empty()) throw std::invalid_argument("dangling sign in scalar literal");
    Rational mag = parse_magnitude(term);
    if (negative) mag = -mag;
    if (imaginary) {
      result += Scalar(Rational(0), mag);
    } else {
      result += Scalar(mag);
    }
    if (++terms > 2) throw std::invalid_argument("too many terms in scalar literal: '" + s + "'");
    start = end;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace bidual
