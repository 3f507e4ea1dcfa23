#include "bidual/limits/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace bidual {

GroupTag parse_space(std::string_view name) {
  if (name == "l1z") return GroupTag::ZConv;
  if (name == "l1n") return GroupTag::NPointwise;
  throw std::invalid_argument("unknown space '" + std::string(name) + "' (expected l1z or l1n)");
}

std::string space_name(GroupTag tag) { return tag == GroupTag::ZConv ? "l1z" : "l1n"; }

TruncatedSeq::TruncatedSeq(GroupTag tag, std::int64_t bound) : tag_(tag), bound_(bound) {
  if (bound < 0) throw std::invalid_argument("sequence bound must be nonnegative");
}

TruncatedSeq TruncatedSeq::delta(GroupTag tag, std::int64_t j, std::int64_t bound) {
  TruncatedSeq s(tag, bound);
  s.add(j, Scalar(1));
  return s;
}

void TruncatedSeq::check_index(std::int64_t j) const {
  if (tag_ == GroupTag::NPointwise && j < 0) {
    throw SequenceError("index " + std::to_string(j) + " is outside the natural numbers");
  }
  if (j > bound_ || j < -bound_) {
    throw SequenceError("index " + std::to_string(j) + " overflows the window bound " + std::to_string(bound_));
  }
}

Scalar TruncatedSeq::operator[](std::int64_t j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void TruncatedSeq::add(std::int64_t j, const Scalar& v) {
  check_index(j);
  if (v.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(j, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

double TruncatedSeq::l1_norm() const {
  double s = 0.0;
  for (const auto& [j, v] : coeffs_) s += v.abs();
  return s;
}

std::string TruncatedSeq::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, v] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (!v.is_one()) os << "(" << v.to_string() << ")";
    os << "δ" << j;
  }
  return os.str();
}

namespace {

void require_same(const TruncatedSeq& x, const TruncatedSeq& y) {
  if (x.tag() != y.tag()) throw SequenceError("sequences live on different groups");
}

}  // namespace

TruncatedSeq convolve(const TruncatedSeq& x, const TruncatedSeq& y) {
  require_same(x, y);
  if (x.tag() != GroupTag::ZConv) throw SequenceError("convolution needs the l1z tag");
  TruncatedSeq out(x.tag(), std::max(x.bound(), y.bound()));
  for (const auto& [i, a] : x.support())
    for (const auto& [j, b] : y.support()) out.add(i + j, a * b);
  return out;
}

TruncatedSeq pointwise(const TruncatedSeq& x, const TruncatedSeq& y) {
  require_same(x, y);
  TruncatedSeq out(x.tag(), std::max(x.bound(), y.bound()));
  for (const auto& [i, a] : x.support()) {
    auto it = y.support().find(i);
    if (it != y.support().end()) out.add(i, a * it->second);
  }
  return out;
}

TruncatedSeq multiply(const TruncatedSeq& x, const TruncatedSeq& y) {
  return x.tag() == GroupTag::ZConv ? convolve(x, y) : pointwise(x, y);
}

TruncatedSeq involution(const TruncatedSeq& x) {
  TruncatedSeq out(x.tag(), x.bound());
  for (const auto& [j, v] : x.support()) out.add(x.tag() == GroupTag::ZConv ? -j : j, v.conj());
  return out;
}

TestFunctional TestFunctional::heaviside() {
  TestFunctional f;
  f.kind_ = Kind::Heaviside;
  f.name_ = "heaviside";
  f.bound_ = 1.0;
  return f;
}

TestFunctional TestFunctional::parity() {
  TestFunctional f;
  f.kind_ = Kind::Parity;
  f.name_ = "parity";
  f.bound_ = 1.0;
  return f;
}

TestFunctional TestFunctional::constant(const Scalar& c) {
  TestFunctional f;
  f.kind_ = Kind::Constant;
  f.name_ = c.is_one() ? "constant" : "constant:" + c.to_string();
  f.constant_ = c;
  f.bound_ = c.abs();
  return f;
}

TestFunctional TestFunctional::window(std::int64_t offset, std::vector<Scalar> values) {
  TestFunctional f;
  f.kind_ = Kind::Window;
  f.offset_ = offset;
  std::ostringstream os;
  os << "window:";
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? "," : "") << values[i].to_string();
    f.bound_ = std::max(f.bound_, values[i].abs());
  }
  if (offset != 0) os << "@" << offset;
  f.name_ = os.str();
  f.values_ = std::move(values);
  return f;
}

TestFunctional TestFunctional::parse(std::string_view spec) {
  if (spec == "heaviside") return heaviside();
  if (spec == "parity") return parity();
  if (spec == "constant") return constant(Scalar(1));
  if (spec.rfind("constant:", 0) == 0) return constant(Scalar::parse(spec.substr(9)));
  if (spec.rfind("window:", 0) == 0) {
    std::string_view body = spec.substr(7);
    std::int64_t offset = 0;
    if (auto at = body.find('@'); at != std::string_view::npos) {
      std::string_view off = body.substr(at + 1);
      auto [ptr, ec] = std::from_chars(off.data(), off.data() + off.size(), offset);
      if (ec != std::errc() || ptr != off.data() + off.size()) {
        throw std::invalid_argument("bad window offset in '" + std::string(spec) + "'");
      }
      body = body.substr(0, at);
    }
    std::vector<Scalar> values;
    std::stringstream ss{std::string(body)};
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(Scalar::parse(item));
    if (values.empty()) throw std::invalid_argument("window functional needs at least one value");
    return window(offset, std::move(values));
  }
  throw std::invalid_argument("unknown functional '" + std::string(spec) + "'");
}

Scalar TestFunctional::operator()(std::int64_t j) const {
  switch (kind_) {
    case Kind::Heaviside:
      return j >= 0 ? Scalar(1) : Scalar(0);
    case Kind::Parity:
      return (j % 2 == 0) ? Scalar(1) : Scalar(-1);
    case Kind::Constant:
      return constant_;
    case Kind::Window: {
      std::int64_t k = j - offset_;
      if (k < 0 || k >= static_cast<std::int64_t>(values_.size())) return Scalar(0);
      return values_[static_cast<std::size_t>(k)];
    }
  }
  return Scalar(0);
}

Scalar pair(const TestFunctional& psi, const TruncatedSeq& x) {
  Scalar s;
  for (const auto& [j, v] : x.support()) s += psi(j) * v;
  return s;
}

}  // namespace bidual
