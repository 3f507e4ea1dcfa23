#include "bidual/compiler/perm3.hpp"

#include <stdexcept>

namespace bidual {

namespace {

constexpr std::array<std::array<int, 3>, 6> kImages{{
    {1, 2, 3},
    {1, 3, 2},
    {3, 2, 1},
    {2, 1, 3},
    {3, 1, 2},
    {2, 3, 1},
}};

}  // namespace

Perm3 Perm3::from_label(int label) {
  if (label < 0 || label > 5) throw std::invalid_argument("permutation label must be in 0..5");
  Perm3 p;
  p.label_ = label;
  p.images_ = kImages[static_cast<std::size_t>(label)];
  return p;
}

Perm3 Perm3::from_images(std::array<int, 3> images) {
  for (int i = 0; i < 6; ++i) {
    if (kImages[static_cast<std::size_t>(i)] == images) return from_label(i);
  }
  throw std::invalid_argument("not a permutation of {1,2,3}");
}

const std::array<Perm3, 6>& Perm3::all() {
  static const std::array<Perm3, 6> perms{from_label(0), from_label(1), from_label(2),
                                          from_label(3), from_label(4), from_label(5)};
  return perms;
}

Perm3 Perm3::inverse() const {
  std::array<int, 3> inv{};
  for (int k = 1; k <= 3; ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return from_images(inv);
}

Perm3 Perm3::compose(const Perm3& other) const {
  std::array<int, 3> img{};
  for (int k = 1; k <= 3; ++k) img[static_cast<std::size_t>(k - 1)] = (*this)(other(k));
  return from_images(img);
}

std::string Perm3::name(bool ascii) const { return (ascii ? "s" : "σ") + std::to_string(label_); }

bool distinct_at(const PermTriple& t, int point) {
  return t[0](point) != t[1](point) && t[0](point) != t[2](point) && t[1](point) != t[2](point);
}

std::vector<PermTriple> valid_triples() {
  std::vector<PermTriple> out;
  const auto& p = Perm3::all();
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      for (int k = j + 1; k < 6; ++k) {
        PermTriple t{p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(k)]};
        if (distinct_at(t, 1)) out.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace bidual
