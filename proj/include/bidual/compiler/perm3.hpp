#pragma once

#include <array>
#include <string>
#include <vector>

namespace bidual {

/// Element of S3 with the fixed labelling
///   σ0 = (), σ1 = (23), σ2 = (13), σ3 = (12), σ4 = (132), σ5 = (123).
/// Images are 1-based: σ(k) for k in {1,2,3}. The extension indexed by σ takes
/// its limits in the order σ(1) (outermost), σ(2), σ(3) (innermost).
class Perm3 {
 public:
  Perm3() = default;
  static Perm3 from_label(int label);
  static Perm3 from_images(std::array<int, 3> images);
  static const std::array<Perm3, 6>& all();

  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  int label() const { return label_; }
  const std::array<int, 3>& images() const { return images_; }

  Perm3 inverse() const;
  /// (this ∘ other)(k) = this(other(k)).
  Perm3 compose(const Perm3& other) const;

  /// `σ4` or `s4` in ASCII.
  std::string name(bool ascii = false) const;

  friend bool operator==(const Perm3& a, const Perm3& b) { return a.label_ == b.label_; }

 private:
  std::array<int, 3> images_{1, 2, 3};
  int label_ = 0;
};

using PermTriple = std::array<Perm3, 3>;

/// The eight unordered triples of permutations with pairwise distinct values
/// at 1, each sorted by label, in lexicographic order.
std::vector<PermTriple> valid_triples();

/// True when the three permutations take pairwise distinct values at `point`.
bool distinct_at(const PermTriple& t, int point);

}  // namespace bidual
