#pragma once

#include "bidual/common/random.hpp"
#include "bidual/compiler/perm3.hpp"

#include <array>
#include <complex>
#include <vector>

namespace bidual {

/// Dense trilinear map f: X1 × X2 × X3 → Y in fixed bases,
/// f(x1,x2,x3)_y = Σ T(i,j,k,y) x1_i x2_j x3_k.
class TrilinearTensor {
 public:
  using Dims = std::array<int, 4>;  // d1, d2, d3, dY

  TrilinearTensor() = default;
  explicit TrilinearTensor(Dims dims);
  static TrilinearTensor random(Dims dims, Rng& rng);

  const Dims& dims() const { return dims_; }
  std::complex<double>& at(int i, int j, int k, int y);
  const std::complex<double>& at(int i, int j, int k, int y) const;
  const std::vector<std::complex<double>>& data() const { return data_; }

  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& x1,
                                          const std::vector<std::complex<double>>& x2,
                                          const std::vector<std::complex<double>>& x3) const;

 private:
  Dims dims_{0, 0, 0, 0};
  std::vector<std::complex<double>> data_;
  std::size_t index(int i, int j, int k, int y) const;
};

/// f*: Y* × X1 × X2 → X3*, ⟨f*(y*,x1,x2), x3⟩ = ⟨y*, f(x1,x2,x3)⟩.
/// Signature (d1,d2,d3,dY) becomes (dY,d1,d2,d3).
TrilinearTensor adjoint(const TrilinearTensor& t);
/// Four-fold adjoint f****, landing back on the original signature.
TrilinearTensor circledast(const TrilinearTensor& t);
/// Input legs reordered: leg k of the result is leg σ(k) of t.
TrilinearTensor permute_inputs(const TrilinearTensor& t, const Perm3& sigma);
/// ((f^σ)^⊛)^{σ⁻¹}.
TrilinearTensor permuted_extension(const TrilinearTensor& t, const Perm3& sigma);

double max_abs_difference(const TrilinearTensor& a, const TrilinearTensor& b);

/// Norm sup ‖f(x1,x2,x3)‖ over Euclidean unit balls, estimated by alternating
/// maximization from several seeded starts.
double norm_estimate(const TrilinearTensor& t, Rng& rng, int restarts = 8, int sweeps = 60);

}  // namespace bidual
