#include "bidual/jordan/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace bidual {

using cplx = std::complex<double>;

TrilinearTensor::TrilinearTensor(Dims dims) : dims_(dims) {
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("tensor dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(dims[0] * dims[1] * dims[2] * dims[3]), cplx(0, 0));
}

TrilinearTensor TrilinearTensor::random(Dims dims, Rng& rng) {
  TrilinearTensor t(dims);
  for (auto& v : t.data_) v = unit_disc(rng);
  return t;
}

std::size_t TrilinearTensor::index(int i, int j, int k, int y) const {
  if (i < 0 || j < 0 || k < 0 || y < 0 || i >= dims_[0] || j >= dims_[1] || k >= dims_[2] || y >= dims_[3]) {
    throw std::out_of_range("tensor index out of range");
  }
  return static_cast<std::size_t>(((i * dims_[1] + j) * dims_[2] + k) * dims_[3] + y);
}

cplx& TrilinearTensor::at(int i, int j, int k, int y) { return data_[index(i, j, k, y)]; }
const cplx& TrilinearTensor::at(int i, int j, int k, int y) const { return data_[index(i, j, k, y)]; }

std::vector<cplx> TrilinearTensor::apply(const std::vector<cplx>& x1, const std::vector<cplx>& x2,
                                         const std::vector<cplx>& x3) const {
  if (static_cast<int>(x1.size()) != dims_[0] || static_cast<int>(x2.size()) != dims_[1] ||
      static_cast<int>(x3.size()) != dims_[2]) {
    throw std::invalid_argument("argument dimensions do not match the tensor");
  }
  std::vector<cplx> out(static_cast<std::size_t>(dims_[3]), cplx(0, 0));
  for (int i = 0; i < dims_[0]; ++i)
    for (int j = 0; j < dims_[1]; ++j)
      for (int k = 0; k < dims_[2]; ++k) {
        cplx w = x1[static_cast<std::size_t>(i)] * x2[static_cast<std::size_t>(j)] * x3[static_cast<std::size_t>(k)];
        for (int y = 0; y < dims_[3]; ++y) out[static_cast<std::size_t>(y)] += at(i, j, k, y) * w;
      }
  return out;
}

TrilinearTensor adjoint(const TrilinearTensor& t) {
  const auto& d = t.dims();
  TrilinearTensor out({d[3], d[0], d[1], d[2]});
  for (int i = 0; i < d[0]; ++i)
    for (int j = 0; j < d[1]; ++j)
      for (int k = 0; k < d[2]; ++k)
        for (int y = 0; y < d[3]; ++y) out.at(y, i, j, k) = t.at(i, j, k, y);
  return out;
}

TrilinearTensor circledast(const TrilinearTensor& t) { return adjoint(adjoint(adjoint(adjoint(t)))); }

TrilinearTensor permute_inputs(const TrilinearTensor& t, const Perm3& sigma) {
  const auto& d = t.dims();
  TrilinearTensor::Dims nd{d[static_cast<std::size_t>(sigma(1) - 1)], d[static_cast<std::size_t>(sigma(2) - 1)],
                           d[static_cast<std::size_t>(sigma(3) - 1)], d[3]};
  TrilinearTensor out(nd);
  std::array<int, 3> src{};
  for (int i = 0; i < nd[0]; ++i)
    for (int j = 0; j < nd[1]; ++j)
      for (int k = 0; k < nd[2]; ++k) {
        std::array<int, 3> idx{i, j, k};
        for (int l = 0; l < 3; ++l) src[static_cast<std::size_t>(sigma(l + 1) - 1)] = idx[static_cast<std::size_t>(l)];
        for (int y = 0; y < nd[3]; ++y) out.at(i, j, k, y) = t.at(src[0], src[1], src[2], y);
      }
  return out;
}

TrilinearTensor permuted_extension(const TrilinearTensor& t, const Perm3& sigma) {
  return permute_inputs(circledast(permute_inputs(t, sigma)), sigma.inverse());
}

double max_abs_difference(const TrilinearTensor& a, const TrilinearTensor& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("tensor dimensions differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

namespace {

// Matrix of the linear map x_leg ↦ f(...) with the other two arguments fixed.
Eigen::MatrixXcd partial_map(const TrilinearTensor& t, int leg, const std::array<Eigen::VectorXcd, 3>& x) {
  const auto& d = t.dims();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d[3], d[static_cast<std::size_t>(leg)]);
  for (int i = 0; i < d[0]; ++i)
    for (int j = 0; j < d[1]; ++j)
      for (int k = 0; k < d[2]; ++k) {
        std::array<int, 3> idx{i, j, k};
        cplx w(1, 0);
        for (int l = 0; l < 3; ++l) {
          if (l != leg) w *= x[static_cast<std::size_t>(l)](idx[static_cast<std::size_t>(l)]);
        }
        for (int y = 0; y < d[3]; ++y) M(y, idx[static_cast<std::size_t>(leg)]) += t.at(i, j, k, y) * w;
      }
  return M;
}

}  // namespace

double norm_estimate(const TrilinearTensor& t, Rng& rng, int restarts, int sweeps) {
  const auto& d = t.dims();
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    std::array<Eigen::VectorXcd, 3> x;
    for (std::size_t l = 0; l < 3; ++l) {
      x[l] = Eigen::VectorXcd(d[l]);
      for (int i = 0; i < d[l]; ++i) x[l](i) = unit_disc(rng);
      x[l].normalize();
    }
    double value = 0.0;
    for (int s = 0; s < sweeps; ++s) {
      for (int leg = 0; leg < 3; ++leg) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(partial_map(t, leg, x), Eigen::ComputeThinV);
        x[static_cast<std::size_t>(leg)] = svd.matrixV().col(0);
        value = svd.singularValues()(0);
      }
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace bidual
