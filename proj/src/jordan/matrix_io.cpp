#include "bidual/jordan/matrix_io.hpp"

#include <fstream>
#include <stdexcept>

namespace bidual {

namespace {

nlohmann::json entry(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx read_entry(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("complex entries are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json matrix_to_json(const CMat& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix rows have unequal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = read_entry(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

nlohmann::json tensor_to_json(const TrilinearTensor& t) {
  const auto& d = t.dims();
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < d[0]; ++i) {
    nlohmann::json a = nlohmann::json::array();
    for (int j = 0; j < d[1]; ++j) {
      nlohmann::json b = nlohmann::json::array();
      for (int k = 0; k < d[2]; ++k) {
        nlohmann::json c = nlohmann::json::array();
        for (int y = 0; y < d[3]; ++y) c.push_back(entry(t.at(i, j, k, y)));
        b.push_back(std::move(c));
      }
      a.push_back(std::move(b));
    }
    out.push_back(std::move(a));
  }
  return out;
}

TrilinearTensor tensor_from_json(const nlohmann::json& j) {
  try {
    TrilinearTensor::Dims d{static_cast<int>(j.size()), static_cast<int>(j.at(0).size()),
                            static_cast<int>(j.at(0).at(0).size()), static_cast<int>(j.at(0).at(0).at(0).size())};
    TrilinearTensor t(d);
    for (int i = 0; i < d[0]; ++i)
      for (int k1 = 0; k1 < d[1]; ++k1)
        for (int k2 = 0; k2 < d[2]; ++k2) {
          const auto& leaf = j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k1)).at(static_cast<std::size_t>(k2));
          if (static_cast<int>(leaf.size()) != d[3]) throw std::invalid_argument("ragged tensor");
          for (int y = 0; y < d[3]; ++y) t.at(i, k1, k2, y) = read_entry(leaf.at(static_cast<std::size_t>(y)));
        }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed tensor: ") + e.what());
  }
}

CVec element_from_json(const TripleSystem& sys, const nlohmann::json& j) {
  if (sys.is_matrix()) return sys.from_matrix(matrix_from_json(j));
  if (!j.is_array()) throw std::invalid_argument("vector must be an array of entries");
  if (static_cast<int>(j.size()) != sys.dim()) throw DimensionError("vector length does not match " + sys.name());
  CVec v(sys.dim());
  for (int i = 0; i < sys.dim(); ++i) v(i) = read_entry(j[static_cast<std::size_t>(i)]);
  return v;
}

CVec load_element(const TripleSystem& sys, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
  return element_from_json(sys, j);
}

}  // namespace bidual
