#pragma once

#include "bidual/jordan/tensor.hpp"
#include "bidual/jordan/triple_system.hpp"

#include <json.hpp>

#include <string>

namespace bidual {

// Complex entries are [re, im] pairs; matrices are arrays of rows.
nlohmann::json matrix_to_json(const CMat& m);
CMat matrix_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const TrilinearTensor& t);
TrilinearTensor tensor_from_json(const nlohmann::json& j);

/// Reads an element of `sys` from a JSON file holding a matrix (matrix kinds)
/// or a flat array of entries (vector kinds).
CVec element_from_json(const TripleSystem& sys, const nlohmann::json& j);
CVec load_element(const TripleSystem& sys, const std::string& path);

}  // namespace bidual
