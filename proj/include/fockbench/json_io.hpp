#pragma once

// JSON interchange. Matrices are {"rows", "cols", "re", "im"} with row-major
// entries; graded objects map level strings "0".."N" to matrices.

#include <string>
#include <vector>

#include <json.hpp>

#include "fockbench/interacting.hpp"
#include "fockbench/subproduct.hpp"

namespace fock {

using json = nlohmann::json;

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

/// Accepts a matrix object with one column, a plain array of reals or
/// {"re": [...], "im": [...]}.
Vec vector_from_json(const json& j);

json graded_to_json(const std::vector<Mat>& levels);
std::vector<Mat> graded_from_json(const json& j);

json family_to_json(const DeformationFamily& family);
/// Reads "L" (or "pi" for projection families).
DeformationFamily family_from_json(const json& j);

json projection_family_to_json(const ProjectionFamily& family);
ProjectionFamily projection_family_from_json(const json& j);

json space_to_json(const InteractingSpace& space);
/// Rebuilds from the stored Λ and ξ.
InteractingSpace space_from_json(const json& j);

/// Serialises with every float printed to 17 significant digits; object keys
/// are sorted, so equal values give byte-identical text.
std::string dump_json(const json& j, int indent = 2);

json read_json_file(const std::string& path);

/// Writes to a temporary file in the same directory, then renames it.
void write_file_atomic(const std::string& path, const std::string& content);

/// %.17g
std::string format_double(double v);

}  // namespace fock
