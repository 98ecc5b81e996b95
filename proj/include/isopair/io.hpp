#pragma once

#include <string>

#include "isopair/facecoords.hpp"
#include "isopair/linalg.hpp"
#include "json.hpp"

namespace isopair {

/// Scalars travel as strings ("35/6", "1/2+3i", or %.17g decimals in float
/// mode); plain JSON integers are accepted on input.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j, Mode mode = Mode::Exact);

nlohmann::json matrix_to_json(const ScalarMatrix& m);

/// {"n": n, "alpha": [...], "beta": [...], "gamma": [...]}
EigenData<Scalar> eigendata_from_json(const std::string& text, Mode mode = Mode::Exact);
nlohmann::json eigendata_to_json(const EigenData<Scalar>& e);

/// {"n": n, "Y": [[...], ...]} with n-2 rows of n-1 entries.
FreeBlock<Scalar> free_block_from_json(const std::string& text, Mode mode = Mode::Exact);
nlohmann::json free_block_to_json(const FreeBlock<Scalar>& y);

nlohmann::json face_grid_to_json(const FaceCoordinates<Scalar>& fc);
nlohmann::json report_to_json(const Report& r);

std::string read_file(const std::string& path);

}  // namespace isopair
