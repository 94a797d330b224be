#pragma once

#include <json.hpp>

#include "orbdual/exactlin.hpp"

namespace orbdual {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": ["num/den", ...]} in row-major order
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// a plain array of scalars, or a matrix object with one row or one column
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json parse_json_text(const std::string& text);

}  // namespace orbdual
