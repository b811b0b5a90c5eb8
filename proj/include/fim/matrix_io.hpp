#pragma once

// The JSON envelope for matrices: {"field": "q" | "fp:<p>", "dim": n,
// "rows": [[entry, ...], ...]} with entries as strings ("3/2") or integers.

#include <optional>

#include <json.hpp>

#include "fim/matrix.hpp"

namespace fim {

/// Reads a square matrix. A given field overrides the envelope's. Throws
/// std::invalid_argument naming the offending row and column.
Matrix matrix_from_json(const nlohmann::json& envelope, const std::optional<Field>& field = std::nullopt);

nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace fim
