#include "fim/matrix_io.hpp"

#include <stdexcept>
#include <string>

namespace fim {

Matrix matrix_from_json(const nlohmann::json& envelope, const std::optional<Field>& field) {
  if (!envelope.is_object()) throw std::invalid_argument("matrix envelope must be a JSON object");
  if (!envelope.contains("rows") || !envelope["rows"].is_array())
    throw std::invalid_argument("matrix envelope needs a \"rows\" array");
  Field chosen = Field::rationals();
  if (field) {
    chosen = *field;
  } else if (envelope.contains("field")) {
    if (!envelope["field"].is_string()) throw std::invalid_argument("\"field\" must be a string");
    chosen = Field::parse(envelope["field"].get<std::string>());
  }
  const auto& rows = envelope["rows"];
  const std::size_t dim = rows.size();
  if (envelope.contains("dim")) {
    if (!envelope["dim"].is_number_unsigned() || envelope["dim"].get<std::size_t>() != dim)
      throw std::invalid_argument("\"dim\" does not match the number of rows (" + std::to_string(dim) + ")");
  }
  Matrix m(chosen, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim)
      throw std::invalid_argument("row " + std::to_string(r) + " must be an array of " + std::to_string(dim) +
                                  " entries");
    for (std::size_t c = 0; c < dim; ++c) {
      const auto& entry = rows[r][c];
      const std::string where = "entry at row " + std::to_string(r) + ", column " + std::to_string(c);
      try {
        if (entry.is_string()) m(r, c) = Scalar::parse(chosen, entry.get<std::string>());
        else if (entry.is_number_integer()) m(r, c) = Scalar::from_int(chosen, entry.get<std::int64_t>());
        else throw std::invalid_argument("not a string or integer");
      } catch (const std::exception& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"field", m.field().to_string()}, {"dim", m.rows()}, {"rows", rows}};
}

}  // namespace fim
