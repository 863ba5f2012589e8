#pragma once

#include "eigenflow/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>

namespace eigenflow {

// cmplx-json v1: {"rows": n, "cols": m, "data": [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Plain text: first line "n m", then n*m lines "re im" row-major.
void write_matrix_text(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix_text(std::istream& is);

// Sniffs the format (leading '{' means JSON) and parses. Throws ParseError.
ComplexMatrix load_matrix_file(const std::string& path);
void save_matrix_json(const std::string& path, const ComplexMatrix& m);

}  // namespace eigenflow
