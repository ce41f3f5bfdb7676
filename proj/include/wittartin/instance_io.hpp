#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wittartin/splitting.hpp"

namespace wittartin {

inline constexpr const char* kInstanceFormat = "wittartin-instance";
inline constexpr int kInstanceVersion = 1;

/// Parses an instance document. Malformed fields throw Error(Parse) prefixed
/// with the field path; structure constants that are not a Lie algebra throw
/// Error(InvalidAlgebra). Other invariants are left to `validate`.
ProblemInstance parse_instance(const nlohmann::json& doc);
ProblemInstance parse_instance_text(const std::string& text);
ProblemInstance load_instance(const std::filesystem::path& path);

nlohmann::ordered_json instance_to_json(const ProblemInstance& inst);
/// Pretty-printed instance document with a trailing newline.
std::string dump_instance(const ProblemInstance& inst);

nlohmann::ordered_json rational_to_json(const Rational& value);
nlohmann::ordered_json vector_to_json(const Vector& v);
/// Row-major list of rows.
nlohmann::ordered_json matrix_to_json(const Matrix& m);
/// Columns as a list of vectors.
nlohmann::ordered_json columns_to_json(const Matrix& m);

}  // namespace wittartin
