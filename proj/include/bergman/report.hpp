#pragma once

#include <string>

#include <json.hpp>

#include "bergman/types.hpp"

namespace bergman {

inline constexpr const char* kLibraryVersion = "bergman 1.0.0";

// Deterministic JSON text: keys sorted, floating-point values printed with
// 17 significant digits, non-finite values as null.
std::string to_json_text(const nlohmann::json& j, int indent = 2);

nlohmann::json to_json(const cplx& z);
nlohmann::json to_json(const RVector& v);
nlohmann::json to_json(const CVector& v);
nlohmann::json to_json(const RMatrix& m);

}  // namespace bergman
