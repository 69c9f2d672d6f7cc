#pragma once

#include <json.hpp>
#include <string>

#include "ade/adhm.hpp"
#include "ade/deformation.hpp"
#include "ade/sheaf_corr.hpp"

// JSON encodings. Rationals are "p/q" strings (plain integers accepted on
// input), matrices row-major arrays of rows, complex numbers {re, im}.
// Every parse failure throws ParseError carrying a JSON path like
// "$.arrows[2].matrix[0][1]".
namespace ade::io {

using json = nlohmann::json;

json read_file(const std::string& file);
// FNV-1a 64-bit digest of the file bytes, hex.
std::string digest(const std::string& file);

Rational rational_from_json(const json& j, const std::string& path);
QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path);
json to_json(const Rational& q);
json to_json(const QMatrix& m);
json to_json(const Complex& z);
json to_json(const Polynomial& p);

// {"type": "A2", "theta": {"1": ["0", "1"], ...}}; node "0" may be omitted
// and is then completed from the constraint. "constrained": true enforces it.
DeformationParam deformation_from_json(const json& j);
json to_json(const DeformationParam& d);

N1Representation representation_from_json(const json& j);
json to_json(const N1Representation& rep);

TorsionSheafData sheaf_from_json(const json& j, const std::string& path = "$");
json to_json(const TorsionSheafData& s);

QuiverSheafData quiver_sheaf_from_json(const json& j);
json to_json(const QuiverSheafData& q);

}  // namespace ade::io
