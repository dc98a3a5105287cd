#pragma once

#include <json.hpp>

#include <string>

#include "slash/extended.hpp"
#include "slash/lie_courant.hpp"
#include "slash/matrix.hpp"
#include "slash/scalars.hpp"

namespace slash {

// std::map-backed json: object keys come out sorted, so dumps are
// byte-deterministic for equal content.
using Json = nlohmann::json;

// Throws ParseError with the file name and line/column context.
Json load_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

// Scalars: rationals are "p/q" or "p" strings (plain JSON integers are also
// accepted); Gaussian {"re":.., "im":..}, Lorentz {"a":.., "b":..},
// quaternions {"w":.., "x":.., "y":.., "z":..} with omitted fields read as 0.
Rational json_to_rational(const Json& v, const std::string& where);
Gaussian json_to_gaussian(const Json& v, const std::string& where);
Lorentz json_to_lorentz(const Json& v, const std::string& where);
Quaternion json_to_quaternion(const Json& v, const std::string& where);

// Matrices: {"algebra": <name>, "entries": [[..]]} row-major; a bare array
// of arrays is read as rational.  Rational entries promote into the wider
// scalar rings.
MatQ json_to_matq(const Json& v, const std::string& where);
MatG json_to_matg(const Json& v, const std::string& where);
MatL json_to_matl(const Json& v, const std::string& where);

// {"n":.., "A":.., "B":.., "C":.., "D":..} with rational matrix blocks.
BlockEndo json_to_blockendo(const Json& v, const std::string& where);

// {"dim": n, "brackets": [{"i":.., "j":.., "coeffs": {"k": "p/q", ..}}, ..]}
// with 1-based indices and only i < j listed.
LieAlgebra json_to_lie_algebra(const Json& v, const std::string& where);

Json json_from_rational(const Rational& x);
Json json_from_gaussian(const Gaussian& x);
Json json_from_lorentz(const Lorentz& x);
Json json_from_quaternion(const Quaternion& x);
Json json_from_matrix(const MatQ& m);
Json json_from_matrix(const MatG& m);
Json json_from_matrix(const MatL& m);
Json json_from_matrix(const MatH& m);
Json json_from_blockendo(const BlockEndo& e);

// Canonical report text: two-space indent, sorted keys, trailing newline.
std::string dump_report(const Json& report);

}  // namespace slash
