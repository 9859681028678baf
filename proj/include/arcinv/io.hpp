#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "arcinv/arcs.hpp"
#include "arcinv/contact_resolution.hpp"
#include "arcinv/polynomial.hpp"
#include "arcinv/rees.hpp"

namespace arcinv::io {

using Json = nlohmann::ordered_json;

// Document layouts (all JSON; rationals are integer pairs so no value ever
// passes through floating point):
//
//   term        {"coeff_num": int|string, "coeff_den": int|string (default 1),
//                "exponents": [e_1, ..., e_n]}
//   surface     {"variables": ["x", ...], "terms": [term, ...]}
//   arc         {"components": [{"num": [term], "den": [term]}, ...]}
//               with one-entry exponents (powers of t); "den" defaults to 1
//   presentation {"variables": [...], "generators": [{"terms": [...], "weight": w}]}
//   resolution  {"c": [...], "gens": [{"d": [...], "w": w, "label": "..."}],
//                "coord_val": [[...], ...], "incompatible": [[i, j]],
//                "toric": bool}
//               or the almost-Rees form {"a": [...], "c": [...], "b": b}.
//               Divisor indices in "incompatible" are 1-based.

Json load_file(const std::filesystem::path& path);

Rational rational_from_json(const Json& num, const Json& den);
Polynomial polynomial_from_json(const Json& doc);
UPoly upoly_from_json(const Json& terms);
Arc arc_from_json(const Json& doc);
ReesAlgebra presentation_from_json(const Json& doc);
ResolutionData resolution_from_json(const Json& doc);

Json to_json(const Polynomial& p);
Json to_json(const UPoly& p);
Json to_json(const Arc& arc);
Json to_json(const ResolutionData& R);

/// "p/q", "p" or "inf".
std::string render(const Rational& r);
std::string render(const ExtRational& r);
std::string render(const Order& o);
std::string render(const MultiIndex& l);

}  // namespace arcinv::io
