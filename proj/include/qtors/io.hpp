#pragma once

// JSON forms of quivers and representations. Vertices are 1-based; rationals
// are strings "p/q" (or "p").

#include <json.hpp>

#include "qtors/rep.hpp"

namespace qtors {

/// {"vertices": n, "arrows": [[s, t], ...]} with arrows sorted.
nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

/// {"dims": [...], "arrows": [[[row-major entries]], ...]} in arrow order.
nlohmann::json rep_to_json(const Rep& x);
Rep rep_from_json(const Quiver& q, const nlohmann::json& j);

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

nlohmann::json dimvec_to_json(const IntVector& d);

}  // namespace qtors
