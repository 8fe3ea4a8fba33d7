#pragma once

#include <json.hpp>

#include "iqh/classical.hpp"
#include "iqh/modes.hpp"

namespace iqh {

using Json = nlohmann::ordered_json;

/// Rationals serialize as "p/q" strings to preserve exactness; complex
/// values as ["re", "im"] pairs; floats as {"value", "tol"} objects.
Json to_json(const Rational& r);
Json to_json(const Complex& z);
Json float_json(double value, double tol);

Rational rational_from_json(const Json& j);
Complex complex_from_json(const Json& j);

/// {"field": "scalar"|"em", "mass": "p/q",
///  "modes": [{"k": ["p/q" x4], "w": "p/q", ...}]}
ModeSetPtr mode_set_from_json(const Json& doc);

/// Mode records carry "a": ["re","im"] (scalar) or [["re","im"] x4] (EM).
FieldState field_state_from_json(const Json& doc);

/// Mode records carry "j": [["re","im"] x4].
CurrentModes current_from_json(const Json& doc);

/// Array of {"mode": int, "component": int, "conjugated": bool,
/// "coeff": ["re","im"]}.
LinearObservable observable_from_json(const Json& arr, ModeSetPtr modes);

/// {"m": [[["re","im"] x4] x4]}.
HermitianMatrix matrix4_from_json(const Json& doc);

}  // namespace iqh
