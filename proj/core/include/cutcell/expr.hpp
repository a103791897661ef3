#pragma once

#include <functional>
#include <string>

#include "cutcell/vec.hpp"

namespace cutcell {

// Space-time scalar field used for sources, boundary data, and initial values.
using ScalarFn = std::function<double(const Vec3&, double)>;

inline ScalarFn constant_fn(double v) {
  return [v](const Vec3&, double) { return v; };
}

// Parses an arithmetic expression over the variables x, y, z, t with the
// usual operators (+ - * / ^, unary minus), parentheses, the constants pi and
// e, and one- or two-argument calls from a fixed function table (sin, cos,
// tan, asin, acos, atan, sinh, cosh, tanh, exp, log, sqrt, abs, erf, erfc,
// floor, pow, min, max, atan2, hypot). Throws std::invalid_argument on
// malformed input.
ScalarFn parse_expression(const std::string& text);

}  // namespace cutcell
