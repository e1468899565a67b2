#pragma once

#include "json.hpp"

#include <string>
#include <string_view>

#include "genherm/poly.hpp"
#include "genherm/rational.hpp"

namespace genherm::app {

using Json = nlohmann::ordered_json;

/// Ascending coefficients as "p/q" strings.
Json coefficient_array(const RatPoly& p);

std::string csv_field(std::string_view s);

/// "s/2", "s/2+1/6", "s/2-5/6"
std::string half_s_plus(const Rational& offset);

/// content times a primitive integer polynomial in ascending order, e.g. "(3/5)(1 - 2s)"
std::string factored(const RatPoly& p, std::string_view var);

}  // namespace genherm::app
