#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contact/exact_poly.hpp"

namespace contact {

// Text syntax: sums of terms such as `3/2*x1^2*y3`, `-x1`, `7`; parentheses
// and `^` with non-negative integer exponents are accepted, `/` only divides
// by a numeric literal. Whitespace is ignored. Names outside `vars` are
// rejected with ErrorCode::Parse.
SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

std::string format_poly(const SparsePoly& p, const std::vector<std::string>& vars);

std::string format_rational(const Rational& q);

// Accepts "3", "-3/6" (canonicalized), rejects zero denominators.
Rational parse_rational(std::string_view text);

}  // namespace contact
