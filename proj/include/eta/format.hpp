#pragma once

#include <string>

#include "eta/combinatorics.hpp"

namespace eta {

/// Locale-independent rendering: 12 decimals in fixed notation for
/// magnitudes in [1e-4, 1e12) and zero, otherwise scientific notation with
/// 12 significant digits. Non-finite values print as inf, -inf, nan.
std::string format_real(double x);

/// "p/q", or "p" when the denominator is 1.
/// Locale-independent parse; accepts inf, -inf, nan.
double parse_real(const std::string& text);

std::string format_rational(const ExactRational& q);

}  // namespace eta
