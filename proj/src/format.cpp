#include "eta/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "eta/errors.hpp"

namespace eta {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const double ax = std::fabs(x);
  std::to_chars_result r;
  if (ax == 0.0 || (ax >= 1e-4 && ax < 1e12)) {
    r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 12);
  } else {
    r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific,
                      11);
  }
  return std::string(buf, r.ptr);
}

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("not a number: '" + text + "'");
  }
  return v;
}

std::string format_rational(const ExactRational& q) {
  const ExactInt& num = boost::multiprecision::numerator(q);
  const ExactInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace eta
