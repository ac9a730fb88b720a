#include "eta/combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "eta/errors.hpp"

namespace eta {

double LogReal::value() const { return zero ? 0.0 : std::exp(log); }

void CompensatedSum::add(double x) {
  double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

ExactInt binom_exact(std::int64_t m, std::int64_t k) {
  if (m < 0) throw ValidationError("binom_exact: m must be nonnegative");
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  ExactInt r = 1;
  // r stays integral: after step j it equals C(m-k+j, j).
  for (std::int64_t j = 1; j <= k; ++j) {
    r *= (m - k + j);
    r /= j;
  }
  return r;
}

LogReal log_binom(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) {
    throw std::domain_error("log_binom: k=" + std::to_string(k) +
                            " outside [0, " + std::to_string(m) + "]");
  }
  if (k > m - k) k = m - k;
  CompensatedSum s;
  for (std::int64_t j = 1; j <= k; ++j) {
    s.add(std::log(static_cast<double>(m - k + j) / static_cast<double>(j)));
  }
  return LogReal::from_log(s.result());
}

std::vector<double> log_binom_row(std::int64_t m) {
  if (m < 0) throw ValidationError("log_binom_row: m must be nonnegative");
  std::vector<double> row(static_cast<std::size_t>(m + 1), 0.0);
  CompensatedSum s;
  const std::int64_t half = m / 2;
  for (std::int64_t i = 1; i <= half; ++i) {
    s.add(std::log(static_cast<double>(m - i + 1) / static_cast<double>(i)));
    row[static_cast<std::size_t>(i)] = s.result();
  }
  for (std::int64_t i = half + 1; i <= m; ++i) {
    row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(m - i)];
  }
  return row;
}

ExactInt falling_factorial(std::int64_t x, std::int64_t m) {
  if (m < 0) throw ValidationError("falling_factorial: m must be nonnegative");
  ExactInt r = 1;
  for (std::int64_t j = 0; j < m; ++j) {
    r *= (x - j);
    if (r == 0) break;
  }
  return r;
}

ExactInt factorial(std::int64_t m) {
  if (m < 0) throw ValidationError("factorial: m must be nonnegative");
  return falling_factorial(m, m);
}

double to_double(const ExactRational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const ExactInt& num = numerator(q);
  const ExactInt& den = denominator(q);
  if (num == 0) return 0.0;
  // Scale both to ~64 significant bits before converting so huge operands
  // do not overflow to inf.
  const auto nb = static_cast<long>(boost::multiprecision::msb(abs(num)));
  const auto db = static_cast<long>(boost::multiprecision::msb(den));
  const long ns = nb > 96 ? nb - 96 : 0;
  const long ds = db > 96 ? db - 96 : 0;
  ExactInt n2 = num >> ns;
  ExactInt d2 = den >> ds;
  long double r = n2.convert_to<long double>() / d2.convert_to<long double>();
  return static_cast<double>(std::ldexp(r, static_cast<int>(ns - ds)));
}

double log_of(const ExactInt& v) {
  if (v <= 0) throw std::domain_error("log_of: argument must be positive");
  const auto b = static_cast<long>(boost::multiprecision::msb(v));
  const long shift = b > 100 ? b - 100 : 0;
  ExactInt top = v >> shift;
  return static_cast<double>(std::log(top.convert_to<long double>()) +
                             static_cast<long double>(shift) * std::log(2.0L));
}

}  // namespace eta
