#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eta {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// A nonnegative real stored as its natural log. `zero` marks the value 0,
/// for which `log` is meaningless.
struct LogReal {
  double log = 0.0;
  bool zero = false;

  static LogReal from_log(double l) { return {l, false}; }
  static LogReal zero_value() { return {0.0, true}; }

  double value() const;
};

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double result() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// C(m, k); 0 for k outside [0, m].
ExactInt binom_exact(std::int64_t m, std::int64_t k);

/// ln C(m, k). Throws std::domain_error when k is outside [0, m].
LogReal log_binom(std::int64_t m, std::int64_t k);

/// ln C(m, i) for i = 0..m, built by one compensated prefix sum.
std::vector<double> log_binom_row(std::int64_t m);

/// x (x-1) ... (x-m+1); 1 for m == 0.
ExactInt falling_factorial(std::int64_t x, std::int64_t m);

ExactInt factorial(std::int64_t m);

/// Nearest double to an exact rational (via long double division).
double to_double(const ExactRational& q);

/// Natural log of a positive big integer, accurate for values far beyond
/// the double range.
double log_of(const ExactInt& v);

}  // namespace eta
