#include "blochwalk/log_factorial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace blochwalk {

LogFactorialTable::LogFactorialTable(int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("LogFactorialTable: negative size");
  }
  values_.resize(static_cast<std::size_t>(n_max) + 1);
  values_[0] = 0.0;
  // lgamma keeps every entry correctly rounded; a running sum of logs drifts.
  for (int n = 1; n <= n_max; ++n) {
    values_[static_cast<std::size_t>(n)] = std::lgamma(static_cast<double>(n) + 1.0);
  }
}

double LogFactorialTable::operator()(int n) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("LogFactorialTable: n=" + std::to_string(n) + " outside table");
  }
  return values_[static_cast<std::size_t>(n)];
}

double log_factorial(int n) {
  static const LogFactorialTable table(2047);
  if (n < 0) {
    throw std::invalid_argument("log_factorial: negative argument " + std::to_string(n));
  }
  if (n <= table.n_max()) {
    return table(n);
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace blochwalk
