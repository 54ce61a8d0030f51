#pragma once

#include <vector>

namespace blochwalk {

/// ln(n!) for n = 0..n_max.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int n_max);

  int n_max() const { return static_cast<int>(values_.size()) - 1; }
  double operator()(int n) const;
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// ln(n!) from a process-wide table (n < 2048), falling back to lgamma beyond.
double log_factorial(int n);

/// ln C(n, k) computed from log factorials.
double log_binomial(int n, int k);

}  // namespace blochwalk
