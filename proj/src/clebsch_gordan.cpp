#include "blochwalk/clebsch_gordan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "blochwalk/log_factorial.hpp"

namespace blochwalk {
namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

void check_pair(int two_j, int two_m, const char* name) {
  if (two_j < 0) {
    throw std::invalid_argument(std::string("cg_coefficient: negative ") + name);
  }
  if (std::abs(two_m) > two_j) {
    throw std::invalid_argument(std::string("cg_coefficient: |m| > j for ") + name);
  }
  if ((two_j - two_m) % 2 != 0) {
    throw std::invalid_argument(std::string("cg_coefficient: j and m parity differ for ") + name);
  }
}

// Integer arguments of the Racah formula (all halved already).
struct RacahArgs {
  int a, b, c;           // j1+j2-J, j1-j2+J, -j1+j2+J
  int s;                 // j1+j2+J+1
  int j1pm1, j1mm1;      // j1+m1, j1-m1
  int j2pm2, j2mm2;
  int jpm, jmm;          // J+M, J-M
  int kmin, kmax;
  int t4, t5;            // J-j2+m1, J-j1-m2
  int two_J;
};

const Float50& factorial50(int n) {
  static const std::vector<Float50> table = [] {
    std::vector<Float50> t(1024);
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
      t[i] = t[i - 1] * static_cast<unsigned>(i);
    }
    return t;
  }();
  if (n < 0 || static_cast<std::size_t>(n) >= table.size()) {
    throw std::out_of_range("cg_coefficient: factorial argument out of range");
  }
  return table[static_cast<std::size_t>(n)];
}

double racah_extended(const RacahArgs& r) {
  Float50 pre = Float50(r.two_J + 1) * factorial50(r.a) * factorial50(r.b) * factorial50(r.c) /
                factorial50(r.s);
  pre *= factorial50(r.j1pm1) * factorial50(r.j1mm1) * factorial50(r.j2pm2) *
         factorial50(r.j2mm2) * factorial50(r.jpm) * factorial50(r.jmm);
  Float50 sum = 0;
  for (int k = r.kmin; k <= r.kmax; ++k) {
    Float50 den = factorial50(k) * factorial50(r.a - k) * factorial50(r.j1mm1 - k) *
                  factorial50(r.j2pm2 - k) * factorial50(r.t4 + k) * factorial50(r.t5 + k);
    if (k % 2 == 0) {
      sum += 1 / den;
    } else {
      sum -= 1 / den;
    }
  }
  Float50 result = sqrt(pre) * sum;
  return result.convert_to<double>();
}

}  // namespace

double cg_coefficient(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
  check_pair(two_j1, two_m1, "j1");
  check_pair(two_j2, two_m2, "j2");
  check_pair(two_J, two_M, "J");

  if (two_m1 + two_m2 != two_M) return 0.0;
  if (two_J > two_j1 + two_j2 || two_J < std::abs(two_j1 - two_j2)) return 0.0;
  if ((two_j1 + two_j2 + two_J) % 2 != 0) return 0.0;

  RacahArgs r{};
  r.a = (two_j1 + two_j2 - two_J) / 2;
  r.b = (two_j1 - two_j2 + two_J) / 2;
  r.c = (-two_j1 + two_j2 + two_J) / 2;
  r.s = (two_j1 + two_j2 + two_J) / 2 + 1;
  r.j1pm1 = (two_j1 + two_m1) / 2;
  r.j1mm1 = (two_j1 - two_m1) / 2;
  r.j2pm2 = (two_j2 + two_m2) / 2;
  r.j2mm2 = (two_j2 - two_m2) / 2;
  r.jpm = (two_J + two_M) / 2;
  r.jmm = (two_J - two_M) / 2;
  r.t4 = (two_J - two_j2 + two_m1) / 2;
  r.t5 = (two_J - two_j1 - two_m2) / 2;
  r.two_J = two_J;
  r.kmin = std::max({0, -r.t4, -r.t5});
  r.kmax = std::min({r.a, r.j1mm1, r.j2pm2});
  if (r.kmin > r.kmax) return 0.0;

  const double log_pre =
      0.5 * (std::log(two_J + 1.0) + log_factorial(r.a) + log_factorial(r.b) + log_factorial(r.c) -
             log_factorial(r.s) + log_factorial(r.j1pm1) + log_factorial(r.j1mm1) +
             log_factorial(r.j2pm2) + log_factorial(r.j2mm2) + log_factorial(r.jpm) +
             log_factorial(r.jmm));

  // Neumaier-compensated alternating sum; abs_sum bounds the rounding error.
  double sum = 0.0;
  double comp = 0.0;
  double abs_sum = 0.0;
  for (int k = r.kmin; k <= r.kmax; ++k) {
    const double log_den = log_factorial(k) + log_factorial(r.a - k) + log_factorial(r.j1mm1 - k) +
                           log_factorial(r.j2pm2 - k) + log_factorial(r.t4 + k) +
                           log_factorial(r.t5 + k);
    double term = std::exp(log_pre - log_den);
    if (k % 2 != 0) term = -term;
    abs_sum += std::abs(term);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }

  // Each term carries a relative error of order eps * |log argument| from exp().
  const int n_terms = r.kmax - r.kmin + 1;
  const double error_bound = std::numeric_limits<double>::epsilon() * abs_sum *
                             (2.0 * n_terms + 4.0 * (std::abs(log_pre) + 1.0));
  if (error_bound > 1e-14) {
    return racah_extended(r);
  }
  return sum + comp;
}

}  // namespace blochwalk
