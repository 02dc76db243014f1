#include "kdiff/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kdiff {

namespace {

double series(int m, double x) {
  const double h = 0.5 * x;
  // (x/2)^m / m!
  double term = 1.0;
  for (int k = 1; k <= m; ++k) {
    term *= h / k;
    if (term == 0.0) return 0.0;
  }
  const double h2 = -h * h;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= h2 / (static_cast<double>(k) * (k + m));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double miller(int m, double x) {
  const int n = std::max(m, static_cast<int>(std::ceil(x)));
  int start = n + 30 + static_cast<int>(std::sqrt(40.0 * n));
  start += start % 2;  // even, so the normalization sum sees J_start's parity

  constexpr double big = 1e250;
  constexpr double small = 1e-250;
  const double two_over_x = 2.0 / x;

  double next = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k, arbitrary seed
  double result = 0.0;
  double norm = 0.0;  // 2 * sum over even k >= 2 of J_k
  for (int k = start; k > 0; --k) {
    const double prev = k * two_over_x * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > big) {
      cur *= small;
      next *= small;
      result *= small;
      norm *= small;
    }
    const int order = k - 1;
    if (order == m) result = cur;
    if (order > 0 && order % 2 == 0) norm += 2.0 * cur;
  }
  norm += cur;  // J_0
  return result / norm;
}

}  // namespace

double bessel_j(int m, double x) {
  if (std::abs(m) > bessel_max_order || !(x >= 0.0) || x > bessel_max_argument) {
    throw std::out_of_range("bessel_j(" + std::to_string(m) + ", " + std::to_string(x) +
                            ") outside supported range |m| <= 1000, 0 <= x <= 1000");
  }
  const int order = std::abs(m);
  const double sign = (m < 0 && order % 2 == 1) ? -1.0 : 1.0;
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x <= 1.0) return sign * series(order, x);
  return sign * miller(order, x);
}

}  // namespace kdiff
