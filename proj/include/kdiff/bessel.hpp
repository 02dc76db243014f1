#pragma once

namespace kdiff {

inline constexpr int bessel_max_order = 1000;
inline constexpr double bessel_max_argument = 1000.0;

/// Bessel function of the first kind J_m(x) for integer order.
///
/// Supported envelope: |m| <= 1000, 0 <= x <= 1000; anything else throws
/// std::out_of_range. Evaluated by a power series for x <= 1 and by Miller's
/// downward recurrence normalized with J_0 + 2 sum J_2k = 1 otherwise.
/// Absolute accuracy is better than 1e-12 across the envelope.
double bessel_j(int m, double x);

}  // namespace kdiff
