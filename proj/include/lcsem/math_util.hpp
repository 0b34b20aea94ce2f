#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace lcsem {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// log(sum_i exp(x_i)) with the usual max shift; -inf entries are allowed.
inline double log_sum_exp(std::span<const double> xs) {
    double m = neg_inf;
    for (double x : xs) m = std::max(m, x);
    if (m == neg_inf) return neg_inf;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

inline double log_sum_exp(const std::vector<double>& xs) {
    return log_sum_exp(std::span<const double>(xs));
}

// phi0(d) = (e^d - 1)/d, continuous through d = 0.
inline double phi0(double d) {
    if (d == 0.0) return 1.0;
    return std::expm1(d) / d;
}

// phi1(d) = d/dd phi0(d) = (e^d (d-1) + 1)/d^2.
// Series below |d| = 0.05 where the closed form cancels.
inline double phi1(double d) {
    if (std::abs(d) < 0.05) {
        // sum_{j>=0} (j+1) d^j / (j+2)!
        double term = 0.5, sum = 0.5;  // j = 0
        double fact = 2.0;
        for (int j = 1; j <= 10; ++j) {
            fact *= (j + 2);
            term = term * d;  // reuse only d powers cheaply:
            sum += (j + 1) * std::pow(d, j) / fact;
        }
        return sum;
    }
    return (std::exp(d) * (d - 1.0) + 1.0) / (d * d);
}

// phi2(d) = d^2/dd^2 phi0(d) = (e^d (d^2 - 2d + 2) - 2)/d^3.
inline double phi2(double d) {
    if (std::abs(d) < 0.3) {
        // sum_{i>=0} (i+1)(i+2) d^i / (i+3)!
        double sum = 0.0, dpow = 1.0, fact = 6.0;  // (0+3)! = 6
        for (int i = 0; i <= 14; ++i) {
            sum += (i + 1.0) * (i + 2.0) * dpow / fact;
            dpow *= d;
            fact *= (i + 4);
        }
        return sum;
    }
    return (std::exp(d) * (d * d - 2.0 * d + 2.0) - 2.0) / (d * d * d);
}

}  // namespace lcsem
