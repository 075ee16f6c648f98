#pragma once

#include "opalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>

namespace drops {

namespace detail {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

inline big_int big_factorial(int k) {
    big_int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace detail

// <j1 m1; j2 m2 | j m> with every argument passed as twice its value.
// Racah's closed sum in exact rationals; selection-rule violations give 0.
inline double cg_twice(int j1, int m1, int j2, int m2, int j, int m) {
    using detail::big_factorial;
    using detail::big_rational;
    using detail::big_int;
    if (j1 < 0 || j2 < 0 || j < 0) return 0.0;
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m) > j) return 0.0;
    if (m1 + m2 != m) return 0.0;
    if (j < std::abs(j1 - j2) || j > j1 + j2) return 0.0;
    if ((j1 + m1) % 2 || (j2 + m2) % 2 || (j + m) % 2 || (j1 + j2 + j) % 2) return 0.0;

    const int a = (j1 + j2 - j) / 2;
    const int b = (j1 - m1) / 2;
    const int c = (j2 + m2) / 2;
    const int d = (j - j2 + m1) / 2;
    const int e = (j - j1 - m2) / 2;

    big_rational sum = 0;
    for (int k = std::max({0, -d, -e}); k <= std::min({a, b, c}); ++k) {
        big_rational term(big_int(1), big_factorial(k) * big_factorial(a - k) * big_factorial(b - k) *
                                          big_factorial(c - k) * big_factorial(d + k) * big_factorial(e + k));
        sum += (k % 2 ? -term : term);
    }
    if (sum == 0) return 0.0;

    big_rational sq(big_int(j + 1) * big_factorial((j + j1 - j2) / 2) * big_factorial((j - j1 + j2) / 2) *
                        big_factorial((j1 + j2 - j) / 2) * big_factorial((j + m) / 2) * big_factorial((j - m) / 2) *
                        big_factorial((j1 - m1) / 2) * big_factorial((j1 + m1) / 2) * big_factorial((j2 - m2) / 2) *
                        big_factorial((j2 + m2) / 2),
                    big_factorial((j1 + j2 + j) / 2 + 1));
    big_rational squared = sum * sum * sq;
    double mag = std::sqrt(squared.convert_to<double>());
    return sum > 0 ? mag : -mag;
}

inline int twice(double x) {
    double t = 2.0 * x;
    int r = static_cast<int>(std::lround(t));
    if (std::abs(t - r) > 1e-9) throw Error("angular momentum value is not a half-integer");
    return r;
}

inline double cg_coefficient(double j1, double m1, double j2, double m2, double j, double m) {
    return cg_twice(twice(j1), twice(m1), twice(j2), twice(m2), twice(j), twice(m));
}

}  // namespace drops
