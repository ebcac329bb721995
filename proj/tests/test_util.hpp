#pragma once

#include <cmath>

inline double rel_err(double actual, double expected) {
    if (expected == 0.0) return std::fabs(actual);
    return std::fabs(actual - expected) / std::fabs(expected);
}

inline double rel_err_l(double actual, long double expected) {
    if (expected == 0.0L) return std::fabs(actual);
    return static_cast<double>(fabsl(actual - expected) / fabsl(expected));
}
