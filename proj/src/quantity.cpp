#include "inerton/quantity.hpp"

#include <cmath>
#include <cstdio>

namespace inerton {

namespace {

void append_unit(std::string& out, const char* unit, int exp) {
    if (exp == 0) return;
    if (!out.empty()) out += ' ';
    out += unit;
    if (exp != 1) {
        out += '^';
        out += std::to_string(exp);
    }
}

} // namespace

std::string Dimension::str() const {
    if (*this == dim::none) return "dimensionless";
    if (*this == dim::mass) return "kg";
    if (*this == dim::length) return "m";
    if (*this == dim::time) return "s";
    if (*this == dim::velocity) return "m/s";
    if (*this == dim::action) return "J·s";
    std::string out;
    append_unit(out, "kg", mass);
    append_unit(out, "m", length);
    append_unit(out, "s", time);
    return out;
}

Quantity::Quantity(double magnitude, Dimension d) : mag_(magnitude), dim_(d) {
    if (!std::isfinite(magnitude))
        throw numeric_error("magnitude out of range: non-finite value for [" + d.str() + "]");
}

void require_same_dim(const Dimension& a, const Dimension& b, const char* op) {
    if (a == b) return;
    throw config_error(std::string("dimension mismatch: cannot ") + op + " [" + a.str() +
                       "] and [" + b.str() + "]");
}

Quantity Quantity::operator*(const Quantity& o) const {
    return {mag_ * o.mag_, dim_ + o.dim_};
}

Quantity Quantity::operator/(const Quantity& o) const {
    return {mag_ / o.mag_, dim_ - o.dim_};
}

Quantity Quantity::operator+(const Quantity& o) const {
    require_same_dim(dim_, o.dim_, "add");
    return {mag_ + o.mag_, dim_};
}

Quantity Quantity::operator-(const Quantity& o) const {
    require_same_dim(dim_, o.dim_, "subtract");
    return {mag_ - o.mag_, dim_};
}

Quantity Quantity::operator*(double s) const { return {mag_ * s, dim_}; }
Quantity Quantity::operator/(double s) const { return {mag_ / s, dim_}; }

std::string Quantity::str() const {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", mag_);
    return std::string(buf) + ' ' + dim_.str();
}

Quantity pow_int(const Quantity& q, int n) {
    double m = 1.0;
    double base = q.magnitude();
    int e = n;
    if (e < 0) {
        base = 1.0 / base;
        e = -e;
    }
    for (int i = 0; i < e; ++i) m *= base;
    return {m, q.dim() * n};
}

} // namespace inerton
