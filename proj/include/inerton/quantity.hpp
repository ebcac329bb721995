#pragma once

#include <string>

#include "inerton/errors.hpp"

namespace inerton {

/// Integer exponents over the SI base units (kg, m, s). Everything the
/// model touches is expressible in mass/length/time; exponents stay small
/// (|e| <= 12 covers every formula in scope).
struct Dimension {
    int mass = 0;
    int length = 0;
    int time = 0;

    friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

    constexpr Dimension operator+(const Dimension& o) const {
        return {mass + o.mass, length + o.length, time + o.time};
    }
    constexpr Dimension operator-(const Dimension& o) const {
        return {mass - o.mass, length - o.length, time - o.time};
    }
    constexpr Dimension operator*(int n) const {
        return {mass * n, length * n, time * n};
    }

    /// Canonical unit spelling when one exists ("m", "kg", "m/s", "J·s"),
    /// otherwise the generic product form, e.g. "kg m^2 s^-2".
    std::string str() const;
};

namespace dim {
inline constexpr Dimension none{};
inline constexpr Dimension mass{1, 0, 0};
inline constexpr Dimension length{0, 1, 0};
inline constexpr Dimension time{0, 0, 1};
inline constexpr Dimension velocity{0, 1, -1};
inline constexpr Dimension volume{0, 3, 0};
inline constexpr Dimension action{1, 2, -1}; // J·s
} // namespace dim

/// A finite magnitude plus a Dimension, in SI base units. The invariant is
/// enforced at every boundary: no NaN or infinity is ever stored, and any
/// operation that would produce one throws numeric_error instead.
class Quantity {
public:
    Quantity() = default;
    Quantity(double magnitude, Dimension d);

    double magnitude() const { return mag_; }
    const Dimension& dim() const { return dim_; }
    bool is_dimensionless() const { return dim_ == dim::none; }

    Quantity operator*(const Quantity& o) const;
    Quantity operator/(const Quantity& o) const;
    Quantity operator+(const Quantity& o) const; // dims must match
    Quantity operator-(const Quantity& o) const; // dims must match

    Quantity operator*(double s) const;
    Quantity operator/(double s) const;
    friend Quantity operator*(double s, const Quantity& q) { return q * s; }

    friend bool operator==(const Quantity& a, const Quantity& b) {
        return a.dim_ == b.dim_ && a.mag_ == b.mag_;
    }

    /// Human/machine-readable form that parse_quantity round-trips exactly,
    /// e.g. "2.4263102386830924e-12 m".
    std::string str() const;

private:
    double mag_ = 0.0;
    Dimension dim_{};
};

Quantity pow_int(const Quantity& q, int n);

inline Quantity scalar(double v) { return {v, dim::none}; }
inline Quantity meters(double v) { return {v, dim::length}; }
inline Quantity kilograms(double v) { return {v, dim::mass}; }
inline Quantity seconds(double v) { return {v, dim::time}; }
inline Quantity meters_per_second(double v) { return {v, dim::velocity}; }

/// Throws config_error naming both dimensions unless they are equal.
void require_same_dim(const Dimension& a, const Dimension& b, const char* op);

} // namespace inerton
