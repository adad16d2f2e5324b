#pragma once

#include <cmath>
#include <stdexcept>

namespace geocorr {

/// Displacement / direction in the ambient Euclidean 3-space.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Point of the ambient Euclidean 3-space (embedding coordinates).
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }

constexpr Vec3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Point3 operator+(Point3 p, Vec3 v) { return {p.x + v.x, p.y + v.y, p.z + v.z}; }

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm_sq(Vec3 v) { return dot(v, v); }

inline double norm(Vec3 v) { return std::sqrt(norm_sq(v)); }

/// Unit-length direction. Invariant: Euclidean norm 1 within 1e-12; construct
/// through normalized() or from_components() so the invariant actually holds.
struct UnitVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    constexpr Vec3 vec() const { return {x, y, z}; }
    constexpr operator Vec3() const { return vec(); }

    static UnitVec3 normalized(Vec3 v) {
        const double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("UnitVec3: cannot normalize a zero or non-finite vector");
        return {v.x / n, v.y / n, v.z / n};
    }

    /// For components already known to be unit length (checked to 1e-9).
    static UnitVec3 from_components(double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (std::abs(n - 1.0) > 1e-9)
            throw std::invalid_argument("UnitVec3: components are not unit length");
        return {x / n, y / n, z / n};
    }
};

constexpr double dot(UnitVec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double dot(Vec3 a, UnitVec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double dot(UnitVec3 a, UnitVec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace geocorr
