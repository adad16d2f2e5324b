#include "geocorr/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace geocorr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTangencyTol = 1e-8;
constexpr int kStepsPerUnitArc = 1024;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) throw std::invalid_argument(std::string(what) + " must be finite");
}

/// Wrapped angle difference in [-pi, pi].
double wrap_angle(double a) { return std::remainder(a, 2.0 * kPi); }

Vec3 as_vec(Point3 p) { return {p.x, p.y, p.z}; }

// --- ambient normal field and normal curvature ----------------------------
//
// The shooting integrator works in ambient coordinates, so both are defined
// for points slightly off the surface (RK4 stage points).

Vec3 ambient_normal(const AnalyticSurface& surface, Vec3 pos) {
    return std::visit(
        overloaded{
            [&](const Sphere&) { return UnitVec3::normalized(pos).vec(); },
            [&](const Cylinder&) { return UnitVec3::normalized({pos.x, pos.y, 0.0}).vec(); },
            [&](const Torus& t) {
                const double rho = std::hypot(pos.x, pos.y);
                const Vec3 ring{t.major_radius * pos.x / rho, t.major_radius * pos.y / rho, 0.0};
                return UnitVec3::normalized(pos - ring).vec();
            },
        },
        surface);
}

/// Coefficient c such that the geodesic equation reads x'' = c * n(x);
/// for a unit-speed tangent velocity this is the signed normal curvature.
double ambient_accel_coeff(const AnalyticSurface& surface, Vec3 pos, Vec3 vel) {
    return std::visit(
        overloaded{
            [&](const Sphere&) {
                const double r = norm(pos);
                const Vec3 n = ambient_normal(surface, pos);
                const double vn = dot(vel, n);
                return -(norm_sq(vel) - vn * vn) / r;
            },
            [&](const Cylinder&) {
                const double r = std::hypot(pos.x, pos.y);
                const Vec3 t_circ{-pos.y / r, pos.x / r, 0.0};
                const double c = dot(vel, t_circ);
                return -c * c / r;
            },
            [&](const Torus& t) {
                const double rho = std::hypot(pos.x, pos.y);
                const Vec3 n = ambient_normal(surface, pos);
                const Vec3 t_major{-pos.y / rho, pos.x / rho, 0.0};
                const Vec3 t_minor = cross(n, t_major);
                const double cos_tube = (rho - t.major_radius) /
                                        std::hypot(rho - t.major_radius, pos.z);
                const double k_major = -cos_tube / rho;
                const double k_minor = -1.0 / t.minor_radius;
                const double a = dot(vel, t_major);
                const double b = dot(vel, t_minor);
                return k_major * a * a + k_minor * b * b;
            },
        },
        surface);
}

SurfaceParams params_from_point(const AnalyticSurface& surface, Vec3 pos) {
    return std::visit(
        overloaded{
            [&](const Sphere&) {
                const double colat = std::atan2(std::hypot(pos.x, pos.y), pos.z);
                const double lon = (pos.x == 0.0 && pos.y == 0.0) ? 0.0 : std::atan2(pos.y, pos.x);
                return SurfaceParams{colat, lon};
            },
            [&](const Cylinder&) {
                return SurfaceParams{std::atan2(pos.y, pos.x), pos.z};
            },
            [&](const Torus& t) {
                const double theta = std::atan2(pos.y, pos.x);
                const double rho = std::hypot(pos.x, pos.y);
                const double phi = std::atan2(pos.z, rho - t.major_radius);
                return SurfaceParams{theta, phi};
            },
        },
        surface);
}

void require_tangent(const AnalyticSurface& surface, SurfaceParams p, const UnitVec3& dir,
                     const char* op) {
    const double residual = std::abs(dot(dir, unit_normal(surface, p)));
    if (residual > kTangencyTol)
        throw geometry_error(std::string(op) + ": direction is not tangent (normal component " +
                             std::to_string(residual) + ")");
}

struct ShotState {
    Vec3 pos;
    Vec3 vel;
};

ShotState integrate_geodesic(const AnalyticSurface& surface, ShotState s, double arclen,
                             int steps) {
    const double h = arclen / steps;
    const auto deriv = [&](const ShotState& y) {
        const double c = ambient_accel_coeff(surface, y.pos, y.vel);
        return ShotState{y.vel, c * ambient_normal(surface, y.pos)};
    };
    for (int i = 0; i < steps; ++i) {
        const ShotState k1 = deriv(s);
        const ShotState k2 = deriv({s.pos + 0.5 * h * k1.pos, s.vel + 0.5 * h * k1.vel});
        const ShotState k3 = deriv({s.pos + 0.5 * h * k2.pos, s.vel + 0.5 * h * k2.vel});
        const ShotState k4 = deriv({s.pos + h * k3.pos, s.vel + h * k3.vel});
        s.pos = s.pos + (h / 6.0) * (k1.pos + 2.0 * k2.pos + 2.0 * k3.pos + k4.pos);
        s.vel = s.vel + (h / 6.0) * (k1.vel + 2.0 * k2.vel + 2.0 * k3.vel + k4.vel);
    }
    return s;
}

int step_count(double arclen) {
    return std::max(1, static_cast<int>(std::ceil(arclen * kStepsPerUnitArc)));
}

// --- torus geodesic distance (shooting + bisection on launch angle) -------

struct ClosestApproach {
    double arc;       // arc-length at the closest sample, with longitudinal refit
    double miss;      // signed lateral miss at the closest sample
    double distance;  // |target - sample|
};

ClosestApproach shoot_toward(const AnalyticSurface& surface, const ShotState& start,
                             Vec3 target, double max_arc, int steps) {
    const double h = max_arc / steps;
    const auto deriv = [&](const ShotState& y) {
        const double c = ambient_accel_coeff(surface, y.pos, y.vel);
        return ShotState{y.vel, c * ambient_normal(surface, y.pos)};
    };
    ShotState s = start;
    ClosestApproach best{0.0, 0.0, std::numeric_limits<double>::infinity()};
    auto consider = [&](double arc, const ShotState& y) {
        const Vec3 gap = target - y.pos;
        const double d = norm(gap);
        if (d < best.distance) {
            const Vec3 side = cross(ambient_normal(surface, y.pos), y.vel);
            // longitudinal refit: the closest grid sample sits O(h) before or
            // after the true foot point along the geodesic
            best = {arc + dot(gap, y.vel), dot(gap, side), d};
        }
    };
    consider(0.0, s);
    for (int i = 0; i < steps; ++i) {
        const ShotState k1 = deriv(s);
        const ShotState k2 = deriv({s.pos + 0.5 * h * k1.pos, s.vel + 0.5 * h * k1.vel});
        const ShotState k3 = deriv({s.pos + 0.5 * h * k2.pos, s.vel + 0.5 * h * k2.vel});
        const ShotState k4 = deriv({s.pos + h * k3.pos, s.vel + h * k3.vel});
        s.pos = s.pos + (h / 6.0) * (k1.pos + 2.0 * k2.pos + 2.0 * k3.pos + k4.pos);
        s.vel = s.vel + (h / 6.0) * (k1.vel + 2.0 * k2.vel + 2.0 * k3.vel + k4.vel);
        consider((i + 1) * h, s);
    }
    return best;
}

double torus_intrinsic_dist(const AnalyticSurface& surface, SurfaceParams p, SurfaceParams q) {
    const Vec3 from = as_vec(embed(surface, p));
    const Vec3 to = as_vec(embed(surface, q));
    const double chord = norm(to - from);
    if (chord == 0.0) return 0.0;

    const UnitVec3 n = unit_normal(surface, p);
    const Vec3 lateral = (to - from) - dot(to - from, n) * n.vec();
    if (norm(lateral) < 1e-14 * chord)
        throw geometry_error("intrinsic_dist: torus target lies on the normal line");
    const TangentFrame frame = tangent_frame(surface, p);
    const double alpha0 = std::atan2(dot(lateral, frame.t2), dot(lateral, frame.t1));

    const double max_arc = 2.0 * chord;
    const int steps = std::max(64, step_count(max_arc));
    const auto miss_at = [&](double alpha) {
        const UnitVec3 dir = tangent_direction(surface, p, alpha);
        return shoot_toward(surface, {from, dir.vec()}, to, max_arc, steps);
    };

    ClosestApproach hit = miss_at(alpha0);
    if (std::abs(hit.miss) <= 1e-13 * (1.0 + chord)) return hit.arc;

    // Bracket the signed lateral miss around the chord heading, then bisect.
    double lo = alpha0, hi = alpha0;
    double miss_lo = hit.miss, miss_hi = hit.miss;
    for (double width = 0.1; (miss_lo > 0.0) == (miss_hi > 0.0); width *= 2.0) {
        if (width > 1.6) throw geometry_error("intrinsic_dist: no geodesic bracket on the torus");
        lo = alpha0 - width;
        hi = alpha0 + width;
        miss_lo = miss_at(lo).miss;
        miss_hi = miss_at(hi).miss;
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        hit = miss_at(mid);
        if (hit.miss == 0.0) break;
        if ((hit.miss > 0.0) == (miss_lo > 0.0)) {
            lo = mid;
            miss_lo = hit.miss;
        } else {
            hi = mid;
        }
    }
    if (std::abs(hit.miss) > 1e-5 * (1.0 + chord))
        throw geometry_error("intrinsic_dist: torus shooting did not converge onto the target");
    return hit.arc;
}

}  // namespace

Sphere::Sphere(double r) : radius(r) {
    require_finite(r, "Sphere radius");
    if (!(r > 0.0)) throw std::invalid_argument("Sphere radius must be positive");
}

Cylinder::Cylinder(double r) : radius(r) {
    require_finite(r, "Cylinder radius");
    if (!(r > 0.0)) throw std::invalid_argument("Cylinder radius must be positive");
}

Torus::Torus(double major, double minor) : major_radius(major), minor_radius(minor) {
    require_finite(major, "Torus major radius");
    require_finite(minor, "Torus minor radius");
    if (!(major > minor && minor > 0.0))
        throw std::invalid_argument("Torus radii must satisfy major > minor > 0");
}

Point3 embed(const AnalyticSurface& surface, SurfaceParams p) {
    require_finite(p.u, "params.u");
    require_finite(p.v, "params.v");
    return std::visit(
        overloaded{
            [&](const Sphere& s) {
                const double sin_u = std::sin(p.u);
                return Point3{s.radius * sin_u * std::cos(p.v), s.radius * sin_u * std::sin(p.v),
                              s.radius * std::cos(p.u)};
            },
            [&](const Cylinder& c) {
                return Point3{c.radius * std::cos(p.u), c.radius * std::sin(p.u), p.v};
            },
            [&](const Torus& t) {
                const double rho = t.major_radius + t.minor_radius * std::cos(p.v);
                return Point3{rho * std::cos(p.u), rho * std::sin(p.u),
                              t.minor_radius * std::sin(p.v)};
            },
        },
        surface);
}

UnitVec3 unit_normal(const AnalyticSurface& surface, SurfaceParams p) {
    return std::visit(
        overloaded{
            [&](const Sphere&) {
                const double sin_u = std::sin(p.u);
                return UnitVec3::normalized(
                    {sin_u * std::cos(p.v), sin_u * std::sin(p.v), std::cos(p.u)});
            },
            [&](const Cylinder&) {
                return UnitVec3::normalized({std::cos(p.u), std::sin(p.u), 0.0});
            },
            [&](const Torus&) {
                const double cos_v = std::cos(p.v);
                return UnitVec3::normalized(
                    {cos_v * std::cos(p.u), cos_v * std::sin(p.u), std::sin(p.v)});
            },
        },
        surface);
}

TangentFrame tangent_frame(const AnalyticSurface& surface, SurfaceParams p) {
    return std::visit(
        overloaded{
            [&](const Sphere&) {
                const double cu = std::cos(p.u), su = std::sin(p.u);
                const double cv = std::cos(p.v), sv = std::sin(p.v);
                // d/d(colatitude) is well defined at the poles as well
                return TangentFrame{UnitVec3::normalized({cu * cv, cu * sv, -su}),
                                    UnitVec3::normalized({-sv, cv, 0.0})};
            },
            [&](const Cylinder&) {
                return TangentFrame{UnitVec3::normalized({-std::sin(p.u), std::cos(p.u), 0.0}),
                                    UnitVec3{0.0, 0.0, 1.0}};
            },
            [&](const Torus&) {
                const UnitVec3 t_major = UnitVec3::normalized({-std::sin(p.u), std::cos(p.u), 0.0});
                const UnitVec3 n = unit_normal(surface, p);
                return TangentFrame{t_major, UnitVec3::normalized(cross(n, t_major))};
            },
        },
        surface);
}

UnitVec3 tangent_direction(const AnalyticSurface& surface, SurfaceParams p, double alpha) {
    const TangentFrame f = tangent_frame(surface, p);
    return UnitVec3::normalized(std::cos(alpha) * f.t1.vec() + std::sin(alpha) * f.t2.vec());
}

double normal_curvature(const AnalyticSurface& surface, SurfaceParams p, const UnitVec3& dir) {
    require_tangent(surface, p, dir, "normal_curvature");
    return ambient_accel_coeff(surface, as_vec(embed(surface, p)), dir.vec());
}

double chord_sq(const AnalyticSurface& surface, SurfaceParams p, SurfaceParams q) {
    return norm_sq(embed(surface, q) - embed(surface, p));
}

double intrinsic_dist(const AnalyticSurface& surface, SurfaceParams p, SurfaceParams q) {
    return std::visit(
        overloaded{
            [&](const Sphere& s) {
                const Vec3 a = UnitVec3::normalized(as_vec(embed(surface, p))).vec();
                const Vec3 b = UnitVec3::normalized(as_vec(embed(surface, q))).vec();
                const double angle = std::atan2(norm(cross(a, b)), dot(a, b));
                if (angle >= kPi * (1.0 - 1e-12))
                    throw geometry_error("intrinsic_dist: antipodal points have no unique geodesic");
                return s.radius * angle;
            },
            [&](const Cylinder& c) {
                const double dtheta = wrap_angle(q.u - p.u);
                if (std::abs(dtheta) >= kPi * (1.0 - 1e-12))
                    throw geometry_error(
                        "intrinsic_dist: opposite cylinder rulings have two equal geodesics");
                return std::hypot(c.radius * dtheta, q.v - p.v);
            },
            [&](const Torus&) { return torus_intrinsic_dist(surface, p, q); },
        },
        surface);
}

SurfaceParams geodesic_shoot(const AnalyticSurface& surface, SurfaceParams p, const UnitVec3& dir,
                             double arclen) {
    require_finite(arclen, "arclen");
    if (arclen < 0.0) throw std::invalid_argument("geodesic_shoot: arclen must be >= 0");
    require_tangent(surface, p, dir, "geodesic_shoot");
    if (arclen == 0.0) return p;
    const ShotState end = integrate_geodesic(surface, {as_vec(embed(surface, p)), dir.vec()},
                                             arclen, step_count(arclen));
    return params_from_point(surface, end.pos);
}

}  // namespace geocorr
