#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "geocorr/geometry.hpp"

namespace geocorr {

/// Raised when a geometric operation is asked for something that does not
/// exist or is not unique (antipodal pairs, non-tangent directions, ...).
class geometry_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Chart coordinates on a surface.
///
///   sphere:   u = colatitude in [0, pi], v = longitude
///   cylinder: u = azimuth (mod 2*pi),    v = height
///   torus:    u = angle around the axis, v = angle around the tube
struct SurfaceParams {
    double u = 0.0;
    double v = 0.0;
};

struct Sphere {
    explicit Sphere(double r);
    double radius;
};

struct Cylinder {
    explicit Cylinder(double r);
    double radius;
};

struct Torus {
    Torus(double major, double minor);  // requires major > minor > 0
    double major_radius;
    double minor_radius;
};

/// Analytic ground-truth catalog entry. Every operation below has a closed
/// form except geodesic shooting (fixed-step RK4) and the torus geodesic
/// distance, which is served by shooting plus bisection on the launch angle.
using AnalyticSurface = std::variant<Sphere, Cylinder, Torus>;

/// Orthonormal tangent basis aligned with the chart directions:
/// t1 ~ d/du, t2 ~ d/dv.
struct TangentFrame {
    UnitVec3 t1;
    UnitVec3 t2;
};

/// Chart point -> ambient point. Total on finite params; the result satisfies
/// the surface's implicit equation to machine precision.
Point3 embed(const AnalyticSurface& surface, SurfaceParams p);

/// Outward unit normal (for the torus: outward from the tube).
UnitVec3 unit_normal(const AnalyticSurface& surface, SurfaceParams p);

TangentFrame tangent_frame(const AnalyticSurface& surface, SurfaceParams p);

/// Unit tangent at angle `alpha` from the first frame direction
/// (cylinder: alpha = 0 is circumferential, alpha = pi/2 is axial).
UnitVec3 tangent_direction(const AnalyticSurface& surface, SurfaceParams p, double alpha);

/// Normal curvature along the unit tangent `dir`, signed as -(grad_dir n) . dir,
/// which makes it -1/R on a sphere of radius R with the outward normal.
/// Rejects directions whose normal component exceeds 1e-8.
double normal_curvature(const AnalyticSurface& surface, SurfaceParams p, const UnitVec3& dir);

/// Squared Euclidean distance between the embedded points. Symmetric, >= 0.
double chord_sq(const AnalyticSurface& surface, SurfaceParams p, SurfaceParams q);

/// Arc-length of the unique surface geodesic from p to q.
/// sphere:   radius * central angle (rejects angular separation >= pi)
/// cylinder: unrolled chart distance (rejects azimuth gap of exactly pi)
/// torus:    shooting + bisection on the launch angle (nearby points only)
double intrinsic_dist(const AnalyticSurface& surface, SurfaceParams p, SurfaceParams q);

/// Endpoint of the unit-speed geodesic started at p along `dir` after
/// `arclen`. Classical fixed-step RK4 in ambient coordinates, 1024 steps per
/// unit arc-length; global error <= 1e-9 for arclen <= 1.
SurfaceParams geodesic_shoot(const AnalyticSurface& surface, SurfaceParams p, const UnitVec3& dir,
                             double arclen);

}  // namespace geocorr
