#pragma once

#include <stdexcept>
#include <vector>

namespace geocorr {

/// Riemann normal coordinates of a vertex on the surface chart centered at
/// the star's hub.
struct Coord2 {
    double a = 0.0;
    double b = 0.0;
};

/// Squared geodesic leg length between two vertices given in Riemann normal
/// coordinates, for Gaussian curvature k at the origin:
///
///   |xi - xj|^2 - (k/3) * (xi x xj)^2,   xi x xj = xi.a*xj.b - xi.b*xj.a
///
/// Exactly symmetric in its two vertices.
double rnc_leg_sq(Coord2 xi, Coord2 xj, double k);

/// Hub vertex with m >= 3 neighbors, described only by squared leg lengths:
/// spoke_sq[i] from the hub to neighbor i, rim_sq[i] from neighbor i to
/// neighbor i+1 (mod m, counterclockwise). Each rim leg must satisfy the
/// strict triangle inequality with its two spokes.
class VertexStar {
  public:
    VertexStar(std::vector<double> spoke_sq, std::vector<double> rim_sq);

    int valence() const { return static_cast<int>(spoke_sq_.size()); }
    const std::vector<double>& spoke_sq() const { return spoke_sq_; }
    const std::vector<double>& rim_sq() const { return rim_sq_; }

  private:
    std::vector<double> spoke_sq_;
    std::vector<double> rim_sq_;
};

struct RncSolution {
    std::vector<Coord2> coords;   // neighbor positions, gauge: coords[0] on the +a axis
    double gaussian_curvature = 0.0;
    double residual_norm = 0.0;   // max |equation residual| at the returned solution
    int iterations = 0;
};

class newton_error : public std::runtime_error {
  public:
    newton_error(const std::string& what, double residual_norm, int iterations)
        : std::runtime_error(what), residual_norm(residual_norm), iterations(iterations) {}
    double residual_norm;
    int iterations;
};

/// Newton iteration on the 2m x 2m square system (m spoke equations, m rim
/// equations; unknowns are the neighbor coordinates with coords[0].b pinned
/// to zero, plus the curvature). Starts from the flat law-of-cosines layout.
/// Converged when the max equation residual drops to `tol`; throws
/// newton_error after 50 iterations otherwise, or on a singular Jacobian.
RncSolution solve_star_newton(const VertexStar& star, double k_init = 0.0, double tol = 1e-12);

/// Closed-form solution of the fully symmetric 4-triangle star on the unit
/// sphere: hub at the pole, four neighbors at Cartesian height zbar with
/// horizontal offset xbar, legs taken as chords (corrected = false) or as
/// chord-corrected estimates of the surface geodesics (corrected = true).
struct SymmetricStarResult {
    double xbar = 0.0;          // free Cartesian offset of the neighbors, in (0,1)
    double zbar = 0.0;          // sqrt(1 - xbar^2)
    double rnc_spoke_sq = 0.0;  // squared RNC radius of the neighbors
    double gaussian_curvature = 0.0;
    bool corrected = false;
};

SymmetricStarResult solve_symmetric_sphere_star(double xbar, bool corrected);

}  // namespace geocorr
