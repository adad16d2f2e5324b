#include "geocorr/rnc_estimator.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace geocorr {

namespace {

constexpr int kMaxNewtonIterations = 50;

double cross2(Coord2 xi, Coord2 xj) { return xi.a * xj.b - xi.b * xj.a; }

void require_positive_finite(const std::vector<double>& values, const char* what) {
    for (double v : values)
        if (!std::isfinite(v) || v <= 0.0)
            throw std::invalid_argument(std::string("VertexStar: ") + what +
                                        " lengths must be positive and finite");
}

}  // namespace

double rnc_leg_sq(Coord2 xi, Coord2 xj, double k) {
    const double da = xi.a - xj.a;
    const double db = xi.b - xj.b;
    const double cr = cross2(xi, xj);
    return da * da + db * db - (k / 3.0) * cr * cr;
}

VertexStar::VertexStar(std::vector<double> spoke_sq, std::vector<double> rim_sq)
    : spoke_sq_(std::move(spoke_sq)), rim_sq_(std::move(rim_sq)) {
    if (spoke_sq_.size() < 3 || spoke_sq_.size() != rim_sq_.size())
        throw std::invalid_argument("VertexStar: need m >= 3 spokes and as many rim legs");
    require_positive_finite(spoke_sq_, "spoke");
    require_positive_finite(rim_sq_, "rim");
    const int m = valence();
    for (int i = 0; i < m; ++i) {
        const double r = std::sqrt(spoke_sq_[i]);
        const double s = std::sqrt(spoke_sq_[(i + 1) % m]);
        const double t = std::sqrt(rim_sq_[i]);
        if (!(t < r + s && t > std::abs(r - s)))
            throw std::invalid_argument("VertexStar: rim leg " + std::to_string(i) +
                                        " violates the strict triangle inequality");
    }
}

RncSolution solve_star_newton(const VertexStar& star, double k_init, double tol) {
    if (!(std::isfinite(tol) && tol > 0.0))
        throw std::invalid_argument("solve_star_newton: tol must be positive");
    const int m = star.valence();
    const auto& spoke = star.spoke_sq();
    const auto& rim = star.rim_sq();

    // Unknown layout: [a0, a1, b1, ..., a_{m-1}, b_{m-1}, k]; b0 is the gauge.
    const int n = 2 * m;
    std::vector<Coord2> x(m);
    double k = k_init;

    // Flat initial layout: exact spoke radii, hub angles from the law of cosines.
    double phi = 0.0;
    for (int i = 0; i < m; ++i) {
        const double r = std::sqrt(spoke[i]);
        if (i > 0) {
            const double rp = std::sqrt(spoke[i - 1]);
            phi += std::acos((spoke[i - 1] + spoke[i] - rim[i - 1]) / (2.0 * rp * r));
        }
        x[i] = {r * std::cos(phi), r * std::sin(phi)};
    }
    x[0].b = 0.0;

    Eigen::VectorXd f(n);
    Eigen::MatrixXd jac(n, n);
    const auto residuals = [&]() {
        for (int i = 0; i < m; ++i) f(i) = x[i].a * x[i].a + x[i].b * x[i].b - spoke[i];
        for (int i = 0; i < m; ++i) {
            const int j = (i + 1) % m;
            const double da = x[i].a - x[j].a;
            const double db = x[i].b - x[j].b;
            const double cr = cross2(x[i], x[j]);
            f(m + i) = da * da + db * db - (k / 3.0) * cr * cr - rim[i];
        }
        return f.lpNorm<Eigen::Infinity>();
    };
    const auto var_a = [](int i) { return i == 0 ? 0 : 2 * i - 1; };
    const auto var_b = [](int i) { return 2 * i; };  // unused for i == 0

    double residual = residuals();
    int iterations = 0;
    while (residual > tol) {
        if (iterations >= kMaxNewtonIterations)
            throw newton_error("solve_star_newton: no convergence after " +
                                   std::to_string(kMaxNewtonIterations) + " iterations",
                               residual, iterations);
        jac.setZero();
        for (int i = 0; i < m; ++i) {
            jac(i, var_a(i)) = 2.0 * x[i].a;
            if (i > 0) jac(i, var_b(i)) = 2.0 * x[i].b;
        }
        for (int i = 0; i < m; ++i) {
            const int j = (i + 1) % m;
            const int row = m + i;
            const double da = x[i].a - x[j].a;
            const double db = x[i].b - x[j].b;
            const double cr = cross2(x[i], x[j]);
            const double w = 2.0 * k / 3.0 * cr;
            jac(row, var_a(i)) = 2.0 * da - w * x[j].b;
            if (i > 0) jac(row, var_b(i)) = -2.0 * db + w * x[j].a;
            jac(row, var_a(j)) += -2.0 * da + w * x[i].b;
            if (j > 0) jac(row, var_b(j)) += 2.0 * db - w * x[i].a;
            jac(row, n - 1) = -cr * cr / 3.0;
        }

        Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
        if (!lu.isInvertible())
            throw newton_error("solve_star_newton: singular Jacobian (degenerate star)", residual,
                               iterations);
        const Eigen::VectorXd delta = lu.solve(-f);
        x[0].a += delta(0);
        for (int i = 1; i < m; ++i) {
            x[i].a += delta(var_a(i));
            x[i].b += delta(var_b(i));
        }
        k += delta(n - 1);
        ++iterations;
        residual = residuals();
    }

    // Canonical gauge: coords[0] on the positive a axis, coords[1] in the
    // upper half plane (both maps are symmetries of the equations).
    if (x[0].a < 0.0)
        for (auto& c : x) {
            c.a = -c.a;
            c.b = -c.b;
        }
    if (m > 1 && x[1].b < 0.0)
        for (auto& c : x) c.b = -c.b;
    x[0].b = 0.0;

    return {std::move(x), k, residual, iterations};
}

SymmetricStarResult solve_symmetric_sphere_star(double xbar, bool corrected) {
    if (!(std::isfinite(xbar) && xbar > 0.0 && xbar < 1.0))
        throw std::invalid_argument("solve_symmetric_sphere_star: xbar must lie in (0, 1)");
    const double xbar_sq = xbar * xbar;
    const double zbar = std::sqrt((1.0 - xbar) * (1.0 + xbar));
    // 1 - zbar evaluated as xbar^2/(1 + zbar): the straight subtraction would
    // cancel catastrophically for small xbar and spoil the exact-identity
    // regime of the uncorrected estimate.
    const double height_drop = xbar_sq / (1.0 + zbar);
    const double spoke_chord_sq = xbar_sq + height_drop * height_drop;  // xbar^2 + (zbar-1)^2

    SymmetricStarResult result;
    result.xbar = xbar;
    result.zbar = zbar;
    result.corrected = corrected;

    if (!corrected) {
        // rim chord^2 = 2 xbar^2; the numerator 2(spoke^2 - xbar^2) reduces to
        // 2 (1-zbar)^2 exactly.
        const double xt2 = spoke_chord_sq;
        result.rnc_spoke_sq = xt2;
        result.gaussian_curvature = 6.0 * height_drop * height_drop / (xt2 * xt2);
        return result;
    }

    const double xt2 = spoke_chord_sq + spoke_chord_sq * spoke_chord_sq / 12.0;
    // 2*xt2 - (2 xbar^2 + (2 xbar^2)^2 / 12), regrouped so that the xbar^4
    // scale terms combine without catastrophic cancellation:
    const double w2 = height_drop * height_drop;
    const double numerator = 2.0 * w2 - xbar_sq * xbar_sq / 6.0 + xbar_sq * w2 / 3.0 +
                             w2 * w2 / 6.0;
    result.rnc_spoke_sq = xt2;
    result.gaussian_curvature = 3.0 * numerator / (xt2 * xt2);
    return result;
}

}  // namespace geocorr
