#pragma once

#include "geocorr/geometry.hpp"

namespace geocorr {

enum class CorrectionMethod { via_k, via_normals, via_normal_flow };

/// Result of turning a flat (chordal) squared length into an estimate of the
/// squared geodesic length on the surface. corrected_sq = chord_sq + correction
/// and the correction is a square, hence never negative.
struct CorrectionReport {
    double chord_sq = 0.0;
    double correction = 0.0;
    double corrected_sq = 0.0;
    CorrectionMethod method = CorrectionMethod::via_k;
};

/// correction = (k_vv * chord_sq)^2 / 12, with k_vv the normal curvature
/// along the chord direction.
CorrectionReport correct_via_k(double chord_sq, double k_vv);

/// correction = ((n_p - n_q) . delta_x)^2 / 12 from the endpoint unit normals.
/// delta_x must reproduce chord_sq (|delta_x|^2 within 1e-9), otherwise the
/// inputs are rejected.
CorrectionReport correct_via_normals(double chord_sq, const UnitVec3& n_p, const UnitVec3& n_q,
                                     const Vec3& delta_x);

/// correction = (d(chord_sq)/dn)^2 / 48, where the derivative is taken along
/// the flow that drags the surface along its unit normal.
CorrectionReport correct_via_normal_flow(double chord_sq, double dlsq_dn);

}  // namespace geocorr
