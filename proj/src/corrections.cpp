#include "geocorr/corrections.hpp"

#include <cmath>
#include <stdexcept>

namespace geocorr {

namespace {

void require_chord_sq(double chord_sq) {
    if (!std::isfinite(chord_sq) || chord_sq < 0.0)
        throw std::invalid_argument("correction: chord_sq must be finite and >= 0");
}

CorrectionReport make_report(double chord_sq, double correction, CorrectionMethod method) {
    return {chord_sq, correction, chord_sq + correction, method};
}

}  // namespace

CorrectionReport correct_via_k(double chord_sq, double k_vv) {
    require_chord_sq(chord_sq);
    if (!std::isfinite(k_vv)) throw std::invalid_argument("correct_via_k: k_vv must be finite");
    const double kl = k_vv * chord_sq;
    return make_report(chord_sq, kl * kl / 12.0, CorrectionMethod::via_k);
}

CorrectionReport correct_via_normals(double chord_sq, const UnitVec3& n_p, const UnitVec3& n_q,
                                     const Vec3& delta_x) {
    require_chord_sq(chord_sq);
    if (std::abs(norm_sq(delta_x) - chord_sq) > 1e-9)
        throw std::invalid_argument("correct_via_normals: delta_x is inconsistent with chord_sq");
    const double flux = dot(n_p.vec() - n_q.vec(), delta_x);
    return make_report(chord_sq, flux * flux / 12.0, CorrectionMethod::via_normals);
}

CorrectionReport correct_via_normal_flow(double chord_sq, double dlsq_dn) {
    require_chord_sq(chord_sq);
    if (!std::isfinite(dlsq_dn))
        throw std::invalid_argument("correct_via_normal_flow: dlsq_dn must be finite");
    return make_report(chord_sq, dlsq_dn * dlsq_dn / 48.0, CorrectionMethod::via_normal_flow);
}

}  // namespace geocorr
