#pragma once

#include <functional>

#include "cym/models/family.hpp"
#include "cym/numeric/ctensor.hpp"
#include "cym/numeric/hessian.hpp"
#include "cym/wp/normal_frame.hpp"

namespace cym {

// Curvature of the Hodge metric in the WP-normal unit-gauge frame, closed
// form:
//   R_{i jbar k lbar} = A_{i jbar k lbar} + B_{i jbar k lbar}
//   A = 2 d_ij d_kl + 2 d_il d_kj - 4 sum_s F_iks conj(F_jls)
//       + 2 sum_mnpq F_qkm conj(F_plm) F_inp conj(F_jnq)
//   B = sum_rs F_irs,k conj(F_jrs,l)
//       - sum_mn (sum_rs F_irs,k conj(F_mrs)) conj(sum_rs F_jrs,l conj(F_nrs))
//         h^{n mbar}
// Sign convention: rho = -h^{i jbar} h^{k lbar} R_{i jbar k lbar} < 0, so R
// contracts positively on these metrics; the cubic model anchors the
// convention (R = 20/9, rho = -1/5).
struct CurvatureAB {
    CTensor A;
    CTensor B;
    CTensor R;
};

// Inputs must be expressed in the normal frame: g within frame_tol of the
// identity is enforced (contract violation otherwise).
CurvatureAB curvature_ab(const CTensor& g_frame, const CTensor& F,
                         const CTensor& Fcov, const CTensor& h,
                         Real frame_tol = 1e-8);

CurvatureAB curvature_ab(const NormalFrame& frame, Real frame_tol = 1e-8);

// rho = -h^{i jbar} h^{k lbar} R_{i jbar k lbar}
Real scalar_curvature(const CTensor& h, const CTensor& R);

// Ric(h)_{k lbar} = -h^{i jbar} R_{i jbar k lbar} (hermitian, negative
// definite on valid points)
CTensor ricci_contraction(const CTensor& h, const CTensor& R);

// R(v, conj v, v, conj v) / h(v, conj v)^2
Real holomorphic_sectional(const CTensor& h, const CTensor& R, const CVec& v);

// FD core of the oracle: the general Kahler curvature formula applied to an
// arbitrary hermitian metric field via Wirtinger finite differences, in the
// field's own coordinates.
using MetricField = std::function<CTensor(const CVec&)>;
CTensor kahler_curvature_fd(const MetricField& hfield, const CVec& t,
                            const FdOptions& opts);

// Independent finite-difference curvature: the h-field is evaluated through
// the unit-gauge closed form on a stencil in ambient coordinates, Wirtinger
// derivatives are taken numerically, the general Kahler curvature formula is
// applied, and the result is transported into the frame.
CTensor direct_curvature_oracle(const FamilyModel& model, const CVec& t,
                                const NormalFrame& frame, int fd_levels = 3,
                                Real fd_step_factor = 1e-2);

} // namespace cym
