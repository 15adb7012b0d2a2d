#include "cym/report/pipeline.hpp"

#include <cmath>

#include "cym/errors.hpp"
#include "cym/hodge/curvature.hpp"
#include "cym/numeric/linalg.hpp"

namespace cym {

PointGeometry compute_point_geometry(const FamilyModel& model, const CVec& t,
                                     const PointOptions& opts)
{
    PointGeometry out;
    out.t = t;

    PeriodJet jet;
    try {
        jet = model.jet(t, 4);
        out.P = norm_P(jet);
        out.K = kahler_potential(jet);
        out.wp = compute_wp(jet);
    } catch (const positivity_error& e) {
        out.invalid_reason = e.what();
        return out;
    } catch (const domain_error& e) {
        out.invalid_reason = e.what();
        return out;
    }
    if (!out.wp.metric_positive) {
        out.invalid_reason = "WP metric not positive definite";
        return out;
    }

    out.yukawa = compute_yukawa(jet, out.wp, opts.yukawa_asym_tol);
    out.thm13_residual = yukawa_cov_symmetry_residual(out.yukawa.Fcov);

    out.frame = normal_frame(jet, out.wp, out.yukawa);

    CurvatureAB ab = curvature_ab(*out.frame);
    Real rho = scalar_curvature(out.frame->h, ab.R);

    out.hodge_report.h = out.frame->h;
    out.hodge_report.A = ab.A;
    out.hodge_report.B = ab.B;
    out.hodge_report.R = ab.R;
    out.hodge_report.rho = rho;
    out.hodge_report.alpha = alpha_bound(model.n());
    out.hodge_report.checks = theorem_checks(out.frame->h, ab, out.frame->Fcov,
                                             rho, model.n(), opts.checks);

    if (opts.hodge_paths) {
        out.hodge = hodge_metric(model, t, opts.fd_levels, opts.fd_step_factor,
                                 opts.fd_tol);
        Real scale = std::max<Real>(1.0, out.hodge->h_unit.max_abs());
        Real resid = out.hodge->deviation / scale;
        out.hodge_report.checks.push_back({"Hodge-paths-agree",
                                           resid <= opts.hodge_paths_tol, resid,
                                           opts.hodge_paths_tol});
    }

    if (opts.curvature_oracle) {
        CTensor Rfd = direct_curvature_oracle(model, t, *out.frame,
                                              opts.fd_levels,
                                              opts.fd_step_factor);
        Real num = 0, den = 0;
        for (size_t a = 0; a < Rfd.data().size(); ++a) {
            num = std::max(num, std::abs(Rfd.data()[a] - ab.R.data()[a]));
            den = std::max(den, std::abs(ab.R.data()[a]));
        }
        out.curvature_dual_rel = num / std::max<Real>(den, 1e-300);
        out.hodge_report.checks.push_back(
            {"R-dual-path", out.curvature_dual_rel <= opts.curvature_oracle_tol,
             out.curvature_dual_rel, opts.curvature_oracle_tol});
    }

    out.valid = true;
    return out;
}

} // namespace cym
