#include "cym/hodge/metric.hpp"

#include <cmath>

#include "cym/errors.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/wp/yukawa.hpp"

namespace cym {

CTensor hodge_metric_unit_gauge(const WpGeometry& wp, const CTensor& F)
{
    const int n = wp.g.dim(0);
    CTensor ginv = inverse(wp.g);
    Real e2K = std::exp(2.0 * wp.K);

    CTensor h({n, n}, Symmetry::hermitian);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cplx acc = 2.0 * wp.g(i, j);
            for (int m = 0; m < n; ++m)
                for (int nn = 0; nn < n; ++nn)
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            acc += e2K * ginv(nn, m) * ginv(q, p) * F(i, m, p) *
                                   std::conj(F(j, nn, q));
            h(i, j) = acc;
        }
    for (int i = 0; i < n; ++i)
        h(i, i) = Cplx(h(i, i).real(), 0);
    return h;
}

HodgeMetricResult hodge_metric(const FamilyModel& model, const CVec& t,
                               int fd_levels, Real fd_step_factor, Real fd_tol)
{
    PeriodJet jet = model.jet(t, 3);
    WpGeometry wp = compute_wp(jet);
    if (!wp.metric_positive)
        throw positivity_error("hodge_metric: WP metric not positive definite "
                               "at the requested point");
    CTensor F = yukawa(jet);

    HodgeMetricResult out;
    out.h_unit = hodge_metric_unit_gauge(wp, F);

    RealField logdetg = [&](const CVec& p) {
        PeriodJet j = model.jet(p, 2);
        CTensor g = wp_metric(j);
        Cplx d = det(g);
        if (!(d.real() > 0))
            throw evaluation_error("hodge_metric: det g <= 0 on the FD stencil");
        return std::log(d.real());
    };

    FdOptions opts;
    opts.step = fd_step_factor * model.local_scale(t);
    opts.levels = fd_levels;
    opts.tol = fd_tol;
    FdHessian hess = fd_mixed_hessian(logdetg, t, opts);
    out.ric_fd_error = hess.error_estimate;

    const int n = model.n();
    out.ric = CTensor({n, n}, Symmetry::hermitian);
    out.h_ric = CTensor({n, n}, Symmetry::hermitian);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.ric(i, j) = -hess.matrix(i, j);
            out.h_ric(i, j) = Real(n + 3) * wp.g(i, j) + out.ric(i, j);
        }

    Real dev = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dev = std::max(dev, std::abs(out.h_ric(i, j) - out.h_unit(i, j)));
    out.deviation = dev;
    return out;
}

} // namespace cym
