#include "cym/models/family.hpp"

#include <algorithm>
#include <cmath>

#include "cym/errors.hpp"
#include "cym/numeric/contour.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/wp/geometry.hpp"

namespace cym {

Real FamilyModel::local_scale(const CVec& t) const
{
    return std::min<Real>(1.0, analyticity_radius(t));
}

PeriodJet FamilyModel::quadrature_jet(const CVec& t, int order, int nodes) const
{
    const int nv = n();
    Real rad = analyticity_radius(t);
    if (!(rad > 0))
        throw domain_error(kind() + ": point outside the analyticity domain");
    Real r = 0.1 * std::min<Real>(rad, 10.0);

    std::vector<Real> radii(static_cast<size_t>(nv), r);
    CMap f = [this](const CVec& p) { return omega(p); };

    PeriodJet out;
    out.point = t;
    out.order = order;
    out.Q = &Q();
    out.jet.nvars = nv;
    out.jet.order = order;
    out.jet.vec_len = static_cast<size_t>(dim());
    for (const MIdx& alpha : all_midx(nv, order))
        out.jet.d.emplace(alpha, contour_derivs_mixed(f, t, alpha, radii, nodes));

    // permutation cross-check: recompute one genuinely mixed derivative with
    // the nesting order reversed
    for (const MIdx& alpha : all_midx(nv, std::min(order, 2))) {
        std::vector<int> vars = indices_from_midx(alpha);
        if (vars.size() == 2 && vars[0] != vars[1]) {
            CMap g = [&](const CVec& p) {
                Jet1D inner = contour_derivs(f, p, vars[1], 1,
                                             radii[static_cast<size_t>(vars[1])], nodes);
                return inner.coeffs[1];
            };
            Jet1D outer = contour_derivs(g, t, vars[0], 1,
                                         radii[static_cast<size_t>(vars[0])], nodes);
            const CVec& swapped = outer.coeffs[1];
            const CVec& stored = out.jet.at(alpha);
            Real resid = 0;
            for (size_t a = 0; a < stored.size(); ++a)
                resid = std::max(resid, std::abs(stored[a] - swapped[a]));
            out.build_residual = std::max(out.build_residual, resid);
            break;
        }
    }
    return out;
}

PeriodJet FamilyModel::jet(const CVec& t, int order) const
{
    return quadrature_jet(t, order);
}

ValidationReport validate_model(const FamilyModel& model,
                                const std::vector<CVec>& sample_points)
{
    ValidationReport rep;
    rep.q_antisymmetry = model.Q().antisymmetry_residual();
    rep.all_valid = true;
    rep.min_norm = std::numeric_limits<Real>::infinity();
    rep.min_metric_eig = std::numeric_limits<Real>::infinity();

    for (const CVec& t : sample_points) {
        ValidationPoint vp;
        vp.t = t;
        PeriodJet jet = model.jet(t, 2);
        const CVec& om = jet.omega();

        CVec om_bar(om.size());
        for (size_t a = 0; a < om.size(); ++a)
            om_bar[a] = std::conj(om[a]);
        vp.norm = (Cplx(0, 1) * jet.pair(om, om_bar)).real();
        vp.positive = vp.norm > 0;

        // residuals relative to the operand magnitudes: near a puncture the
        // derivatives grow like 1/z^k and an absolute residual is meaningless
        auto vnorm = [](const CVec& v) {
            Real s = 0;
            for (const Cplx& z : v)
                s += std::norm(z);
            return std::sqrt(s);
        };
        Real om_n = vnorm(om);
        for (int i = 0; i < model.n(); ++i)
            vp.transversality1 = std::max(
                vp.transversality1, std::abs(jet.pair(om, jet.d({i}))) /
                                        std::max<Real>(om_n * vnorm(jet.d({i})), 1e-300));
        for (int i = 0; i < model.n(); ++i)
            for (int j = i; j < model.n(); ++j)
                vp.transversality2 = std::max(
                    vp.transversality2,
                    std::abs(jet.pair(om, jet.d({i, j}))) /
                        std::max<Real>(om_n * vnorm(jet.d({i, j})), 1e-300));

        if (vp.positive) {
            CTensor g = wp_metric(jet);
            vp.min_metric_eig = min_eigenvalue(g);
            vp.metric_positive = vp.min_metric_eig > 0;
        } else {
            vp.min_metric_eig = 0;
            vp.metric_positive = false;
        }

        rep.max_transversality1 = std::max(rep.max_transversality1, vp.transversality1);
        rep.max_transversality2 = std::max(rep.max_transversality2, vp.transversality2);
        rep.min_norm = std::min(rep.min_norm, vp.norm);
        rep.min_metric_eig = std::min(rep.min_metric_eig, vp.min_metric_eig);
        rep.all_valid = rep.all_valid && vp.positive && vp.metric_positive;
        rep.points.push_back(std::move(vp));
    }
    return rep;
}

} // namespace cym
