#include "cym/numeric/contour.hpp"

#include <cmath>

#include "cym/errors.hpp"

namespace cym {

namespace {

// Trapezoid Cauchy rule with `nodes` points; assumes samples are prepared by
// the caller.  samples[m] = f(c + r e^{2 pi i m / nodes}).
CVec cauchy_coeff(const std::vector<CVec>& samples, int stride, int nodes,
                  Real radius, int j)
{
    const size_t m_dim = samples[0].size();
    CVec acc(m_dim, Cplx(0));
    const int total = static_cast<int>(samples.size());
    for (int m = 0, used = 0; m < total; m += stride, ++used) {
        Real ang = -2.0 * kPi * Real(j) * Real(m) / Real(total);
        Cplx w(std::cos(ang), std::sin(ang));
        for (size_t a = 0; a < m_dim; ++a)
            acc[a] += samples[static_cast<size_t>(m)][a] * w;
    }
    Real fact = 1.0;
    for (int p = 2; p <= j; ++p)
        fact *= Real(p);
    Cplx scale = fact / (Real(nodes) * std::pow(radius, Real(j)));
    for (auto& z : acc)
        z *= scale;
    return acc;
}

} // namespace

Jet1D contour_derivs(const CMap& f, const CVec& center, int var_index,
                     int order, Real radius, int nodes)
{
    if (order < 0 || radius <= 0.0)
        throw domain_error("contour_derivs: order >= 0 and radius > 0 required");
    if (nodes < 4 * (order + 1))
        throw domain_error("contour_derivs: nodes must be >= 4*(order+1)");

    // sample the doubled rule once; the even-indexed points form the base rule
    const int big = 2 * nodes;
    std::vector<CVec> samples(static_cast<size_t>(big));
    CVec point = center;
    for (int m = 0; m < big; ++m) {
        Real ang = 2.0 * kPi * Real(m) / Real(big);
        point[static_cast<size_t>(var_index)] =
            center[static_cast<size_t>(var_index)] +
            radius * Cplx(std::cos(ang), std::sin(ang));
        samples[static_cast<size_t>(m)] = f(point);
        if (!finite(samples[static_cast<size_t>(m)]))
            throw evaluation_error("contour_derivs: non-finite sample on contour");
    }

    Jet1D jet;
    jet.center = center[static_cast<size_t>(var_index)];
    jet.order = order;
    jet.coeffs.resize(static_cast<size_t>(order) + 1);
    jet.error_estimate.resize(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
        CVec fine = cauchy_coeff(samples, 1, big, radius, j);
        CVec coarse = cauchy_coeff(samples, 2, nodes, radius, j);
        Real est = 0;
        for (size_t a = 0; a < fine.size(); ++a)
            est = std::max(est, std::abs(fine[a] - coarse[a]));
        jet.coeffs[static_cast<size_t>(j)] = std::move(fine);
        jet.error_estimate[static_cast<size_t>(j)] = est;
    }
    return jet;
}

CVec contour_derivs_mixed(const CMap& f, const CVec& center,
                          const std::vector<int>& alpha,
                          const std::vector<Real>& radii, int nodes)
{
    int last = -1;
    for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
        if (alpha[static_cast<size_t>(i)] > 0)
            last = i;
    if (last < 0)
        return f(center);

    std::vector<int> rest = alpha;
    rest[static_cast<size_t>(last)] = 0;

    CMap inner = [&](const CVec& t) {
        return contour_derivs_mixed(f, t, rest, radii, nodes);
    };
    Jet1D jet = contour_derivs(inner, center, last, alpha[static_cast<size_t>(last)],
                               radii[static_cast<size_t>(last)], nodes);
    return jet.coeffs[static_cast<size_t>(alpha[static_cast<size_t>(last)])];
}

} // namespace cym
