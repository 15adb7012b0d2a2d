#include "cym/wp/yukawa.hpp"

#include <algorithm>
#include <cmath>

#include "cym/errors.hpp"

namespace cym {

namespace {

// The jet is exponent-keyed, so Q(Omega, d_i d_j d_k Omega) is symmetric by
// storage.  The meaningful asymmetry lives in the integration-by-parts route
// -Q(d_i Omega, d_j d_k Omega), which equals the direct route exactly when
// Griffiths transversality holds and is manifestly order-dependent when it
// does not.
Real yukawa_asymmetry(const PeriodJet& jet, const CTensor& direct)
{
    const int n = jet.n();
    Real worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Cplx alt = -jet.pair(jet.d({i}), jet.d({j, k}));
                worst = std::max(worst, std::abs(alt - direct(i, j, k)));
            }
    return worst;
}

} // namespace

CTensor yukawa(const PeriodJet& jet, Real asym_tol)
{
    const int n = jet.n();
    if (jet.order < 3)
        throw domain_error("yukawa: jet order >= 3 required");

    CTensor F({n, n, n}, Symmetry::totally_symmetric);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                F(i, j, k) = jet.pair(jet.omega(), jet.d({i, j, k}));

    Real resid = yukawa_asymmetry(jet, F);
    Real scale = std::max<Real>(1, F.max_abs());
    if (resid > asym_tol * scale)
        throw symmetry_error("yukawa: coupling routes disagree (transversality "
                             "violated), residual " + std::to_string(resid));
    return F;
}

CTensor yukawa_first_derivs(const PeriodJet& jet)
{
    const int n = jet.n();
    if (jet.order < 4)
        throw domain_error("yukawa_first_derivs: jet order >= 4 required");
    CTensor dF({n, n, n, n}); // dF(l, i, j, k)
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    dF(l, i, j, k) =
                        jet.pair(jet.d({l}), jet.d({i, j, k})) +
                        jet.pair(jet.omega(), jet.d({l, i, j, k}));
    return dF;
}

CTensor yukawa_cov_deriv(const PeriodJet& jet, const WpGeometry& wp,
                         const CTensor& F)
{
    const int n = jet.n();
    CTensor dF = yukawa_first_derivs(jet);
    CTensor Fcov({n, n, n, n}); // Fcov(i, j, k, l) = F_{ijk,l}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Cplx acc = dF(l, i, j, k);
                    for (int s = 0; s < n; ++s) {
                        acc -= wp.Gamma(s, l, i) * F(s, j, k);
                        acc -= wp.Gamma(s, l, j) * F(i, s, k);
                        acc -= wp.Gamma(s, l, k) * F(i, j, s);
                    }
                    acc += 2.0 * F(i, j, k) * wp.Kl[static_cast<size_t>(l)];
                    Fcov(i, j, k, l) = acc;
                }
    return Fcov;
}

YukawaData compute_yukawa(const PeriodJet& jet, const WpGeometry& wp,
                          Real asym_tol)
{
    YukawaData out;
    out.F = yukawa(jet, asym_tol);
    out.asym_residual = yukawa_asymmetry(jet, out.F);
    out.Fcov = yukawa_cov_deriv(jet, wp, out.F);
    return out;
}

Real yukawa_cov_symmetry_residual(const CTensor& Fcov)
{
    const int n = Fcov.dim(0);
    Real worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    worst = std::max(worst,
                                     std::abs(Fcov(i, j, k, l) - Fcov(i, j, l, k)));
    return worst;
}

} // namespace cym
