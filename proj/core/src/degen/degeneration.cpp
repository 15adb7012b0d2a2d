#include "cym/degen/degeneration.hpp"

#include <algorithm>
#include <cmath>

#include "cym/errors.hpp"

namespace cym {

namespace {

CVec matvec_int(const std::vector<std::vector<long long>>& N, const CVec& v)
{
    const size_t d = N.size();
    CVec out(d, Cplx(0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (N[i][j] != 0)
                out[i] += Real(N[i][j]) * v[j];
    return out;
}

Real vec_norm(const CVec& v)
{
    Real s = 0;
    for (const Cplx& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

// one scan row at z = r e^{i theta}, templated on the real scalar
template <class R>
ScanRow scan_row(const NilpotentOrbitModel& model, Real r, Real theta)
{
    using C = Cx<R>;
    const auto& N = model.Nint();
    const auto& A = model.A_coeffs();
    const auto& Q = model.Q();

    C z = C(R(r), R(0)) * std::exp(C(R(0), R(theta)));
    auto oj = detail::orbit_jet<R>(N, A, z, 3);

    auto conj_vec = [](const std::vector<C>& v) {
        std::vector<C> out(v.size());
        for (size_t i = 0; i < v.size(); ++i)
            out[i] = std::conj(v[i]);
        return out;
    };

    const auto& Om = oj.omega_derivs[0];
    const auto& dOm = oj.omega_derivs[1];
    C i1 = C(R(0), R(1));

    C Pc = i1 * Q.pair(Om, conj_vec(Om));
    C dP = i1 * Q.pair(dOm, conj_vec(Om));
    C ddbarP = i1 * Q.pair(dOm, conj_vec(dOm));
    // bilinear pairing: the orbit exponential cancels exactly on the twisted
    // jet, so F_zzz avoids the log-ladder roundoff entirely
    C F = Q.pair(oj.twisted[0], oj.twisted[3]);

    ScanRow row;
    row.r = r;
    row.z = Cplx(double(z.real()), double(z.imag()));
    R P = Pc.real();
    row.P = double(P);
    C z3 = z * z * z;
    C z3F = z3 * F;
    row.z3F = Cplx(double(z3F.real()), double(z3F.imag()));
    if (!(P > R(0))) {
        row.valid = false;
        return row;
    }
    R g = (-ddbarP / P + dP * std::conj(dP) / (P * P)).real();
    row.g = double(g);
    if (!(g > R(0))) {
        row.valid = false;
        return row;
    }
    R e2K = R(1) / (P * P);
    R absF2 = std::norm(F);
    R h = R(2) * g + e2K / (g * g) * absF2;
    row.h = double(h);
    R margin = h * h * h - e2K * absF2;
    row.h3_minus_F2 = double(margin);
    R logr = std::log(R(1) / R(r));
    row.schwarz_ratio = double(h * R(r) * R(r) * logr * logr);
    row.valid = true;
    return row;
}

// Neville extrapolation to r = 0 through (r_k, v_k); the scan values are
// analytic in z along the ray
Cplx neville_at_zero(const std::vector<Real>& r, const std::vector<Cplx>& v)
{
    std::vector<Cplx> p = v;
    const size_t n = p.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = 0; i + k < n; ++i)
            p[i] = (Cplx(r[i + k]) * p[i] - Cplx(r[i]) * p[i + 1]) /
                   Cplx(r[i + k] - r[i]);
    return p[0];
}

} // namespace

LimitF3 limit_f3(const NilpotentOrbitModel& model, Real theta)
{
    LimitF3 out;
    out.Finf = model.A0();
    Real scale = 0.5 * std::min<Real>(1.0, model.series_radius());
    out.radii = {scale * 1e-2, scale * 1e-4, scale * 1e-6};

    Real norm0 = vec_norm(out.Finf);
    for (Real r : out.radii) {
        Cplx z = r * std::exp(Cplx(0, theta));
        auto oj = detail::orbit_jet<Real>(model.Nint(), model.A_coeffs(), z, 0);
        // twisted[0] = e^{-(log z/2pii) N} Omega(z) = A(z)
        Real resid = 0;
        for (size_t a = 0; a < out.Finf.size(); ++a)
            resid += std::norm(oj.twisted[0][a] - out.Finf[a]);
        out.residuals.push_back(std::sqrt(resid) / std::max<Real>(norm0, 1e-300));
    }
    out.converged = true;
    for (size_t k = 1; k < out.residuals.size(); ++k)
        if (out.residuals[k] > out.residuals[k - 1] + 1e-14)
            out.converged = false;
    if (!out.converged)
        throw structure_error("limit_f3: twisted-section residual does not "
                              "decrease toward z = 0");
    return out;
}

WangResult wang_criterion(const CTensor& N, const CVec& Finf, Real tol)
{
    const int d = N.dim(0);
    WangResult out;
    out.NFinf.assign(static_cast<size_t>(d), Cplx(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out.NFinf[static_cast<size_t>(i)] += N(i, j) * Finf[static_cast<size_t>(j)];
    Real nf = vec_norm(out.NFinf);
    Real f = vec_norm(Finf);
    out.ratio = nf / std::max<Real>(f, 1e-300);
    out.incomplete = out.ratio <= tol;
    return out;
}

ConstraintResult constraint_check(const CTensor& N, const CVec& Finf,
                                  const SymplecticForm& Q)
{
    const int d = N.dim(0);
    auto apply = [&](const CTensor& Mx, const CVec& v) {
        CVec out(static_cast<size_t>(d), Cplx(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                out[static_cast<size_t>(i)] += Mx(i, j) * v[static_cast<size_t>(j)];
        return out;
    };

    CTensor M({d, d});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            M(i, j) = N(i, j) / kTwoPiI;

    ConstraintResult out;
    {
        // M (M - 1) (M - 2) Finf
        CVec v = apply(M, Finf);
        CVec w1 = v; // (M - 1)... applied to M Finf
        CVec mv = apply(M, v);
        for (size_t a = 0; a < w1.size(); ++a)
            w1[a] = mv[a] - v[a];
        CVec mw = apply(M, w1);
        CVec w2(w1.size());
        for (size_t a = 0; a < w1.size(); ++a)
            w2[a] = mw[a] - 2.0 * w1[a];
        out.derived = Q.pair(Finf, w2);
    }
    {
        CVec n1 = apply(N, Finf);
        CVec n2 = apply(N, n1);
        CVec n3 = apply(N, n2);
        CVec comb(n1.size());
        for (size_t a = 0; a < n1.size(); ++a)
            comb[a] = n3[a] - 3.0 * n2[a] - 2.0 * n1[a];
        out.paper_literal = Q.pair(Finf, comb);
    }
    Real f = vec_norm(Finf);
    Real nn = 0;
    for (const Cplx& z : N.data())
        nn += std::norm(z);
    nn = std::sqrt(nn);
    out.scale = f * f * std::pow(std::max<Real>(nn, 1.0), 3.0);
    return out;
}

std::vector<Real> default_scan_radii(const NilpotentOrbitModel& model)
{
    Real rmax = 0.5 * std::min<Real>(1.0, model.series_radius());
    std::vector<Real> radii;
    for (int k = 0; k < 6; ++k)
        radii.push_back(rmax * std::pow(10.0, -Real(k)));
    return radii;
}

ScanResult yukawa_limit_scan(const NilpotentOrbitModel& model, Real theta,
                             std::vector<Real> radii, ScanPrecision prec)
{
    if (radii.empty())
        radii = default_scan_radii(model);
    std::sort(radii.begin(), radii.end(), std::greater<Real>());

    ScanResult out;
    out.precision = prec;
    for (Real r : radii) {
        ScanRow row = prec == ScanPrecision::extended
                          ? scan_row<long double>(model, r, theta)
                          : scan_row<double>(model, r, theta);
        out.rows.push_back(row);
    }

    // limit of z^3 F_zzz along the ray
    {
        std::vector<Real> rs;
        std::vector<Cplx> vs;
        for (const ScanRow& row : out.rows) {
            rs.push_back(row.r);
            vs.push_back(row.z3F);
        }
        out.limit_lhs = neville_at_zero(rs, vs);
    }

    CTensor N = model.Nmat();
    out.constraint = constraint_check(N, model.A0(), model.Q());
    out.limit_rhs = out.constraint.derived;
    out.agreement = std::abs(out.limit_lhs - out.limit_rhs) /
                    (1.0 + std::abs(out.limit_rhs));
    out.wang = wang_criterion(N, model.A0());

    out.bounds_ok = true;
    out.min_h3_margin = std::numeric_limits<Real>::infinity();
    Real ratio_head = 0;
    for (size_t k = 0; k < out.rows.size(); ++k) {
        const ScanRow& row = out.rows[k];
        if (!row.valid) {
            out.bounds_ok = false;
            continue;
        }
        Real h3 = row.h * row.h * row.h;
        Real rel = row.h3_minus_F2 / h3;
        out.min_h3_margin = std::min(out.min_h3_margin, rel);
        if (row.h3_minus_F2 < -1e-8 * h3)
            out.bounds_ok = false;
        if (k < 2)
            ratio_head = std::max(ratio_head, row.schwarz_ratio);
    }
    // exponent check only: the ratio must not blow up relative to the outer
    // radii (a wrong power of r would grow by orders of magnitude here)
    out.schwarz_bounded = true;
    for (const ScanRow& row : out.rows)
        if (row.valid && row.schwarz_ratio > 4.0 * ratio_head + 1e-12)
            out.schwarz_bounded = false;
    return out;
}

} // namespace cym
