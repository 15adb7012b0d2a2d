#include "cym/wp/geometry.hpp"

#include <cmath>

#include "cym/errors.hpp"
#include "cym/numeric/linalg.hpp"

namespace cym {

namespace {

CVec conj_vec(const CVec& v)
{
    CVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = std::conj(v[i]);
    return out;
}

const Cplx kI{0, 1};

} // namespace

Real norm_P(const PeriodJet& jet)
{
    Cplx p = kI * jet.pair(jet.omega(), conj_vec(jet.omega()));
    return p.real(); // imaginary part vanishes identically for antisymmetric Q
}

Cplx dP(const PeriodJet& jet, int i)
{
    return kI * jet.pair(jet.d({i}), conj_vec(jet.omega()));
}

Cplx ddbarP(const PeriodJet& jet, int i, int j)
{
    return kI * jet.pair(jet.d({i}), conj_vec(jet.d({j})));
}

Cplx ddP(const PeriodJet& jet, int i, int j)
{
    return kI * jet.pair(jet.d({i, j}), conj_vec(jet.omega()));
}

Cplx dddbarP(const PeriodJet& jet, int l, int i, int q)
{
    return kI * jet.pair(jet.d({l, i}), conj_vec(jet.d({q})));
}

Real kahler_potential(const PeriodJet& jet)
{
    Real P = norm_P(jet);
    if (!(P > 0))
        throw positivity_error("kahler_potential: sqrt(-1) Q(Omega, conj Omega) = " +
                               std::to_string(P) + " is not positive");
    return -std::log(P);
}

CTensor wp_metric(const PeriodJet& jet)
{
    const int n = jet.n();
    Real P = norm_P(jet);
    if (!(P > 0))
        throw positivity_error("wp_metric: non-positive norm");
    CTensor g({n, n}, Symmetry::hermitian);
    for (int i = 0; i < n; ++i) {
        Cplx dPi = dP(jet, i);
        for (int j = 0; j < n; ++j) {
            Cplx dPj_bar = std::conj(dP(jet, j));
            g(i, j) = -ddbarP(jet, i, j) / P + dPi * dPj_bar / (P * P);
        }
    }
    // clean hermitian roundoff
    for (int i = 0; i < n; ++i) {
        g(i, i) = Cplx(g(i, i).real(), 0);
        for (int j = i + 1; j < n; ++j) {
            Cplx avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
            g(i, j) = avg;
            g(j, i) = std::conj(avg);
        }
    }
    return g;
}

CTensor wp_metric_first_derivs(const PeriodJet& jet)
{
    const int n = jet.n();
    Real P = norm_P(jet);
    if (!(P > 0))
        throw positivity_error("wp_metric_first_derivs: non-positive norm");
    const Real P2 = P * P, P3 = P2 * P;

    CTensor dg({n, n, n}); // dg(l, i, q) = d_l g_{i qbar}
    for (int l = 0; l < n; ++l) {
        Cplx dPl = dP(jet, l);
        for (int i = 0; i < n; ++i) {
            Cplx dPi = dP(jet, i);
            Cplx ddPli = ddP(jet, l, i);
            for (int q = 0; q < n; ++q) {
                Cplx dPq_bar = std::conj(dP(jet, q));
                Cplx t1 = -(P * dddbarP(jet, l, i, q) -
                            ddbarP(jet, i, q) * dPl) /
                          P2;
                Cplx t2 = (ddPli * dPq_bar + dPi * ddbarP(jet, l, q)) / P2;
                Cplx t3 = -2.0 * dPi * dPq_bar * dPl / P3;
                dg(l, i, q) = t1 + t2 + t3;
            }
        }
    }
    return dg;
}

CTensor christoffel(const PeriodJet& jet)
{
    const int n = jet.n();
    CTensor g = wp_metric(jet);
    CTensor ginv = inverse(g);
    CTensor dg = wp_metric_first_derivs(jet);

    CTensor Gamma({n, n, n}); // Gamma(s, l, i)
    for (int s = 0; s < n; ++s)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i) {
                Cplx acc(0);
                for (int q = 0; q < n; ++q)
                    acc += ginv(q, s) * dg(l, i, q); // g^{s qbar} = Ginv[q][s]
                Gamma(s, l, i) = acc;
            }
    return Gamma;
}

CVec connection_kl(const PeriodJet& jet)
{
    const int n = jet.n();
    Real P = norm_P(jet);
    if (!(P > 0))
        throw positivity_error("connection_kl: non-positive norm");
    CVec Kl(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l)
        Kl[static_cast<size_t>(l)] = -dP(jet, l) / P;
    return Kl;
}

WpGeometry compute_wp(const PeriodJet& jet)
{
    WpGeometry out;
    out.K = kahler_potential(jet);
    out.g = wp_metric(jet);
    out.Kl = connection_kl(jet);
    auto eig = herm_eigen(out.g);
    out.min_metric_eig = eig.front();
    out.metric_positive = eig.front() > 0;
    if (out.metric_positive)
        out.Gamma = christoffel(jet);
    else
        out.Gamma = CTensor({jet.n(), jet.n(), jet.n()});
    return out;
}

} // namespace cym
