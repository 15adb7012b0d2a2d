#pragma once

#include "cym/numeric/ctensor.hpp"
#include "cym/wp/period_jet.hpp"

namespace cym {

// Weil-Petersson layer at one point, computed exactly from the period jet
// through pairing identities (no finite differences on this layer).
//
// With P = sqrt(-1) Q(Omega, conj Omega):
//   K        = -log P
//   g_{i jbar} = -d_i d_jbar P / P + (d_i P)(d_jbar P) / P^2
//   Gamma^s_{li} = g^{s qbar} d_l g_{i qbar}
//   K_l      = -d_l P / P
struct WpGeometry {
    Real K = 0;
    CTensor g;       // hermitian n x n
    CTensor Gamma;   // Gamma(s, l, i), symmetric in (l, i)
    CVec Kl;
    bool metric_positive = false;
    Real min_metric_eig = 0;
};

// pairing building blocks
Real norm_P(const PeriodJet& jet);                       // sqrt(-1) Q(Om, conj Om)
Cplx dP(const PeriodJet& jet, int i);                    // sqrt(-1) Q(d_i Om, conj Om)
Cplx ddbarP(const PeriodJet& jet, int i, int j);         // sqrt(-1) Q(d_i Om, conj d_j Om)
Cplx ddP(const PeriodJet& jet, int i, int j);            // sqrt(-1) Q(d_i d_j Om, conj Om)
Cplx dddbarP(const PeriodJet& jet, int l, int i, int q); // sqrt(-1) Q(d_l d_i Om, conj d_q Om)

Real kahler_potential(const PeriodJet& jet); // throws positivity_error if P <= 0

// Hermitian WP metric; never throws on indefiniteness (callers inspect the
// eigenvalues), only on P <= 0.
CTensor wp_metric(const PeriodJet& jet);

// d_l g_{i qbar} from third-order pairing identities
CTensor wp_metric_first_derivs(const PeriodJet& jet); // dg(l, i, q)

CTensor christoffel(const PeriodJet& jet); // throws inversion_error if g singular

CVec connection_kl(const PeriodJet& jet);

WpGeometry compute_wp(const PeriodJet& jet);

} // namespace cym
