#pragma once

#include "cym/numeric/ctensor.hpp"
#include "cym/wp/geometry.hpp"
#include "cym/wp/period_jet.hpp"

namespace cym {

// Yukawa coupling F_{ijk} = Q(Omega, d_i d_j d_k Omega) and its covariant
// derivative
//   F_{ijk,l} = d_l F_{ijk} - Gamma^s_{li} F_{sjk} - Gamma^s_{lj} F_{isk}
//               - Gamma^s_{lk} F_{ijs} + 2 F_{ijk} K_l
// with d_l F_{ijk} = Q(d_l Omega, d_i d_j d_k Omega)
//                  + Q(Omega, d_l d_i d_j d_k Omega).
struct YukawaData {
    CTensor F;            // totally symmetric rank 3
    CTensor Fcov;         // rank 4, Fcov(i,j,k,l) = F_{ijk,l}
    Real asym_residual = 0; // raw asymmetry before symmetrization
};

// Throws symmetry_error when the raw pairing is asymmetric beyond
// asym_tol * max(1, |F|): transversality must have failed upstream.
CTensor yukawa(const PeriodJet& jet, Real asym_tol = 1e-8);

CTensor yukawa_first_derivs(const PeriodJet& jet); // dF(l, i, j, k) = d_l F_{ijk}

CTensor yukawa_cov_deriv(const PeriodJet& jet, const WpGeometry& wp,
                         const CTensor& F);

YukawaData compute_yukawa(const PeriodJet& jet, const WpGeometry& wp,
                          Real asym_tol = 1e-8);

// max_{ijkl} |F_{ijk,l} - F_{ijl,k}|: the four-index symmetry that holds on
// genuine variations
Real yukawa_cov_symmetry_residual(const CTensor& Fcov);

} // namespace cym
