#pragma once

#include <functional>
#include <vector>

#include "cym/numeric/scalar.hpp"

namespace cym {

// Derivatives of a holomorphic map at one point in one variable, obtained by
// Cauchy-integral trapezoid quadrature on a circle.  coeffs[j] is the j-th
// derivative (not the Taylor coefficient); error_estimate[j] comes from
// comparing the M-node and 2M-node rules.
struct Jet1D {
    Cplx center{};
    int order = 0;
    std::vector<CVec> coeffs;
    std::vector<Real> error_estimate;
};

using CMap = std::function<CVec(const CVec&)>;

// d^j/dt_i^j f for j <= order, sampling f on the circle |t_i - c_i| = radius.
// Requires nodes >= 4*(order+1); throws evaluation_error on non-finite
// samples.
Jet1D contour_derivs(const CMap& f, const CVec& center, int var_index,
                     int order, Real radius, int nodes = 64);

// Mixed holomorphic derivative d^alpha f by nesting contour quadrature over
// the distinct variables carried by the multi-index alpha (alpha[i] is the
// order in variable i).  radii[i] is the contour radius used for variable i.
CVec contour_derivs_mixed(const CMap& f, const CVec& center,
                          const std::vector<int>& alpha,
                          const std::vector<Real>& radii, int nodes = 64);

} // namespace cym
