#pragma once

#include <initializer_list>

#include "cym/models/symplectic.hpp"
#include "cym/numeric/jets.hpp"
#include "cym/numeric/scalar.hpp"

namespace cym {

// Period vector Omega(t) in C^{2n+2} together with its holomorphic
// derivatives up to `order` at one moduli point.  Derivatives are stored by
// exponent multi-index, so d_i d_j = d_j d_i holds structurally; the
// build_residual field records any cross-check discrepancy measured while
// the jet was assembled (nonzero only for quadrature-built jets).
struct PeriodJet {
    CVec point;
    int order = 0;
    const SymplecticForm* Q = nullptr;
    VecJet jet;
    Real build_residual = 0;

    int n() const { return static_cast<int>(point.size()); }
    int dim() const { return 2 * n() + 2; }

    const CVec& omega() const { return jet.at(MIdx(static_cast<size_t>(n()), 0)); }

    // derivative by variable indices, e.g. d({0,0,1}) = d_1 d_1 d_2 Omega
    const CVec& d(std::initializer_list<int> vars) const
    {
        return jet.at(midx_from_indices(n(), std::vector<int>(vars)));
    }
    // derivative by exponent multi-index
    const CVec& deriv(const MIdx& alpha) const { return jet.at(alpha); }

    Cplx pair(const CVec& a, const CVec& b) const { return Q->pair(a, b); }
};

} // namespace cym
