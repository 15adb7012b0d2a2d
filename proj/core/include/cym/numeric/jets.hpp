#pragma once

#include <map>
#include <vector>

#include "cym/numeric/ctensor.hpp"
#include "cym/numeric/scalar.hpp"

// Multivariate holomorphic jets: all partial derivatives of a vector-valued
// map up to a fixed order, stored by exponent multi-index.  Supplies the two
// transformations the geometry layer needs: pullback through a quadratic
// coordinate change (normal frames) and multiplication by the exponential of
// a quadratic gauge function.

namespace cym {

using MIdx = std::vector<int>; // exponent per variable, |alpha| = sum

int midx_order(const MIdx& a);

// all multi-indices with |alpha| <= max_order, in a fixed deterministic order
std::vector<MIdx> all_midx(int nvars, int max_order);

// exponent vector from a list of variable indices, e.g. {0,0,1} -> (2,1)
MIdx midx_from_indices(int nvars, const std::vector<int>& indices);

// one representative index list for an exponent vector
std::vector<int> indices_from_midx(const MIdx& a);

struct VecJet {
    int nvars = 0;
    int order = 0;
    size_t vec_len = 0;
    std::map<MIdx, CVec> d;

    const CVec& at(const MIdx& a) const;
    const CVec& at(const std::vector<int>& indices, int) const = delete;
    CVec& slot(const MIdx& a);
};

// Derivatives at s=0 of s -> Omega(t(s)) for the quadratic map
//   t^m(s) = t0^m + sum_a A[m][a] s^a + 1/2 sum_ab B[m][a][b] s^a s^b,
// given the jet of Omega at t0.  B must be symmetric in its last two slots.
VecJet compose_quadratic(const VecJet& jet, const CTensor& A, const CTensor& B);

// Multiplies a jet by exp(f0 + c . s + 1/2 s^T dquad s) (dquad symmetric).
VecJet gauge_exp_multiply(const VecJet& jet, Cplx f0, const CVec& c,
                          const CTensor& dquad);

} // namespace cym
