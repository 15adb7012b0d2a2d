#pragma once

#include <functional>
#include <limits>

#include "cym/numeric/ctensor.hpp"
#include "cym/numeric/scalar.hpp"

// Finite-difference Wirtinger calculus for fields that are real-analytic in
// (t, conj t) but not holomorphic: mixed hessians of Kahler potentials,
// derivatives of metric fields.  Central differences plus Richardson
// extrapolation; holomorphic derivatives of holomorphic data should use
// contour.hpp instead.

namespace cym {

using RealField = std::function<Real(const CVec&)>;
using CplxField = std::function<Cplx(const CVec&)>;

struct FdOptions {
    Real step = 1e-2;  // base step, caller scales by the local length scale
    int levels = 3;    // Richardson levels (step halved per level)
    Real tol = std::numeric_limits<Real>::infinity(); // throw above this
};

struct FdHessian {
    CTensor matrix;     // hermitian n x n, entries d_i d_jbar field
    Real error_estimate = 0;
};

// M_{i jbar} = d_i d_jbar of a real scalar field; hermitian by construction.
// Throws precision_error (carrying the estimate) if the Richardson error
// estimate exceeds opts.tol.
FdHessian fd_mixed_hessian(const RealField& field, const CVec& center,
                           const FdOptions& opts = {});

// Wirtinger derivatives of a complex-valued field (no symmetrization):
Cplx fd_wirtinger_d(const CplxField& field, const CVec& center, int i,
                    const FdOptions& opts = {});
Cplx fd_wirtinger_dbar(const CplxField& field, const CVec& center, int i,
                       const FdOptions& opts = {});
Cplx fd_mixed_second(const CplxField& field, const CVec& center, int i, int j,
                     const FdOptions& opts = {});

} // namespace cym
