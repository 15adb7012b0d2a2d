#pragma once

#include <vector>

#include "cym/numeric/ctensor.hpp"
#include "cym/numeric/scalar.hpp"

// Small dense complex linear algebra.  Everything here runs on matrices of
// dimension a handful (moduli counts n <= 3, period vectors of length 2n+2),
// so simple O(n^3) routines with partial pivoting are exact enough and keep
// the scalar type swappable.

namespace cym {

struct HermEigen {
    std::vector<Real> values; // ascending
    CTensor vectors;          // columns are eigenvectors
};

// Eigenvalues (and vectors) of a hermitian matrix by cyclic complex Jacobi.
// Throws symmetry_error if H is not hermitian within `herm_tol` (relative),
// and checks the reconstruction residual ||HV - V diag|| <= resid_tol*||H||.
HermEigen herm_eigen_full(const CTensor& H, Real herm_tol = 1e-12,
                          Real resid_tol = 1e-10);

std::vector<Real> herm_eigen(const CTensor& H, Real herm_tol = 1e-12,
                             Real resid_tol = 1e-10);

// Lower-triangular Cholesky factor of a hermitian positive definite matrix.
CTensor cholesky_lower(const CTensor& H);

// Gauss-Jordan inverse with partial pivoting; throws inversion_error when
// numerically singular.
CTensor inverse(const CTensor& A);

CTensor matmul(const CTensor& A, const CTensor& B);
CTensor adjoint(const CTensor& A);
CTensor transpose(const CTensor& A);

CVec matvec(const CTensor& A, const CVec& v);

Real frobenius_norm(const CTensor& A);

// Determinant via LU with partial pivoting.
Cplx det(const CTensor& A);

// min/max eigenvalue helpers for positivity checks
Real min_eigenvalue(const CTensor& H);
Real max_eigenvalue(const CTensor& H);

bool is_positive_definite(const CTensor& H, Real tol = 0.0);

} // namespace cym
