#pragma once

#include <vector>

#include "cym/models/nilpotent.hpp"
#include "cym/numeric/ctensor.hpp"

namespace cym {

// One-parameter degeneration analysis toward z = 0: nilpotent operator,
// limiting Hodge vector, the completeness criterion, the cubic-polynomial
// constraint, and decay scans of the Hodge metric and z^3 F_zzz.

struct DegenerationData {
    CTensor N;    // integer nilpotent
    CTensor M;    // N / 2 pi i
    CVec Finf;    // limiting vector, = A(0)
    Real theta = 0;
};

struct LimitF3 {
    CVec Finf;
    std::vector<Real> radii;     // where the twisted residual was measured
    std::vector<Real> residuals; // || e^{-(log z/2pi i) N} Omega(z) - Finf ||
    bool converged = false;      // residuals decrease monotonically
};

// Finf = A(0); residual verified along the ray at r = 1e-2, 1e-4, 1e-6
// (scaled into the model's disk).  Throws structure_error on non-convergence.
LimitF3 limit_f3(const NilpotentOrbitModel& model, Real theta = 0.0);

struct WangResult {
    CVec NFinf;
    Real ratio = 0;        // ||N Finf|| / ||Finf||
    bool incomplete = false;
};

// Incomplete WP metric toward the puncture iff N Finf = 0.
WangResult wang_criterion(const CTensor& N, const CVec& Finf, Real tol = 1e-9);

struct ConstraintResult {
    Cplx derived;       // Q(Finf, M(M-1)(M-2) Finf), M = N / 2 pi i
    Cplx paper_literal; // Q(Finf, N^3 Finf - 3 N^2 Finf - 2 N Finf)
    Real scale;         // ||Finf||^2 max(1, ||N||)^3 for relative comparison
};

ConstraintResult constraint_check(const CTensor& N, const CVec& Finf,
                                  const SymplecticForm& Q);

enum class ScanPrecision { plain, extended };

struct ScanRow {
    Real r = 0;
    Cplx z;
    Cplx z3F;          // z^3 Q(Omega, d^3 Omega)
    Real P = 0;        // sqrt(-1) Q(Omega, conj Omega)
    Real g = 0;        // WP metric in the z chart
    Real h = 0;        // Hodge metric, unit-gauge closed form
    Real h3_minus_F2 = 0;  // h^3 - e^{2K} |F_zzz|^2  (unit gauge)
    Real schwarz_ratio = 0; // h r^2 (log 1/r)^2
    bool valid = false;     // P > 0 and g > 0
};

struct ScanResult {
    std::vector<ScanRow> rows;
    Cplx limit_lhs;      // extrapolated z^3 F_zzz
    Cplx limit_rhs;      // Q(Finf, M(M-1)(M-2) Finf)
    Real agreement = 0;  // |lhs - rhs| / (1 + |rhs|)
    Real min_h3_margin = 0; // min over rows of (h^3 - e2K|F|^2) / h^3
    bool bounds_ok = false;
    bool schwarz_bounded = false;
    WangResult wang;
    ConstraintResult constraint;
    ScanPrecision precision = ScanPrecision::plain;
};

// Default ladder: r_k = r_max 10^{-k}, k = 0..5, r_max = 0.5 min(1, radius).
std::vector<Real> default_scan_radii(const NilpotentOrbitModel& model);

ScanResult yukawa_limit_scan(const NilpotentOrbitModel& model, Real theta,
                             std::vector<Real> radii = {},
                             ScanPrecision prec = ScanPrecision::plain);

} // namespace cym
