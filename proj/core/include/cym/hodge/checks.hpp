#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cym/hodge/curvature.hpp"
#include "cym/numeric/ctensor.hpp"

namespace cym {

struct CheckResult {
    std::string name; // stable anchor id, e.g. "Thm1.1-Ricci"
    bool pass = false;
    Real residual = 0; // signed; pass iff residual <= the check's tolerance
    Real tolerance = 0;
};

// alpha(n) = ((sqrt(n) + 1)^2 + 1)^{-1}
Real alpha_bound(int n);

struct CheckOptions {
    std::uint64_t seed = 12345;
    int directions = 100;
    Real tol_eigen = 1e-6;  // lambda_max(Ric(h) + alpha h) <= tol
    Real tol_sect = 1e-6;   // sectional >= alpha - tol
    Real tol_bound = 1e-10; // slack on the A/B positivity sandwiches
    Real tol_sym = 1e-8;    // covariant-Yukawa index symmetry
};

// The per-point bound suite, all in the normal frame:
//   Thm1.1-Ricci      lambda_max(Ric(h) + alpha h) <= tol
//   Thm1.1-sectional  min_v R(v,vb,v,vb)/h(v,vb)^2 >= alpha - tol
//   Lemma3.1-A-bound  0 <= hhA <= 3 n^6
//   Eq3.1-B-bound     0 <= hhB <= sum |F_{ijk,l}|^2
//   rho-negative      rho < 0
//   Thm1.3-symmetry   max |F_{ijk,l} - F_{ijl,k}| <= tol
std::vector<CheckResult> theorem_checks(const CTensor& h, const CurvatureAB& ab,
                                        const CTensor& Fcov, Real rho, int n,
                                        const CheckOptions& opts = {});

// Full per-point Hodge data bundle assembled by the pipeline.
struct HodgeReport {
    CTensor h;     // normal-frame Hodge metric
    CTensor A, B, R;
    Real rho = 0;
    Real alpha = 0;
    std::vector<CheckResult> checks;
};

} // namespace cym
