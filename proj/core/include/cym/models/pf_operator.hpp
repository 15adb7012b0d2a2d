#pragma once

#include <array>
#include <vector>

#include "cym/numeric/ctensor.hpp"
#include "cym/numeric/scalar.hpp"

namespace cym {

// Order-4 ordinary differential operator in theta = z d/dz with polynomial
// coefficients:  L = sum_{k=0}^{4} p_k(z) theta^k.
// theta_coeffs[k][j] is the z^j coefficient of p_k.
struct PFOperator {
    std::vector<std::vector<Real>> theta_coeffs;

    // MUM at z=0: indicial polynomial equals theta^4 after normalization,
    // i.e. p_k(0) = 0 for k < 4 and p_4(0) != 0.  Throws structure_error.
    void validate_mum() const;

    Real coeff(int k, int j) const
    {
        const auto& p = theta_coeffs[static_cast<size_t>(k)];
        return j < static_cast<int>(p.size()) ? p[static_cast<size_t>(j)] : Real(0);
    }
    int max_z_degree() const;
};

// Frobenius data at a MUM point: the log-graded solution ladder
//   y_k = sum_{j<=k} f_{k-j} (log z)^j / j!,   k = 0..3,
// with f_0 = 1 + O(z), f_m = O(z) for m >= 1, and the nilpotent log-monodromy
// N (the regular shift in this basis, integer entries).
struct FrobeniusMum {
    std::array<std::vector<Real>, 4> f; // f[m][j]: z^j coefficient of f_m
    CTensor N;                          // 4 x 4 shift
    int truncation = 0;
    Real residual = 0;                // operator applied to the ladder, relative
    Real series_radius_estimate = 0;  // from coefficient growth of the f_m
};

FrobeniusMum pf_frobenius_mum(const PFOperator& op, int truncation);

} // namespace cym
