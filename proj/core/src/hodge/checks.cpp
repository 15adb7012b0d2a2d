#include "cym/hodge/checks.hpp"

#include <cmath>

#include "cym/numeric/linalg.hpp"
#include "cym/numeric/rng.hpp"
#include "cym/wp/yukawa.hpp"

namespace cym {

Real alpha_bound(int n)
{
    Real r = std::sqrt(Real(n)) + 1.0;
    return 1.0 / (r * r + 1.0);
}

std::vector<CheckResult> theorem_checks(const CTensor& h, const CurvatureAB& ab,
                                        const CTensor& Fcov, Real rho, int n,
                                        const CheckOptions& opts)
{
    std::vector<CheckResult> out;
    const Real alpha = alpha_bound(n);

    // (1) Ricci bound, saturated by the one-modulus cubic model
    {
        CTensor ric = ricci_contraction(h, ab.R);
        CTensor m({n, n}, Symmetry::hermitian);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                m(k, l) = ric(k, l) + alpha * h(k, l);
        Real lam = max_eigenvalue(m);
        out.push_back({"Thm1.1-Ricci", lam <= opts.tol_eigen, lam, opts.tol_eigen});
    }

    // (2) holomorphic sectional curvature over seeded directions plus the
    // coordinate axes; in this sign layout "<= -alpha" reads ">= alpha"
    {
        Rng rng(opts.seed);
        Real min_sect = std::numeric_limits<Real>::infinity();
        for (int i = 0; i < n; ++i) {
            CVec v(static_cast<size_t>(n), Cplx(0));
            v[static_cast<size_t>(i)] = Cplx(1);
            min_sect = std::min(min_sect, holomorphic_sectional(h, ab.R, v));
        }
        for (int s = 0; s < opts.directions; ++s) {
            CVec v = rng.cgaussian_vec(n);
            Real norm = 0;
            for (const Cplx& z : v)
                norm += std::norm(z);
            if (norm < 1e-12)
                continue;
            min_sect = std::min(min_sect, holomorphic_sectional(h, ab.R, v));
        }
        Real resid = alpha - min_sect;
        out.push_back({"Thm1.1-sectional", resid <= opts.tol_sect, resid,
                       opts.tol_sect});
    }

    CTensor Hinv = inverse(h);
    auto double_trace = [&](const CTensor& T) {
        Cplx acc(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        acc += Hinv(j, i) * Hinv(l, k) * T(i, j, k, l);
        return acc.real();
    };

    // (3) 0 <= hhA <= 3 n^6
    {
        Real hhA = double_trace(ab.A);
        Real cap = 3.0 * std::pow(Real(n), 6.0);
        Real resid = std::max(-hhA, hhA - cap);
        out.push_back({"Lemma3.1-A-bound", resid <= opts.tol_bound, resid,
                       opts.tol_bound});
    }

    // (4) 0 <= hhB <= sum |F_{ijk,l}|^2
    {
        Real hhB = double_trace(ab.B);
        Real cap = 0;
        for (const Cplx& z : Fcov.data())
            cap += std::norm(z);
        Real resid = std::max(-hhB, hhB - cap);
        out.push_back({"Eq3.1-B-bound", resid <= opts.tol_bound, resid,
                       opts.tol_bound});
    }

    // (5) rho < 0
    out.push_back({"rho-negative", rho < 0, rho, 0});

    // (6) four-index symmetry of the covariant Yukawa derivative
    {
        Real resid = yukawa_cov_symmetry_residual(Fcov);
        out.push_back({"Thm1.3-symmetry", resid <= opts.tol_sym, resid,
                       opts.tol_sym});
    }
    return out;
}

} // namespace cym
