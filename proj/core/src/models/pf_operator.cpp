#include "cym/models/pf_operator.hpp"

#include <algorithm>
#include <cmath>

#include "cym/errors.hpp"

namespace cym {

namespace {

// truncated polynomial in the indicial deformation parameter eps, kept to
// eps^3 (four log levels)
struct Eps {
    std::array<Real, 4> a{0, 0, 0, 0};

    static Eps value(Real v)
    {
        Eps e;
        e.a[0] = v;
        return e;
    }
    static Eps eps_plus(Real v)
    {
        Eps e;
        e.a[0] = v;
        e.a[1] = 1;
        return e;
    }
};

Eps operator+(const Eps& x, const Eps& y)
{
    Eps r;
    for (int i = 0; i < 4; ++i)
        r.a[static_cast<size_t>(i)] =
            x.a[static_cast<size_t>(i)] + y.a[static_cast<size_t>(i)];
    return r;
}

Eps operator*(const Eps& x, const Eps& y)
{
    Eps r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j)
            r.a[static_cast<size_t>(i + j)] +=
                x.a[static_cast<size_t>(i)] * y.a[static_cast<size_t>(j)];
    return r;
}

Eps operator*(Real s, const Eps& x)
{
    Eps r;
    for (int i = 0; i < 4; ++i)
        r.a[static_cast<size_t>(i)] = s * x.a[static_cast<size_t>(i)];
    return r;
}

// 1 / (n + eps)^4 as an eps-series, n >= 1
Eps inv_pow4(Real n)
{
    // (n + e)^-4 = n^-4 (1 - 4 u + 10 u^2 - 20 u^3 + ...), u = e/n
    Eps r;
    Real n4 = std::pow(n, -4.0);
    r.a[0] = n4;
    r.a[1] = -4.0 * n4 / n;
    r.a[2] = 10.0 * n4 / (n * n);
    r.a[3] = -20.0 * n4 / (n * n * n);
    return r;
}

// q_j(x) = sum_k p_k[j] x^k evaluated at an eps-argument
Eps q_eval(const PFOperator& op, int j, const Eps& x)
{
    Eps acc = Eps::value(op.coeff(4, j));
    for (int k = 3; k >= 0; --k)
        acc = acc * x + Eps::value(op.coeff(k, j));
    return acc;
}

using Series = std::vector<Real>;

Series theta_series(const Series& s)
{
    Series r(s.size(), 0);
    for (size_t j = 0; j < s.size(); ++j)
        r[j] = Real(j) * s[j];
    return r;
}

Series mul_poly(const Series& s, const std::vector<Real>& poly, size_t trunc)
{
    Series r(trunc, 0);
    for (size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] == 0)
            continue;
        for (size_t m = 0; m + j < trunc && m < s.size(); ++m)
            r[m + j] += poly[j] * s[m];
    }
    return r;
}

} // namespace

void PFOperator::validate_mum() const
{
    if (theta_coeffs.size() != 5)
        throw structure_error("PFOperator: five theta-coefficient polynomials required");
    if (coeff(4, 0) == 0)
        throw structure_error("PFOperator: p_4(0) = 0, z = 0 is not a regular "
                              "singular point of the required type");
    for (int k = 0; k < 4; ++k)
        if (coeff(k, 0) != 0)
            throw structure_error("PFOperator: indicial polynomial is not theta^4 "
                                  "(point not maximally unipotent)");
}

int PFOperator::max_z_degree() const
{
    int d = 0;
    for (const auto& p : theta_coeffs)
        for (size_t j = 0; j < p.size(); ++j)
            if (p[j] != 0)
                d = std::max(d, static_cast<int>(j));
    return d;
}

FrobeniusMum pf_frobenius_mum(const PFOperator& op, int truncation)
{
    op.validate_mum();
    if (truncation < 8)
        throw domain_error("pf_frobenius_mum: truncation >= 8 required");

    const Real p40 = op.coeff(4, 0);
    const int maxdeg = op.max_z_degree();
    const size_t T = static_cast<size_t>(truncation);

    // c_n(eps) from q_0(eps + n) c_n = -sum_{j>=1} q_j(eps + n - j) c_{n-j},
    // where q_0 = (normalized) theta^4; c_0 = 1.
    std::vector<Eps> c(T);
    c[0] = Eps::value(1.0);
    for (size_t nn = 1; nn < T; ++nn) {
        Eps rhs; // zero
        for (int j = 1; j <= maxdeg && j <= static_cast<int>(nn); ++j) {
            Eps qj = q_eval(op, j, Eps::eps_plus(Real(nn) - Real(j)));
            rhs = rhs + qj * c[nn - static_cast<size_t>(j)];
        }
        rhs = (-1.0 / p40) * rhs;
        c[nn] = rhs * inv_pow4(Real(nn));
    }

    FrobeniusMum out;
    out.truncation = truncation;
    for (int m = 0; m < 4; ++m) {
        out.f[static_cast<size_t>(m)].assign(T, 0);
        for (size_t nn = 0; nn < T; ++nn)
            out.f[static_cast<size_t>(m)][nn] = c[nn].a[static_cast<size_t>(m)];
    }

    out.N = CTensor({4, 4});
    for (int k = 0; k < 3; ++k)
        out.N(k + 1, k) = Cplx(1);

    // independent residual: apply L to each ladder solution
    //   y_k = sum_j g_j (log z)^j / j!,  g_j = f_{k-j},
    // using theta(g_j) -> theta g_j + g_{j+1} on ladder components.
    Real worst = 0;
    for (int k = 0; k < 4; ++k) {
        std::array<Series, 4> G, Gabs;
        for (int j = 0; j < 4; ++j) {
            G[static_cast<size_t>(j)].assign(T, 0);
            Gabs[static_cast<size_t>(j)].assign(T, 0);
            if (j <= k)
                G[static_cast<size_t>(j)] = out.f[static_cast<size_t>(k - j)];
        }

        std::array<Series, 4> acc, accabs;
        for (int j = 0; j < 4; ++j) {
            acc[static_cast<size_t>(j)].assign(T, 0);
            accabs[static_cast<size_t>(j)].assign(T, 0);
        }
        std::array<Series, 4> th = G;
        for (int kk = 0; kk <= 4; ++kk) {
            // add p_kk(z) * th
            for (int j = 0; j < 4; ++j) {
                Series term = mul_poly(th[static_cast<size_t>(j)],
                                       op.theta_coeffs[static_cast<size_t>(kk)], T);
                for (size_t m = 0; m < T; ++m) {
                    acc[static_cast<size_t>(j)][m] += term[m];
                    accabs[static_cast<size_t>(j)][m] += std::abs(term[m]);
                }
            }
            if (kk == 4)
                break;
            // th <- theta(th): componentwise theta plus ladder shift
            std::array<Series, 4> next;
            for (int j = 0; j < 4; ++j) {
                next[static_cast<size_t>(j)] = theta_series(th[static_cast<size_t>(j)]);
                if (j + 1 < 4)
                    for (size_t m = 0; m < T; ++m)
                        next[static_cast<size_t>(j)][m] +=
                            th[static_cast<size_t>(j + 1)][m];
            }
            th = next;
        }

        // coefficients beyond T - maxdeg are truncated, skip them
        for (int j = 0; j < 4; ++j)
            for (size_t m = 0; m + static_cast<size_t>(maxdeg) < T; ++m) {
                Real denom = std::max<Real>(accabs[static_cast<size_t>(j)][m], 1.0);
                worst = std::max(worst,
                                 std::abs(acc[static_cast<size_t>(j)][m]) / denom);
            }
    }
    out.residual = worst;

    // convergence radius estimate from the holomorphic solution's tail
    Real rad = std::numeric_limits<Real>::infinity();
    {
        const Series& f0 = out.f[0];
        Real growth = 0;
        for (size_t nn = T - std::min<size_t>(T / 2, 16); nn < T; ++nn) {
            if (std::abs(f0[nn]) > 0)
                growth = std::max(growth, std::pow(std::abs(f0[nn]), 1.0 / Real(nn)));
        }
        if (growth > 0)
            rad = 1.0 / growth;
    }
    out.series_radius_estimate = rad;
    return out;
}

} // namespace cym
