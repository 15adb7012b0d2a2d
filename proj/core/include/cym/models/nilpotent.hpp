#pragma once

#include <vector>

#include "cym/models/family.hpp"
#include "cym/models/pf_operator.hpp"

namespace cym {

// One-parameter model Omega(z) = e^{(log z / 2 pi i) N} A(z) on the
// punctured disk, principal branch.  N is an integer nilpotent matrix with
// N^4 = 0 that is infinitesimally symplectic for Q; A is a vector-valued
// polynomial with A(0) != 0.  Jets are analytic: with M = N / 2 pi i,
//   d^k Omega = e^{(log z) M} sum_m C(k,m) M(M-1)...(M-k+m+1) A^{(m)} z^{m-k}.
class NilpotentOrbitModel : public FamilyModel {
public:
    NilpotentOrbitModel(std::vector<std::vector<long long>> N,
                        std::vector<CVec> A_coeffs, Real series_radius,
                        std::vector<CVec> suggested = {});

    static NilpotentOrbitModel from_frobenius(const FrobeniusMum& fr,
                                              Real series_radius_cap = 0.9);

    int n() const override { return 1; }
    const SymplecticForm& Q() const override { return Q_; }
    std::string kind() const override { return "nilpotent_orbit"; }

    CVec omega(const CVec& t) const override;
    Real analyticity_radius(const CVec& t) const override;
    Real local_scale(const CVec& t) const override;
    PeriodJet jet(const CVec& t, int order) const override;
    std::vector<CVec> suggested_points() const override { return suggested_; }

    const std::vector<std::vector<long long>>& Nint() const { return N_; }
    CTensor Nmat() const;
    const std::vector<CVec>& A_coeffs() const { return A_; }
    CVec A0() const { return A_.front(); }
    Real series_radius() const { return series_radius_; }

private:
    SymplecticForm Q_;
    std::vector<std::vector<long long>> N_;
    std::vector<CVec> A_;
    Real series_radius_;
    std::vector<CVec> suggested_;
};

// spec-named convenience wrapper
PeriodJet nilpotent_orbit_eval(const NilpotentOrbitModel& model, Cplx z,
                               int order);

namespace detail {

// Templated evaluation core shared by the double-precision model interface
// and the extended-precision degeneration scans.
template <class R>
struct OrbitJet {
    std::vector<std::vector<Cx<R>>> omega_derivs; // Omega, dOmega, ..., order k
    std::vector<std::vector<Cx<R>>> twisted;      // C_k = e^{-log z M} d^k Omega
};

template <class R>
std::vector<std::vector<Cx<R>>> nilpotent_powers(
    const std::vector<std::vector<long long>>& N)
{
    const size_t d = N.size();
    std::vector<std::vector<Cx<R>>> pw; // M^0..M^3, M = N / 2 pi i
    std::vector<Cx<R>> id(d * d, Cx<R>(0));
    for (size_t i = 0; i < d; ++i)
        id[i * d + i] = Cx<R>(1);
    pw.push_back(id);
    Cx<R> inv2pii = Cx<R>(1) / two_pi_i<R>();
    std::vector<Cx<R>> M(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            M[i * d + j] = R(N[i][j]) * inv2pii;
    pw.push_back(M);
    for (int k = 2; k <= 3; ++k) {
        std::vector<Cx<R>> nx(d * d, Cx<R>(0));
        const auto& prev = pw.back();
        for (size_t i = 0; i < d; ++i)
            for (size_t l = 0; l < d; ++l) {
                if (prev[i * d + l] == Cx<R>(0))
                    continue;
                for (size_t j = 0; j < d; ++j)
                    nx[i * d + j] += prev[i * d + l] * M[l * d + j];
            }
        pw.push_back(std::move(nx));
    }
    return pw;
}

template <class R>
OrbitJet<R> orbit_jet(const std::vector<std::vector<long long>>& N,
                      const std::vector<CVec>& A_coeffs, Cx<R> z, int order)
{
    const size_t d = N.size();
    const auto pw = nilpotent_powers<R>(N); // M^0..M^3

    // A^{(m)}(z), m = 0..order
    std::vector<std::vector<Cx<R>>> Ader(static_cast<size_t>(order) + 1,
                                         std::vector<Cx<R>>(d, Cx<R>(0)));
    for (size_t j = 0; j < A_coeffs.size(); ++j) {
        // z^j and falling factorials
        for (int m = 0; m <= order; ++m) {
            if (static_cast<int>(j) < m)
                continue;
            R fall(1);
            for (int p = 0; p < m; ++p)
                fall *= R(static_cast<double>(j) - p);
            Cx<R> zp(1);
            for (size_t p = 0; p + static_cast<size_t>(m) < j; ++p)
                zp *= z;
            for (size_t a = 0; a < d; ++a)
                Ader[static_cast<size_t>(m)][a] +=
                    fall * zp * Cx<R>(R(A_coeffs[j][a].real()), R(A_coeffs[j][a].imag()));
        }
    }

    // falling-factorial matrices Phi_j = M (M-1) ... (M-j+1), Phi_0 = I
    auto mat_vec = [&](const std::vector<Cx<R>>& Mx, const std::vector<Cx<R>>& v) {
        std::vector<Cx<R>> out(d, Cx<R>(0));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                out[i] += Mx[i * d + j] * v[j];
        return out;
    };

    std::vector<std::vector<Cx<R>>> Phi; // as matrices
    {
        std::vector<Cx<R>> cur = pw[0];
        Phi.push_back(cur);
        for (int j = 1; j <= order; ++j) {
            // Phi_j = Phi_{j-1} * (M - (j-1))
            std::vector<Cx<R>> nx(d * d, Cx<R>(0));
            for (size_t i = 0; i < d; ++i)
                for (size_t l = 0; l < d; ++l) {
                    Cx<R> pil = Phi.back()[i * d + l];
                    if (pil == Cx<R>(0))
                        continue;
                    for (size_t jj = 0; jj < d; ++jj) {
                        Cx<R> m = pw[1][l * d + jj];
                        if (l == jj)
                            m -= R(j - 1);
                        nx[i * d + jj] += pil * m;
                    }
                }
            Phi.push_back(std::move(nx));
        }
    }

    // E = e^{(log z) M} = sum tau^k N^k / k! with tau = log z / 2 pi i
    Cx<R> logz = std::log(z);
    std::vector<Cx<R>> E(d * d, Cx<R>(0));
    {
        Cx<R> w(1);
        R fact(1);
        for (int k = 0; k <= 3; ++k) {
            if (k > 0) {
                w *= logz;
                fact *= R(k);
            }
            for (size_t a = 0; a < d * d; ++a)
                E[a] += pw[static_cast<size_t>(k)][a] * w / fact;
        }
    }

    OrbitJet<R> out;
    out.twisted.resize(static_cast<size_t>(order) + 1);
    out.omega_derivs.resize(static_cast<size_t>(order) + 1);
    Cx<R> zinv = Cx<R>(1) / z;
    for (int k = 0; k <= order; ++k) {
        std::vector<Cx<R>> Ck(d, Cx<R>(0));
        for (int m = 0; m <= k; ++m) {
            // binom(k, m) Phi_{k-m} A^{(m)} z^{m-k}
            R binom(1);
            for (int p = 0; p < m; ++p)
                binom = binom * R(k - p) / R(p + 1);
            std::vector<Cx<R>> term =
                mat_vec(Phi[static_cast<size_t>(k - m)], Ader[static_cast<size_t>(m)]);
            Cx<R> zp(1);
            for (int p = 0; p < k - m; ++p)
                zp *= zinv;
            for (size_t a = 0; a < d; ++a)
                Ck[a] += binom * zp * term[a];
        }
        out.omega_derivs[static_cast<size_t>(k)] = mat_vec(E, Ck);
        out.twisted[static_cast<size_t>(k)] = std::move(Ck);
    }
    return out;
}

} // namespace detail

} // namespace cym
