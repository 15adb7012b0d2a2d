#include "cym/models/nilpotent.hpp"

#include <algorithm>
#include <cmath>

#include "cym/errors.hpp"

namespace cym {

namespace {

std::vector<std::vector<long long>> matmul_int(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b)
{
    const size_t d = a.size();
    std::vector<std::vector<long long>> c(d, std::vector<long long>(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            if (a[i][k] == 0)
                continue;
            for (size_t j = 0; j < d; ++j)
                c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

bool is_zero(const std::vector<std::vector<long long>>& a)
{
    for (const auto& row : a)
        for (long long v : row)
            if (v != 0)
                return false;
    return true;
}

} // namespace

NilpotentOrbitModel::NilpotentOrbitModel(std::vector<std::vector<long long>> N,
                                         std::vector<CVec> A_coeffs,
                                         Real series_radius,
                                         std::vector<CVec> suggested)
    : Q_(SymplecticForm::standard(1)), N_(std::move(N)), A_(std::move(A_coeffs)),
      series_radius_(series_radius), suggested_(std::move(suggested))
{
    const size_t d = N_.size();
    if (d != 4)
        throw structure_error("NilpotentOrbitModel: 4x4 N required (one modulus)");
    for (const auto& row : N_)
        if (row.size() != d)
            throw structure_error("NilpotentOrbitModel: N not square");
    if (A_.empty() || A_.front().size() != d)
        throw structure_error("NilpotentOrbitModel: A series empty or wrong width");

    // N^4 = 0
    auto N2 = matmul_int(N_, N_);
    auto N4 = matmul_int(N2, N2);
    if (!is_zero(N4))
        throw structure_error("NilpotentOrbitModel: N^4 != 0");

    // infinitesimally symplectic: Q(N v, w) + Q(v, N w) = 0, i.e.
    // N^T Qm + Qm N = 0 entrywise over the integers
    const auto& Qm = Q_.matrix();
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            long long s = 0;
            for (size_t k = 0; k < d; ++k)
                s += N_[k][i] * Qm[k][j] + Qm[i][k] * N_[k][j];
            if (s != 0)
                throw structure_error("NilpotentOrbitModel: N is not "
                                      "infinitesimally symplectic for Q");
        }

    Real a0 = 0;
    for (const Cplx& v : A_.front())
        a0 = std::max(a0, std::abs(v));
    if (a0 == 0)
        throw structure_error("NilpotentOrbitModel: A(0) = 0");

    if (!(series_radius_ > 0))
        throw structure_error("NilpotentOrbitModel: positive series radius required");

    if (suggested_.empty()) {
        suggested_.push_back({Cplx(0.1 * series_radius_, 0)});
        suggested_.push_back({0.05 * series_radius_ * std::exp(Cplx(0, 0.7))});
    }
}

NilpotentOrbitModel NilpotentOrbitModel::from_frobenius(const FrobeniusMum& fr,
                                                        Real series_radius_cap)
{
    // Basis change from the log ladder W = (f0, f1/2pii, f2/(2pii)^2,
    // f3/(2pii)^3) to the standard symplectic basis: components
    //   Omega = (W0, -W2, -W3, W1),
    // which makes the pairing the repo-standard one, keeps transversality,
    // and orients sqrt(-1) Q(Omega, conj Omega) > 0 toward z = 0.
    std::vector<std::vector<long long>> N(4, std::vector<long long>(4, 0));
    N[3][0] = 1;
    N[2][1] = 1;
    N[1][3] = -1;

    const size_t T = fr.f[0].size();
    Cplx d1 = 1.0 / kTwoPiI;
    Cplx d2 = d1 * d1;
    Cplx d3 = d2 * d1;

    std::vector<CVec> A(T, CVec(4, Cplx(0)));
    for (size_t j = 0; j < T; ++j) {
        Cplx f0 = fr.f[0][j];
        Cplx f1 = fr.f[1][j];
        Cplx f2 = fr.f[2][j];
        Cplx f3 = fr.f[3][j];
        A[j][0] = f0;
        A[j][1] = -f2 * d2;
        A[j][2] = -f3 * d3;
        A[j][3] = f1 * d1;
    }

    Real rad = std::min(series_radius_cap, fr.series_radius_estimate);
    return NilpotentOrbitModel(std::move(N), std::move(A), rad);
}

CTensor NilpotentOrbitModel::Nmat() const
{
    CTensor N({4, 4});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            N(i, j) = Cplx(Real(N_[static_cast<size_t>(i)][static_cast<size_t>(j)]), 0);
    return N;
}

CVec NilpotentOrbitModel::omega(const CVec& t) const
{
    return jet(t, 0).omega();
}

Real NilpotentOrbitModel::analyticity_radius(const CVec& t) const
{
    const Cplx z = t.at(0);
    Real r = std::abs(z);
    if (!(r > 0) || r >= series_radius_)
        return 0;
    // principal branch: the disk must avoid the cut along the negative reals
    Real cut = z.real() >= 0 ? r : std::abs(z.imag());
    return std::min(cut, series_radius_ - r);
}

Real NilpotentOrbitModel::local_scale(const CVec& t) const
{
    return 0.5 * analyticity_radius(t);
}

PeriodJet NilpotentOrbitModel::jet(const CVec& t, int order) const
{
    const Cplx z = t.at(0);
    if (z == Cplx(0))
        throw domain_error("NilpotentOrbitModel: z = 0 is outside the domain");
    if (std::abs(z) >= series_radius_)
        throw domain_error("NilpotentOrbitModel: |z| beyond declared radius");

    auto oj = detail::orbit_jet<Real>(N_, A_, z, order);

    PeriodJet out;
    out.point = t;
    out.order = order;
    out.Q = &Q_;
    out.jet.nvars = 1;
    out.jet.order = order;
    out.jet.vec_len = 4;
    for (int k = 0; k <= order; ++k)
        out.jet.d.emplace(MIdx{k}, oj.omega_derivs[static_cast<size_t>(k)]);
    return out;
}

PeriodJet nilpotent_orbit_eval(const NilpotentOrbitModel& model, Cplx z,
                               int order)
{
    return model.jet({z}, order);
}

} // namespace cym
