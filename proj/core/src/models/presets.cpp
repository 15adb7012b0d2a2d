#include "cym/models/presets.hpp"

#include <cmath>

#include "cym/errors.hpp"
#include "cym/models/nilpotent.hpp"
#include "cym/models/prepotential.hpp"

namespace cym {

namespace {

const Cplx kI{0, 1};

std::unique_ptr<FamilyModel> make_cubic()
{
    Poly P;
    P.nvars = 1;
    P.terms.emplace(MIdx{3}, Cplx(1));
    std::vector<CVec> pts = {
        {Cplx(0, 1)},
        {Cplx(0, 2)},
        {Cplx(0.3, 1.2)},
        {Cplx(-0.2, 0.8)},
    };
    return std::make_unique<PrepotentialModel>(1, std::move(P), std::move(pts));
}

std::unique_ptr<FamilyModel> make_two_moduli_cubic()
{
    // P = t1^3 + t2^3 + (1/2) t1 t2^2
    Poly P;
    P.nvars = 2;
    P.terms.emplace(MIdx{3, 0}, Cplx(1));
    P.terms.emplace(MIdx{0, 3}, Cplx(1));
    P.terms.emplace(MIdx{1, 2}, Cplx(0.5));
    // the positivity cone of this cubic needs opposite-sign imaginary parts
    std::vector<CVec> pts = {
        {Cplx(0, 1.5), Cplx(0, -0.7)},
        {Cplx(0.1, 1.6), Cplx(-0.1, -0.75)},
        {Cplx(-0.15, 1.9), Cplx(0.1, -0.9)},
        {Cplx(0.05, -0.5), Cplx(-0.1, 0.9)},
    };
    return std::make_unique<PrepotentialModel>(2, std::move(P), std::move(pts));
}

PFOperator quintic_operator()
{
    // theta^4 - 5z(5theta+1)(5theta+2)(5theta+3)(5theta+4)
    //   = (1 - 3125 z) theta^4 - 6250 z theta^3 - 4375 z theta^2
    //     - 1250 z theta - 120 z
    PFOperator op;
    op.theta_coeffs = {
        {0, -120},
        {0, -1250},
        {0, -4375},
        {0, -6250},
        {1, -3125},
    };
    return op;
}

PFOperator theta4_operator()
{
    PFOperator op;
    op.theta_coeffs = {{0}, {0}, {0}, {0}, {1}};
    return op;
}

std::unique_ptr<FamilyModel> make_pf(const PFOperator& op, int truncation)
{
    FrobeniusMum fr = pf_frobenius_mum(op, truncation);
    return std::make_unique<NilpotentOrbitModel>(
        NilpotentOrbitModel::from_frobenius(fr));
}

std::unique_ptr<FamilyModel> make_orbit_trivial()
{
    std::vector<std::vector<long long>> N(4, std::vector<long long>(4, 0));
    CVec v = {Cplx(1), Cplx(0), kI, Cplx(0)};
    CVec w = {Cplx(0), Cplx(1), Cplx(0), -kI};
    return std::make_unique<NilpotentOrbitModel>(
        std::move(N), std::vector<CVec>{v, w}, 0.7);
}

std::unique_ptr<FamilyModel> make_orbit_rank_one()
{
    // N x = e_1 Q(e_1, x): rank one, N A(0) = 0, Wang-incomplete limit
    std::vector<std::vector<long long>> N(4, std::vector<long long>(4, 0));
    N[1][3] = 1;
    const Real alpha = 0.3;
    CVec A0 = {Cplx(1), Cplx(0), Cplx(0, 0.5), Cplx(0)};
    CVec A1 = {Cplx(0), Cplx(alpha), Cplx(0), Cplx(1)};
    CVec A2 = {Cplx(0), Cplx(0), Cplx(1) / (2.0 * kTwoPiI), Cplx(0)};
    return std::make_unique<NilpotentOrbitModel>(
        std::move(N), std::vector<CVec>{A0, A1, A2}, 0.5);
}

std::unique_ptr<FamilyModel> make_orbit_ladder()
{
    // Frobenius-type data with prescribed f0, f1, f2 and f3 solved from the
    // transversality identity
    //   z (f0 f3' - f3 f0' - f1 f2' + f2 f1') + (2 f0 f2 - f1^2) = 0
    // order by order, so the orbit is a genuine variation with a
    // non-parallel Yukawa coupling.
    const size_t T = 28;
    std::vector<Real> f0(T, 0), f1(T, 0), f2(T, 0), f3(T, 0);
    f0[0] = 1;
    f0[1] = 1;
    f1[1] = 1;
    f2[2] = 0.5;

    auto mul = [T](const std::vector<Real>& a, const std::vector<Real>& b) {
        std::vector<Real> r(T, 0);
        for (size_t i = 0; i < T; ++i)
            for (size_t j = 0; i + j < T; ++j)
                r[i + j] += a[i] * b[j];
        return r;
    };
    auto dz = [T](const std::vector<Real>& a) {
        std::vector<Real> r(T, 0);
        for (size_t i = 1; i < T; ++i)
            r[i - 1] = Real(i) * a[i];
        return r;
    };

    // RHS = f1 f2' - f2 f1' - (2 f0 f2 - f1^2)/z
    std::vector<Real> rhs(T, 0);
    {
        auto a = mul(f1, dz(f2));
        auto b = mul(f2, dz(f1));
        auto c = mul(f0, f2);
        auto d = mul(f1, f1);
        for (size_t m = 0; m < T; ++m)
            rhs[m] = a[m] - b[m];
        for (size_t m = 0; m + 1 < T; ++m)
            rhs[m] -= 2.0 * c[m + 1] - d[m + 1]; // divide by z
    }

    // f0 f3' - f0' f3 = rhs, coefficient m:
    //   (m+1) b_{m+1} = rhs_m - sum_{j>=1} a_j (m + 1 - 2 j) b_{m+1-j}
    for (size_t m = 0; m + 1 < T; ++m) {
        Real acc = rhs[m];
        for (size_t j = 1; j <= m + 1 && j < T; ++j)
            acc -= f0[j] * (Real(m + 1) - 2.0 * Real(j)) * f3[m + 1 - j];
        f3[m + 1] = acc / Real(m + 1);
    }

    FrobeniusMum fr;
    fr.f = {f0, f1, f2, f3};
    fr.N = CTensor({4, 4});
    for (int k = 0; k < 3; ++k)
        fr.N(k + 1, k) = Cplx(1);
    fr.truncation = static_cast<int>(T);
    fr.series_radius_estimate = 0.6;
    return std::make_unique<NilpotentOrbitModel>(
        NilpotentOrbitModel::from_frobenius(fr));
}

} // namespace

std::vector<std::string> preset_names()
{
    return {"cubic",         "two_moduli_cubic", "quintic",       "theta4",
            "orbit_trivial", "orbit_rank_one",   "orbit_ladder"};
}

std::unique_ptr<FamilyModel> make_preset(const std::string& name)
{
    if (name == "cubic")
        return make_cubic();
    if (name == "two_moduli_cubic")
        return make_two_moduli_cubic();
    if (name == "quintic")
        return make_pf(quintic_operator(), preset_truncation(name));
    if (name == "theta4")
        return make_pf(theta4_operator(), preset_truncation(name));
    if (name == "orbit_trivial")
        return make_orbit_trivial();
    if (name == "orbit_rank_one")
        return make_orbit_rank_one();
    if (name == "orbit_ladder")
        return make_orbit_ladder();
    throw domain_error("unknown preset '" + name + "'");
}

bool preset_is_pf(const std::string& name)
{
    return name == "quintic" || name == "theta4";
}

PFOperator preset_operator(const std::string& name)
{
    if (name == "quintic")
        return quintic_operator();
    if (name == "theta4")
        return theta4_operator();
    throw domain_error("preset '" + name + "' is not a Picard-Fuchs model");
}

int preset_truncation(const std::string& name)
{
    return name == "quintic" ? 64 : 16;
}

} // namespace cym
