#include <doctest.h>

#include <cmath>

#include "cym/degen/degeneration.hpp"
#include "cym/errors.hpp"
#include "cym/models/presets.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/numeric/rng.hpp"

using namespace cym;

namespace {

const Cplx I{0, 1};

const NilpotentOrbitModel& as_orbit(const FamilyModel& m)
{
    return dynamic_cast<const NilpotentOrbitModel&>(m);
}

} // namespace

TEST_CASE("limit_f3: N = 0 with A = v + z w converges to v")
{
    std::vector<std::vector<long long>> N(4, std::vector<long long>(4, 0));
    CVec v = {Cplx(1), Cplx(0), I, Cplx(0)};
    CVec w = {Cplx(0), Cplx(1), Cplx(0), -I};
    NilpotentOrbitModel m(N, {v, w}, 0.7);
    LimitF3 lf = limit_f3(m);
    CHECK(lf.converged);
    for (size_t a = 0; a < 4; ++a)
        CHECK(std::abs(lf.Finf[a] - v[a]) == 0.0);
    // residual strictly decreasing along the ladder
    CHECK(lf.residuals[0] > lf.residuals[1]);
    CHECK(lf.residuals[1] > lf.residuals[2]);
}

TEST_CASE("limit_f3: quintic twisted section converges to the Frobenius origin")
{
    auto m = make_preset("quintic");
    LimitF3 lf = limit_f3(as_orbit(*m));
    CHECK(lf.converged);
    // Finf is the constant term of the Frobenius-normalized vector
    CHECK(std::abs(lf.Finf[0] - Cplx(1)) <= 1e-14);
    CHECK(std::abs(lf.Finf[1]) <= 1e-14);
    CHECK(std::abs(lf.Finf[2]) <= 1e-14);
    CHECK(std::abs(lf.Finf[3]) <= 1e-14);
}

TEST_CASE("limit_f3: orbit presets return A(0) exactly")
{
    for (const char* name : {"orbit_rank_one", "orbit_ladder", "theta4"}) {
        auto m = make_preset(name);
        const auto& orb = as_orbit(*m);
        LimitF3 lf = limit_f3(orb);
        for (size_t a = 0; a < 4; ++a)
            CHECK(lf.Finf[a] == orb.A0()[a]);
    }
}

TEST_CASE("wang_criterion: N = 0 forces incompleteness")
{
    CTensor N({4, 4});
    CVec f = {Cplx(1), Cplx(0), I, Cplx(0)};
    WangResult w = wang_criterion(N, f);
    CHECK(w.incomplete);
    CHECK(w.ratio == 0.0);
}

TEST_CASE("wang_criterion: quintic MUM point is complete")
{
    auto m = make_preset("quintic");
    const auto& orb = as_orbit(*m);
    WangResult w = wang_criterion(orb.Nmat(), orb.A0());
    CHECK_FALSE(w.incomplete);
    // the ladder reaches the bottom: N^3 applied to the holomorphic
    // direction is nonzero
    CTensor N = orb.Nmat();
    CVec v = orb.A0();
    for (int k = 0; k < 3; ++k)
        v = matvec(N, v);
    Real nrm = 0;
    for (const Cplx& z : v)
        nrm += std::norm(z);
    CHECK(nrm > 0.5);
}

TEST_CASE("wang_criterion: kernel vector at the ladder bottom is incomplete")
{
    auto m = make_preset("orbit_rank_one");
    const auto& orb = as_orbit(*m);
    WangResult w = wang_criterion(orb.Nmat(), orb.A0());
    CHECK(w.incomplete); // N A(0) = 0 by construction
}

TEST_CASE("constraint_check: N = 0 vanishes")
{
    CTensor N({4, 4});
    CVec f = {Cplx(1), Cplx(0), I, Cplx(0)};
    ConstraintResult c = constraint_check(N, f, SymplecticForm::standard(1));
    CHECK(std::abs(c.derived) == 0.0);
    CHECK(std::abs(c.paper_literal) == 0.0);
}

TEST_CASE("constraint_check: horizontality-satisfying rank-one model vanishes")
{
    auto m = make_preset("orbit_rank_one");
    const auto& orb = as_orbit(*m);
    ConstraintResult c = constraint_check(orb.Nmat(), orb.A0(), orb.Q());
    CHECK(std::abs(c.derived) <= 1e-12 * c.scale);
}

TEST_CASE("constraint_check: corrupted limiting vector is nonzero (negative control)")
{
    auto m = make_preset("theta4");
    const auto& orb = as_orbit(*m);
    Rng rng(17);
    int nonzero = 0;
    for (int trial = 0; trial < 10; ++trial) {
        CVec f = rng.cgaussian_vec(4);
        ConstraintResult c = constraint_check(orb.Nmat(), f, orb.Q());
        if (std::abs(c.derived) > 1e-6 * c.scale)
            ++nonzero;
    }
    CHECK(nonzero >= 9); // generic vectors violate the constraint
}

TEST_CASE("constraint_check: ladder value matches the hand-derived constant")
{
    // Q(e0, M(M-1)(M-2) e0) = -Q(e0, e2)/(2 pi i)^3 = -i/(8 pi^3) in the
    // standard-basis ladder of the theta^4 model
    auto m = make_preset("theta4");
    const auto& orb = as_orbit(*m);
    ConstraintResult c = constraint_check(orb.Nmat(), orb.A0(), orb.Q());
    Cplx want = Cplx(0, -1.0 / (8.0 * kPi * kPi * kPi));
    CHECK(std::abs(c.derived - want) <= 1e-15);
}

TEST_CASE("yukawa_limit_scan: trivial orbit vanishes on both sides")
{
    auto m = make_preset("orbit_trivial");
    ScanResult s = yukawa_limit_scan(as_orbit(*m), 0.0);
    CHECK(std::abs(s.limit_lhs) <= 1e-12);
    CHECK(std::abs(s.limit_rhs) == 0.0);
    CHECK(s.wang.incomplete);
    CHECK(s.bounds_ok);
}

TEST_CASE("yukawa_limit_scan: limit identity on synthetic presets")
{
    // brute-force expansion oracle fixed the polynomial M(M-1)(M-2) with
    // M = N / 2 pi i; scans must reproduce it along several rays
    for (const char* name : {"theta4", "orbit_rank_one", "orbit_ladder"}) {
        auto m = make_preset(name);
        const auto& orb = as_orbit(*m);
        for (Real theta : {0.0, 1.1, -2.0}) {
            ScanResult s = yukawa_limit_scan(orb, theta);
            INFO("preset ", name, " theta ", theta);
            CHECK(s.agreement <= 1e-6);
        }
    }
}

TEST_CASE("yukawa_limit_scan: quintic ray")
{
    auto m = make_preset("quintic");
    const auto& orb = as_orbit(*m);
    ScanResult s = yukawa_limit_scan(orb, 0.0);
    CHECK_FALSE(s.wang.incomplete);
    CHECK(s.agreement <= 1e-6);
    CHECK(s.bounds_ok);
    CHECK(s.schwarz_bounded);

    // z^3 (1 - 5^5 z) F_zzz is constant along the ladder: the first-order
    // Yukawa ODE of the operator fixes it up to one constant
    Cplx ref;
    bool first = true;
    for (const ScanRow& row : s.rows) {
        Cplx val = row.z3F * (1.0 - 3125.0 * row.z);
        if (first) {
            ref = val;
            first = false;
        } else {
            CHECK(std::abs(val - ref) <= 1e-6 * std::abs(ref));
        }
    }
}

TEST_CASE("yukawa_limit_scan: decay bounds hold on every scanned ray")
{
    for (const std::string& name : preset_names()) {
        auto m = make_preset(name);
        const auto* orb = dynamic_cast<const NilpotentOrbitModel*>(m.get());
        if (!orb)
            continue;
        for (Real theta : {0.0, 2.4, -1.7}) {
            ScanResult s = yukawa_limit_scan(*orb, theta);
            INFO("preset ", name, " theta ", theta);
            CHECK(s.bounds_ok);          // h^3 >= e^{2K} |F_zzz|^2 (unit gauge)
            CHECK(s.schwarz_bounded);    // h r^2 log^2(1/r) does not blow up
            CHECK(s.min_h3_margin >= -1e-8);
        }
    }
}

TEST_CASE("yukawa_limit_scan: bounded z^3 F when the constraint vanishes")
{
    // rank-one model: c = 0, so |z^3 F_zzz| must decay along the ray
    auto m = make_preset("orbit_rank_one");
    ScanResult s = yukawa_limit_scan(as_orbit(*m), 0.4);
    REQUIRE(std::abs(s.limit_rhs) == 0.0);
    for (size_t k = 1; k < s.rows.size(); ++k)
        CHECK(std::abs(s.rows[k].z3F) <= std::abs(s.rows[k - 1].z3F) + 1e-14);
}

TEST_CASE("yukawa_limit_scan: extended-precision core agrees with double")
{
    auto m = make_preset("orbit_ladder");
    const auto& orb = as_orbit(*m);
    ScanResult sd = yukawa_limit_scan(orb, 0.0, {}, ScanPrecision::plain);
    ScanResult se = yukawa_limit_scan(orb, 0.0, {}, ScanPrecision::extended);
    REQUIRE(sd.rows.size() == se.rows.size());
    for (size_t k = 0; k < sd.rows.size(); ++k) {
        CHECK(std::abs(sd.rows[k].z3F - se.rows[k].z3F) <=
              1e-10 * (1.0 + std::abs(se.rows[k].z3F)));
        CHECK(sd.rows[k].h ==
              doctest::Approx(se.rows[k].h).epsilon(1e-9));
    }
    CHECK(se.precision == ScanPrecision::extended);
}

TEST_CASE("degeneration grading: N^4 annihilates everything, ladder reaches bottom")
{
    for (const char* name : {"theta4", "quintic", "orbit_ladder"}) {
        auto m = make_preset(name);
        const auto& orb = as_orbit(*m);
        CTensor N = orb.Nmat();
        CTensor N2 = matmul(N, N);
        CTensor N4 = matmul(N2, N2);
        CHECK(N4.max_abs() == 0.0);
        CVec v = orb.A0();
        for (int k = 0; k < 4; ++k)
            v = matvec(N, v);
        Real nrm = 0;
        for (const Cplx& z : v)
            nrm = std::max(nrm, std::abs(z));
        CHECK(nrm == 0.0);
    }
}

TEST_CASE("yukawa_limit_scan: explicit radius ladder is honored")
{
    auto m = make_preset("theta4");
    const auto& orb = as_orbit(*m);
    std::vector<Real> radii = {0.1, 0.01, 0.001};
    ScanResult s = yukawa_limit_scan(orb, 0.0, radii);
    REQUIRE(s.rows.size() == 3);
    CHECK(s.rows[0].r == doctest::Approx(0.1));
    CHECK(s.rows[2].r == doctest::Approx(0.001));
}
