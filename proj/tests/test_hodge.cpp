#include <doctest.h>

#include <cmath>

#include "cym/errors.hpp"
#include "cym/hodge/checks.hpp"
#include "cym/hodge/curvature.hpp"
#include "cym/hodge/metric.hpp"
#include "cym/models/presets.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/numeric/rng.hpp"
#include "cym/report/pipeline.hpp"
#include "cym/wp/normal_frame.hpp"

using namespace cym;

namespace {

// n = 1 frame data with prescribed |F|^2 and Fcov
CurvatureAB synthetic_curvature(Real F2, Cplx Fcov_val, CTensor* h_out = nullptr)
{
    CTensor g = CTensor::identity(1);
    CTensor F({1, 1, 1}, Symmetry::totally_symmetric);
    F(0, 0, 0) = std::sqrt(F2);
    CTensor Fc({1, 1, 1, 1});
    Fc(0, 0, 0, 0) = Fcov_val;
    CTensor h({1, 1}, Symmetry::hermitian);
    h(0, 0) = 2.0 + F2;
    if (h_out)
        *h_out = h;
    return curvature_ab(g, F, Fc, h);
}

} // namespace

TEST_CASE("hodge_metric: cubic model 5/2 by both routes")
{
    auto m = make_preset("cubic");
    HodgeMetricResult r = hodge_metric(*m, {Cplx(0, 1)});
    // (n+3) g + Ric = 4 (3/4) - 1/2 and 2 g + e^{2K} g^-2 |F|^2 = 3/2 + 1
    CHECK(r.h_unit(0, 0).real() == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(std::abs(r.h_ric(0, 0) - Cplx(2.5)) <= 1e-8);
    CHECK(r.deviation <= 1e-8);
    // Ric(g) = -1/(2 y^2)
    CHECK(std::abs(r.ric(0, 0) - Cplx(-0.5)) <= 1e-8);
}

TEST_CASE("hodge_metric: cubic at t = 2i, closed form (5/2)/y^2")
{
    auto m = make_preset("cubic");
    HodgeMetricResult r = hodge_metric(*m, {Cplx(0, 2)});
    CHECK(r.h_unit(0, 0).real() == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(std::abs(r.h_ric(0, 0) - Cplx(0.625)) <= 1e-8);
}

TEST_CASE("hodge metric in the frame: F = 0 gives 2 id")
{
    // h_{i jbar} = 2 delta + sum F conj F with vanishing Yukawa
    auto m = make_preset("orbit_trivial");
    CVec t = m->suggested_points().front();
    PeriodJet jet = m->jet(t, 4);
    WpGeometry wp = compute_wp(jet);
    YukawaData yk = compute_yukawa(jet, wp);
    CHECK(yk.F.max_abs() <= 1e-12);
    NormalFrame fr = normal_frame(jet, wp, yk);
    CHECK(std::abs(fr.h(0, 0) - Cplx(2)) <= 1e-12);
}

TEST_CASE("hodge_metric: deviation of the two routes stays small on presets")
{
    for (const std::string& name : preset_names()) {
        auto m = make_preset(name);
        CVec t = m->suggested_points().front();
        HodgeMetricResult r = hodge_metric(*m, t);
        Real scale = std::max<Real>(1.0, r.h_unit.max_abs());
        INFO("preset ", name);
        CHECK(r.deviation / scale <= 1e-4);
    }
}

TEST_CASE("curvature_ab: n = 1 synthetic values")
{
    // F = 0: delta terms only
    {
        auto ab = synthetic_curvature(0.0, Cplx(0));
        CHECK(ab.A(0, 0, 0, 0) == Cplx(4));
        CHECK(ab.B(0, 0, 0, 0) == Cplx(0));
        CHECK(ab.R(0, 0, 0, 0) == Cplx(4));
    }
    // |F|^2 = 4/3 (cubic frame data): A = 4 - 16/3 + 32/9 = 20/9
    {
        auto ab = synthetic_curvature(4.0 / 3.0, Cplx(0));
        CHECK(ab.A(0, 0, 0, 0).real() == doctest::Approx(20.0 / 9.0).epsilon(1e-14));
        CHECK(std::abs(ab.B(0, 0, 0, 0)) <= 1e-15);
    }
    // |F|^2 = 1, Fcov = 0: A = 4 - 4 + 2 = 2
    {
        auto ab = synthetic_curvature(1.0, Cplx(0));
        CHECK(ab.A(0, 0, 0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("curvature_ab: cubic model end to end")
{
    auto m = make_preset("cubic");
    PointGeometry pg = compute_point_geometry(*m, {Cplx(0, 1)});
    REQUIRE(pg.valid);
    CHECK(pg.hodge_report.A(0, 0, 0, 0).real() ==
          doctest::Approx(20.0 / 9.0).epsilon(1e-12));
    CHECK(std::abs(pg.hodge_report.B(0, 0, 0, 0)) <= 1e-8);
    CHECK(pg.hodge_report.R(0, 0, 0, 0).real() ==
          doctest::Approx(20.0 / 9.0).epsilon(1e-10));
}

TEST_CASE("curvature_ab: frame contract enforced")
{
    CTensor g = CTensor::identity(1);
    g(0, 0) = Cplx(1.5); // not the unit frame
    CTensor F({1, 1, 1});
    CTensor Fc({1, 1, 1, 1});
    CTensor h({1, 1});
    h(0, 0) = Cplx(2);
    CHECK_THROWS_AS(curvature_ab(g, F, Fc, h), domain_error);
}

TEST_CASE("curvature_ab: hermitian curvature symmetry on rich models")
{
    auto m = make_preset("quintic");
    PointGeometry pg = compute_point_geometry(*m, m->suggested_points().front());
    REQUIRE(pg.valid);
    const CTensor& R = pg.hodge_report.R;
    CHECK(std::abs(R(0, 0, 0, 0) - std::conj(R(0, 0, 0, 0))) <= 1e-9);

    auto two = make_preset("two_moduli_cubic");
    PointGeometry pg2 = compute_point_geometry(*two, two->suggested_points().front());
    REQUIRE(pg2.valid);
    const CTensor& R2 = pg2.hodge_report.R;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(std::abs(R2(i, j, k, l) - std::conj(R2(j, i, l, k))) <= 1e-9);
}

TEST_CASE("scalar_curvature: synthetic and cubic values")
{
    // n = 1, F = 0: rho = -(1/2)(1/2) 4 = -1
    {
        CTensor h;
        auto ab = synthetic_curvature(0.0, Cplx(0), &h);
        CHECK(scalar_curvature(h, ab.R) == doctest::Approx(-1.0).epsilon(1e-14));
    }
    // cubic: rho = -(3/10)^2 (20/9) = -1/5, the alpha(1) saturation value
    {
        CTensor h;
        auto ab = synthetic_curvature(4.0 / 3.0, Cplx(0), &h);
        CHECK(scalar_curvature(h, ab.R) == doctest::Approx(-0.2).epsilon(1e-14));
        CHECK(alpha_bound(1) == doctest::Approx(0.2).epsilon(1e-15));
    }
}

TEST_CASE("scalar_curvature: A-trace bound when B = 0")
{
    // 0 < -rho <= 3 n^6 for B = 0 across a range of |F|^2
    for (Real F2 : {0.0, 0.3, 1.0, 4.0 / 3.0, 5.0, 40.0}) {
        CTensor h;
        auto ab = synthetic_curvature(F2, Cplx(0), &h);
        Real rho = scalar_curvature(h, ab.R);
        CHECK(rho < 0);
        CHECK(-rho <= 3.0 + 1e-12);
    }
}

TEST_CASE("theorem_checks: cubic saturates the Ricci bound")
{
    auto m = make_preset("cubic");
    PointGeometry pg = compute_point_geometry(*m, {Cplx(0, 1)});
    REQUIRE(pg.valid);
    CHECK(pg.hodge_report.rho == doctest::Approx(-0.2).epsilon(1e-10));
    CHECK(pg.hodge_report.alpha == doctest::Approx(0.2).epsilon(1e-15));
    for (const CheckResult& c : pg.hodge_report.checks) {
        INFO("check ", c.name);
        CHECK(c.pass);
        if (c.name == "Thm1.1-Ricci")
            CHECK(std::abs(c.residual) <= 1e-8); // saturated: Ric = -alpha h
    }
}

TEST_CASE("theorem_checks: alpha(n) arithmetic")
{
    CHECK(alpha_bound(1) == doctest::Approx(0.2));
    Real r2 = std::sqrt(2.0) + 1.0;
    CHECK(alpha_bound(2) == doctest::Approx(1.0 / (r2 * r2 + 1.0)));
}

TEST_CASE("theorem_checks: two-moduli preset passes at 20 random valid points")
{
    auto two = make_preset("two_moduli_cubic");
    Rng rng(2718);
    int found = 0;
    while (found < 20) {
        CVec t = {Cplx(rng.uniform(-0.3, 0.3), rng.uniform(1.2, 2.2)),
                  Cplx(rng.uniform(-0.3, 0.3), rng.uniform(-1.1, -0.5))};
        PointGeometry pg = compute_point_geometry(*two, t);
        if (!pg.valid)
            continue;
        ++found;
        for (const CheckResult& c : pg.hodge_report.checks) {
            INFO("check ", c.name, " at trial ", found);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("direct_curvature_oracle: dual path on cubic and trivial presets")
{
    {
        auto m = make_preset("cubic");
        PeriodJet jet = m->jet({Cplx(0, 1)}, 4);
        WpGeometry wp = compute_wp(jet);
        YukawaData yk = compute_yukawa(jet, wp);
        NormalFrame fr = normal_frame(jet, wp, yk);
        CTensor Rfd = direct_curvature_oracle(*m, {Cplx(0, 1)}, fr);
        CHECK(std::abs(Rfd(0, 0, 0, 0) - Cplx(20.0 / 9.0)) <= 1e-4 * (20.0 / 9.0));
    }
    {
        // vanishing Yukawa: R = 4 within 1e-6
        auto m = make_preset("orbit_trivial");
        CVec t = m->suggested_points().front();
        PeriodJet jet = m->jet(t, 4);
        WpGeometry wp = compute_wp(jet);
        YukawaData yk = compute_yukawa(jet, wp);
        NormalFrame fr = normal_frame(jet, wp, yk);
        CTensor Rfd = direct_curvature_oracle(*m, t, fr);
        CHECK(std::abs(Rfd(0, 0, 0, 0) - Cplx(4)) <= 1e-6 * 4.0);
    }
}

TEST_CASE("kahler_curvature_fd: flat synthetic metric field gives zero")
{
    MetricField flat = [](const CVec&) {
        CTensor h({2, 2}, Symmetry::hermitian);
        h(0, 0) = Cplx(1.7);
        h(1, 1) = Cplx(0.9);
        h(0, 1) = Cplx(0.2, 0.1);
        h(1, 0) = std::conj(h(0, 1));
        return h;
    };
    FdOptions opts;
    opts.step = 1e-2;
    CTensor R = kahler_curvature_fd(flat, {Cplx(0.3, 0.4), Cplx(-0.2, 0.1)}, opts);
    CHECK(R.max_abs() <= 1e-10);
}

TEST_CASE("curvature invariants: hhA positivity and the B sandwich")
{
    for (const std::string& name : preset_names()) {
        auto m = make_preset(name);
        for (const CVec& t : m->suggested_points()) {
            PointGeometry pg = compute_point_geometry(*m, t);
            if (!pg.valid)
                continue;
            INFO("preset ", name);
            const int n = m->n();
            CTensor Hinv = inverse(pg.hodge_report.h);
            auto tr = [&](const CTensor& T) {
                Cplx acc(0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            for (int l = 0; l < n; ++l)
                                acc += Hinv(j, i) * Hinv(l, k) * T(i, j, k, l);
                return acc.real();
            };
            Real hhA = tr(pg.hodge_report.A);
            Real hhB = tr(pg.hodge_report.B);
            CHECK(hhA >= -1e-10);
            CHECK(hhA <= 3.0 * std::pow(Real(n), 6.0) + 1e-10);
            Real cap = 0;
            REQUIRE(pg.frame.has_value());
            for (const Cplx& z : pg.frame->Fcov.data())
                cap += std::norm(z);
            CHECK(hhB >= -1e-10);
            CHECK(hhB <= cap + 1e-10);
        }
    }
}

TEST_CASE("eigenvalue bound holds on every valid sampled point")
{
    Rng rng(13);
    auto two = make_preset("two_moduli_cubic");
    int found = 0;
    while (found < 10) {
        CVec t = {Cplx(rng.uniform(-0.3, 0.3), rng.uniform(1.2, 2.2)),
                  Cplx(rng.uniform(-0.3, 0.3), rng.uniform(-1.1, -0.5))};
        PointGeometry pg = compute_point_geometry(*two, t);
        if (!pg.valid)
            continue;
        ++found;
        CTensor ric = ricci_contraction(pg.hodge_report.h, pg.hodge_report.R);
        CTensor mth({2, 2}, Symmetry::hermitian);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                mth(i, j) = ric(i, j) + pg.hodge_report.alpha * pg.hodge_report.h(i, j);
        CHECK(max_eigenvalue(mth) <= 1e-6);
    }
}
