#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cym/errors.hpp"
#include "cym/models/model_io.hpp"
#include "cym/models/nilpotent.hpp"
#include "cym/models/pf_operator.hpp"
#include "cym/models/prepotential.hpp"
#include "cym/models/presets.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/numeric/rng.hpp"
#include "cym/wp/geometry.hpp"

using namespace cym;

namespace {

const Cplx I{0, 1};

Real vdist(const CVec& a, const CVec& b)
{
    Real worst = 0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

Poly cubic_poly()
{
    Poly P;
    P.nvars = 1;
    P.terms.emplace(MIdx{3}, Cplx(1));
    return P;
}

} // namespace

TEST_CASE("SymplecticForm: standard basis pairing")
{
    SymplecticForm Q = SymplecticForm::standard(1);
    CHECK(Q.dim() == 4);
    CHECK(Q.antisymmetry_residual() == 0);
    // Q(v, w) = v0 w2 - v2 w0 + v1 w3 - v3 w1
    CVec v = {Cplx(1), Cplx(0), Cplx(0), Cplx(0)};
    CVec w = {Cplx(0), Cplx(0), Cplx(1), Cplx(0)};
    CHECK(Q.pair(v, w) == Cplx(1));
    CHECK(Q.pair(w, v) == Cplx(-1));
}

TEST_CASE("SymplecticForm: rejects non-antisymmetric data")
{
    std::vector<std::vector<long long>> bad = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(SymplecticForm(std::move(bad)), structure_error);
}

TEST_CASE("prepotential_periods: P = t^3 at t = i gives (1, i, i, -3)")
{
    // recipe oracle: 2P - t P' = 2t^3 - 3t^3 = -t^3 -> i; P' = 3t^2 -> -3
    PrepotentialModel m(1, cubic_poly());
    PeriodJet jet = prepotential_periods(m, {I}, 3);
    CHECK(vdist(jet.omega(), {Cplx(1), I, I, Cplx(-3)}) <= 1e-15);

    // third derivative of the recipe: (0, 0, -6, 0)
    CHECK(vdist(jet.d({0, 0, 0}), {Cplx(0), Cplx(0), Cplx(-6), Cplx(0)}) <= 1e-15);
}

TEST_CASE("prepotential_periods: P = 0 degenerates")
{
    Poly zero;
    zero.nvars = 1;
    PrepotentialModel m(1, zero);
    PeriodJet jet = m.jet({Cplx(0.3, 0.7)}, 2);
    CHECK(vdist(jet.omega(), {Cplx(1), Cplx(0.3, 0.7), Cplx(0), Cplx(0)}) <= 1e-15);
    CHECK(vdist(jet.d({0, 0}), CVec(4, Cplx(0))) <= 1e-15);
    // positivity fails: sqrt(-1) Q(Omega, conj Omega) = 0
    CHECK_THROWS_AS(kahler_potential(jet), positivity_error);
}

TEST_CASE("prepotential jet: domain gate")
{
    PrepotentialModel m(1, cubic_poly());
    CHECK_THROWS_AS(m.jet({Cplx(25, 0)}, 2), domain_error);
}

TEST_CASE("validate_model: cubic at t = i has norm 8 and zero transversality")
{
    // Q(Omega, conj Omega) = -8i with the standard pairing
    PrepotentialModel m(1, cubic_poly());
    auto rep = validate_model(m, {{I}});
    CHECK(rep.points.size() == 1);
    CHECK(rep.points[0].norm == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(rep.points[0].transversality1 <= 1e-14);
    CHECK(rep.points[0].transversality2 <= 1e-14);
    CHECK(rep.all_valid);
}

TEST_CASE("validate_model: cubic at real t flagged, P = 0 model flagged")
{
    PrepotentialModel m(1, cubic_poly());
    auto rep = validate_model(m, {{Cplx(1, 0)}});
    CHECK_FALSE(rep.points[0].positive); // 8 y^3 with y = 0
    CHECK_FALSE(rep.all_valid);

    Poly zero;
    zero.nvars = 1;
    PrepotentialModel mz(1, zero);
    auto rep2 = validate_model(mz, {{I}});
    CHECK_FALSE(rep2.all_valid);
}

TEST_CASE("prepotential: transversality is an identity of the recipe")
{
    // random points, both moduli counts, relative residual at 1e-10
    Rng rng(314);
    PrepotentialModel m1(1, cubic_poly());
    auto two = make_preset("two_moduli_cubic");
    for (int trial = 0; trial < 25; ++trial) {
        CVec t1 = {Cplx(rng.uniform(-2, 2), rng.uniform(-2, 2))};
        auto rep = validate_model(m1, {t1});
        CHECK(rep.points[0].transversality1 <= 1e-10);
        CHECK(rep.points[0].transversality2 <= 1e-10);

        CVec t2 = {Cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                   Cplx(rng.uniform(-2, 2), rng.uniform(-2, 2))};
        auto rep2 = validate_model(*two, {t2});
        CHECK(rep2.points[0].transversality1 <= 1e-10);
        CHECK(rep2.points[0].transversality2 <= 1e-10);
    }
}

TEST_CASE("pf_frobenius_mum: quintic holomorphic solution starts 1 + 120 z")
{
    FrobeniusMum fr = pf_frobenius_mum(preset_operator("quintic"), 32);
    CHECK(fr.f[0][0] == doctest::Approx(1.0));
    // (5n)! / (n!)^5 from the term recurrence
    CHECK(fr.f[0][1] == doctest::Approx(120.0).epsilon(1e-14));
    CHECK(fr.f[0][2] == doctest::Approx(113400.0).epsilon(1e-14));
    CHECK(fr.f[0][3] == doctest::Approx(168168000.0).epsilon(1e-13));
    // subleading solutions vanish at z = 0
    CHECK(fr.f[1][0] == 0.0);
    CHECK(fr.f[2][0] == 0.0);
    CHECK(fr.f[3][0] == 0.0);
    CHECK(fr.residual <= 1e-9);
    CHECK(fr.series_radius_estimate ==
          doctest::Approx(std::pow(5.0, -5.0)).epsilon(0.05));
}

TEST_CASE("pf_frobenius_mum: pure theta^4 is the bare log ladder")
{
    // solutions 1, log z, log^2 z / 2, log^3 z / 6 <=> f_0 = 1, f_m = 0
    FrobeniusMum fr = pf_frobenius_mum(preset_operator("theta4"), 16);
    for (int m = 0; m < 4; ++m)
        for (size_t j = 0; j < fr.f[static_cast<size_t>(m)].size(); ++j) {
            Real want = (m == 0 && j == 0) ? 1.0 : 0.0;
            CHECK(fr.f[static_cast<size_t>(m)][j] == want);
        }
    // N is the regular shift with N^4 = 0, N^3 != 0
    CTensor N2 = matmul(fr.N, fr.N);
    CTensor N3 = matmul(N2, fr.N);
    CTensor N4 = matmul(N3, fr.N);
    CHECK(N3.max_abs() > 0);
    CHECK(N4.max_abs() == 0);
    CHECK(fr.residual <= 1e-12);
}

TEST_CASE("pf_frobenius_mum: non-MUM indicial data rejected")
{
    PFOperator op;
    op.theta_coeffs = {{1}, {0}, {0}, {0}, {1}}; // p_0(0) != 0
    CHECK_THROWS_AS(pf_frobenius_mum(op, 16), structure_error);
}

TEST_CASE("nilpotent orbit: N = 0 with constant A is constant")
{
    std::vector<std::vector<long long>> N(4, std::vector<long long>(4, 0));
    CVec v = {Cplx(1), Cplx(0), I, Cplx(0)};
    NilpotentOrbitModel m(N, {v}, 0.9);
    PeriodJet jet = nilpotent_orbit_eval(m, Cplx(0.05, 0.02), 3);
    CHECK(vdist(jet.omega(), v) <= 1e-15);
    CHECK(vdist(jet.d({0}), CVec(4, Cplx(0))) <= 1e-15);
    CHECK(vdist(jet.d({0, 0}), CVec(4, Cplx(0))) <= 1e-15);
    CHECK(vdist(jet.d({0, 0, 0}), CVec(4, Cplx(0))) <= 1e-15);
}

TEST_CASE("nilpotent orbit: branch normalization at z = 1")
{
    // ladder N with constant A = e_0: log 1 = 0, so Omega(1) = A(0)
    std::vector<std::vector<long long>> N(4, std::vector<long long>(4, 0));
    N[3][0] = 1;
    N[2][1] = 1;
    N[1][3] = -1;
    CVec e0 = {Cplx(1), Cplx(0), Cplx(0), Cplx(0)};
    NilpotentOrbitModel m(N, {e0}, 1.5);
    PeriodJet jet = m.jet({Cplx(1, 0)}, 0);
    CHECK(vdist(jet.omega(), e0) <= 1e-15);
}

TEST_CASE("nilpotent orbit: z = 0 and out-of-disk rejected")
{
    std::vector<std::vector<long long>> N(4, std::vector<long long>(4, 0));
    CVec v = {Cplx(1), Cplx(0), I, Cplx(0)};
    NilpotentOrbitModel m(N, {v}, 0.5);
    CHECK_THROWS_AS(m.jet({Cplx(0, 0)}, 1), domain_error);
    CHECK_THROWS_AS(m.jet({Cplx(0.7, 0)}, 1), domain_error);
}

TEST_CASE("nilpotent orbit: construction gates")
{
    CVec v = {Cplx(1), Cplx(0), I, Cplx(0)};
    // non-nilpotent N
    std::vector<std::vector<long long>> bad(4, std::vector<long long>(4, 0));
    bad[0][0] = 1;
    CHECK_THROWS_AS(NilpotentOrbitModel(bad, {v}, 0.5), structure_error);
    // nilpotent but not infinitesimally symplectic: the bare shift
    std::vector<std::vector<long long>> shift(4, std::vector<long long>(4, 0));
    shift[1][0] = shift[2][1] = shift[3][2] = 1;
    CHECK_THROWS_AS(NilpotentOrbitModel(shift, {v}, 0.5), structure_error);
    // A(0) = 0
    std::vector<std::vector<long long>> zero(4, std::vector<long long>(4, 0));
    CHECK_THROWS_AS(NilpotentOrbitModel(zero, {CVec(4, Cplx(0))}, 0.5),
                    structure_error);
}

TEST_CASE("nilpotent orbit: dual-path evaluation against a direct exponential")
{
    // generic valid pair (N, A): compare the analytic jet with an
    // independently coded e^{tau N} A(z) evaluation
    auto m = make_preset("orbit_ladder");
    auto* orb = dynamic_cast<NilpotentOrbitModel*>(m.get());
    REQUIRE(orb != nullptr);

    Rng rng(55);
    for (int trial = 0; trial < 6; ++trial) {
        Cplx z = rng.uniform(0.01, 0.3) * std::exp(Cplx(0, rng.uniform(-2.5, 2.5)));
        PeriodJet jet = orb->jet({z}, 0);

        // direct: Horner for A(z), explicit exponential series for e^{tau N}
        const auto& A = orb->A_coeffs();
        CVec a(4, Cplx(0));
        for (size_t j = A.size(); j-- > 0;)
            for (int c = 0; c < 4; ++c)
                a[static_cast<size_t>(c)] =
                    a[static_cast<size_t>(c)] * z + A[j][static_cast<size_t>(c)];
        Cplx tau = std::log(z) / kTwoPiI;
        CTensor Nm = orb->Nmat();
        CTensor E = CTensor::identity(4);
        E.set_symmetry(Symmetry::none);
        CTensor Nk = CTensor::identity(4);
        Nk.set_symmetry(Symmetry::none);
        Real fact = 1;
        for (int k = 1; k <= 3; ++k) {
            Nk = matmul(Nk, Nm);
            fact *= Real(k);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    E(i, j) += std::pow(tau, k) * Nk(i, j) / fact;
        }
        CVec want = matvec(E, a);
        CHECK(vdist(jet.omega(), want) <= 1e-10);
    }
}

TEST_CASE("nilpotent orbit: symplectic invariance of the orbit exponential")
{
    auto m = make_preset("quintic");
    auto* orb = dynamic_cast<NilpotentOrbitModel*>(m.get());
    REQUIRE(orb != nullptr);
    Rng rng(77);
    CTensor Nm = orb->Nmat();
    for (int trial = 0; trial < 10; ++trial) {
        Cplx s = rng.cgaussian();
        CTensor M({4, 4});
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                M(i, j) = s * Nm(i, j) / kTwoPiI;
        CTensor E = CTensor::identity(4);
        E.set_symmetry(Symmetry::none);
        CTensor Mk = CTensor::identity(4);
        Mk.set_symmetry(Symmetry::none);
        Real fact = 1;
        for (int k = 1; k <= 3; ++k) {
            Mk = matmul(Mk, M);
            fact *= Real(k);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    E(i, j) += Mk(i, j) / fact;
        }
        CVec v = rng.cgaussian_vec(4);
        CVec w = rng.cgaussian_vec(4);
        Cplx before = orb->Q().pair(v, w);
        Cplx after = orb->Q().pair(matvec(E, v), matvec(E, w));
        CHECK(std::abs(before - after) <= 1e-10 * (1.0 + std::abs(before)));
    }
}

TEST_CASE("default quadrature jet agrees with analytic jets")
{
    // exercise the contour fallback of FamilyModel::jet through a thin
    // wrapper that hides the analytic override
    struct Wrapped : FamilyModel {
        const FamilyModel& inner;
        explicit Wrapped(const FamilyModel& m) : inner(m) {}
        int n() const override { return inner.n(); }
        const SymplecticForm& Q() const override { return inner.Q(); }
        std::string kind() const override { return "wrapped"; }
        CVec omega(const CVec& t) const override { return inner.omega(t); }
        Real analyticity_radius(const CVec& t) const override
        {
            return inner.analyticity_radius(t);
        }
        std::vector<CVec> suggested_points() const override
        {
            return inner.suggested_points();
        }
    };

    auto two = make_preset("two_moduli_cubic");
    Wrapped w(*two);
    CVec t = two->suggested_points().front();
    PeriodJet jq = w.jet(t, 3);
    PeriodJet ja = two->jet(t, 3);
    CHECK(jq.build_residual <= 1e-10);
    for (const MIdx& a : all_midx(2, 3))
        CHECK(vdist(jq.deriv(a), ja.deriv(a)) <= 1e-8);
}

TEST_CASE("model files: presets round-trip through the JSON schema")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cym_model_io_test";
    fs::create_directories(dir);

    for (const std::string& name : preset_names()) {
        fs::path p = dir / (name + ".json");
        write_preset_file(name, p.string());
        auto loaded = load_model_path(p.string());
        auto factory = make_preset(name);
        CHECK(loaded->n() == factory->n());
        CVec t = factory->suggested_points().front();
        CHECK(vdist(loaded->omega(t), factory->omega(t)) <= 1e-12);
    }

    // parse failure surfaces as domain_error
    fs::path bad = dir / "bad.json";
    std::ofstream(bad.string()) << "{ not json";
    CHECK_THROWS_AS(load_model_path(bad.string()), domain_error);

    fs::path unknown = dir / "unknown.json";
    std::ofstream(unknown.string()) << R"({"type":"mystery","n":1})";
    CHECK_THROWS_AS(load_model_path(unknown.string()), domain_error);
}

TEST_CASE("preset scheme resolves")
{
    auto m = load_model_path("preset:cubic");
    CHECK(m->kind() == "prepotential");
    CHECK_THROWS_AS(load_model_path("preset:nope"), domain_error);
}

TEST_CASE("all bundled presets validate at their suggested points")
{
    for (const std::string& name : preset_names()) {
        auto m = make_preset(name);
        auto rep = validate_model(*m, m->suggested_points());
        INFO("preset ", name);
        CHECK(rep.all_valid);
        CHECK(rep.max_transversality1 <= 1e-9);
        CHECK(rep.max_transversality2 <= 1e-9);
    }
}
