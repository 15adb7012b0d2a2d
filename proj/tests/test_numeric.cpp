#include <doctest.h>

#include <cmath>

#include "cym/errors.hpp"
#include "cym/numeric/contour.hpp"
#include "cym/numeric/hessian.hpp"
#include "cym/numeric/jets.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/numeric/rng.hpp"

using namespace cym;

namespace {
const Cplx I{0, 1};
}

TEST_CASE("herm_eigen: identity and diagonal")
{
    CHECK(herm_eigen(CTensor::identity(2)) == std::vector<Real>{1.0, 1.0});

    CTensor d({1, 1}, Symmetry::hermitian);
    d(0, 0) = Cplx(0.75); // WP metric of the cubic model at t = i
    auto ev = herm_eigen(d);
    CHECK(ev.size() == 1);
    CHECK(ev[0] == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("herm_eigen: [[2, i], [-i, 2]] -> {1, 3}")
{
    // characteristic polynomial (2-x)^2 - 1 by hand
    CTensor H({2, 2}, Symmetry::hermitian);
    H(0, 0) = 2;
    H(0, 1) = I;
    H(1, 0) = -I;
    H(1, 1) = 2;
    auto ev = herm_eigen(H);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("herm_eigen: non-hermitian input rejected")
{
    CTensor H({2, 2});
    H(0, 0) = 1;
    H(0, 1) = Cplx(1, 0);
    H(1, 0) = Cplx(0.5, 0);
    H(1, 1) = 2;
    CHECK_THROWS_AS(herm_eigen(H), symmetry_error);
}

TEST_CASE("herm_eigen: invariance under unitary conjugation")
{
    Rng rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 3;
        CTensor H({n, n}, Symmetry::hermitian);
        for (int i = 0; i < n; ++i) {
            H(i, i) = Cplx(rng.gaussian(), 0);
            for (int j = i + 1; j < n; ++j) {
                H(i, j) = rng.cgaussian();
                H(j, i) = std::conj(H(i, j));
            }
        }
        // unitary from the eigenvectors of another hermitian matrix
        CTensor G({n, n}, Symmetry::hermitian);
        for (int i = 0; i < n; ++i) {
            G(i, i) = Cplx(rng.gaussian(), 0);
            for (int j = i + 1; j < n; ++j) {
                G(i, j) = rng.cgaussian();
                G(j, i) = std::conj(G(i, j));
            }
        }
        CTensor U = herm_eigen_full(G).vectors;
        CTensor HU = matmul(matmul(adjoint(U), H), U);
        auto ev1 = herm_eigen(H);
        auto ev2 = herm_eigen(HU, 1e-9);
        for (int k = 0; k < n; ++k)
            CHECK(ev1[static_cast<size_t>(k)] ==
                  doctest::Approx(ev2[static_cast<size_t>(k)]).epsilon(1e-10));
    }
}

TEST_CASE("contour_derivs: cubic polynomial is exact")
{
    CMap f = [](const CVec& t) { return CVec{t[0] * t[0] * t[0]}; };
    for (Real r : {0.3, 1.0, 2.5}) {
        Jet1D jet = contour_derivs(f, {Cplx(0)}, 0, 3, r, 16);
        CHECK(std::abs(jet.coeffs[3][0] - Cplx(6)) <= 1e-12);
        CHECK(std::abs(jet.coeffs[2][0]) <= 1e-12);
        CHECK(std::abs(jet.coeffs[1][0]) <= 1e-12);
        CHECK(std::abs(jet.coeffs[0][0]) <= 1e-12);
    }
}

TEST_CASE("contour_derivs: exponential, all derivatives 1")
{
    CMap f = [](const CVec& t) { return CVec{std::exp(t[0])}; };
    Jet1D jet = contour_derivs(f, {Cplx(0)}, 0, 4, 0.5, 32);
    for (int j = 0; j <= 4; ++j)
        CHECK(std::abs(jet.coeffs[static_cast<size_t>(j)][0] - Cplx(1)) <= 1e-12);
}

TEST_CASE("contour_derivs: geometric series 1/(1-t)")
{
    CMap f = [](const CVec& t) { return CVec{Cplx(1) / (Cplx(1) - t[0])}; };
    Jet1D jet = contour_derivs(f, {Cplx(0)}, 0, 2, 0.5, 64);
    // d^j f = j! at 0
    CHECK(std::abs(jet.coeffs[0][0] - Cplx(1)) <= 1e-12);
    CHECK(std::abs(jet.coeffs[1][0] - Cplx(1)) <= 1e-12);
    CHECK(std::abs(jet.coeffs[2][0] - Cplx(2)) <= 1e-12);
}

TEST_CASE("contour_derivs: node-count precondition and error estimate")
{
    CMap f = [](const CVec& t) { return CVec{std::exp(t[0])}; };
    CHECK_THROWS_AS(contour_derivs(f, {Cplx(0)}, 0, 4, 0.5, 8), domain_error);
    Jet1D jet = contour_derivs(f, {Cplx(0)}, 0, 2, 0.5, 16);
    for (Real e : jet.error_estimate)
        CHECK(e <= 1e-10);
}

TEST_CASE("contour_derivs_mixed: d1^2 d2 of t1^2 t2")
{
    CMap f = [](const CVec& t) { return CVec{t[0] * t[0] * t[1]}; };
    CVec center = {Cplx(0.3, 0.1), Cplx(-0.2, 0.4)};
    CVec d = contour_derivs_mixed(f, center, {2, 1}, {0.5, 0.5}, 16);
    CHECK(std::abs(d[0] - Cplx(2)) <= 1e-11);
}

TEST_CASE("fd_mixed_hessian: |t|^2 -> 1 exactly")
{
    RealField f = [](const CVec& t) { return std::norm(t[0]); };
    FdOptions opts;
    opts.step = 0.25; // scheme is exact on quadratics at any step
    auto h = fd_mixed_hessian(f, {Cplx(0.4, 1.3)}, opts);
    CHECK(std::abs(h.matrix(0, 0) - Cplx(1)) <= 1e-12);
}

TEST_CASE("fd_mixed_hessian: -3 log(Im t) at t = i -> 3/4")
{
    // symbolic oracle: d dbar (-3 log y) = 3/(4 y^2)
    RealField f = [](const CVec& t) { return -3.0 * std::log(t[0].imag()); };
    FdOptions opts;
    opts.step = 5e-3;
    auto h = fd_mixed_hessian(f, {Cplx(0, 1)}, opts);
    CHECK(std::abs(h.matrix(0, 0) - Cplx(0.75)) <= 1e-9);
}

TEST_CASE("fd_mixed_hessian: -log(8 y^3) at t = i -> 3/4 (cubic-model K)")
{
    RealField f = [](const CVec& t) {
        Real y = t[0].imag();
        return -std::log(8.0 * y * y * y);
    };
    FdOptions opts;
    opts.step = 5e-3;
    auto h = fd_mixed_hessian(f, {Cplx(0, 1)}, opts);
    CHECK(std::abs(h.matrix(0, 0) - Cplx(0.75)) <= 1e-9);
}

TEST_CASE("fd_mixed_hessian: precision failure carries the estimate")
{
    RealField f = [](const CVec& t) { return std::norm(t[0]); };
    FdOptions opts;
    opts.tol = 1e-30; // unreachable
    opts.step = 0.3;
    bool threw = false;
    try {
        fd_mixed_hessian(f, {Cplx(0.5, 0.5)}, opts);
    } catch (const precision_error& e) {
        threw = true;
        CHECK(std::isfinite(e.estimate()));
    }
    CHECK(threw);
}

TEST_CASE("fd_mixed_hessian: hermitian output on a two-variable field")
{
    RealField f = [](const CVec& t) {
        return std::norm(t[0]) * (1.0 + t[1].real()) + std::norm(t[1]);
    };
    auto h = fd_mixed_hessian(f, {Cplx(0.2, 0.8), Cplx(-0.1, 0.5)});
    CHECK(h.matrix.symmetry_residual() == 0.0);
}

TEST_CASE("jets: composition through a quadratic map matches direct Taylor")
{
    // Omega(t) = (t1^2 t2, t1 + t2^3) composed with t = p + A s + B(s,s)/2;
    // compare against contour differentiation of the composite map
    const int n = 2;
    CMap omega = [](const CVec& t) {
        return CVec{t[0] * t[0] * t[1], t[0] + t[1] * t[1] * t[1]};
    };
    CVec p = {Cplx(0.4, 0.2), Cplx(-0.3, 0.6)};

    CTensor A({n, n});
    A(0, 0) = Cplx(0.9, 0.1);
    A(0, 1) = Cplx(0.2, -0.3);
    A(1, 0) = Cplx(-0.1, 0.25);
    A(1, 1) = Cplx(1.1, 0.05);
    CTensor B({n, n, n});
    B(0, 0, 0) = Cplx(0.3, -0.2);
    B(0, 0, 1) = B(0, 1, 0) = Cplx(-0.15, 0.1);
    B(0, 1, 1) = Cplx(0.05, 0.2);
    B(1, 0, 0) = Cplx(-0.25, 0.15);
    B(1, 0, 1) = B(1, 1, 0) = Cplx(0.12, 0.3);
    B(1, 1, 1) = Cplx(0.4, -0.1);

    // base jet of omega at p
    VecJet jet;
    jet.nvars = n;
    jet.order = 4;
    jet.vec_len = 2;
    std::vector<Real> radii = {0.5, 0.5};
    for (const MIdx& a : all_midx(n, 4))
        jet.d.emplace(a, contour_derivs_mixed(omega, p, a, radii, 32));

    VecJet composed = compose_quadratic(jet, A, B);

    CMap comp = [&](const CVec& s) {
        CVec t = p;
        for (int m = 0; m < n; ++m) {
            Cplx acc(0);
            for (int a = 0; a < n; ++a) {
                acc += A(m, a) * s[static_cast<size_t>(a)];
                for (int b = 0; b < n; ++b)
                    acc += 0.5 * B(m, a, b) * s[static_cast<size_t>(a)] *
                           s[static_cast<size_t>(b)];
            }
            t[static_cast<size_t>(m)] += acc;
        }
        return omega(t);
    };
    CVec zero = {Cplx(0), Cplx(0)};
    for (const MIdx& a : all_midx(n, 4)) {
        CVec want = contour_derivs_mixed(comp, zero, a, radii, 32);
        const CVec& got = composed.at(a);
        for (size_t c = 0; c < 2; ++c)
            CHECK(std::abs(want[c] - got[c]) <= 1e-8);
    }
}

TEST_CASE("jets: gauge multiplication matches direct differentiation")
{
    const int n = 1;
    CMap omega = [](const CVec& t) { return CVec{std::exp(t[0]), t[0] * t[0]}; };
    CVec p = {Cplx(0.2, -0.4)};

    VecJet jet;
    jet.nvars = n;
    jet.order = 4;
    jet.vec_len = 2;
    std::vector<Real> radii = {0.5};
    for (const MIdx& a : all_midx(n, 4))
        jet.d.emplace(a, contour_derivs_mixed(omega, p, a, radii, 32));

    Cplx f0(0.3, 0.7);
    CVec c = {Cplx(-0.4, 0.2)};
    CTensor d({n, n});
    d(0, 0) = Cplx(0.25, -0.15);

    VecJet gauged = gauge_exp_multiply(jet, f0, c, d);

    CMap direct = [&](const CVec& t) {
        Cplx u = t[0] - p[0];
        Cplx f = f0 + c[0] * u + 0.5 * d(0, 0) * u * u;
        CVec v = omega(t);
        for (Cplx& z : v)
            z *= std::exp(f);
        return v;
    };
    for (const MIdx& a : all_midx(n, 4)) {
        CVec want = contour_derivs_mixed(direct, p, a, radii, 32);
        const CVec& got = gauged.at(a);
        for (size_t cc = 0; cc < 2; ++cc)
            CHECK(std::abs(want[cc] - got[cc]) <= 1e-8);
    }
}
