#include "cym/wp/normal_frame.hpp"

#include <cmath>

#include "cym/errors.hpp"
#include "cym/numeric/linalg.hpp"

namespace cym {

NormalFrame normal_frame(const PeriodJet& jet, const WpGeometry& wp,
                         const YukawaData& yuk)
{
    const int n = jet.n();
    if (!wp.metric_positive)
        throw inversion_error("normal_frame: WP metric not positive definite");

    NormalFrame fr;
    fr.point = jet.point;

    // A^T g conj(A) = id with A = (C^{-1})^T, C the lower Cholesky factor
    CTensor C = cholesky_lower(wp.g);
    fr.A = transpose(inverse(C));
    fr.L = transpose(C);

    fr.B = CTensor({n, n, n});
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Cplx acc(0);
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        acc += fr.A(k, a) * fr.A(l, b) * wp.Gamma(m, k, l);
                fr.B(m, a, b) = -acc;
            }

    Real P = std::exp(-wp.K);
    // unit norm plus a deterministic U(1) tie-break: the first significant
    // component of the gauged section is real positive, so frame tensors are
    // invariant under external gauge changes including their phase
    const CVec& om = jet.omega();
    Real omax = 0;
    for (const Cplx& z : om)
        omax = std::max(omax, std::abs(z));
    Real phase = 0;
    for (const Cplx& z : om)
        if (std::abs(z) > 1e-9 * omax) {
            phase = std::arg(z);
            break;
        }
    fr.f0 = Cplx(-0.5 * std::log(P), -phase);
    fr.c = wp.Kl;

    const Cplx gauge2 = std::exp(2.0 * fr.f0); // |gauge2| = 1/P

    fr.F = CTensor({n, n, n}, Symmetry::totally_symmetric);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc) {
                Cplx acc(0);
                for (int m = 0; m < n; ++m)
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            acc += fr.A(m, a) * fr.A(p, b) * fr.A(q, cc) *
                                   yuk.F(m, p, q);
                fr.F(a, b, cc) = gauge2 * acc;
            }

    fr.Fcov = CTensor({n, n, n, n});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int dd = 0; dd < n; ++dd) {
                    Cplx acc(0);
                    for (int m = 0; m < n; ++m)
                        for (int p = 0; p < n; ++p)
                            for (int q = 0; q < n; ++q)
                                for (int r = 0; r < n; ++r)
                                    acc += fr.A(m, a) * fr.A(p, b) *
                                           fr.A(q, cc) * fr.A(r, dd) *
                                           yuk.Fcov(m, p, q, r);
                    fr.Fcov(a, b, cc, dd) = gauge2 * acc;
                }

    fr.h = CTensor({n, n}, Symmetry::hermitian);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Cplx acc = (a == b) ? Cplx(2) : Cplx(0);
            for (int m = 0; m < n; ++m)
                for (int p = 0; p < n; ++p)
                    acc += fr.F(a, m, p) * std::conj(fr.F(b, m, p));
            fr.h(a, b) = acc;
        }
    return fr;
}

CVec frame_to_ambient(const NormalFrame& fr, const CVec& s)
{
    const int n = static_cast<int>(fr.point.size());
    CVec t = fr.point;
    for (int m = 0; m < n; ++m) {
        Cplx acc(0);
        for (int a = 0; a < n; ++a) {
            acc += fr.A(m, a) * s[static_cast<size_t>(a)];
            for (int b = 0; b < n; ++b)
                acc += 0.5 * fr.B(m, a, b) * s[static_cast<size_t>(a)] *
                       s[static_cast<size_t>(b)];
        }
        t[static_cast<size_t>(m)] += acc;
    }
    return t;
}

CTensor frame_jacobian(const NormalFrame& fr, const CVec& s)
{
    const int n = static_cast<int>(fr.point.size());
    CTensor J({n, n});
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a) {
            Cplx acc = fr.A(m, a);
            for (int b = 0; b < n; ++b)
                acc += fr.B(m, a, b) * s[static_cast<size_t>(b)];
            J(m, a) = acc;
        }
    return J;
}

PeriodJet transformed_jet(const PeriodJet& jet, const NormalFrame& fr)
{
    const int n = jet.n();

    VecJet composed = compose_quadratic(jet.jet, fr.A, fr.B);

    // gauge exponent as a function of the frame coordinate:
    //   f(t(s)) = f0 + (A^T c) . s + 1/2 (c . B)(s, s)
    CVec chat(static_cast<size_t>(n), Cplx(0));
    for (int a = 0; a < n; ++a)
        for (int m = 0; m < n; ++m)
            chat[static_cast<size_t>(a)] += fr.A(m, a) * fr.c[static_cast<size_t>(m)];
    CTensor dquad({n, n});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Cplx acc(0);
            for (int m = 0; m < n; ++m)
                acc += fr.c[static_cast<size_t>(m)] * fr.B(m, a, b);
            dquad(a, b) = acc;
        }

    PeriodJet out;
    out.point = CVec(static_cast<size_t>(n), Cplx(0));
    out.order = jet.order;
    out.Q = jet.Q;
    out.jet = gauge_exp_multiply(composed, fr.f0, chat, dquad);
    out.build_residual = jet.build_residual;
    return out;
}

} // namespace cym
