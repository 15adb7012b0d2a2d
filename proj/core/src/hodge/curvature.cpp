#include "cym/hodge/curvature.hpp"

#include <cmath>
#include <map>
#include <memory>

#include "cym/errors.hpp"
#include "cym/hodge/metric.hpp"
#include "cym/numeric/hessian.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/wp/yukawa.hpp"

namespace cym {

CurvatureAB curvature_ab(const CTensor& g_frame, const CTensor& F,
                         const CTensor& Fcov, const CTensor& h, Real frame_tol)
{
    const int n = F.dim(0);

    Real gdev = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gdev = std::max(gdev,
                            std::abs(g_frame(i, j) - (i == j ? Cplx(1) : Cplx(0))));
    if (gdev > frame_tol)
        throw domain_error("curvature_ab: inputs are not in the normal frame "
                           "(|g - id| = " + std::to_string(gdev) + ")");

    CTensor Hinv = inverse(h);

    CurvatureAB out;
    out.A = CTensor({n, n, n, n});
    out.B = CTensor({n, n, n, n});
    out.R = CTensor({n, n, n, n});

    // T(i, k, m) = sum_rs F_{irs,k} conj(F_{mrs})
    CTensor T({n, n, n});
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) {
                Cplx acc(0);
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        acc += Fcov(i, r, s, k) * std::conj(F(m, r, s));
                T(i, k, m) = acc;
            }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Cplx a(0);
                    if (i == j && k == l)
                        a += 2.0;
                    if (i == l && k == j)
                        a += 2.0;
                    for (int s = 0; s < n; ++s)
                        a -= 4.0 * F(i, k, s) * std::conj(F(j, l, s));
                    for (int m = 0; m < n; ++m)
                        for (int nn = 0; nn < n; ++nn)
                            for (int p = 0; p < n; ++p)
                                for (int q = 0; q < n; ++q)
                                    a += 2.0 * F(q, k, m) * std::conj(F(p, l, m)) *
                                         F(i, nn, p) * std::conj(F(j, nn, q));
                    out.A(i, j, k, l) = a;

                    Cplx b(0);
                    for (int r = 0; r < n; ++r)
                        for (int s = 0; s < n; ++s)
                            b += Fcov(i, r, s, k) * std::conj(Fcov(j, r, s, l));
                    for (int m = 0; m < n; ++m)
                        for (int nn = 0; nn < n; ++nn)
                            b -= T(i, k, m) * std::conj(T(j, l, nn)) * Hinv(m, nn);
                    out.B(i, j, k, l) = b;

                    out.R(i, j, k, l) = a + b;
                }
    return out;
}

CurvatureAB curvature_ab(const NormalFrame& frame, Real frame_tol)
{
    const int n = frame.h.dim(0);
    return curvature_ab(CTensor::identity(n), frame.F, frame.Fcov, frame.h,
                        frame_tol);
}

Real scalar_curvature(const CTensor& h, const CTensor& R)
{
    const int n = h.dim(0);
    CTensor Hinv = inverse(h);
    Cplx acc(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    acc += Hinv(j, i) * Hinv(l, k) * R(i, j, k, l);
    return -acc.real();
}

CTensor ricci_contraction(const CTensor& h, const CTensor& R)
{
    const int n = h.dim(0);
    CTensor Hinv = inverse(h);
    CTensor ric({n, n}, Symmetry::hermitian);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Cplx acc(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    acc += Hinv(j, i) * R(i, j, k, l);
            ric(k, l) = -acc;
        }
    for (int k = 0; k < n; ++k)
        ric(k, k) = Cplx(ric(k, k).real(), 0);
    return ric;
}

Real holomorphic_sectional(const CTensor& h, const CTensor& R, const CVec& v)
{
    const int n = h.dim(0);
    Cplx num(0), den(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            den += h(i, j) * v[static_cast<size_t>(i)] *
                   std::conj(v[static_cast<size_t>(j)]);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    num += R(i, j, k, l) * v[static_cast<size_t>(i)] *
                           std::conj(v[static_cast<size_t>(j)]) *
                           v[static_cast<size_t>(k)] *
                           std::conj(v[static_cast<size_t>(l)]);
        }
    return num.real() / (den.real() * den.real());
}

namespace {

struct PointKey {
    std::vector<Real> bits;
    bool operator<(const PointKey& o) const { return bits < o.bits; }
};

PointKey key_of(const CVec& t)
{
    PointKey k;
    for (const Cplx& z : t) {
        k.bits.push_back(z.real());
        k.bits.push_back(z.imag());
    }
    return k;
}

} // namespace

CTensor kahler_curvature_fd(const MetricField& hfield, const CVec& t,
                            const FdOptions& opts)
{
    const int n = static_cast<int>(t.size());
    CTensor h0 = hfield(t);
    CTensor Hinv = inverse(h0);

    // first Wirtinger derivatives dh(k, i, q) = d_k h_{i qbar}
    CTensor dh({n, n, n});
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < n; ++q) {
                CplxField f = [&](const CVec& p) { return hfield(p)(i, q); };
                dh(k, i, q) = fd_wirtinger_d(f, t, k, opts);
            }

    // mixed second derivatives ddh(i, j, k, l) = d_k d_lbar h_{i jbar}
    CTensor ddh({n, n, n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CplxField f = [&](const CVec& p) { return hfield(p)(i, j); };
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    ddh(i, j, k, l) = fd_mixed_second(f, t, k, l, opts);
        }

    // sign convention anchored by the closed form:
    // R = +d dbar h - h^{p qbar} (d_k h_{i qbar}) (d_lbar h_{p jbar})
    CTensor R({n, n, n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Cplx acc = ddh(i, j, k, l);
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            acc -= Hinv(q, p) * dh(k, i, q) *
                                   std::conj(dh(l, j, p));
                    R(i, j, k, l) = acc;
                }
    return R;
}

CTensor direct_curvature_oracle(const FamilyModel& model, const CVec& t,
                                const NormalFrame& frame, int fd_levels,
                                Real fd_step_factor)
{
    const int n = model.n();

    auto cache = std::make_shared<std::map<PointKey, CTensor>>();
    MetricField hfield = [&model, cache](const CVec& p) -> CTensor {
        PointKey k = key_of(p);
        auto it = cache->find(k);
        if (it == cache->end()) {
            PeriodJet j = model.jet(p, 3);
            WpGeometry wp = compute_wp(j);
            if (!wp.metric_positive)
                throw evaluation_error("direct_curvature_oracle: invalid point "
                                       "on FD stencil");
            CTensor F = yukawa(j);
            it = cache->emplace(k, hodge_metric_unit_gauge(wp, F)).first;
        }
        return it->second;
    };

    FdOptions opts;
    opts.step = fd_step_factor * model.local_scale(t);
    opts.levels = fd_levels;

    CTensor Ramb = kahler_curvature_fd(hfield, t, opts);

    // transport into the normal frame (curvature is a tensor; only the
    // linear part of the frame map enters at the base point)
    CTensor Rf({n, n, n, n});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d2 = 0; d2 < n; ++d2) {
                    Cplx acc(0);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            for (int k = 0; k < n; ++k)
                                for (int l = 0; l < n; ++l)
                                    acc += frame.A(i, a) *
                                           std::conj(frame.A(j, b)) *
                                           frame.A(k, c) *
                                           std::conj(frame.A(l, d2)) *
                                           Ramb(i, j, k, l);
                    Rf(a, b, c, d2) = acc;
                }
    return Rf;
}

} // namespace cym
