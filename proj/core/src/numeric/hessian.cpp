#include "cym/numeric/hessian.hpp"

#include <cmath>
#include <vector>

#include "cym/errors.hpp"

namespace cym {

namespace {

// Richardson table for central-difference data (error series in h^2).
// Returns the best value and the difference of the last two diagonal
// entries as the error estimate.
std::pair<Cplx, Real> richardson(const std::vector<Cplx>& vals)
{
    const size_t L = vals.size();
    std::vector<Cplx> row = vals;
    std::vector<Cplx> diag;
    diag.push_back(row[0]);
    std::vector<Cplx> prev = row;
    std::vector<Cplx> cur;
    for (size_t k = 1; k < L; ++k) {
        cur.assign(L - k, Cplx(0));
        Real f = std::pow(4.0, Real(k));
        for (size_t m = 0; m < L - k; ++m)
            cur[m] = (f * prev[m + 1] - prev[m]) / (f - 1.0);
        diag.push_back(cur[0]);
        prev = cur;
    }
    Cplx best = diag.back();
    Real est = diag.size() >= 2
                   ? std::abs(diag[diag.size() - 1] - diag[diag.size() - 2])
                   : std::abs(best);
    return {best, est};
}

// Axis displacement: axis 2i is Re t_i, axis 2i+1 is Im t_i.
CVec displaced(const CVec& c, int axis, Real d)
{
    CVec out = c;
    size_t i = static_cast<size_t>(axis / 2);
    if (axis % 2 == 0)
        out[i] += Cplx(d, 0);
    else
        out[i] += Cplx(0, d);
    return out;
}

Cplx second_diff(const CplxField& f, const CVec& c, int a, int b, Real h)
{
    if (a == b) {
        Cplx fp = f(displaced(c, a, h));
        Cplx f0 = f(c);
        Cplx fm = f(displaced(c, a, -h));
        return (fp - 2.0 * f0 + fm) / (h * h);
    }
    Cplx fpp = f(displaced(displaced(c, a, h), b, h));
    Cplx fpm = f(displaced(displaced(c, a, h), b, -h));
    Cplx fmp = f(displaced(displaced(c, a, -h), b, h));
    Cplx fmm = f(displaced(displaced(c, a, -h), b, -h));
    return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
}

Cplx first_diff(const CplxField& f, const CVec& c, int a, Real h)
{
    return (f(displaced(c, a, h)) - f(displaced(c, a, -h))) / (2.0 * h);
}

Cplx mixed_wirtinger_at_step(const CplxField& f, const CVec& c, int i, int j,
                             Real h)
{
    Cplx sxx = second_diff(f, c, 2 * i, 2 * j, h);
    Cplx syy = second_diff(f, c, 2 * i + 1, 2 * j + 1, h);
    Cplx sxy = second_diff(f, c, 2 * i, 2 * j + 1, h);
    Cplx syx = second_diff(f, c, 2 * i + 1, 2 * j, h);
    return 0.25 * (sxx + syy + Cplx(0, 1) * (sxy - syx));
}

int effective_levels(const FdOptions& opts)
{
    if (opts.levels < 1)
        throw domain_error("fd: at least one Richardson level required");
    return std::max(2, opts.levels);
}

} // namespace

FdHessian fd_mixed_hessian(const RealField& field, const CVec& center,
                           const FdOptions& opts)
{
    const int n = static_cast<int>(center.size());
    const int L = effective_levels(opts);
    CplxField cf = [&](const CVec& t) { return Cplx(field(t), 0.0); };

    FdHessian out;
    out.matrix = CTensor({n, n}, Symmetry::hermitian);
    Real worst = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::vector<Cplx> vals(static_cast<size_t>(L));
            for (int m = 0; m < L; ++m)
                vals[static_cast<size_t>(m)] =
                    mixed_wirtinger_at_step(cf, center, i, j,
                                            opts.step / std::pow(2.0, Real(m)));
            auto [best, est] = richardson(vals);
            worst = std::max(worst, est);
            out.matrix(i, j) = best;
            out.matrix(j, i) = std::conj(best);
        }
        // real diagonal for a real field
        out.matrix(i, i) = Cplx(out.matrix(i, i).real(), 0.0);
    }
    out.error_estimate = worst;
    if (!(worst <= opts.tol))
        throw precision_error("fd_mixed_hessian: error estimate " +
                                  std::to_string(worst) + " above tolerance",
                              worst);
    return out;
}

Cplx fd_wirtinger_d(const CplxField& field, const CVec& center, int i,
                    const FdOptions& opts)
{
    const int L = effective_levels(opts);
    std::vector<Cplx> vals(static_cast<size_t>(L));
    for (int m = 0; m < L; ++m) {
        Real h = opts.step / std::pow(2.0, Real(m));
        Cplx dx = first_diff(field, center, 2 * i, h);
        Cplx dy = first_diff(field, center, 2 * i + 1, h);
        vals[static_cast<size_t>(m)] = 0.5 * (dx - Cplx(0, 1) * dy);
    }
    auto [best, est] = richardson(vals);
    if (!(est <= opts.tol))
        throw precision_error("fd_wirtinger_d: estimate above tolerance", est);
    return best;
}

Cplx fd_wirtinger_dbar(const CplxField& field, const CVec& center, int i,
                       const FdOptions& opts)
{
    const int L = effective_levels(opts);
    std::vector<Cplx> vals(static_cast<size_t>(L));
    for (int m = 0; m < L; ++m) {
        Real h = opts.step / std::pow(2.0, Real(m));
        Cplx dx = first_diff(field, center, 2 * i, h);
        Cplx dy = first_diff(field, center, 2 * i + 1, h);
        vals[static_cast<size_t>(m)] = 0.5 * (dx + Cplx(0, 1) * dy);
    }
    auto [best, est] = richardson(vals);
    if (!(est <= opts.tol))
        throw precision_error("fd_wirtinger_dbar: estimate above tolerance", est);
    return best;
}

Cplx fd_mixed_second(const CplxField& field, const CVec& center, int i, int j,
                     const FdOptions& opts)
{
    const int L = effective_levels(opts);
    std::vector<Cplx> vals(static_cast<size_t>(L));
    for (int m = 0; m < L; ++m)
        vals[static_cast<size_t>(m)] = mixed_wirtinger_at_step(
            field, center, i, j, opts.step / std::pow(2.0, Real(m)));
    auto [best, est] = richardson(vals);
    if (!(est <= opts.tol))
        throw precision_error("fd_mixed_second: estimate above tolerance", est);
    return best;
}

} // namespace cym
