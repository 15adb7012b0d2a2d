#include "cym/models/prepotential.hpp"

#include <algorithm>
#include <cmath>

#include "cym/errors.hpp"

namespace cym {

Poly Poly::constant(int nvars, Cplx c)
{
    Poly p;
    p.nvars = nvars;
    if (c != Cplx(0))
        p.terms.emplace(MIdx(static_cast<size_t>(nvars), 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i)
{
    Poly p;
    p.nvars = nvars;
    MIdx a(static_cast<size_t>(nvars), 0);
    a[static_cast<size_t>(i)] = 1;
    p.terms.emplace(std::move(a), Cplx(1));
    return p;
}

Cplx Poly::eval(const CVec& t) const
{
    Cplx acc(0);
    for (const auto& [a, c] : terms) {
        Cplx m = c;
        for (int v = 0; v < nvars; ++v)
            for (int k = 0; k < a[static_cast<size_t>(v)]; ++k)
                m *= t[static_cast<size_t>(v)];
        acc += m;
    }
    return acc;
}

Poly Poly::deriv(int var) const
{
    Poly out;
    out.nvars = nvars;
    for (const auto& [a, c] : terms) {
        int e = a[static_cast<size_t>(var)];
        if (e == 0)
            continue;
        MIdx b = a;
        b[static_cast<size_t>(var)] = e - 1;
        out.terms[b] += c * Real(e);
    }
    return out;
}

Poly Poly::mul_variable(int var) const
{
    Poly out;
    out.nvars = nvars;
    for (const auto& [a, c] : terms) {
        MIdx b = a;
        b[static_cast<size_t>(var)]++;
        out.terms[b] += c;
    }
    return out;
}

Poly& Poly::add(const Poly& other, Cplx scale)
{
    for (const auto& [a, c] : other.terms) {
        terms[a] += scale * c;
        if (terms[a] == Cplx(0))
            terms.erase(a);
    }
    return *this;
}

PrepotentialModel::PrepotentialModel(int n, Poly prepotential,
                                     std::vector<CVec> suggested)
    : n_(n), Q_(SymplecticForm::standard(n)), P_(std::move(prepotential)),
      suggested_(std::move(suggested))
{
    if (P_.nvars != n_)
        throw structure_error("PrepotentialModel: prepotential variable count "
                              "does not match n");

    // Omega = (1, t^i, 2P - t^m d_m P, d_i P)
    components_.push_back(Poly::constant(n_, Cplx(1)));
    for (int i = 0; i < n_; ++i)
        components_.push_back(Poly::variable(n_, i));
    Poly euler = P_;
    euler.add(P_, Cplx(1)); // 2P
    for (int m = 0; m < n_; ++m)
        euler.add(P_.deriv(m).mul_variable(m), Cplx(-1));
    components_.push_back(euler);
    for (int i = 0; i < n_; ++i)
        components_.push_back(P_.deriv(i));

    alphas_ = all_midx(n_, 4);
    derivs_.resize(components_.size());
    for (size_t c = 0; c < components_.size(); ++c) {
        derivs_[c].reserve(alphas_.size());
        for (const MIdx& a : alphas_) {
            Poly d = components_[c];
            for (int v = 0; v < n_; ++v)
                for (int k = 0; k < a[static_cast<size_t>(v)]; ++k)
                    d = d.deriv(v);
            derivs_[c].push_back(std::move(d));
        }
    }

    if (suggested_.empty()) {
        CVec p(static_cast<size_t>(n_), Cplx(0, 1));
        suggested_.push_back(p);
    }
}

CVec PrepotentialModel::omega(const CVec& t) const
{
    CVec out(static_cast<size_t>(dim()));
    for (size_t c = 0; c < components_.size(); ++c)
        out[c] = components_[c].eval(t);
    return out;
}

Real PrepotentialModel::local_scale(const CVec& t) const
{
    // stay clear of the positivity wall; the models bundled here degenerate
    // when some Im t_i reaches 0
    Real s = 1.0;
    for (const Cplx& z : t)
        s = std::min(s, std::max(std::abs(z.imag()) * 0.5, 0.05));
    return s;
}

PeriodJet PrepotentialModel::jet(const CVec& t, int order) const
{
    if (static_cast<int>(t.size()) != n_)
        throw domain_error("PrepotentialModel::jet: wrong point dimension");
    if (order > 4)
        throw domain_error("PrepotentialModel::jet: order <= 4 supported");
    for (const Cplx& z : t)
        if (std::abs(z) > analyticity_radius(t))
            throw domain_error("PrepotentialModel::jet: point outside domain");

    PeriodJet out;
    out.point = t;
    out.order = order;
    out.Q = &Q_;
    out.jet.nvars = n_;
    out.jet.order = order;
    out.jet.vec_len = static_cast<size_t>(dim());
    for (size_t ai = 0; ai < alphas_.size(); ++ai) {
        const MIdx& a = alphas_[ai];
        if (midx_order(a) > order)
            continue;
        CVec v(out.jet.vec_len);
        for (size_t c = 0; c < components_.size(); ++c)
            v[c] = derivs_[c][ai].eval(t);
        out.jet.d.emplace(a, std::move(v));
    }
    return out;
}

PeriodJet prepotential_periods(const PrepotentialModel& model, const CVec& t,
                               int order)
{
    return model.jet(t, order);
}

} // namespace cym
