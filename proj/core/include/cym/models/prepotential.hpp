#pragma once

#include <map>

#include "cym/models/family.hpp"
#include "cym/numeric/jets.hpp"

namespace cym {

// Sparse multivariate polynomial with complex coefficients.
struct Poly {
    int nvars = 0;
    std::map<MIdx, Cplx> terms;

    static Poly constant(int nvars, Cplx c);
    static Poly variable(int nvars, int i);

    Cplx eval(const CVec& t) const;
    Poly deriv(int var) const;
    Poly mul_variable(int var) const;

    Poly& add(const Poly& other, Cplx scale = Cplx(1));
};

// Special-geometry period recipe over a holomorphic prepotential P:
//   Omega = (1, t^i, 2P - t^m d_m P, d_i P) in C^{2n+2}.
// Jets are exact (analytic differentiation of the recipe).
class PrepotentialModel : public FamilyModel {
public:
    PrepotentialModel(int n, Poly prepotential,
                      std::vector<CVec> suggested = {});

    int n() const override { return n_; }
    const SymplecticForm& Q() const override { return Q_; }
    std::string kind() const override { return "prepotential"; }

    CVec omega(const CVec& t) const override;
    Real analyticity_radius(const CVec&) const override { return 10.0; }
    Real local_scale(const CVec& t) const override;
    PeriodJet jet(const CVec& t, int order) const override;
    std::vector<CVec> suggested_points() const override { return suggested_; }

    const Poly& prepotential() const { return P_; }

private:
    int n_;
    SymplecticForm Q_;
    Poly P_;
    std::vector<Poly> components_;          // 2n+2 entries
    std::vector<std::vector<Poly>> derivs_; // derivs_[c][rank of alpha in all_midx]
    std::vector<MIdx> alphas_;              // all_midx(n, 4)
    std::vector<CVec> suggested_;
};

// spec-named convenience wrapper
PeriodJet prepotential_periods(const PrepotentialModel& model, const CVec& t,
                               int order);

} // namespace cym
