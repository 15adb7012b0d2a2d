#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cym/models/symplectic.hpp"
#include "cym/numeric/scalar.hpp"
#include "cym/wp/period_jet.hpp"

namespace cym {

// A concrete family of period vectors: holomorphic evaluator t -> Omega(t)
// in C^{2n+2} plus the polarization.  Implementations provide analytic jets
// where possible; the base class falls back to nested Cauchy quadrature over
// the evaluator.
class FamilyModel {
public:
    virtual ~FamilyModel() = default;

    virtual int n() const = 0;
    int dim() const { return 2 * n() + 2; }
    virtual const SymplecticForm& Q() const = 0;
    virtual std::string kind() const = 0;

    virtual CVec omega(const CVec& t) const = 0;

    // radius of guaranteed analyticity of the evaluator around t
    virtual Real analyticity_radius(const CVec& t) const = 0;

    // length scale for finite-difference grids around t (stays inside the
    // valid neighbourhood); defaults to a capped analyticity radius
    virtual Real local_scale(const CVec& t) const;

    // all holomorphic derivatives to `order` (<= 4); default implementation
    // nests contour quadrature and records a permutation cross-check in
    // PeriodJet::build_residual
    virtual PeriodJet jet(const CVec& t, int order) const;

    // canonical valid points, used by verify-style drivers when the caller
    // supplies none
    virtual std::vector<CVec> suggested_points() const = 0;

protected:
    PeriodJet quadrature_jet(const CVec& t, int order, int nodes = 64) const;
};

// Report-only validation of the polarized-variation axioms at sample points.
struct ValidationPoint {
    CVec t;
    Real norm = 0;              // sqrt(-1) Q(Omega, conj Omega)
    Real min_metric_eig = 0;    // smallest eigenvalue of g
    Real transversality1 = 0;   // max_i |Q(Omega, d_i Omega)|
    Real transversality2 = 0;   // max_ij |Q(Omega, d_i d_j Omega)|
    bool positive = false;
    bool metric_positive = false;
};

struct ValidationReport {
    long long q_antisymmetry = 0;
    std::vector<ValidationPoint> points;
    Real max_transversality1 = 0;
    Real max_transversality2 = 0;
    Real min_norm = 0;
    Real min_metric_eig = 0;
    bool all_valid = false;
};

ValidationReport validate_model(const FamilyModel& model,
                                const std::vector<CVec>& sample_points);

} // namespace cym
