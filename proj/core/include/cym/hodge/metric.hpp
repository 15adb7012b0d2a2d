#pragma once

#include <limits>

#include "cym/models/family.hpp"
#include "cym/numeric/hessian.hpp"
#include "cym/wp/geometry.hpp"

namespace cym {

// Hodge metric h at a point, by two independent routes:
//   (a) (n+3) g + Ric(g), with Ric(g) = -d dbar log det g obtained by finite
//       differences over exact pairing-identity evaluations of g;
//   (b) the unit-gauge closed form
//       h_{i jbar} = 2 g_{i jbar}
//                    + e^{2K} g^{m nbar} g^{p qbar} F_{imp} conj(F_{jnq}).
struct HodgeMetricResult {
    CTensor h_ric;
    CTensor h_unit;
    CTensor ric;        // Ric(g), for reporting
    Real deviation = 0; // max entrywise |h_ric - h_unit|
    Real ric_fd_error = 0;
};

CTensor hodge_metric_unit_gauge(const WpGeometry& wp, const CTensor& F);

HodgeMetricResult hodge_metric(const FamilyModel& model, const CVec& t,
                               int fd_levels = 3, Real fd_step_factor = 1e-2,
                               Real fd_tol = std::numeric_limits<Real>::infinity());

} // namespace cym
