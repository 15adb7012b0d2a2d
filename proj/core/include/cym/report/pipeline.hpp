#pragma once

#include <limits>
#include <optional>
#include <string>

#include "cym/hodge/checks.hpp"
#include "cym/hodge/metric.hpp"
#include "cym/models/family.hpp"
#include "cym/wp/normal_frame.hpp"
#include "cym/wp/yukawa.hpp"

namespace cym {

struct PointOptions {
    CheckOptions checks;
    Real yukawa_asym_tol = 1e-8;
    int fd_levels = 3;
    Real fd_step_factor = 1e-2;
    Real fd_tol = std::numeric_limits<Real>::infinity();
    bool hodge_paths = true;       // run the Ricci-route Hodge metric too
    bool curvature_oracle = false; // finite-difference curvature cross-check
    Real hodge_paths_tol = 1e-4;
    Real curvature_oracle_tol = 1e-4;
};

// Everything the geometry layers produce at one moduli point.  `valid` is
// false when positivity or metric definiteness fails; the remaining fields
// are then partially filled and the reason recorded.
struct PointGeometry {
    CVec t;
    bool valid = false;
    std::string invalid_reason;

    Real P = 0;
    Real K = 0;
    WpGeometry wp;
    YukawaData yukawa;
    Real thm13_residual = 0;

    std::optional<NormalFrame> frame;
    std::optional<HodgeMetricResult> hodge;
    HodgeReport hodge_report;

    Real curvature_dual_rel = -1; // set when the FD oracle ran
};

PointGeometry compute_point_geometry(const FamilyModel& model, const CVec& t,
                                     const PointOptions& opts = {});

} // namespace cym
