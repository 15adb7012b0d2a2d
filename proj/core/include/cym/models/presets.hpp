#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cym/models/family.hpp"
#include "cym/models/pf_operator.hpp"

namespace cym {

// Bundled models: synthetic prepotentials, Picard-Fuchs series models at a
// maximally unipotent point, and explicit nilpotent orbits.
//   cubic            P = t^3, one modulus
//   two_moduli_cubic P = t1^3 + t2^3 + (1/2) t1 t2^2
//   quintic          theta^4 - 5z(5theta+1)(5theta+2)(5theta+3)(5theta+4)
//   theta4           pure theta^4 ladder
//   orbit_trivial    N = 0, linear A
//   orbit_rank_one   rank-one N annihilating A(0) (finite-distance limit)
//   orbit_ladder     full ladder N with a non-parallel Yukawa
std::vector<std::string> preset_names();

std::unique_ptr<FamilyModel> make_preset(const std::string& name);

// Picard-Fuchs presets expose their operator so model files can carry the
// operator rather than a frozen series.
bool preset_is_pf(const std::string& name);
PFOperator preset_operator(const std::string& name);
int preset_truncation(const std::string& name);

} // namespace cym
