#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "cym/models/family.hpp"

namespace cym {

// Model definition files (JSON):
//   {"type": "prepotential",   "n": ..., "coefficients": [...], ...}
//   {"type": "pf_mum",         "n": 1, "coefficients": {...}, "truncation": ...}
//   {"type": "nilpotent_orbit","n": 1, "N": [[...]], "A_series": [...],
//    "domain": {"radius": ...}}
// Also accepts the scheme "preset:<name>" in load_model_path for the bundled
// models.
std::unique_ptr<FamilyModel> load_model(std::istream& in);
std::unique_ptr<FamilyModel> load_model_path(const std::string& path);

// Serializes a bundled preset into the model-file schema.
std::string preset_to_json(const std::string& name);
void write_preset_file(const std::string& name, const std::string& path);

} // namespace cym
