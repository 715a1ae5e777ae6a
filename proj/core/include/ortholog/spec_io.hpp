#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "ortholog/lattice.hpp"

namespace ortholog {

// Lattice-spec file format (see docs/lattice-spec.md). Unknown keys, wrong
// types, and files carrying both "leq" and "covers" are rejected with
// SpecFormat.
LatticeSpec parse_lattice_spec(const nlohmann::json& doc);
LatticeSpec read_lattice_spec(const std::filesystem::path& path);

// Loads and validates in one step.
OrthoLattice load_lattice(const std::filesystem::path& path, const ValidateOptions& options = {});

// Cover-relation export; validate(parse_lattice_spec(to_json(L))) reproduces L.
nlohmann::json to_json(const OrthoLattice& lattice);

}  // namespace ortholog
