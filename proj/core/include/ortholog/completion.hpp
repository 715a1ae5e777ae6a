#pragma once

#include <optional>
#include <vector>

#include "ortholog/lattice.hpp"
#include "ortholog/report.hpp"
#include "ortholog/universal.hpp"

namespace ortholog {

// E_L: the **-closed down-sets of L itself (a one-factor product).
struct CompletionResult {
  OrthoLattice source;
  UniversalLogic completed;
  // Carrier index for each element of L; absent when no ortho-isomorphism
  // exists, which cannot happen for finite L.
  std::optional<std::vector<int>> iso;
};

CompletionResult event_space_completion(const OrthoLattice& l, const UniversalOptions& options = {});

// Size, iso and principal-embedding checks plus the logic axioms.
Report completion_report(const CompletionResult& c, std::uint64_t seed = 0);

// Lifts an ortho-isomorphism L -> L' letterwise to the completions and
// checks that the lift is an ortho-isomorphism. Non-isomorphic inputs are
// reported (details.isomorphic = false), not thrown.
Report completion_functorial(const OrthoLattice& l, const OrthoLattice& lp, const UniversalOptions& options = {});

// Distributivity of E_L against L, meets and coproducts of principal
// down-sets, and x ∐ y = (x* ∧ y*)* on the carrier.
Report completion_distributivity(const OrthoLattice& l, const UniversalOptions& options = {});

}  // namespace ortholog
