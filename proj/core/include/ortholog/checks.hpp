#pragma once

#include <cstddef>
#include <cstdint>

#include "ortholog/downset.hpp"
#include "ortholog/report.hpp"

namespace ortholog {

// Law checks on the down-set lattice D itself (before restricting to U).
struct DownsetLawOptions {
  std::uint64_t seed = 0;
  // Every down-set is used when the product has at most this many tuples.
  int exhaustive_poset = 10;
  // Random down-sets otherwise.
  int samples = 1000;
  // Random families for the distributivity and infimum checks.
  int families = 200;
};

// star antitone, x*** = x*, (x ∨ y)* = x* ∧ y*, and ** inflationary,
// monotone and idempotent.
Report verify_closure_laws(const DownsetEngine& engine, const DownsetLawOptions& options = {});

// star against star_choicefn; instances past the expansion cap are counted
// in details.skipped.
Report verify_star_oracle(const DownsetEngine& engine, const DownsetLawOptions& options = {});

// Both complete distributivity identities and Min-Max on random families
// of up to 3 rows of up to 3 down-sets.
Report verify_complete_distributivity(const DownsetEngine& engine, const DownsetLawOptions& options = {});

// dmeet_choicefn against intersection: every pair and triple of an
// enumerated D when it has at most `exhaustive_limit` members, random
// families otherwise.
Report verify_infimum_formula(const DownsetEngine& engine, const DownsetLawOptions& options = {},
                              std::size_t exhaustive_limit = 64);

}  // namespace ortholog
