#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ortholog/classical.hpp"
#include "ortholog/lattice.hpp"
#include "ortholog/report.hpp"
#include "ortholog/universal.hpp"

namespace ortholog {

// The tensor product of a family is the universal logic over the
// heterogeneous product; with equal factors it is U_κ(E) itself.
using TensorLogic = UniversalLogic;

struct TensorOptions {
  ProductOptions product;
  EngineOptions engine;
  UniversalOptions universal;
};

TensorLogic build_tensor(std::vector<OrthoLattice> factors, const TensorOptions& options = {});

// Carrier index of i_α(a) = ↓(1,…,a,…,1). Throws NotInCarrier.
int i_alpha(const TensorLogic& tl, int alpha, Elem a);

// i_α is a logic embedding for every α: injective, bounds, ortho to star,
// pairwise and triple joins to coproducts, pairwise meets.
Report verify_i_alpha(const TensorLogic& tl);

// For every tuple A and every J ⊆ κ the join of the i_α(A(α)), α ∈ J, is
// already **-closed.
Report verify_prop_ju(const TensorLogic& tl);

struct MjOptions {
  std::uint64_t seed = 0;
  // Every subfamily is checked when the family has at most this many sets.
  int exhaustive_max_family = 12;
  int samples = 2000;
  int max_sample_size = 6;
  // Choice functions per subfamily.
  std::uint64_t max_expansion = 1'000'000;
};

struct MjResult {
  bool holds = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t subfamilies = 0;
  std::optional<std::string> witness;
};

// ∧{∨S : S ∈ T} = ∨{∧ Im f : f a choice function on T} for subfamilies T.
// Throws ExpansionTooLarge.
MjResult check_mj_distributive(const OrthoLattice& t, const std::vector<std::vector<Elem>>& family,
                               const MjOptions& options = {});

// A target logic with one embedding table per factor (factor element ->
// target element).
struct TargetPair {
  OrthoLattice target;
  std::vector<std::vector<Elem>> embeddings;
};

// {"target": <lattice spec>, "embeddings": [{"a": "x", ...}, ...]}, labels
// resolved against `factors`. Throws SpecFormat, UnknownLabel.
TargetPair parse_target_pair(const nlohmann::json& j, const std::vector<OrthoLattice>& factors);
TargetPair load_target_pair(const std::filesystem::path& path, const std::vector<OrthoLattice>& factors);

// {e_α(A(α)) : α ∈ κ} for every tuple A of the product.
std::vector<std::vector<Elem>> embedding_family(const ProductPoset& p, const TargetPair& pair);

// (i, ⊗E_α) itself; the target labels are the carrier antichains.
TargetPair identity_target(const TensorLogic& tl);

// ⟨E^κ⟩ with e_α(a) = box(i_α(a)).
TargetPair classical_target(const ClassicalAlgebra& ca);

// Embedding and meet-join distributivity checks on a target.
Report verify_target_pair(const ProductPoset& p, const TargetPair& pair, const MjOptions& options = {});

struct MorphismOptions {
  std::uint64_t seed = 0;
  int subsets = 200;
  int exhaustive_threshold = 512;
  int pair_samples = 20'000;
  MjOptions mj;
};

struct TensorMorphism {
  // Target element of each carrier member, by carrier index.
  std::vector<Elem> table;
  Report report;
};

// t(∨_i A^i) = ∨_i ∧_α e_α(A^i(α)). Throws TargetInvariantFailure when the
// target pair fails verification.
TensorMorphism universal_morphism(const TensorLogic& tl, const TargetPair& target, const MorphismOptions& options = {});

}  // namespace ortholog
