#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ortholog/downset.hpp"
#include "ortholog/lattice.hpp"
#include "ortholog/report.hpp"

namespace ortholog {

struct UniversalOptions {
  std::size_t limit = 100'000;
};

// Builds product + engine in one step.
std::shared_ptr<const DownsetEngine> make_engine(std::vector<OrthoLattice> factors,
                                                 const ProductOptions& product = {},
                                                 const EngineOptions& engine = {});

// The **-closed down-sets of a ProductPoset with ∧ = intersection,
// ∐ = closure of union and * = star. Carrier members are addressed by dense
// index in bit-vector order, so index 0 is {0̂} and the last index is the
// full carrier.
class UniversalLogic {
 public:
  // Wraps an arbitrary carrier without checking closure; used for negative
  // controls. Sorts and deduplicates.
  static UniversalLogic from_carrier(std::shared_ptr<const DownsetEngine> engine, std::vector<DownSet> carrier);

  [[nodiscard]] const DownsetEngine& engine() const noexcept { return *engine_; }
  [[nodiscard]] const std::shared_ptr<const DownsetEngine>& engine_ptr() const noexcept { return engine_; }
  [[nodiscard]] const ProductPoset& poset() const noexcept { return engine_->poset(); }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(carrier_.size()); }
  [[nodiscard]] const std::vector<DownSet>& carrier() const noexcept { return carrier_; }
  [[nodiscard]] const DownSet& element(int i) const { return carrier_[static_cast<std::size_t>(i)]; }

  [[nodiscard]] std::optional<int> find(const DownSet& x) const;
  // Throws NotInCarrier.
  [[nodiscard]] int index_of(const DownSet& x) const;

  [[nodiscard]] int bottom() const;
  [[nodiscard]] int top() const;

  [[nodiscard]] bool leq(int x, int y) const { return engine_->dleq(element(x), element(y)); }
  [[nodiscard]] int meet(int x, int y) const;
  [[nodiscard]] int star(int x) const;
  [[nodiscard]] int coproduct(int x, int y) const;
  [[nodiscard]] int coproduct(std::span<const int> xs) const;
  [[nodiscard]] int meet(std::span<const int> xs) const;

  // (∨ xs)**; every input must be a carrier member. Throws NotInCarrier.
  [[nodiscard]] DownSet coproduct(std::span<const DownSet> xs) const;

  // The carrier as a plain OrthoLattice (labels are antichain strings).
  // Throws CarrierTooLarge above `max_elements`.
  [[nodiscard]] OrthoLattice as_lattice(const std::string& name, std::size_t max_elements = 2048) const;

  // "{(a,1),(a',1)}"
  [[nodiscard]] std::string describe(const DownSet& x) const;
  [[nodiscard]] std::string describe(int x) const { return describe(element(x)); }

  // Antichain labels per carrier member.
  [[nodiscard]] nlohmann::json export_antichains() const;

 private:
  std::shared_ptr<const DownsetEngine> engine_;
  std::vector<DownSet> carrier_;
  std::unordered_map<DownSet, int, DownSetHash> index_;
};

// Meet-closure of the singleton stars, i.e. the image of *. Throws
// UniversalTooLarge once the fixpoint passes `options.limit`.
UniversalLogic enumerate_universal(std::shared_ptr<const DownsetEngine> engine, const UniversalOptions& options = {});

struct VerifyOptions {
  std::uint64_t seed = 0;
  // Random subsets for the infinite De Morgan laws.
  int subsets = 200;
  // Pairwise laws run exhaustively up to this carrier size.
  int exhaustive_threshold = 512;
  // Pair samples above the threshold.
  int pair_samples = 20'000;
};

// Ortholattice laws on the carrier, exhaustive or seeded-sampled.
Report verify_logic_axioms(const UniversalLogic& u, const VerifyOptions& options = {});

// a ↦ ↓a from E onto U_[1](E), checked to be an ortho-isomorphism.
// Returns the carrier index of each element of E; throws IsoFailure.
std::vector<int> check_u1_iso(const UniversalLogic& u1);
std::vector<int> check_u1_iso(const OrthoLattice& e, const UniversalOptions& options = {});

struct UniversalDistributivity {
  bool distributive = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t checked = 0;
  // (a, b, c) with a ∧ (b ∐ c) ≠ (a ∧ b) ∐ (a ∧ c)
  std::optional<std::array<int, 3>> witness;
};

struct DistributivityOptions {
  std::uint64_t seed = 0;
  // Exhaustive triple scan up to this carrier size.
  int exhaustive_threshold = 96;
  std::uint64_t triple_samples = 200'000;
};

UniversalDistributivity is_distributive_universal(const UniversalLogic& u, const DistributivityOptions& options = {});

// True iff a ∧ (b ∐ c) ≠ (a ∧ b) ∐ (a ∧ c).
bool is_distributivity_witness(const UniversalLogic& u, int a, int b, int c);

struct PAlgebraOptions {
  std::uint64_t seed = 0;
  int samples = 200;
  // Letter pairs are checked exhaustively first when |carrier|^2 is at most this.
  std::uint64_t letter_pair_cap = 1'000'000;
};

// Pseudo-complement axioms for * on the down-sets, plus the infinite
// distributive law on U when every factor is distributive.
Report verify_p_algebra(const UniversalLogic& u, const PAlgebraOptions& options = {});

}  // namespace ortholog
