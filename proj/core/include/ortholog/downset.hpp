#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ortholog/bits.hpp"
#include "ortholog/product.hpp"
#include "ortholog/rng.hpp"

namespace ortholog {

// A nonempty down-closed subset of a ProductPoset carrier. Canonical: two
// classes of free terms are equal exactly when their down-sets are.
class DownSet {
 public:
  DownSet() = default;
  // Unchecked; use DownsetEngine::from_bits for validated construction.
  explicit DownSet(Bits bits) : bits_(std::move(bits)) {}

  [[nodiscard]] const Bits& bits() const noexcept { return bits_; }
  [[nodiscard]] bool contains(TupleId t) const { return bits_.test(static_cast<std::size_t>(t)); }
  [[nodiscard]] std::size_t size() const noexcept { return bits_.count(); }

  friend bool operator==(const DownSet&, const DownSet&) = default;
  friend std::strong_ordering operator<=>(const DownSet& a, const DownSet& b) noexcept {
    return a.bits_ <=> b.bits_;
  }

 private:
  Bits bits_;
};

struct DownSetHash {
  std::size_t operator()(const DownSet& d) const noexcept { return d.bits().hash(); }
};

// Pairwise incomparable tuples, sorted by carrier index.
struct Antichain {
  std::vector<TupleId> members;
  friend bool operator==(const Antichain&, const Antichain&) = default;
};

struct EngineOptions {
  // Cap on choice-function expansions in the brute-force oracles.
  std::uint64_t max_expansion = 1'000'000;
};

struct CompleteDistributivityResult {
  bool meet_of_joins = true;   // ∧_j ∨_i A = ∨_f ∧_j A^{f(j)}
  bool join_of_meets = true;   // ∨_j ∧_i A = ∧_f ∨_j A^{f(j)}
  bool min_max = true;         // ∨_f ∧_j A^{f(j)} ≤ ∧_j ∨_i A
  std::uint64_t choice_functions = 0;

  [[nodiscard]] bool holds() const noexcept { return meet_of_joins && join_of_meets && min_max; }
};

// Lattice operations on the down-sets of one ProductPoset. Pure and
// immutable after construction; the singleton stars are tabulated up front.
class DownsetEngine {
 public:
  explicit DownsetEngine(std::shared_ptr<const ProductPoset> poset, EngineOptions options = {});

  [[nodiscard]] const ProductPoset& poset() const noexcept { return *poset_; }
  [[nodiscard]] const std::shared_ptr<const ProductPoset>& poset_ptr() const noexcept { return poset_; }
  [[nodiscard]] const EngineOptions& options() const noexcept { return options_; }

  // {0̂} and the full carrier.
  [[nodiscard]] DownSet bottom() const;
  [[nodiscard]] DownSet top() const;

  [[nodiscard]] DownSet principal(TupleId t) const;

  [[nodiscard]] bool is_downset(const Bits& bits) const;
  // Throws InvalidAntichain when `bits` is empty or not down-closed.
  [[nodiscard]] DownSet from_bits(Bits bits) const;

  // Empty join is {0̂}, empty meet is the full carrier.
  [[nodiscard]] DownSet djoin(std::span<const DownSet> xs) const;
  [[nodiscard]] DownSet dmeet(std::span<const DownSet> xs) const;
  [[nodiscard]] DownSet djoin(const DownSet& x, const DownSet& y) const;
  [[nodiscard]] DownSet dmeet(const DownSet& x, const DownSet& y) const;

  // Meet by the choice-function infimum formula: ∨_f ∩_j A_j^{f(j)} over the
  // maximal letters of each operand. Throws ExpansionTooLarge.
  [[nodiscard]] DownSet dmeet_choicefn(std::span<const DownSet> xs) const;

  [[nodiscard]] bool dleq(const DownSet& x, const DownSet& y) const;

  [[nodiscard]] Antichain maximals(const DownSet& x) const;
  // Throws InvalidAntichain on a comparable pair or an empty list.
  [[nodiscard]] DownSet down_closure(const Antichain& a) const;
  // Down-closure of an arbitrary letter multiset ({0̂} when empty).
  [[nodiscard]] DownSet down_closure_of(std::span<const TupleId> letters) const;

  // ∨_n ↓(1,…,t_n^c,…,1).
  [[nodiscard]] const DownSet& star_singleton(TupleId t) const;
  [[nodiscard]] DownSet star(const DownSet& x) const;
  // Direct expansion over all f: maximals(x) -> κ. Throws ExpansionTooLarge.
  [[nodiscard]] DownSet star_choicefn(const DownSet& x) const;
  [[nodiscard]] DownSet closure(const DownSet& x) const;

  // Brute-force both sides of the complete distributivity identities and the
  // Min-Max inequality over every choice function of `family`.
  // Throws ExpansionTooLarge.
  [[nodiscard]] CompleteDistributivityResult check_completely_distributive(
      const std::vector<std::vector<DownSet>>& family) const;

  // Every down-set, in antichain-DFS order. Throws ExpansionTooLarge once
  // more than `limit` are found.
  [[nodiscard]] std::vector<DownSet> enumerate_all(std::size_t limit) const;

  // Down-closure of 0..max_letters random tuples.
  [[nodiscard]] DownSet random_downset(Rng& rng, int max_letters = 4) const;

  // Labels of the maximal antichain in carrier order.
  [[nodiscard]] std::vector<std::string> antichain_labels(const DownSet& x) const;

 private:
  std::shared_ptr<const ProductPoset> poset_;
  EngineOptions options_;
  std::vector<DownSet> star_single_;
};

}  // namespace ortholog
