#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ortholog/bits.hpp"
#include "ortholog/lattice.hpp"
#include "ortholog/product.hpp"
#include "ortholog/report.hpp"
#include "ortholog/universal.hpp"

namespace ortholog {

struct ClassicalOptions {
  // Points of S^κ, one bit each.
  std::size_t max_points = 24;
  std::size_t max_members = 1U << 20;
};

// S^κ for a lattice realized as subsets of S. Point p has coordinates
// (p_1, ..., p_κ) in mixed radix, first coordinate most significant.
class GroundModel {
 public:
  // Throws MismatchedInputs without a realization, GroundTooLarge when
  // |S|^κ exceeds the cap.
  GroundModel(OrthoLattice e, int kappa, const ClassicalOptions& options = {});

  [[nodiscard]] const OrthoLattice& lattice() const noexcept { return e_; }
  [[nodiscard]] int ground_size() const noexcept { return s_; }
  [[nodiscard]] int kappa() const noexcept { return kappa_; }
  [[nodiscard]] std::size_t points() const noexcept { return points_; }

  [[nodiscard]] Bits empty() const { return Bits(points_); }
  [[nodiscard]] Bits all() const { return Bits(points_, true); }

  // a_1 × … × a_κ; the empty list is the identified bottom and maps to ∅.
  [[nodiscard]] Bits box(std::span<const Elem> components) const;
  [[nodiscard]] Bits box(const ProductPoset& p, TupleId t) const;
  // Box of arbitrary coordinate subsets of S.
  [[nodiscard]] Bits box_masks(std::span<const std::uint32_t> masks) const;

  [[nodiscard]] std::uint32_t mask(Elem a) const { return e_.realization()->masks[static_cast<std::size_t>(a)]; }
  [[nodiscard]] std::uint32_t full_mask() const noexcept { return full_; }

  // "(0,1)"
  [[nodiscard]] std::string point_label(std::size_t point) const;
  // "{(0,0),(0,1)}"; "{}" for ∅.
  [[nodiscard]] std::string describe(const Bits& set) const;

 private:
  OrthoLattice e_;
  int s_ = 0;
  int kappa_ = 0;
  std::size_t points_ = 0;
  std::uint32_t full_ = 0;
};

// The algebra generated by boxes under union, with members in numeric
// bit-vector order (∅ first, all points last).
class ClassicalAlgebra {
 public:
  [[nodiscard]] const GroundModel& ground() const noexcept { return ground_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(members_.size()); }
  [[nodiscard]] const std::vector<Bits>& members() const noexcept { return members_; }
  [[nodiscard]] const Bits& member(int i) const { return members_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::optional<int> find(const Bits& set) const;

  // Members as an ortholattice under inclusion and set complement. Throws
  // CarrierTooLarge above `max_elements`, NotInCarrier if some complement is
  // missing.
  [[nodiscard]] OrthoLattice as_lattice(const std::string& name, std::size_t max_elements = 2048) const;

  friend ClassicalAlgebra build_classical(const OrthoLattice& e, int kappa, const ClassicalOptions& options);

 private:
  explicit ClassicalAlgebra(GroundModel ground) : ground_(std::move(ground)) {}

  GroundModel ground_;
  std::vector<Bits> members_;
  std::unordered_map<Bits, int, BitsHash> index_;
};

// Union-closure of all boxes. Throws MismatchedInputs, GroundTooLarge,
// CarrierTooLarge past max_members.
ClassicalAlgebra build_classical(const OrthoLattice& e, int kappa, const ClassicalOptions& options = {});

// Closure under union, intersection and complement, bounds, box laws.
Report verify_classical(const ClassicalAlgebra& ca);

struct ExpansionOptions {
  std::uint64_t max_expansion = 1'000'000;
};

// Complement of ⋃_i box(A^i) expanded over every f: I → κ as
// ⋃_f box(∩_{f(i)=α} (a^i_α)^c). Tuples are given as factor-element lists.
// Throws ExpansionTooLarge.
Bits complement_expansion(const GroundModel& g, const std::vector<std::vector<Elem>>& boxes,
                          const ExpansionOptions& options = {});

// complement_expansion against the pointwise complement.
bool verify_complement(const ClassicalAlgebra& ca, const std::vector<std::vector<Elem>>& boxes,
                       const ExpansionOptions& options = {});

struct EpimorphismOptions {
  std::uint64_t seed = 0;
  int subsets = 200;
  // Pairwise laws run exhaustively up to this carrier size.
  int exhaustive_threshold = 512;
  int pair_samples = 20'000;
};

struct Epimorphism {
  // Image of each carrier member, by carrier index.
  std::vector<Bits> table;
  Report report;
};

// Union of the boxes of the letters of x.
Bits classical_image(const GroundModel& g, const DownsetEngine& engine, const DownSet& x);

// The map U_κ(E) → ⟨E^κ⟩ with its homomorphism checks. Throws
// MismatchedInputs when U is not built over κ copies of the ground lattice.
Epimorphism epimorphism_e(const UniversalLogic& u, const ClassicalAlgebra& ca, const EpimorphismOptions& options = {});

}  // namespace ortholog
