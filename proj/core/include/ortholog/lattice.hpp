#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortholog/bits.hpp"

namespace ortholog {

using Elem = int;

// Unvalidated description of a finite orthocomplemented lattice, as read
// from a lattice-spec file or assembled in code.
struct LatticeSpec {
  std::string name;
  std::vector<std::string> elements;
  // Either cover pairs or order pairs (lower, upper); both are closed
  // reflexively and transitively during validation.
  std::vector<std::pair<std::string, std::string>> relation;
  bool relation_is_covers = true;
  // Partial maps are completed by symmetry (x -> y implies y -> x).
  std::vector<std::pair<std::string, std::string>> ortho;
};

// Realization of a Boolean lattice as subsets of a ground set {0..n-1};
// masks[e] is the subset carried by element e.
struct SubsetRealization {
  int ground_size = 0;
  std::vector<std::uint32_t> masks;
};

struct ValidateOptions {
  std::size_t max_elements = 64;
};

// Finite bounded lattice with an orthocomplementation. Immutable once built;
// every instance satisfies the ortholattice axioms.
class OrthoLattice {
 public:
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(labels_.size()); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(Elem x) const { return labels_[static_cast<std::size_t>(x)]; }

  [[nodiscard]] std::optional<Elem> find(std::string_view label) const;
  // Throws UnknownLabel.
  [[nodiscard]] Elem index_of(std::string_view label) const;

  [[nodiscard]] bool leq(Elem x, Elem y) const { return up_[idx(x)].test(idx(y)); }
  [[nodiscard]] Elem join(Elem x, Elem y) const { return join_[idx(x) * labels_.size() + idx(y)]; }
  [[nodiscard]] Elem meet(Elem x, Elem y) const { return meet_[idx(x) * labels_.size() + idx(y)]; }
  [[nodiscard]] Elem ortho(Elem x) const { return ortho_[idx(x)]; }
  [[nodiscard]] Elem bottom() const noexcept { return bottom_; }
  [[nodiscard]] Elem top() const noexcept { return top_; }

  // Principal up-set / down-set of x as bit vectors over the elements.
  [[nodiscard]] const Bits& up(Elem x) const { return up_[idx(x)]; }
  [[nodiscard]] const Bits& down(Elem x) const { return down_[idx(x)]; }

  // Pairs (lower, upper) of the Hasse diagram, in lexicographic order.
  [[nodiscard]] std::vector<std::pair<Elem, Elem>> covers() const;

  [[nodiscard]] const std::optional<SubsetRealization>& realization() const noexcept {
    return realization_;
  }

  // Same labels, order and orthocomplement (the name is ignored).
  [[nodiscard]] bool same_structure(const OrthoLattice& other) const;

  // Builds from a dense order matrix (up-sets per element) and ortho map,
  // validating everything validate() validates.
  static OrthoLattice from_order(std::string name, std::vector<std::string> labels,
                                 std::vector<Bits> up, std::vector<Elem> ortho);

  // Attaches a subset realization after checking that it is an
  // ortho-embedding into the power set of the ground set.
  [[nodiscard]] OrthoLattice with_realization(SubsetRealization realization) const;

 private:
  static std::size_t idx(Elem x) { return static_cast<std::size_t>(x); }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> ortho_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::optional<SubsetRealization> realization_;
};

// Throws NotAPoset, NotALattice, BadOrtho, UnknownLabel, SpecFormat.
OrthoLattice validate(const LatticeSpec& spec, const ValidateOptions& options = {});

struct DistributivityWitness {
  Elem a = 0;
  Elem b = 0;
  Elem c = 0;
  Elem lhs = 0;  // a ∧ (b ∨ c)
  Elem rhs = 0;  // (a ∧ b) ∨ (a ∧ c)
};

struct DistributivityResult {
  bool distributive = true;
  std::optional<DistributivityWitness> witness;
};

// First failing triple in lexicographic (a, b, c) order, if any.
DistributivityResult is_distributive(const OrthoLattice& lattice);

// a ≤ b ⇒ b = a ∨ (a' ∧ b). Diagnostic only.
bool is_orthomodular(const OrthoLattice& lattice);

enum class CatalogKind { Boolean, MO, Benzene, Chain2 };

struct CatalogOptions {
  int max_boolean = 4;
};

// Fixture lattices: Boolean 2^n (with subset realization), MO_n, the
// benzene ring O6 and the two-element chain.
OrthoLattice catalog(CatalogKind kind, int param, const CatalogOptions& options = {});

// Parses names such as "B2", "MO3", "O6", "chain2". Throws SpecFormat.
OrthoLattice catalog_by_name(std::string_view name, const CatalogOptions& options = {});

// Ortho-isomorphism lhs -> rhs, first in lexicographic search order.
std::optional<std::vector<Elem>> find_iso(const OrthoLattice& lhs, const OrthoLattice& rhs);

// Verifies that `map` is an ortho-isomorphism lhs -> rhs.
bool is_ortho_iso(const OrthoLattice& lhs, const OrthoLattice& rhs, const std::vector<Elem>& map);

std::string export_dot(const OrthoLattice& lattice);

}  // namespace ortholog
