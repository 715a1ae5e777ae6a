#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ortholog/bits.hpp"
#include "ortholog/lattice.hpp"

namespace ortholog {

// Dense index of a tuple in a ProductPoset carrier. Index 0 is always the
// identified bottom.
using TupleId = int;

// Either the identified bottom (no components) or a vector of nonzero
// factor elements.
struct PTuple {
  std::vector<Elem> components;

  [[nodiscard]] bool is_bottom() const noexcept { return components.empty(); }
  friend bool operator==(const PTuple&, const PTuple&) = default;
};

struct ProductOptions {
  std::size_t max_carrier = 4096;
};

// The product of a finite family of logics with every tuple that has a
// zero component collapsed to a single bottom. Ordered componentwise.
class ProductPoset {
 public:
  [[nodiscard]] const std::vector<OrthoLattice>& factors() const noexcept { return factors_; }
  [[nodiscard]] const OrthoLattice& factor(int alpha) const { return factors_[static_cast<std::size_t>(alpha)]; }
  [[nodiscard]] int kappa() const noexcept { return static_cast<int>(factors_.size()); }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(tuples_.size()); }

  [[nodiscard]] TupleId bottom() const noexcept { return 0; }
  [[nodiscard]] TupleId top() const noexcept { return top_; }

  [[nodiscard]] const PTuple& tuple(TupleId t) const { return tuples_[idx(t)]; }
  // Component at alpha; the factor bottom for the identified bottom.
  [[nodiscard]] Elem component(TupleId t, int alpha) const;

  // Collapses any vector with a factor-bottom component; throws
  // UnknownLabel on out-of-range or wrongly sized input.
  [[nodiscard]] TupleId make(const std::vector<Elem>& components) const;
  [[nodiscard]] TupleId id_of(const PTuple& t) const { return make(t.components); }

  [[nodiscard]] bool leq(TupleId a, TupleId b) const { return down_[idx(b)].test(idx(a)); }
  // Principal down-set and up-set.
  [[nodiscard]] const Bits& down(TupleId t) const { return down_[idx(t)]; }
  [[nodiscard]] const Bits& up(TupleId t) const { return up_[idx(t)]; }

  [[nodiscard]] TupleId meet(TupleId a, TupleId b) const;

  // i_alpha(a): a at alpha, factor top elsewhere.
  [[nodiscard]] TupleId embed(int alpha, Elem a) const;

  // "(a,1)" style label; "bottom" for the identified bottom.
  [[nodiscard]] std::string label(TupleId t) const;

  [[nodiscard]] Bits empty_set() const { return Bits(tuples_.size()); }
  [[nodiscard]] Bits full_set() const { return Bits(tuples_.size(), true); }

  friend ProductPoset build_product(std::vector<OrthoLattice> factors, const ProductOptions& options);

 private:
  static std::size_t idx(TupleId t) { return static_cast<std::size_t>(t); }

  std::vector<OrthoLattice> factors_;
  std::vector<PTuple> tuples_;
  // position of each factor element among that factor's nonzero elements
  std::vector<std::vector<int>> position_;
  std::vector<std::size_t> stride_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  TupleId top_ = 0;
};

// Throws CarrierTooLarge (with the projected size) and SpecFormat for an
// empty family.
ProductPoset build_product(std::vector<OrthoLattice> factors, const ProductOptions& options = {});

// Projected carrier size 1 + Π(|E_α| - 1), saturating at SIZE_MAX.
std::size_t projected_carrier_size(const std::vector<OrthoLattice>& factors);

}  // namespace ortholog
