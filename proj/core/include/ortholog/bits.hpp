#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ortholog {

// Fixed-width bit vector over a dense index range. All binary operations
// require operands of equal width.
class Bits {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bits() = default;
  explicit Bits(std::size_t width, bool value = false);

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }

  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool none() const noexcept;
  [[nodiscard]] bool all() const noexcept;

  // Subset test: every bit of *this is set in `other`.
  [[nodiscard]] bool is_subset_of(const Bits& other) const noexcept;
  [[nodiscard]] bool intersects(const Bits& other) const noexcept;

  Bits& operator&=(const Bits& other) noexcept;
  Bits& operator|=(const Bits& other) noexcept;
  Bits& operator-=(const Bits& other) noexcept;
  [[nodiscard]] Bits operator~() const;

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  friend bool operator==(const Bits&, const Bits&) = default;

  // Numeric order: bit i has weight 2^i, so the empty set sorts first and
  // the full set last.
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) noexcept;

  // Visits set bits in increasing index order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        f(w * kWordBits + bit);
        word &= word - 1;
      }
    }
  }

  // Index of the lowest set bit, or width() when empty.
  [[nodiscard]] std::size_t first() const noexcept;

  [[nodiscard]] std::vector<std::size_t> indices() const;

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  void trim() noexcept;

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return b.hash(); }
};

}  // namespace ortholog

template <>
struct std::hash<ortholog::Bits> {
  std::size_t operator()(const ortholog::Bits& b) const noexcept { return b.hash(); }
};
