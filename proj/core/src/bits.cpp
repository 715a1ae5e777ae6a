#include "ortholog/bits.hpp"

#include <algorithm>

namespace ortholog {

Bits::Bits(std::size_t width, bool value)
    : width_(width), words_((width + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
  trim();
}

void Bits::trim() noexcept {
  const std::size_t tail = width_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

std::size_t Bits::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bits::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Bits::all() const noexcept { return count() == width_; }

bool Bits::is_subset_of(const Bits& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Bits::intersects(const Bits& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Bits& Bits::operator&=(const Bits& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bits& Bits::operator|=(const Bits& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bits& Bits::operator-=(const Bits& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Bits Bits::operator~() const {
  Bits out = *this;
  for (Word& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const Bits& a, const Bits& b) noexcept {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Bits::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return width_;
}

std::vector<std::size_t> Bits::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Bits::hash() const noexcept {
  // splitmix-style mixing over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  for (Word w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace ortholog
