#include "ortholog/downset.hpp"

#include <functional>

#include "ortholog/error.hpp"

namespace ortholog {

namespace {

// Number of functions from a domain of `n` points to `base` values, or
// nullopt when it exceeds `cap`.
std::optional<std::uint64_t> power_capped(std::uint64_t base, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && total > cap / base) return std::nullopt;
    total *= base;
  }
  return total > cap ? std::nullopt : std::optional<std::uint64_t>(total);
}

// Advances mixed-radix digits; false after the last combination.
bool next_choice(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t j = digits.size(); j-- > 0;) {
    if (++digits[j] < radix[j]) return true;
    digits[j] = 0;
  }
  return false;
}

}  // namespace

DownsetEngine::DownsetEngine(std::shared_ptr<const ProductPoset> poset, EngineOptions options)
    : poset_(std::move(poset)), options_(options) {
  const auto& p = *poset_;
  star_single_.reserve(static_cast<std::size_t>(p.size()));
  for (TupleId t = 0; t < p.size(); ++t) {
    Bits acc = p.empty_set();
    for (int alpha = 0; alpha < p.kappa(); ++alpha) {
      const Elem c = p.factor(alpha).ortho(p.component(t, alpha));
      acc |= p.down(p.embed(alpha, c));
    }
    star_single_.emplace_back(std::move(acc));
  }
}

DownSet DownsetEngine::bottom() const { return principal(poset_->bottom()); }

DownSet DownsetEngine::top() const { return DownSet(poset_->full_set()); }

DownSet DownsetEngine::principal(TupleId t) const { return DownSet(poset_->down(t)); }

bool DownsetEngine::is_downset(const Bits& bits) const {
  if (bits.width() != static_cast<std::size_t>(poset_->size()) || !bits.test(0)) return false;
  bool ok = true;
  bits.for_each([&](std::size_t t) {
    if (ok && !poset_->down(static_cast<TupleId>(t)).is_subset_of(bits)) ok = false;
  });
  return ok;
}

DownSet DownsetEngine::from_bits(Bits bits) const {
  if (!is_downset(bits)) throw Error(ErrorKind::InvalidAntichain, "bit vector is not a nonempty down-set");
  return DownSet(std::move(bits));
}

DownSet DownsetEngine::djoin(std::span<const DownSet> xs) const {
  Bits acc = poset_->empty_set();
  acc.set(0);
  for (const auto& x : xs) acc |= x.bits();
  return DownSet(std::move(acc));
}

DownSet DownsetEngine::dmeet(std::span<const DownSet> xs) const {
  Bits acc = poset_->full_set();
  for (const auto& x : xs) acc &= x.bits();
  return DownSet(std::move(acc));
}

DownSet DownsetEngine::djoin(const DownSet& x, const DownSet& y) const { return DownSet(x.bits() | y.bits()); }

DownSet DownsetEngine::dmeet(const DownSet& x, const DownSet& y) const { return DownSet(x.bits() & y.bits()); }

DownSet DownsetEngine::dmeet_choicefn(std::span<const DownSet> xs) const {
  if (xs.empty()) return top();
  std::vector<std::vector<TupleId>> letters;
  std::vector<std::size_t> radix;
  std::uint64_t total = 1;
  for (const auto& x : xs) {
    letters.push_back(maximals(x).members);
    radix.push_back(letters.back().size());
    if (total > options_.max_expansion / radix.back()) {
      throw Error(ErrorKind::ExpansionTooLarge, "infimum expansion exceeds " +
                                                    std::to_string(options_.max_expansion));
    }
    total *= radix.back();
  }
  Bits acc = poset_->empty_set();
  acc.set(0);
  std::vector<std::size_t> digits(xs.size(), 0);
  do {
    TupleId t = poset_->top();
    for (std::size_t j = 0; j < xs.size(); ++j) t = poset_->meet(t, letters[j][digits[j]]);
    acc |= poset_->down(t);
  } while (next_choice(digits, radix));
  return DownSet(std::move(acc));
}

bool DownsetEngine::dleq(const DownSet& x, const DownSet& y) const { return x.bits().is_subset_of(y.bits()); }

Antichain DownsetEngine::maximals(const DownSet& x) const {
  Antichain out;
  x.bits().for_each([&](std::size_t t) {
    const Bits above = poset_->up(static_cast<TupleId>(t)) & x.bits();
    if (above.count() == 1) out.members.push_back(static_cast<TupleId>(t));
  });
  return out;
}

DownSet DownsetEngine::down_closure(const Antichain& a) const {
  if (a.members.empty()) throw Error(ErrorKind::InvalidAntichain, "empty antichain");
  for (TupleId t : a.members) {
    if (t < 0 || t >= poset_->size()) throw Error(ErrorKind::InvalidAntichain, "tuple index out of range");
  }
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    for (std::size_t j = 0; j < a.members.size(); ++j) {
      if (i != j && poset_->leq(a.members[i], a.members[j])) {
        throw Error(ErrorKind::InvalidAntichain, poset_->label(a.members[i]) + " <= " +
                                                     poset_->label(a.members[j]));
      }
    }
  }
  return down_closure_of(a.members);
}

DownSet DownsetEngine::down_closure_of(std::span<const TupleId> letters) const {
  Bits acc = poset_->empty_set();
  acc.set(0);
  for (TupleId t : letters) acc |= poset_->down(t);
  return DownSet(std::move(acc));
}

const DownSet& DownsetEngine::star_singleton(TupleId t) const { return star_single_[static_cast<std::size_t>(t)]; }

DownSet DownsetEngine::star(const DownSet& x) const {
  Bits acc = poset_->full_set();
  for (TupleId t : maximals(x).members) acc &= star_single_[static_cast<std::size_t>(t)].bits();
  return DownSet(std::move(acc));
}

DownSet DownsetEngine::star_choicefn(const DownSet& x) const {
  const auto& p = *poset_;
  const auto letters = maximals(x).members;
  const auto kappa = static_cast<std::uint64_t>(p.kappa());
  if (!power_capped(kappa, letters.size(), options_.max_expansion)) {
    throw Error(ErrorKind::ExpansionTooLarge, std::to_string(kappa) + "^" + std::to_string(letters.size()) +
                                                  " choice functions exceed " +
                                                  std::to_string(options_.max_expansion));
  }
  std::vector<std::size_t> digits(letters.size(), 0);
  const std::vector<std::size_t> radix(letters.size(), static_cast<std::size_t>(kappa));
  Bits acc = p.empty_set();
  acc.set(0);
  std::vector<Elem> comps(static_cast<std::size_t>(p.kappa()));
  do {
    for (int alpha = 0; alpha < p.kappa(); ++alpha) comps[static_cast<std::size_t>(alpha)] = p.factor(alpha).top();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const auto alpha = static_cast<int>(digits[i]);
      const auto& f = p.factor(alpha);
      auto& slot = comps[digits[i]];
      slot = f.meet(slot, f.ortho(p.component(letters[i], alpha)));
    }
    acc |= p.down(p.make(comps));
  } while (next_choice(digits, radix));
  return DownSet(std::move(acc));
}

DownSet DownsetEngine::closure(const DownSet& x) const { return star(star(x)); }

CompleteDistributivityResult DownsetEngine::check_completely_distributive(
    const std::vector<std::vector<DownSet>>& family) const {
  CompleteDistributivityResult result;
  std::vector<std::size_t> radix;
  std::uint64_t total = 1;
  for (const auto& row : family) {
    radix.push_back(row.size());
    if (row.empty()) {
      total = 0;
      continue;
    }
    if (total > options_.max_expansion / row.size()) {
      throw Error(ErrorKind::ExpansionTooLarge, "choice functions exceed " +
                                                    std::to_string(options_.max_expansion));
    }
    total *= row.size();
  }
  result.choice_functions = total;

  DownSet meet_of_joins = top();
  DownSet join_of_meets = bottom();
  for (const auto& row : family) {
    meet_of_joins = dmeet(meet_of_joins, djoin(row));
    join_of_meets = djoin(join_of_meets, dmeet(row));
  }

  DownSet join_over_f = bottom();
  DownSet meet_over_f = top();
  if (total > 0) {
    std::vector<std::size_t> digits(family.size(), 0);
    do {
      DownSet m = top();
      DownSet j = bottom();
      for (std::size_t r = 0; r < family.size(); ++r) {
        m = dmeet(m, family[r][digits[r]]);
        j = djoin(j, family[r][digits[r]]);
      }
      join_over_f = djoin(join_over_f, m);
      meet_over_f = dmeet(meet_over_f, j);
    } while (next_choice(digits, radix));
  }
  result.meet_of_joins = meet_of_joins == join_over_f;
  result.join_of_meets = join_of_meets == meet_over_f;
  result.min_max = dleq(join_over_f, meet_of_joins);
  return result;
}

std::vector<DownSet> DownsetEngine::enumerate_all(std::size_t limit) const {
  const auto& p = *poset_;
  std::vector<DownSet> out;
  Bits forbidden = p.empty_set();
  forbidden.set(0);
  Bits current = p.empty_set();
  current.set(0);
  std::function<void(TupleId, const Bits&, const Bits&)> dfs = [&](TupleId start, const Bits& forb,
                                                                   const Bits& cur) {
    if (out.size() >= limit) {
      throw Error(ErrorKind::ExpansionTooLarge, "more than " + std::to_string(limit) + " down-sets");
    }
    out.emplace_back(cur);
    for (TupleId t = start; t < p.size(); ++t) {
      if (forb.test(static_cast<std::size_t>(t))) continue;
      dfs(t + 1, forb | p.down(t) | p.up(t), cur | p.down(t));
    }
  };
  dfs(1, forbidden, current);
  return out;
}

DownSet DownsetEngine::random_downset(Rng& rng, int max_letters) const {
  const auto k = rng.below(static_cast<std::uint64_t>(max_letters) + 1);
  std::vector<TupleId> letters;
  for (std::uint64_t i = 0; i < k; ++i) {
    letters.push_back(static_cast<TupleId>(rng.below(static_cast<std::uint64_t>(poset_->size()))));
  }
  return down_closure_of(letters);
}

std::vector<std::string> DownsetEngine::antichain_labels(const DownSet& x) const {
  std::vector<std::string> out;
  for (TupleId t : maximals(x).members) out.push_back(poset_->label(t));
  return out;
}

}  // namespace ortholog
