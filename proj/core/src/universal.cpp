#include "ortholog/universal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ortholog/error.hpp"
#include "ortholog/rng.hpp"

namespace ortholog {

std::shared_ptr<const DownsetEngine> make_engine(std::vector<OrthoLattice> factors, const ProductOptions& product,
                                                 const EngineOptions& engine) {
  auto poset = std::make_shared<const ProductPoset>(build_product(std::move(factors), product));
  return std::make_shared<const DownsetEngine>(std::move(poset), engine);
}

UniversalLogic UniversalLogic::from_carrier(std::shared_ptr<const DownsetEngine> engine,
                                            std::vector<DownSet> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  UniversalLogic u;
  u.engine_ = std::move(engine);
  u.carrier_ = std::move(carrier);
  u.index_.reserve(u.carrier_.size());
  for (std::size_t i = 0; i < u.carrier_.size(); ++i) u.index_.emplace(u.carrier_[i], static_cast<int>(i));
  return u;
}

std::optional<int> UniversalLogic::find(const DownSet& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int UniversalLogic::index_of(const DownSet& x) const {
  if (auto i = find(x)) return *i;
  throw Error(ErrorKind::NotInCarrier, describe(x) + " is not a member of the universal logic");
}

int UniversalLogic::bottom() const { return index_of(engine_->bottom()); }

int UniversalLogic::top() const { return index_of(engine_->top()); }

int UniversalLogic::meet(int x, int y) const { return index_of(engine_->dmeet(element(x), element(y))); }

int UniversalLogic::star(int x) const { return index_of(engine_->star(element(x))); }

int UniversalLogic::coproduct(int x, int y) const {
  return index_of(engine_->closure(engine_->djoin(element(x), element(y))));
}

int UniversalLogic::coproduct(std::span<const int> xs) const {
  Bits acc = poset().empty_set();
  acc.set(0);
  for (int x : xs) acc |= element(x).bits();
  return index_of(engine_->closure(DownSet(std::move(acc))));
}

int UniversalLogic::meet(std::span<const int> xs) const {
  Bits acc = poset().full_set();
  for (int x : xs) acc &= element(x).bits();
  return index_of(DownSet(std::move(acc)));
}

DownSet UniversalLogic::coproduct(std::span<const DownSet> xs) const {
  for (const auto& x : xs) (void)index_of(x);
  DownSet out = engine_->closure(engine_->djoin(xs));
  (void)index_of(out);
  return out;
}

OrthoLattice UniversalLogic::as_lattice(const std::string& name, std::size_t max_elements) const {
  const std::size_t n = carrier_.size();
  if (n > max_elements) {
    throw Error(ErrorKind::CarrierTooLarge, "carrier of " + std::to_string(n) + " members exceeds " +
                                                std::to_string(max_elements) + " for lattice export");
  }
  std::vector<std::string> labels;
  std::vector<Bits> up(n, Bits(n));
  std::vector<Elem> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(describe(carrier_[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (carrier_[i].bits().is_subset_of(carrier_[j].bits())) up[i].set(j);
    }
    ortho[i] = star(static_cast<int>(i));
  }
  return OrthoLattice::from_order(name, std::move(labels), std::move(up), std::move(ortho));
}

std::string UniversalLogic::describe(const DownSet& x) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : engine_->antichain_labels(x)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

nlohmann::json UniversalLogic::export_antichains() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : carrier_) out.push_back(engine_->antichain_labels(x));
  return out;
}

UniversalLogic enumerate_universal(std::shared_ptr<const DownsetEngine> engine, const UniversalOptions& options) {
  const auto& p = engine->poset();
  std::vector<DownSet> generators;
  std::unordered_set<DownSet, DownSetHash> seen;
  std::deque<DownSet> queue;
  auto admit = [&](DownSet d) {
    if (seen.contains(d)) return;
    if (seen.size() >= options.limit) {
      throw Error(ErrorKind::UniversalTooLarge, "meet-closure exceeded " + std::to_string(options.limit) +
                                                    " members (reached " + std::to_string(seen.size()) + ")");
    }
    seen.insert(d);
    queue.push_back(std::move(d));
  };
  for (TupleId t = 0; t < p.size(); ++t) {
    const auto& g = engine->star_singleton(t);
    if (!seen.contains(g)) generators.push_back(g);
    admit(g);
  }
  // Every member is an intersection of generators, so intersecting each new
  // member with every generator reaches the fixpoint.
  while (!queue.empty()) {
    DownSet x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) admit(engine->dmeet(x, g));
  }
  return UniversalLogic::from_carrier(std::move(engine), {seen.begin(), seen.end()});
}

namespace {

std::vector<int> random_subset(Rng& rng, int n, int max_size) {
  const auto k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size) + 1));
  std::vector<int> out;
  for (int i = 0; i < k; ++i) out.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
  return out;
}

std::string describe_list(const UniversalLogic& u, const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ", ";
    out += u.describe(xs[i]);
  }
  return out + "]";
}

}  // namespace

Report verify_logic_axioms(const UniversalLogic& u, const VerifyOptions& options) {
  const auto& eng = u.engine();
  const auto& p = u.poset();
  const int n = u.size();
  Report report;
  report.title = "logic axioms";
  report.seed = options.seed;
  report.details["carrier"] = n;
  Rng rng(options.seed);
  const DownSet bottom = eng.bottom();
  const DownSet top = eng.top();

  {
    LawCheck law(report, "carrier_closed", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      const auto& x = u.element(i);
      if (!law.expect(eng.closure(x) == x, [&] { return u.describe(x) + " is not **-closed"; })) break;
    }
  }
  {
    LawCheck law(report, "contains_bounds", CheckMode::Exhaustive);
    law.expect(u.find(bottom).has_value(), [] { return std::string("{0̂} missing"); });
    law.expect(u.find(top).has_value(), [] { return std::string("full carrier missing"); });
  }
  {
    LawCheck law(report, "contains_letters", CheckMode::Exhaustive);
    for (TupleId t = 0; t < p.size(); ++t) {
      if (!law.expect(u.find(eng.principal(t)).has_value(),
                      [&] { return "principal of " + p.label(t) + " missing"; })) {
        break;
      }
    }
  }
  {
    LawCheck law(report, "closed_under_star", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      const auto s = eng.star(u.element(i));
      if (!law.expect(u.find(s).has_value(),
                      [&] { return "star of " + u.describe(i) + " = " + u.describe(s) + " not in carrier"; })) {
        break;
      }
    }
  }
  {
    LawCheck law(report, "star_involution", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      const auto& x = u.element(i);
      if (!law.expect(eng.star(eng.star(x)) == x, [&] { return u.describe(x) + " != x**"; })) break;
    }
  }
  {
    LawCheck law(report, "meet_complement", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      const auto& x = u.element(i);
      if (!law.expect(eng.dmeet(x, eng.star(x)) == bottom,
                      [&] { return "x = " + u.describe(x) + ": x ∧ x* != 0̂"; })) {
        break;
      }
    }
  }
  {
    LawCheck law(report, "coproduct_complement", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      const auto& x = u.element(i);
      if (!law.expect(eng.closure(eng.djoin(x, eng.star(x))) == top,
                      [&] { return "x = " + u.describe(x) + ": x ∐ x* != 1̂"; })) {
        break;
      }
    }
  }

  const bool exhaustive = n <= options.exhaustive_threshold;
  const CheckMode pair_mode = exhaustive ? CheckMode::Exhaustive : CheckMode::Sampled;
  std::vector<std::pair<int, int>> pairs;
  if (exhaustive) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
    }
  } else {
    for (int s = 0; s < options.pair_samples; ++s) {
      pairs.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                         static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    }
  }
  {
    LawCheck law(report, "closed_under_meet", pair_mode);
    for (const auto& [i, j] : pairs) {
      const auto m = eng.dmeet(u.element(i), u.element(j));
      if (!law.expect(u.find(m).has_value(), [&] {
            return u.describe(i) + " ∧ " + u.describe(j) + " = " + u.describe(m) + " not in carrier";
          })) {
        break;
      }
    }
  }
  {
    LawCheck law(report, "star_order_reversing", pair_mode);
    for (const auto& [i, j] : pairs) {
      const auto& x = u.element(i);
      const auto& y = u.element(j);
      const bool ok = !eng.dleq(x, y) || eng.dleq(eng.star(y), eng.star(x));
      if (!law.expect(ok, [&] { return u.describe(x) + " <= " + u.describe(y) + " but stars not reversed"; })) {
        break;
      }
    }
  }

  // Infinite De Morgan laws on random finite subsets.
  std::vector<std::vector<int>> subsets;
  for (int s = 0; s < options.subsets; ++s) subsets.push_back(random_subset(rng, n, 6));
  {
    LawCheck law(report, "de_morgan_coproduct", CheckMode::Sampled);
    for (const auto& s : subsets) {
      std::vector<DownSet> members;
      std::vector<DownSet> stars;
      for (int i : s) {
        members.push_back(u.element(i));
        stars.push_back(eng.star(u.element(i)));
      }
      const auto lhs = eng.star(eng.closure(eng.djoin(members)));
      const auto rhs = eng.dmeet(stars);
      if (!law.expect(lhs == rhs, [&] { return "S = " + describe_list(u, s) + ": (∐S)* != ∧S*"; })) break;
    }
  }
  {
    LawCheck law(report, "de_morgan_meet", CheckMode::Sampled);
    for (const auto& s : subsets) {
      std::vector<DownSet> members;
      std::vector<DownSet> stars;
      for (int i : s) {
        members.push_back(u.element(i));
        stars.push_back(eng.star(u.element(i)));
      }
      const auto lhs = eng.star(eng.dmeet(members));
      const auto rhs = eng.closure(eng.djoin(stars));
      if (!law.expect(lhs == rhs, [&] { return "S = " + describe_list(u, s) + ": (∧S)* != ∐S*"; })) break;
    }
  }
  return report;
}

std::vector<int> check_u1_iso(const UniversalLogic& u) {
  const auto& p = u.poset();
  if (p.kappa() != 1) throw Error(ErrorKind::IsoFailure, "the U_1 isomorphism needs a single factor");
  const auto& e = p.factor(0);
  const auto& eng = u.engine();
  const int n = e.size();
  if (u.size() != n) {
    throw Error(ErrorKind::IsoFailure, "carrier has " + std::to_string(u.size()) + " members but E has " +
                                           std::to_string(n) + " elements");
  }
  std::vector<int> map(static_cast<std::size_t>(n));
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Elem a = 0; a < n; ++a) {
    auto idx = u.find(eng.principal(p.embed(0, a)));
    if (!idx) throw Error(ErrorKind::IsoFailure, "principal of " + e.label(a) + " is not in the carrier");
    if (hit[static_cast<std::size_t>(*idx)]) {
      throw Error(ErrorKind::IsoFailure, "two elements map to " + u.describe(*idx));
    }
    hit[static_cast<std::size_t>(*idx)] = true;
    map[static_cast<std::size_t>(a)] = *idx;
  }
  for (Elem a = 0; a < n; ++a) {
    const int fa = map[static_cast<std::size_t>(a)];
    if (eng.star(u.element(fa)) != u.element(map[static_cast<std::size_t>(e.ortho(a))])) {
      throw Error(ErrorKind::IsoFailure, "star does not match ortho at " + e.label(a));
    }
    for (Elem b = 0; b < n; ++b) {
      if (e.leq(a, b) != u.leq(fa, map[static_cast<std::size_t>(b)])) {
        throw Error(ErrorKind::IsoFailure, "order not preserved at (" + e.label(a) + ", " + e.label(b) + ")");
      }
    }
  }
  return map;
}

std::vector<int> check_u1_iso(const OrthoLattice& e, const UniversalOptions& options) {
  return check_u1_iso(enumerate_universal(make_engine({e}), options));
}

bool is_distributivity_witness(const UniversalLogic& u, int a, int b, int c) {
  const auto& eng = u.engine();
  const auto& x = u.element(a);
  const auto lhs = eng.dmeet(x, eng.closure(eng.djoin(u.element(b), u.element(c))));
  const auto rhs = eng.closure(eng.djoin(eng.dmeet(x, u.element(b)), eng.dmeet(x, u.element(c))));
  return lhs != rhs;
}

UniversalDistributivity is_distributive_universal(const UniversalLogic& u, const DistributivityOptions& options) {
  UniversalDistributivity out;
  const int n = u.size();
  if (n <= options.exhaustive_threshold) {
    out.mode = CheckMode::Exhaustive;
    const auto sz = static_cast<std::size_t>(n);
    std::vector<int> meet(sz * sz);
    std::vector<int> cop(sz * sz);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        meet[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] = u.meet(i, j);
        cop[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] = u.coproduct(i, j);
      }
    }
    auto m = [&](int i, int j) { return meet[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)]; };
    auto c = [&](int i, int j) { return cop[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)]; };
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int cc = 0; cc < n; ++cc) {
          ++out.checked;
          if (m(a, c(b, cc)) != c(m(a, b), m(a, cc))) {
            out.distributive = false;
            out.witness = std::array<int, 3>{a, b, cc};
            return out;
          }
        }
      }
    }
    return out;
  }
  out.mode = CheckMode::Sampled;
  Rng rng(options.seed);
  const auto un = static_cast<std::uint64_t>(n);
  for (std::uint64_t s = 0; s < options.triple_samples; ++s) {
    const auto a = static_cast<int>(rng.below(un));
    const auto b = static_cast<int>(rng.below(un));
    const auto c = static_cast<int>(rng.below(un));
    ++out.checked;
    if (is_distributivity_witness(u, a, b, c)) {
      out.distributive = false;
      out.witness = std::array<int, 3>{a, b, c};
      return out;
    }
  }
  return out;
}

Report verify_p_algebra(const UniversalLogic& u, const PAlgebraOptions& options) {
  const auto& eng = u.engine();
  const auto& p = u.poset();
  Report report;
  report.title = "p-algebra";
  report.seed = options.seed;
  bool factors_distributive = true;
  for (const auto& f : p.factors()) factors_distributive = factors_distributive && is_distributive(f).distributive;
  report.details["factors_distributive"] = factors_distributive;

  Rng rng(options.seed);
  std::vector<std::pair<DownSet, DownSet>> pairs;
  const auto np = static_cast<std::uint64_t>(p.size());
  if (np * np <= options.letter_pair_cap) {
    for (TupleId s = 0; s < p.size(); ++s) {
      for (TupleId t = 0; t < p.size(); ++t) pairs.emplace_back(eng.principal(s), eng.principal(t));
    }
  }
  for (int s = 0; s < options.samples; ++s) {
    auto x = eng.random_downset(rng);
    auto y = eng.random_downset(rng);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  auto show = [&](const DownSet& d) { return u.describe(d); };
  const DownSet bottom = eng.bottom();
  {
    LawCheck law(report, "pseudo_complement_meet", CheckMode::Sampled);
    for (const auto& [x, y] : pairs) {
      const auto lhs = eng.dmeet(x, eng.star(eng.dmeet(x, y)));
      const auto rhs = eng.dmeet(x, eng.star(y));
      if (!law.expect(lhs == rhs, [&] {
            return "x = " + show(x) + ", y = " + show(y) + ": x ∧ (x ∧ y)* = " + show(lhs) + " but x ∧ y* = " +
                   show(rhs);
          })) {
        break;
      }
    }
  }
  {
    LawCheck law(report, "pseudo_complement_zero", CheckMode::Sampled);
    const auto zero_star = eng.star(bottom);
    for (const auto& [x, y] : pairs) {
      (void)y;
      if (!law.expect(eng.dmeet(x, zero_star) == x, [&] { return "x = " + show(x) + ": x ∧ 0̂* != x"; })) break;
    }
  }
  {
    LawCheck law(report, "zero_closed", CheckMode::Exhaustive);
    law.expect(eng.closure(bottom) == bottom, [] { return std::string("0̂** != 0̂"); });
  }
  if (factors_distributive) {
    LawCheck law(report, "infinite_distributive", CheckMode::Sampled);
    const int n = u.size();
    for (int s = 0; s < options.samples; ++s) {
      const auto z = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const auto xs = random_subset(rng, n, 5);
      std::vector<DownSet> members;
      std::vector<DownSet> meets;
      for (int i : xs) {
        members.push_back(u.element(i));
        meets.push_back(eng.dmeet(u.element(z), u.element(i)));
      }
      const auto lhs = eng.dmeet(u.element(z), eng.closure(eng.djoin(members)));
      const auto rhs = eng.closure(eng.djoin(meets));
      if (!law.expect(lhs == rhs, [&] {
            return "z = " + u.describe(z) + ", xs = " + describe_list(u, xs) + ": z ∧ ∐x != ∐(z ∧ x)";
          })) {
        break;
      }
    }
  } else {
    auto& skipped = report.add("infinite_distributive", CheckMode::Skipped);
    skipped.witness = "not checked: some factor is not distributive";
  }
  return report;
}

}  // namespace ortholog
