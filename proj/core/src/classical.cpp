#include "ortholog/classical.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ortholog/error.hpp"
#include "ortholog/rng.hpp"

namespace ortholog {

GroundModel::GroundModel(OrthoLattice e, int kappa, const ClassicalOptions& options) : e_(std::move(e)), kappa_(kappa) {
  if (!e_.realization()) {
    throw Error(ErrorKind::MismatchedInputs, e_.name() + " has no subset realization");
  }
  if (kappa < 1) throw Error(ErrorKind::SpecFormat, "kappa must be at least 1");
  s_ = e_.realization()->ground_size;
  full_ = s_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << s_) - 1;
  std::size_t n = 1;
  for (int i = 0; i < kappa; ++i) {
    n *= static_cast<std::size_t>(std::max(s_, 1));
    if (n > options.max_points) {
      throw Error(ErrorKind::GroundTooLarge, "|S|^kappa = " + std::to_string(s_) + "^" + std::to_string(kappa) +
                                                 " exceeds " + std::to_string(options.max_points) + " points");
    }
  }
  points_ = s_ == 0 ? 0 : n;
}

Bits GroundModel::box_masks(std::span<const std::uint32_t> masks) const {
  Bits out(points_);
  for (std::size_t p = 0; p < points_; ++p) {
    std::size_t rest = p;
    bool in = true;
    for (int alpha = kappa_ - 1; alpha >= 0 && in; --alpha) {
      const auto coord = rest % static_cast<std::size_t>(s_);
      rest /= static_cast<std::size_t>(s_);
      in = ((masks[static_cast<std::size_t>(alpha)] >> coord) & 1U) != 0;
    }
    if (in) out.set(p);
  }
  return out;
}

Bits GroundModel::box(std::span<const Elem> components) const {
  if (components.empty()) return empty();
  if (components.size() != static_cast<std::size_t>(kappa_)) {
    throw Error(ErrorKind::MismatchedInputs, "tuple has " + std::to_string(components.size()) +
                                                 " components, expected " + std::to_string(kappa_));
  }
  std::vector<std::uint32_t> masks;
  for (Elem a : components) masks.push_back(mask(a));
  return box_masks(masks);
}

Bits GroundModel::box(const ProductPoset& p, TupleId t) const { return box(p.tuple(t).components); }

std::string GroundModel::point_label(std::size_t point) const {
  std::vector<std::size_t> coords(static_cast<std::size_t>(kappa_));
  for (int alpha = kappa_ - 1; alpha >= 0; --alpha) {
    coords[static_cast<std::size_t>(alpha)] = point % static_cast<std::size_t>(s_);
    point /= static_cast<std::size_t>(s_);
  }
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

std::string GroundModel::describe(const Bits& set) const {
  std::string out = "{";
  bool first = true;
  set.for_each([&](std::size_t p) {
    if (!first) out += ',';
    out += point_label(p);
    first = false;
  });
  return out + "}";
}

std::optional<int> ClassicalAlgebra::find(const Bits& set) const {
  auto it = index_.find(set);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

OrthoLattice ClassicalAlgebra::as_lattice(const std::string& name, std::size_t max_elements) const {
  const std::size_t n = members_.size();
  if (n > max_elements) {
    throw Error(ErrorKind::CarrierTooLarge,
                std::to_string(n) + " members exceed " + std::to_string(max_elements) + " for lattice export");
  }
  const Bits all = ground_.all();
  std::vector<std::string> labels;
  std::vector<Bits> up(n, Bits(n));
  std::vector<Elem> ortho;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(ground_.describe(members_[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (members_[i].is_subset_of(members_[j])) up[i].set(j);
    }
    auto c = find(all - members_[i]);
    if (!c) throw Error(ErrorKind::NotInCarrier, "complement of " + labels.back() + " is not a member");
    ortho.push_back(*c);
  }
  return OrthoLattice::from_order(name, std::move(labels), std::move(up), std::move(ortho));
}

namespace {

// Every component vector of E^κ, zeros included, in lex order.
template <typename F>
void for_each_tuple(int size, int kappa, F&& f) {
  std::vector<Elem> comps(static_cast<std::size_t>(kappa), 0);
  for (;;) {
    f(std::as_const(comps));
    int k = kappa - 1;
    while (k >= 0 && ++comps[static_cast<std::size_t>(k)] == size) comps[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
  }
}

std::string tuple_text(const OrthoLattice& e, const std::vector<Elem>& comps) {
  std::string out = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i != 0) out += ',';
    out += e.label(comps[i]);
  }
  return out + ")";
}

}  // namespace

ClassicalAlgebra build_classical(const OrthoLattice& e, int kappa, const ClassicalOptions& options) {
  ClassicalAlgebra ca{GroundModel(e, kappa, options)};
  const auto& g = ca.ground_;
  std::vector<Bits> generators;
  std::unordered_set<Bits, BitsHash> seen;
  std::deque<Bits> queue;
  auto admit = [&](Bits b) {
    if (seen.contains(b)) return;
    if (seen.size() >= options.max_members) {
      throw Error(ErrorKind::CarrierTooLarge,
                  "union-closure of boxes exceeded " + std::to_string(options.max_members) + " members");
    }
    seen.insert(b);
    queue.push_back(std::move(b));
  };
  admit(g.empty());
  for_each_tuple(e.size(), kappa, [&](const std::vector<Elem>& comps) {
    Bits b = g.box(comps);
    if (!b.none() && !seen.contains(b)) generators.push_back(b);
    admit(std::move(b));
  });
  while (!queue.empty()) {
    Bits x = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : generators) admit(x | gen);
  }
  ca.members_.assign(seen.begin(), seen.end());
  std::sort(ca.members_.begin(), ca.members_.end());
  for (std::size_t i = 0; i < ca.members_.size(); ++i) ca.index_.emplace(ca.members_[i], static_cast<int>(i));
  return ca;
}

Report verify_classical(const ClassicalAlgebra& ca) {
  const auto& g = ca.ground();
  const auto& e = g.lattice();
  Report report;
  report.title = "classical algebra";
  report.details["members"] = ca.size();
  report.details["points"] = g.points();
  const int n = ca.size();
  {
    LawCheck law(report, "contains_bounds", CheckMode::Exhaustive);
    law.expect(ca.find(g.empty()).has_value(), [] { return std::string("∅ missing"); });
    law.expect(ca.find(g.all()).has_value(), [] { return std::string("S^κ missing"); });
  }
  const Bits all = g.all();
  {
    LawCheck law(report, "closed_complement", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      if (!law.expect(ca.find(all - ca.member(i)).has_value(),
                      [&] { return "complement of " + g.describe(ca.member(i)) + " missing"; })) {
        break;
      }
    }
  }
  {
    LawCheck un(report, "closed_union", CheckMode::Exhaustive);
    LawCheck in(report, "closed_intersection", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const auto& x = ca.member(i);
        const auto& y = ca.member(j);
        un.expect(ca.find(x | y).has_value(), [&] { return g.describe(x) + " ∪ " + g.describe(y) + " missing"; });
        in.expect(ca.find(x & y).has_value(), [&] { return g.describe(x) + " ∩ " + g.describe(y) + " missing"; });
      }
    }
  }
  std::vector<std::vector<Elem>> tuples;
  for_each_tuple(e.size(), g.kappa(), [&](const std::vector<Elem>& c) { tuples.push_back(c); });
  {
    LawCheck meet(report, "box_meet", CheckMode::Exhaustive);
    LawCheck nest(report, "box_nesting", CheckMode::Exhaustive);
    std::vector<Elem> m(static_cast<std::size_t>(g.kappa()));
    for (const auto& x : tuples) {
      for (const auto& y : tuples) {
        bool below = true;
        for (std::size_t a = 0; a < m.size(); ++a) {
          m[a] = e.meet(x[a], y[a]);
          below = below && e.leq(x[a], y[a]);
        }
        const Bits bx = g.box(x);
        const Bits by = g.box(y);
        meet.expect(g.box(m) == (bx & by),
                    [&] { return "box of " + tuple_text(e, x) + " ∧ " + tuple_text(e, y) + " is not the intersection"; });
        if (below) {
          nest.expect((bx | by) == by, [&] { return tuple_text(e, x) + " ≤ " + tuple_text(e, y) + " but boxes not nested"; });
        }
      }
    }
  }
  return report;
}

Bits complement_expansion(const GroundModel& g, const std::vector<std::vector<Elem>>& boxes,
                          const ExpansionOptions& options) {
  const auto& e = g.lattice();
  // Boxes of the identified bottom are empty and drop out.
  std::vector<const std::vector<Elem>*> live;
  for (const auto& b : boxes) {
    if (b.empty()) continue;
    if (b.size() != static_cast<std::size_t>(g.kappa())) {
      throw Error(ErrorKind::MismatchedInputs, "box arity does not match kappa");
    }
    if (std::any_of(b.begin(), b.end(), [&](Elem a) { return a == e.bottom(); })) continue;
    live.push_back(&b);
  }
  const auto kappa = static_cast<std::uint64_t>(g.kappa());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (total > options.max_expansion / kappa) {
      throw Error(ErrorKind::ExpansionTooLarge, std::to_string(kappa) + "^" + std::to_string(live.size()) +
                                                    " choice functions exceed " + std::to_string(options.max_expansion));
    }
    total *= kappa;
  }
  Bits out = g.empty();
  std::vector<int> f(live.size(), 0);
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.kappa()));
  for (;;) {
    std::fill(masks.begin(), masks.end(), g.full_mask());
    for (std::size_t i = 0; i < live.size(); ++i) {
      const auto alpha = static_cast<std::size_t>(f[i]);
      masks[alpha] &= ~g.mask((*live[i])[alpha]) & g.full_mask();
    }
    out |= g.box_masks(masks);
    std::size_t k = live.size();
    while (k > 0 && ++f[k - 1] == g.kappa()) f[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

bool verify_complement(const ClassicalAlgebra& ca, const std::vector<std::vector<Elem>>& boxes,
                       const ExpansionOptions& options) {
  const auto& g = ca.ground();
  Bits x = g.empty();
  for (const auto& b : boxes) x |= g.box(b);
  return complement_expansion(g, boxes, options) == g.all() - x;
}

Bits classical_image(const GroundModel& g, const DownsetEngine& engine, const DownSet& x) {
  Bits out = g.empty();
  for (TupleId t : engine.maximals(x).members) out |= g.box(engine.poset(), t);
  return out;
}

Epimorphism epimorphism_e(const UniversalLogic& u, const ClassicalAlgebra& ca, const EpimorphismOptions& options) {
  const auto& g = ca.ground();
  const auto& p = u.poset();
  const auto& eng = u.engine();
  if (p.kappa() != g.kappa()) {
    throw Error(ErrorKind::MismatchedInputs, "universal logic has kappa " + std::to_string(p.kappa()) +
                                                 " but the ground model has " + std::to_string(g.kappa()));
  }
  for (const auto& f : p.factors()) {
    if (!f.same_structure(g.lattice())) {
      throw Error(ErrorKind::MismatchedInputs, "factor " + f.name() + " differs from " + g.lattice().name());
    }
  }
  Epimorphism out;
  auto& report = out.report;
  report.title = "classical epimorphism";
  report.seed = options.seed;
  const int n = u.size();
  for (int i = 0; i < n; ++i) out.table.push_back(classical_image(g, eng, u.element(i)));
  const auto& table = out.table;
  auto img = [&](int i) -> const Bits& { return table[static_cast<std::size_t>(i)]; };

  {
    LawCheck law(report, "bounds", CheckMode::Exhaustive);
    law.expect(img(u.bottom()).none(), [&] { return "bottom maps to " + g.describe(img(u.bottom())); });
    law.expect(img(u.top()) == g.all(), [&] { return "top maps to " + g.describe(img(u.top())); });
  }
  {
    LawCheck law(report, "letters_to_boxes", CheckMode::Exhaustive);
    for (TupleId t = 0; t < p.size(); ++t) {
      if (!law.expect(classical_image(g, eng, eng.principal(t)) == g.box(p, t),
                      [&] { return "principal of " + p.label(t) + " does not map to its box"; })) {
        break;
      }
    }
  }
  std::vector<bool> hit(static_cast<std::size_t>(ca.size()), false);
  {
    LawCheck law(report, "into_algebra", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      auto m = ca.find(img(i));
      if (m) hit[static_cast<std::size_t>(*m)] = true;
      law.expect(m.has_value(), [&] { return u.describe(i) + " maps outside the algebra"; });
    }
  }
  {
    LawCheck law(report, "surjective", CheckMode::Exhaustive);
    for (int m = 0; m < ca.size(); ++m) {
      if (!law.expect(hit[static_cast<std::size_t>(m)], [&] { return g.describe(ca.member(m)) + " has no preimage"; })) {
        break;
      }
    }
  }
  report.details["carrier"] = n;
  report.details["members"] = ca.size();
  report.details["image_size"] = std::count(hit.begin(), hit.end(), true);
  {
    LawCheck law(report, "preserves_ortho", CheckMode::Exhaustive);
    const Bits all = g.all();
    for (int i = 0; i < n; ++i) {
      if (!law.expect(img(u.star(i)) == all - img(i),
                      [&] { return "e(x*) != e(x)^c at x = " + u.describe(i); })) {
        break;
      }
    }
  }

  Rng rng(options.seed);
  const bool exhaustive = n <= options.exhaustive_threshold;
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
    const auto mode = exhaustive ? CheckMode::Exhaustive : CheckMode::Sampled;
    LawCheck meet(report, "preserves_meet", mode);
    LawCheck mono(report, "monotone", mode);
    for (const auto& [i, j] : pairs) {
      meet.expect(img(u.meet(i, j)) == (img(i) & img(j)),
                  [&] { return "e(x ∧ y) != e(x) ∩ e(y) at " + u.describe(i) + ", " + u.describe(j); });
      mono.expect(!u.leq(i, j) || img(i).is_subset_of(img(j)),
                  [&] { return u.describe(i) + " <= " + u.describe(j) + " but images not nested"; });
    }
  }
  {
    LawCheck law(report, "preserves_coproduct", CheckMode::Sampled);
    for (int s = 0; s < options.subsets; ++s) {
      const auto k = static_cast<int>(rng.below(7));
      std::vector<int> xs;
      for (int i = 0; i < k; ++i) xs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
      Bits rhs = g.empty();
      for (int x : xs) rhs |= img(x);
      const Bits lhs = img(u.coproduct(xs));
      if (!law.expect(lhs == rhs, [&] {
            std::string w = "e(∐S) != ∪e(S) for S = [";
            for (std::size_t i = 0; i < xs.size(); ++i) w += (i ? ", " : "") + u.describe(xs[i]);
            return w + "]";
          })) {
        break;
      }
    }
  }
  return out;
}

}  // namespace ortholog
