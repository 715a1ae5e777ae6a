#include "ortholog/checks.hpp"

#include "ortholog/error.hpp"
#include "ortholog/rng.hpp"

namespace ortholog {

namespace {

std::string show(const DownsetEngine& engine, const DownSet& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : engine.antichain_labels(d)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

// All down-sets for small products, seeded samples otherwise.
std::vector<DownSet> corpus(const DownsetEngine& engine, const DownsetLawOptions& options, Rng& rng, CheckMode& mode) {
  if (engine.poset().size() <= options.exhaustive_poset) {
    mode = CheckMode::Exhaustive;
    return engine.enumerate_all(1U << 20);
  }
  mode = CheckMode::Sampled;
  std::vector<DownSet> out;
  for (int i = 0; i < options.samples; ++i) out.push_back(engine.random_downset(rng));
  return out;
}

}  // namespace

Report verify_closure_laws(const DownsetEngine& engine, const DownsetLawOptions& options) {
  Report report;
  report.title = "closure laws";
  report.seed = options.seed;
  Rng rng(options.seed);
  CheckMode mode = CheckMode::Exhaustive;
  const auto xs = corpus(engine, options, rng, mode);
  report.details["downsets"] = xs.size();

  std::vector<DownSet> stars;
  std::vector<DownSet> closures;
  for (const auto& x : xs) {
    stars.push_back(engine.star(x));
    closures.push_back(engine.closure(x));
  }
  LawCheck inflationary(report, "closure_inflationary", mode);
  LawCheck idempotent(report, "closure_idempotent", mode);
  LawCheck triple(report, "star_triple", mode);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    inflationary.expect(engine.dleq(xs[i], closures[i]), [&] { return "x ⊄ x** at " + show(engine, xs[i]); });
    idempotent.expect(engine.closure(closures[i]) == closures[i], [&] { return "x**** != x** at " + show(engine, xs[i]); });
    triple.expect(engine.star(closures[i]) == stars[i], [&] { return "x*** != x* at " + show(engine, xs[i]); });
  }
  // Pairs: all of them for an enumerated D, neighbours in the sample otherwise.
  LawCheck antitone(report, "star_antitone", mode);
  LawCheck monotone(report, "closure_monotone", mode);
  LawCheck de_morgan(report, "star_join_de_morgan", mode);
  auto pair = [&](std::size_t i, std::size_t j) {
    const auto& x = xs[i];
    const auto& y = xs[j];
    const bool leq = engine.dleq(x, y);
    antitone.expect(!leq || engine.dleq(stars[j], stars[i]),
                    [&] { return show(engine, x) + " ⊆ " + show(engine, y) + " but y* ⊄ x*"; });
    monotone.expect(!leq || engine.dleq(closures[i], closures[j]),
                    [&] { return show(engine, x) + " ⊆ " + show(engine, y) + " but x** ⊄ y**"; });
    de_morgan.expect(engine.star(engine.djoin(x, y)) == engine.dmeet(stars[i], stars[j]),
                     [&] { return "(x ∨ y)* != x* ∧ y* at " + show(engine, x) + ", " + show(engine, y); });
  };
  if (mode == CheckMode::Exhaustive) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) pair(i, j);
    }
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      pair(i, (i + 1) % xs.size());
      // Force comparable pairs too: x ≤ x ∨ y.
      const auto j = static_cast<std::size_t>(rng.below(xs.size()));
      const auto big = engine.djoin(xs[i], xs[j]);
      antitone.expect(engine.dleq(engine.star(big), stars[i]), [&] { return "(x ∨ y)* ⊄ x* at " + show(engine, xs[i]); });
      monotone.expect(engine.dleq(closures[i], engine.closure(big)), [&] { return "x** ⊄ (x ∨ y)** at " + show(engine, xs[i]); });
    }
  }
  return report;
}

Report verify_star_oracle(const DownsetEngine& engine, const DownsetLawOptions& options) {
  Report report;
  report.title = "star oracle";
  report.seed = options.seed;
  Rng rng(options.seed);
  CheckMode mode = CheckMode::Exhaustive;
  auto xs = corpus(engine, options, rng, mode);
  // An enumerated D can be tiny; top up so every fixture sees `samples`.
  while (xs.size() < static_cast<std::size_t>(options.samples)) xs.push_back(engine.random_downset(rng));
  std::uint64_t skipped = 0;
  LawCheck law(report, "star_equals_choicefn", mode);
  for (const auto& x : xs) {
    try {
      const auto oracle = engine.star_choicefn(x);
      if (!law.expect(engine.star(x) == oracle, [&] {
            return "x = " + show(engine, x) + ": star " + show(engine, engine.star(x)) + ", expansion " +
                   show(engine, oracle);
          })) {
        break;
      }
    } catch (const Error& ex) {
      if (ex.kind() != ErrorKind::ExpansionTooLarge) throw;
      ++skipped;
    }
  }
  report.details["instances"] = xs.size();
  report.details["skipped"] = skipped;
  return report;
}

Report verify_complete_distributivity(const DownsetEngine& engine, const DownsetLawOptions& options) {
  Report report;
  report.title = "complete distributivity";
  report.seed = options.seed;
  Rng rng(options.seed);
  LawCheck mj(report, "meet_of_joins", CheckMode::Sampled);
  LawCheck jm(report, "join_of_meets", CheckMode::Sampled);
  LawCheck mm(report, "min_max", CheckMode::Sampled);
  for (int s = 0; s < options.families; ++s) {
    std::vector<std::vector<DownSet>> family(1 + rng.below(3));
    for (auto& row : family) {
      row.resize(1 + rng.below(3));
      for (auto& x : row) x = engine.random_downset(rng);
    }
    const auto r = engine.check_completely_distributive(family);
    auto witness = [&] { return "family " + std::to_string(s); };
    mj.expect(r.meet_of_joins, witness);
    jm.expect(r.join_of_meets, witness);
    mm.expect(r.min_max, witness);
  }
  return report;
}

Report verify_infimum_formula(const DownsetEngine& engine, const DownsetLawOptions& options,
                              std::size_t exhaustive_limit) {
  Report report;
  report.title = "infimum formula";
  report.seed = options.seed;
  auto check = [&](LawCheck& law, std::span<const DownSet> xs) {
    return law.expect(engine.dmeet_choicefn(xs) == engine.dmeet(xs), [&] {
      std::string w = "family [";
      for (std::size_t i = 0; i < xs.size(); ++i) w += (i ? ", " : "") + show(engine, xs[i]);
      return w + "]";
    });
  };
  std::vector<DownSet> all;
  try {
    all = engine.enumerate_all(exhaustive_limit);
  } catch (const Error& ex) {
    if (ex.kind() != ErrorKind::ExpansionTooLarge) throw;
    all.clear();
  }
  if (!all.empty()) {
    LawCheck law(report, "choicefn_meet", CheckMode::Exhaustive);
    report.details["downsets"] = all.size();
    check(law, {});
    for (std::size_t i = 0; i < all.size(); ++i) {
      check(law, std::span<const DownSet>(&all[i], 1));
      for (std::size_t j = 0; j < all.size(); ++j) {
        const std::array<DownSet, 2> pair{all[i], all[j]};
        check(law, pair);
        for (std::size_t k = j; k < all.size() && all.size() <= 32; ++k) {
          const std::array<DownSet, 3> tri{all[i], all[j], all[k]};
          check(law, tri);
        }
      }
    }
    return report;
  }
  Rng rng(options.seed);
  LawCheck law(report, "choicefn_meet", CheckMode::Sampled);
  for (int s = 0; s < options.families; ++s) {
    std::vector<DownSet> xs(rng.below(5));
    for (auto& x : xs) x = engine.random_downset(rng);
    if (!check(law, xs)) break;
  }
  return report;
}

}  // namespace ortholog
