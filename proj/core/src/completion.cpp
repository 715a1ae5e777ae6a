#include "ortholog/completion.hpp"

#include "ortholog/error.hpp"

namespace ortholog {

CompletionResult event_space_completion(const OrthoLattice& l, const UniversalOptions& options) {
  CompletionResult out{l, enumerate_universal(make_engine({l}), options), std::nullopt};
  // The completion is at most as large as the down-set lattice; export it
  // as a plain lattice for the structural iso search.
  const auto lattice = out.completed.as_lattice(l.name() + "_L", 4096);
  out.iso = find_iso(l, lattice);
  return out;
}

Report completion_report(const CompletionResult& c, std::uint64_t seed) {
  Report report;
  report.title = "event space completion";
  report.seed = seed;
  const auto& l = c.source;
  const auto& u = c.completed;
  report.details["source"] = l.name();
  report.details["source_size"] = l.size();
  report.details["carrier"] = u.size();
  {
    LawCheck law(report, "iso_found", CheckMode::Exhaustive);
    law.expect(c.iso.has_value(), [&] { return l.name() + " is not isomorphic to its completion"; });
  }
  {
    LawCheck law(report, "same_size", CheckMode::Exhaustive);
    law.expect(u.size() == l.size(), [&] { return std::to_string(u.size()) + " members vs " + std::to_string(l.size()); });
  }
  {
    LawCheck law(report, "principal_iso", CheckMode::Exhaustive);
    try {
      const auto map = check_u1_iso(u);
      nlohmann::json table = nlohmann::json::object();
      for (Elem a = 0; a < l.size(); ++a) table[l.label(a)] = u.describe(map[static_cast<std::size_t>(a)]);
      report.details["iso"] = std::move(table);
      law.count();
    } catch (const Error& ex) {
      law.expect(false, [&] { return ex.detail(); });
    }
  }
  const auto axioms = verify_logic_axioms(u, VerifyOptions{.seed = seed});
  for (const auto& law : axioms.laws) report.laws.push_back(law);
  return report;
}

Report completion_functorial(const OrthoLattice& l, const OrthoLattice& lp, const UniversalOptions& options) {
  Report report;
  report.title = "completion functoriality";
  report.details["source"] = l.name();
  report.details["target"] = lp.name();
  const auto chi = find_iso(l, lp);
  report.details["isomorphic"] = chi.has_value();
  if (!chi) {
    auto& law = report.add("lift_is_iso", CheckMode::Skipped);
    law.witness = "NotIsomorphic: " + l.name() + " and " + lp.name() + " are not ortho-isomorphic";
    return report;
  }
  const auto cl = event_space_completion(l, options).completed;
  const auto clp = event_space_completion(lp, options).completed;
  const auto& p = cl.poset();
  const auto& pp = clp.poset();

  // χ̂ maps letters pointwise; bottom stays bottom.
  std::vector<TupleId> letter(static_cast<std::size_t>(p.size()));
  for (TupleId t = 0; t < p.size(); ++t) {
    letter[static_cast<std::size_t>(t)] =
        t == p.bottom() ? pp.bottom() : pp.make({(*chi)[static_cast<std::size_t>(p.component(t, 0))]});
  }
  auto lift = [&](const DownSet& d) {
    Bits out = pp.empty_set();
    d.bits().for_each([&](std::size_t t) { out.set(static_cast<std::size_t>(letter[t])); });
    return DownSet(std::move(out));
  };

  const int n = cl.size();
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  {
    LawCheck law(report, "lift_in_carrier", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      auto j = clp.find(lift(cl.element(i)));
      law.expect(j.has_value(), [&] { return "lift of " + cl.describe(i) + " is not closed"; });
      map[static_cast<std::size_t>(i)] = j.value_or(-1);
    }
    if (law.failed()) return report;
  }
  auto m = [&](int i) { return map[static_cast<std::size_t>(i)]; };
  {
    LawCheck law(report, "lift_bijective", CheckMode::Exhaustive);
    std::vector<bool> hit(static_cast<std::size_t>(clp.size()), false);
    for (int i = 0; i < n; ++i) {
      law.expect(!hit[static_cast<std::size_t>(m(i))], [&] { return "two members lift to " + clp.describe(m(i)); });
      hit[static_cast<std::size_t>(m(i))] = true;
    }
    law.expect(n == clp.size(), [&] { return "carrier sizes differ"; });
  }
  {
    LawCheck order(report, "lift_order", CheckMode::Exhaustive);
    LawCheck star(report, "lift_star", CheckMode::Exhaustive);
    LawCheck meet(report, "lift_meet", CheckMode::Exhaustive);
    LawCheck cop(report, "lift_coproduct", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      star.expect(m(cl.star(i)) == clp.star(m(i)), [&] { return "star at " + cl.describe(i); });
      for (int j = 0; j < n; ++j) {
        order.expect(cl.leq(i, j) == clp.leq(m(i), m(j)), [&] { return "order at " + cl.describe(i) + ", " + cl.describe(j); });
        meet.expect(m(cl.meet(i, j)) == clp.meet(m(i), m(j)), [&] { return "meet at " + cl.describe(i) + ", " + cl.describe(j); });
        cop.expect(m(cl.coproduct(i, j)) == clp.coproduct(m(i), m(j)),
                   [&] { return "coproduct at " + cl.describe(i) + ", " + cl.describe(j); });
      }
    }
  }
  return report;
}

Report completion_distributivity(const OrthoLattice& l, const UniversalOptions& options) {
  Report report;
  report.title = "completion distributivity";
  const auto u = event_space_completion(l, options).completed;
  const auto& p = u.poset();
  const auto& eng = u.engine();
  const auto src = is_distributive(l);
  const auto dst = is_distributive(u.as_lattice(l.name() + "_L", 4096));
  report.details["source"] = l.name();
  report.details["source_distributive"] = src.distributive;
  report.details["completed_distributive"] = dst.distributive;
  if (src.witness) {
    const auto& w = *src.witness;
    report.details["source_witness"] = {l.label(w.a), l.label(w.b), l.label(w.c)};
  }
  {
    LawCheck law(report, "distributivity_agrees", CheckMode::Exhaustive);
    law.expect(src.distributive == dst.distributive, [&] {
      return std::string("source ") + (src.distributive ? "is" : "is not") + " distributive, completion " +
             (dst.distributive ? "is" : "is not");
    });
  }
  auto principal = [&](Elem a) { return u.index_of(eng.principal(p.make({a}))); };
  {
    LawCheck meet(report, "meet_is_principal", CheckMode::Exhaustive);
    LawCheck cop(report, "coproduct_is_principal", CheckMode::Exhaustive);
    for (Elem a = 0; a < l.size(); ++a) {
      for (Elem b = 0; b < l.size(); ++b) {
        meet.expect(u.meet(principal(a), principal(b)) == principal(l.meet(a, b)),
                    [&] { return "↓" + l.label(a) + " ∧ ↓" + l.label(b); });
        cop.expect(u.coproduct(principal(a), principal(b)) == principal(l.join(a, b)),
                   [&] { return "↓" + l.label(a) + " ∐ ↓" + l.label(b); });
      }
    }
  }
  {
    LawCheck law(report, "coproduct_de_morgan", CheckMode::Exhaustive);
    for (int x = 0; x < u.size(); ++x) {
      for (int y = 0; y < u.size(); ++y) {
        law.expect(u.coproduct(x, y) == u.star(u.meet(u.star(x), u.star(y))),
                   [&] { return "x ∐ y != (x* ∧ y*)* at " + u.describe(x) + ", " + u.describe(y); });
      }
    }
  }
  return report;
}

}  // namespace ortholog
