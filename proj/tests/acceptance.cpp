// Acceptance run: one line per criterion, exit status 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ortholog/checks.hpp"
#include "ortholog/classical.hpp"
#include "ortholog/completion.hpp"
#include "ortholog/error.hpp"
#include "ortholog/suites.hpp"
#include "ortholog/tensor.hpp"
#include "ortholog/universal.hpp"

using namespace ortholog;

namespace {

constexpr std::uint64_t kSeed = 42;

std::vector<OrthoLattice> power(const char* name, int kappa) {
  return std::vector<OrthoLattice>(static_cast<std::size_t>(kappa), catalog_by_name(name));
}

UniversalLogic universal_of(std::vector<OrthoLattice> fs) { return enumerate_universal(make_engine(std::move(fs))); }

// Collects failures for one criterion.
struct Notes {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void report(const Report& r, const std::string& what) {
    if (r.passed()) return;
    for (const auto& l : r.laws) {
      if (!l.pass) failures.push_back(what + ": " + l.law + (l.witness ? " (" + *l.witness + ")" : ""));
    }
  }
};

bool criterion_1(Notes& n) {
  for (const char* name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    const auto start = std::chrono::steady_clock::now();
    const auto e = catalog_by_name(name);
    const auto iso = check_u1_iso(e);
    const auto u = universal_of({e});
    std::vector<Elem> map;
    for (int i : iso) map.push_back(i);
    n.expect(iso.size() == static_cast<std::size_t>(e.size()), std::string(name) + " size");
    n.expect(is_ortho_iso(e, u.as_lattice("u"), map), std::string(name) + " not an ortho-isomorphism");
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    n.expect(secs < 1.0, std::string(name) + " took " + std::to_string(secs) + " s");
  }
  return n.failures.empty();
}

bool criterion_2(Notes& n) {
  const auto start = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.seed = kSeed;
  opts.subsets = 200;
  for (const auto& [name, kappa] : std::vector<std::pair<const char*, int>>{{"B2", 2}, {"B2", 3}, {"MO2", 2}, {"O6", 2}}) {
    const auto r = verify_logic_axioms(universal_of(power(name, kappa)), opts);
    const std::string tag = std::string(name) + "^" + std::to_string(kappa);
    n.report(r, tag);
    for (const char* law : {"de_morgan_coproduct", "de_morgan_meet"}) {
      const auto* l = r.find(law);
      n.expect(l != nullptr && l->checked >= 200, tag + " " + law + " under 200 subsets");
    }
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  n.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  return n.failures.empty();
}

bool criterion_3(Notes& n) {
  DistributivityOptions opts;
  opts.seed = kSeed;
  for (const auto& [name, kappa] : std::vector<std::pair<const char*, int>>{{"B2", 2}, {"B2", 3}, {"MO2", 2}, {"O6", 2}}) {
    const auto u = universal_of(power(name, kappa));
    const auto r = is_distributive_universal(u, opts);
    const bool factor = is_distributive(catalog_by_name(name)).distributive;
    const std::string tag = std::string(name) + "^" + std::to_string(kappa);
    n.expect(r.distributive == factor, tag + " disagrees with the factor");
    if (!r.distributive) {
      n.expect(r.witness.has_value() && is_distributivity_witness(u, (*r.witness)[0], (*r.witness)[1], (*r.witness)[2]),
               tag + " witness does not check");
    }
  }
  n.expect(is_distributive_universal(universal_of(power("B2", 2)), opts).distributive, "B2^2 not distributive");
  n.expect(!is_distributive_universal(universal_of(power("MO2", 2)), opts).distributive, "MO2^2 distributive");
  return n.failures.empty();
}

bool criterion_4(Notes& n) {
  const auto u = universal_of(power("B2", 2));
  const auto ca = build_classical(catalog_by_name("B2"), 2);
  EpimorphismOptions opts;
  opts.seed = kSeed;
  opts.subsets = 200;
  const auto epi = epimorphism_e(u, ca, opts);
  n.report(epi.report, "epimorphism");
  n.expect(ca.size() == 16, "classical algebra has " + std::to_string(ca.size()) + " members");
  const std::set<Bits> image(epi.table.begin(), epi.table.end());
  n.expect(image.size() == 16, "image has " + std::to_string(image.size()) + " members");
  const auto* ortho = epi.report.find("preserves_ortho");
  n.expect(ortho && ortho->mode == CheckMode::Exhaustive && ortho->checked == static_cast<std::uint64_t>(u.size()),
           "ortho not checked on every carrier element");
  const auto* cop = epi.report.find("preserves_coproduct");
  n.expect(cop && cop->checked >= 200, "coproduct checked on fewer than 200 subsets");
  return n.failures.empty();
}

DownsetLawOptions law_options() {
  DownsetLawOptions o;
  o.seed = kSeed;
  o.samples = 1000;
  o.families = 200;
  return o;
}

bool criterion_5(Notes& n) {
  const std::vector<std::pair<std::string, std::vector<OrthoLattice>>> cases{
      {"B2", power("B2", 1)},
      {"[B1,B2]", {catalog_by_name("B1"), catalog_by_name("B2")}},
      {"B2^2", power("B2", 2)},
      {"MO2^2", power("MO2", 2)},
  };
  for (const auto& [tag, fs] : cases) {
    const auto engine = make_engine(fs);
    const auto r = verify_closure_laws(*engine, law_options());
    n.report(r, tag);
    const auto expected = engine->poset().size() <= 10 ? CheckMode::Exhaustive : CheckMode::Sampled;
    for (const auto& l : r.laws) n.expect(l.mode == expected, tag + " " + l.law + " ran in the wrong mode");
  }
  return n.failures.empty();
}

bool criterion_6(Notes& n) {
  auto opts = law_options();
  opts.samples = 500;
  for (const auto& [tag, fs] : std::vector<std::pair<std::string, std::vector<OrthoLattice>>>{
           {"B2", power("B2", 1)},
           {"MO2", power("MO2", 1)},
           {"O6", power("O6", 1)},
           {"B2^2", power("B2", 2)},
           {"MO2^2", power("MO2", 2)},
           {"O6^2", power("O6", 2)},
           {"[B2,MO2]", {catalog_by_name("B2"), catalog_by_name("MO2")}}}) {
    const auto r = verify_star_oracle(*make_engine(fs), opts);
    n.report(r, tag);
    const auto instances = r.details.value("instances", std::uint64_t{0});
    n.expect(instances >= 500, tag + " compared only " + std::to_string(instances) + " down-sets");
  }
  return n.failures.empty();
}

bool criterion_7(Notes& n) {
  for (const auto& [tag, fs] : std::vector<std::pair<std::string, std::vector<OrthoLattice>>>{
           {"B2", power("B2", 1)}, {"MO2", power("MO2", 1)}, {"B2^2", power("B2", 2)}, {"MO2^2", power("MO2", 2)}}) {
    const auto r = verify_complete_distributivity(*make_engine(fs), law_options());
    n.report(r, tag);
    for (const auto& l : r.laws) n.expect(l.checked >= 200, tag + " " + l.law + " under 200 families");
  }
  return n.failures.empty();
}

bool criterion_8(Notes& n) {
  for (const auto& [tag, fs] : std::vector<std::pair<std::string, std::vector<OrthoLattice>>>{
           {"B2", power("B2", 1)}, {"MO2", power("MO2", 1)}}) {
    const auto engine = make_engine(fs);
    const auto r = verify_infimum_formula(*engine, law_options(), 1U << 12);
    n.report(r, tag);
    for (const auto& l : r.laws) n.expect(l.mode == CheckMode::Exhaustive, tag + " " + l.law + " not exhaustive");
    // glb by scanning every lower bound in the enumerated D
    const auto all = engine->enumerate_all(1U << 12);
    for (const auto& x : all) {
      for (const auto& y : all) {
        const std::vector<DownSet> pair{x, y};
        const auto m = engine->dmeet_choicefn(pair);
        bool greatest = engine->dleq(m, x) && engine->dleq(m, y);
        for (const auto& z : all) {
          if (engine->dleq(z, x) && engine->dleq(z, y) && !engine->dleq(z, m)) greatest = false;
        }
        n.expect(greatest, tag + " choice-function meet is not the glb");
        if (!greatest) return false;
      }
    }
  }
  return n.failures.empty();
}

bool criterion_9(Notes& n) {
  PAlgebraOptions opts;
  opts.seed = kSeed;
  opts.samples = 200;
  const auto good = verify_p_algebra(universal_of(power("B2", 2)), opts);
  n.report(good, "B2^2");
  const auto* idl = good.find("infinite_distributive");
  n.expect(idl && idl->mode != CheckMode::Skipped && idl->checked >= 200, "infinite distributive law not sampled");
  const auto bad = verify_p_algebra(universal_of(power("MO2", 1)), opts);
  const auto* first = bad.find("pseudo_complement_meet");
  n.expect(first && !first->pass && first->witness.has_value(), "MO2 first axiom did not fail with a witness");
  return n.failures.empty();
}

bool criterion_10(Notes& n) {
  for (const char* name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    const auto l = catalog_by_name(name);
    const auto c = event_space_completion(l);
    n.expect(c.iso.has_value(), std::string(name) + " completion not isomorphic");
    n.report(completion_report(c, kSeed), name);
    n.report(completion_distributivity(l), std::string(name) + " distributivity");
  }
  const auto f = completion_functorial(catalog_by_name("B2"), catalog_by_name("MO1"));
  n.report(f, "functorial B2,MO1");
  n.expect(f.details.value("isomorphic", false), "B2 and MO1 not isomorphic");
  return n.failures.empty();
}

bool criterion_11(Notes& n) {
  const auto start = std::chrono::steady_clock::now();
  for (const char* name : {"B2", "MO2"}) {
    const auto tl = build_tensor(power(name, 2));
    n.expect(tl.carrier() == universal_of(power(name, 2)).carrier(), std::string(name) + " tensor differs");
  }
  for (const auto& [tag, fs] : std::vector<std::pair<std::string, std::vector<OrthoLattice>>>{
           {"[B2,B2]", power("B2", 2)}, {"[B2,MO2]", {catalog_by_name("B2"), catalog_by_name("MO2")}}}) {
    const auto tl = build_tensor(fs);
    for (const auto& r : {verify_i_alpha(tl), verify_prop_ju(tl)}) {
      n.report(r, tag);
      for (const auto& l : r.laws) n.expect(l.mode == CheckMode::Exhaustive, tag + " " + l.law + " not exhaustive");
    }
  }
  const auto tl = build_tensor(power("B2", 2));
  const auto ident = identity_target(tl);
  MjOptions mj;
  mj.seed = kSeed;
  n.expect(check_mj_distributive(ident.target, embedding_family(tl.poset(), ident), mj).holds,
           "canonical family not meet-join distributive");
  const auto mo2 = catalog_by_name("MO2");
  auto l = [&](const char* s) { return mo2.index_of(s); };
  n.expect(!check_mj_distributive(mo2, {{l("p"), l("q")}, {l("p'"), l("q'")}}, mj).holds,
           "MO2 counter-family passed");

  const auto ca = build_classical(catalog_by_name("B2"), 2);
  MorphismOptions mo;
  mo.seed = kSeed;
  mo.mj.seed = kSeed;
  const auto t = universal_morphism(tl, classical_target(ca), mo);
  n.report(t.report, "classical target");
  const auto* gen = t.report.find("generation");
  n.expect(gen && gen->checked == static_cast<std::uint64_t>(tl.size()), "generation not checked on every element");
  const auto epi = epimorphism_e(tl, ca);
  for (int x = 0; x < tl.size(); ++x) {
    n.expect(ca.member(t.table[static_cast<std::size_t>(x)]) == epi.table[static_cast<std::size_t>(x)],
             "morphism differs from the epimorphism at " + tl.describe(x));
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  n.expect(secs < 300.0, "took " + std::to_string(secs) + " s");
  return n.failures.empty();
}

bool criterion_12(Notes& n) {
  CheckConfig cfg;
  cfg.seed = kSeed;
  const auto a = run_check("all", cfg).dump(2);
  const auto b = run_check("all", cfg).dump(2);
  n.expect(a == b, "reports differ between runs");
  n.expect(nlohmann::json::parse(a).at("pass") == true, "suite all did not pass");
  return n.failures.empty();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(Notes&)>>> criteria{
      {"U_[1](E) isomorphic to E for the catalog", criterion_1},
      {"logic axioms of U_kappa(E)", criterion_2},
      {"U distributive iff E distributive", criterion_3},
      {"classical epimorphism for 2^S, |S|=2, kappa=2", criterion_4},
      {"closure laws on D", criterion_5},
      {"star equals the choice-function oracle", criterion_6},
      {"complete distributivity and Min-Max", criterion_7},
      {"infimum formula against brute-force glb", criterion_8},
      {"p-algebra laws and the MO2 counterexample", criterion_9},
      {"event space completion", criterion_10},
      {"tensor products and the universal morphism", criterion_11},
      {"deterministic check --suite all --seed 42", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Notes notes;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(notes);
    } catch (const std::exception& ex) {
      notes.failures.push_back(std::string("exception: ") + ex.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << timing << ")\n";
    for (const auto& f : notes.failures) std::cout << "    " << f << '\n';
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
