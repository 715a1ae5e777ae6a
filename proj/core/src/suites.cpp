#include "ortholog/suites.hpp"

#include <functional>

#include "ortholog/checks.hpp"
#include "ortholog/classical.hpp"
#include "ortholog/completion.hpp"
#include "ortholog/error.hpp"
#include "ortholog/rng.hpp"
#include "ortholog/tensor.hpp"

namespace ortholog {

namespace {

using nlohmann::json;

struct Fixture {
  std::string name;
  std::vector<std::string> factors;
};

Fixture power(const std::string& e, int kappa) {
  return {e + "^" + std::to_string(kappa), std::vector<std::string>(static_cast<std::size_t>(kappa), e)};
}

Fixture family(std::vector<std::string> factors) {
  std::string name = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "," : "") + factors[i];
  return {name + "]", std::move(factors)};
}

class SuiteRun {
 public:
  explicit SuiteRun(const CheckConfig& config) : config_(config) {}

  std::shared_ptr<const DownsetEngine> engine(const Fixture& f) const {
    std::vector<OrthoLattice> factors;
    for (const auto& n : f.factors) factors.push_back(catalog_by_name(n));
    return make_engine(std::move(factors), config_.product, config_.engine);
  }
  UniversalLogic logic(const Fixture& f) const { return enumerate_universal(engine(f), config_.universal); }

  // A section passes when its report passes.
  void add(const std::string& name, const Report& report) { push(name, "pass", report.passed(), report); }

  // A section whose report must fail at `law`.
  void add_failing(const std::string& name, const Report& report, const std::string& law) {
    const auto* l = report.find(law);
    push(name, "fail:" + law, l != nullptr && !l->pass, report);
  }

  std::uint64_t seed() const { return config_.seed; }
  const CheckConfig& config() const { return config_; }
  json take() { return std::exchange(sections_, json::array()); }

 private:
  void push(const std::string& name, const std::string& expect, bool ok, const Report& report) {
    sections_.push_back({{"name", name}, {"expect", expect}, {"ok", ok}, {"report", report.to_json()}});
  }

  const CheckConfig& config_;
  json sections_ = json::array();
};

void suite_s4(SuiteRun& run) {
  DownsetLawOptions opts{.seed = run.seed()};
  opts.samples = 1000;
  for (const auto& f : {power("B2", 1), family({"B1", "B2"}), power("B2", 2), power("MO2", 2)}) {
    run.add("closure-laws " + f.name, verify_closure_laws(*run.engine(f), opts));
  }
  opts.samples = 500;
  for (const auto& f : {power("B2", 1), power("MO2", 1), power("O6", 1), power("B2", 2), power("MO2", 2),
                        power("O6", 2), family({"B2", "MO2"})}) {
    run.add("star-oracle " + f.name, verify_star_oracle(*run.engine(f), opts));
  }
  for (const auto& f : {power("B2", 1), power("MO2", 1), power("B2", 2), power("MO2", 2)}) {
    run.add("complete-distributivity " + f.name, verify_complete_distributivity(*run.engine(f), opts));
  }
  for (const auto& f : {power("B2", 1), power("MO2", 1), power("B2", 2)}) {
    run.add("infimum " + f.name, verify_infimum_formula(*run.engine(f), opts));
  }
}

void suite_s5(SuiteRun& run) {
  for (const std::string name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    Report r;
    r.title = "U_1 isomorphism";
    const auto u = run.logic(power(name, 1));
    LawCheck law(r, "principal_ortho_iso", CheckMode::Exhaustive);
    try {
      const auto map = check_u1_iso(u);
      json table = json::object();
      const auto& e = u.poset().factor(0);
      for (Elem a = 0; a < e.size(); ++a) table[e.label(a)] = u.describe(map[static_cast<std::size_t>(a)]);
      r.details["iso"] = std::move(table);
      law.count();
    } catch (const Error& ex) {
      law.expect(false, [&] { return ex.detail(); });
    }
    run.add("u1-iso " + name, r);
  }

  const std::vector<Fixture> pairs{power("B2", 2), power("B2", 3), power("MO2", 2), power("O6", 2)};
  Report dist;
  dist.title = "distributivity transfer";
  dist.seed = run.seed();
  LawCheck agrees(dist, "matches_factor", CheckMode::Exhaustive);
  LawCheck lifted(dist, "lifted_witness", CheckMode::Exhaustive);
  for (const auto& f : pairs) {
    const auto u = run.logic(f);
    run.add("logic-axioms " + f.name, verify_logic_axioms(u, VerifyOptions{.seed = run.seed()}));

    const auto& e = u.poset().factor(0);
    const auto src = is_distributive(e);
    const auto got = is_distributive_universal(u, DistributivityOptions{.seed = run.seed()});
    json entry{{"fixture", f.name}, {"factor_distributive", src.distributive}, {"distributive", got.distributive},
               {"mode", std::string(to_string(got.mode))}, {"checked", got.checked}};
    if (got.witness) {
      const auto& w = *got.witness;
      entry["witness"] = {u.describe(w[0]), u.describe(w[1]), u.describe(w[2])};
    }
    agrees.expect(src.distributive == got.distributive, [&] { return f.name + " disagrees with its factor"; });
    if (src.witness) {
      // The factor's own witness, lifted through the first coordinate.
      const auto& w = *src.witness;
      const auto& p = u.poset();
      auto lift = [&](Elem a) { return u.index_of(u.engine().principal(p.embed(0, a))); };
      const int a = lift(w.a);
      const int b = lift(w.b);
      const int c = lift(w.c);
      entry["lifted_witness"] = {u.describe(a), u.describe(b), u.describe(c)};
      lifted.expect(is_distributivity_witness(u, a, b, c), [&] { return f.name + ": lifted triple distributes"; });
    }
    dist.details[f.name] = std::move(entry);
  }
  run.add("distributivity", dist);

  const auto b2 = catalog_by_name("B2");
  const auto ca = build_classical(b2, 2);
  run.add("classical-algebra B2^2", verify_classical(ca));
  const auto u = run.logic(power("B2", 2));
  run.add("epimorphism B2^2", epimorphism_e(u, ca, EpimorphismOptions{.seed = run.seed()}).report);

  Report comp;
  comp.title = "complement expansion";
  comp.seed = run.seed();
  {
    Rng rng(run.seed());
    LawCheck law(comp, "complement_matches", CheckMode::Sampled);
    for (int s = 0; s < 200; ++s) {
      std::vector<std::vector<Elem>> boxes(1 + rng.below(3));
      for (auto& b : boxes) {
        b = {static_cast<Elem>(rng.below(4)), static_cast<Elem>(rng.below(4))};
      }
      law.expect(verify_complement(ca, boxes), [&] { return "sample " + std::to_string(s); });
    }
  }
  run.add("complement-expansion B2^2", comp);
}

void suite_s6(SuiteRun& run) {
  const PAlgebraOptions opts{.seed = run.seed()};
  for (const auto& f : {power("B2", 1), power("B2", 2), power("B3", 1)}) {
    run.add("p-algebra " + f.name, verify_p_algebra(run.logic(f), opts));
  }
  for (const auto& f : {power("MO2", 1), power("O6", 1)}) {
    run.add_failing("p-algebra " + f.name, verify_p_algebra(run.logic(f), opts), "pseudo_complement_meet");
  }
}

void suite_s7(SuiteRun& run) {
  for (const std::string name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    const auto l = catalog_by_name(name);
    run.add("completion " + name, completion_report(event_space_completion(l, run.config().universal), run.seed()));
    run.add("completion-distributivity " + name, completion_distributivity(l, run.config().universal));
  }
  run.add("functorial B2,MO1", completion_functorial(catalog_by_name("B2"), catalog_by_name("MO1")));
  run.add("functorial O6,O6", completion_functorial(catalog_by_name("O6"), catalog_by_name("O6")));
  {
    auto r = completion_functorial(catalog_by_name("B2"), catalog_by_name("MO2"));
    LawCheck law(r, "reported_not_isomorphic", CheckMode::Exhaustive);
    law.expect(r.details["isomorphic"] == false, [] { return std::string("B2 and MO2 reported isomorphic"); });
    run.add("functorial B2,MO2", r);
  }
}

void suite_s8(SuiteRun& run) {
  for (const std::string name : {"B2", "MO2"}) {
    Report r;
    r.title = "tensor of equal factors";
    LawCheck law(r, "bit_identical", CheckMode::Exhaustive);
    const auto u = run.logic(power(name, 2));
    const auto tl = run.logic(family({name, name}));
    law.expect(u.carrier() == tl.carrier(), [&] { return "carriers differ"; });
    r.details["carrier"] = tl.size();
    run.add("tensor-equals-universal " + name, r);
  }
  {
    Report r;
    r.title = "tensor with B1";
    const auto tl = run.logic(family({"B1", "MO2"}));
    const auto mo2 = catalog_by_name("MO2");
    LawCheck law(r, "iso_to_factor", CheckMode::Exhaustive);
    law.expect(find_iso(tl.as_lattice("B1xMO2"), mo2).has_value(), [] { return std::string("no iso to MO2"); });
    r.details["carrier"] = tl.size();
    run.add("tensor [B1,MO2]", r);
  }
  for (const auto& f : {family({"B2", "B2"}), family({"B2", "MO2"})}) {
    const auto tl = run.logic(f);
    run.add("i-alpha " + f.name, verify_i_alpha(tl));
    run.add("coordinate-joins " + f.name, verify_prop_ju(tl));
    if (f.name == "[B2,MO2]") run.add("logic-axioms " + f.name, verify_logic_axioms(tl, VerifyOptions{.seed = run.seed()}));
  }

  const auto tl = run.logic(family({"B2", "B2"}));
  const auto ident = identity_target(tl);
  {
    Report r;
    r.title = "meet-join distributive families";
    r.seed = run.seed();
    const auto canonical = check_mj_distributive(ident.target, embedding_family(tl.poset(), ident),
                                                 MjOptions{.seed = run.seed()});
    auto& c = r.add("canonical_family", canonical.mode);
    c.pass = canonical.holds;
    c.checked = canonical.subfamilies;
    c.witness = canonical.witness;

    const auto mo2 = catalog_by_name("MO2");
    auto l = [&](const char* s) { return mo2.index_of(s); };
    const auto counter = check_mj_distributive(mo2, {{l("p"), l("q")}, {l("p'"), l("q'")}});
    auto& m = r.add("mo2_counter_family_fails", counter.mode);
    m.pass = !counter.holds;
    m.checked = counter.subfamilies;
    m.witness = counter.witness;
    run.add("mj-distributive", r);
  }
  {
    MorphismOptions opts;
    opts.seed = run.seed();
    opts.mj.seed = run.seed();
    auto morph = universal_morphism(tl, ident, opts);
    LawCheck law(morph.report, "identity_table", CheckMode::Exhaustive);
    for (int i = 0; i < tl.size(); ++i) {
      law.expect(morph.table[static_cast<std::size_t>(i)] == i, [&] { return "t moves " + tl.describe(i); });
    }
    run.add("universal-morphism identity [B2,B2]", morph.report);

    const auto ca = build_classical(catalog_by_name("B2"), 2);
    auto boolean = universal_morphism(tl, classical_target(ca), opts);
    const auto epi = epimorphism_e(tl, ca, EpimorphismOptions{.seed = run.seed()});
    LawCheck same(boolean.report, "matches_epimorphism", CheckMode::Exhaustive);
    for (int i = 0; i < tl.size(); ++i) {
      same.expect(ca.member(boolean.table[static_cast<std::size_t>(i)]) == epi.table[static_cast<std::size_t>(i)],
                  [&] { return "t and e differ at " + tl.describe(i); });
    }
    run.add("universal-morphism classical [B2,B2]", boolean.report);
  }
}

using SuiteFn = void (*)(SuiteRun&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"s4", suite_s4}, {"s5", suite_s5}, {"s6", suite_s6}, {"s7", suite_s7}, {"s8", suite_s8}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

json run_check(std::string_view suite, const CheckConfig& config) {
  json out{{"suite", std::string(suite)}, {"seed", config.seed}};
  json results = json::array();
  bool pass = true;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    SuiteRun run(config);
    fn(run);
    json sections = run.take();
    bool ok = true;
    for (const auto& s : sections) ok = ok && s["ok"].get<bool>();
    pass = pass && ok;
    results.push_back({{"name", name}, {"pass", ok}, {"sections", std::move(sections)}});
  }
  if (!found) throw Error(ErrorKind::SpecFormat, "unknown suite \"" + std::string(suite) + "\"");
  out["pass"] = pass;
  out["suites"] = std::move(results);
  return out;
}

std::string render_check_text(const json& result) {
  std::string out;
  for (const auto& s : result.at("suites")) {
    for (const auto& sec : s.at("sections")) {
      out += s.at("name").get<std::string>() + "  " + sec.at("name").get<std::string>();
      const auto expect = sec.at("expect").get<std::string>();
      if (expect != "pass") out += " (expected " + expect + ")";
      out += sec.at("ok").get<bool>() ? "  ok\n" : "  FAILED\n";
      if (!sec.at("ok").get<bool>()) {
        for (const auto& law : sec.at("report").at("laws")) {
          if (!law.at("pass").get<bool>() && law.contains("witness")) {
            out += "    " + law.at("law").get<std::string>() + ": " + law.at("witness").get<std::string>() + "\n";
          }
        }
      }
    }
  }
  out += result.at("pass").get<bool>() ? "all checks passed\n" : "some checks FAILED\n";
  return out;
}

}  // namespace ortholog
