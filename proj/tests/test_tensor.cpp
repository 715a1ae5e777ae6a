#include <doctest.h>

#include "oracle.hpp"
#include "ortholog/classical.hpp"
#include "ortholog/error.hpp"
#include "ortholog/spec_io.hpp"
#include "ortholog/tensor.hpp"

using namespace ortholog;

namespace {

std::vector<OrthoLattice> family(std::initializer_list<const char*> names) {
  std::vector<OrthoLattice> out;
  for (const char* n : names) out.push_back(catalog_by_name(n));
  return out;
}

}  // namespace

TEST_CASE("equal factors give the repeated-experiment logic") {
  for (const char* name : {"B2", "MO2"}) {
    const auto tl = build_tensor(family({name, name}));
    const auto u = enumerate_universal(make_engine(family({name, name})));
    CHECK(tl.carrier() == u.carrier());
  }
  const auto b1mo2 = build_tensor(family({"B1", "MO2"}));
  CHECK(find_iso(b1mo2.as_lattice("t"), catalog_by_name("MO2")).has_value());
  const auto mixed = build_tensor(family({"B2", "MO2"}));
  CHECK(verify_logic_axioms(mixed).passed());
}

TEST_CASE("coordinate embeddings") {
  for (const auto& fs : {family({"B2", "B2"}), family({"B2", "MO2"})}) {
    const auto tl = build_tensor(fs);
    const auto r = verify_i_alpha(tl);
    CHECK_MESSAGE(r.passed(), r.to_json().dump());
    const auto ju = verify_prop_ju(tl);
    CHECK_MESSAGE(ju.passed(), ju.to_json().dump());
    CHECK(ju.laws.front().mode == CheckMode::Exhaustive);
  }
  const auto tl = build_tensor(family({"B2", "B2"}));
  const auto& b2 = tl.poset().factor(0);
  const int ia = i_alpha(tl, 0, b2.index_of("a"));
  const int iac = i_alpha(tl, 0, b2.index_of("a'"));
  CHECK(tl.coproduct(ia, iac) == tl.top());
  CHECK(tl.meet(ia, iac) == tl.bottom());
  CHECK(i_alpha(tl, 1, b2.top()) == tl.top());
  CHECK(i_alpha(tl, 1, b2.bottom()) == tl.bottom());
  // (a,1) ∨ (1,a') is already closed
  const auto j = tl.engine().djoin(tl.element(ia), tl.element(i_alpha(tl, 1, b2.index_of("a'"))));
  CHECK(tl.find(j).has_value());
  CHECK(tl.engine().closure(j) == j);
}

TEST_CASE("meet-join distributive families") {
  const auto b2 = catalog_by_name("B2");
  std::vector<std::vector<Elem>> pairs;
  for (Elem x = 0; x < b2.size(); ++x) {
    for (Elem y = x; y < b2.size(); ++y) pairs.push_back({x, y});
  }
  // any two sets in a Boolean lattice
  for (const auto& s : pairs) {
    for (const auto& t : pairs) CHECK(check_mj_distributive(b2, {s, t}).holds);
  }
  const auto mo2 = catalog_by_name("MO2");
  auto l = [&](const char* s) { return mo2.index_of(s); };
  const auto bad = check_mj_distributive(mo2, {{l("p"), l("q")}, {l("p'"), l("q'")}});
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness.has_value());

  const auto tl = build_tensor(family({"B2", "B2"}));
  const auto ident = identity_target(tl);
  CHECK(check_mj_distributive(ident.target, embedding_family(tl.poset(), ident)).holds);
}

TEST_CASE("universal morphism") {
  const auto tl = build_tensor(family({"B2", "B2"}));
  MorphismOptions opts;
  opts.seed = 42;
  const auto id = universal_morphism(tl, identity_target(tl), opts);
  CHECK_MESSAGE(id.report.passed(), id.report.to_json().dump());
  for (int x = 0; x < tl.size(); ++x) CHECK(id.table[static_cast<std::size_t>(x)] == x);

  const auto ca = build_classical(catalog_by_name("B2"), 2);
  const auto target = classical_target(ca);
  const auto t = universal_morphism(tl, target, opts);
  CHECK_MESSAGE(t.report.passed(), t.report.to_json().dump());
  CHECK(t.report.find("generation")->pass);
  const auto epi = epimorphism_e(tl, ca);
  for (int x = 0; x < tl.size(); ++x) {
    CHECK(ca.member(t.table[static_cast<std::size_t>(x)]) == epi.table[static_cast<std::size_t>(x)]);
  }
  CHECK(t.table[static_cast<std::size_t>(tl.bottom())] == target.target.bottom());
  CHECK(t.table[static_cast<std::size_t>(tl.top())] == target.target.top());
}

TEST_CASE("targets that break the embedding laws are refused") {
  const auto fs = family({"B1", "MO2"});
  const auto tl = build_tensor(fs);
  // MO2 sent into B2 cannot be injective
  const nlohmann::json j = {{"target", to_json(catalog_by_name("B2"))},
                            {"embeddings",
                             {{{"0", "0"}, {"1", "1"}},
                              {{"0", "0"}, {"p", "a"}, {"p'", "a'"}, {"q", "a"}, {"q'", "a'"}, {"1", "1"}}}}};
  const auto pair = parse_target_pair(j, fs);
  CHECK_FALSE(verify_target_pair(tl.poset(), pair).passed());
  try {
    (void)universal_morphism(tl, pair);
    FAIL("expected TargetInvariantFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TargetInvariantFailure);
  }
  nlohmann::json missing = j;
  missing["embeddings"][1].erase("q'");
  CHECK_THROWS_AS((void)parse_target_pair(missing, fs), Error);
  nlohmann::json extra = j;
  extra["colour"] = 1;
  CHECK_THROWS_AS((void)parse_target_pair(extra, fs), Error);
}
