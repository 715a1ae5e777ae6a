#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "ortholog/error.hpp"
#include "ortholog/universal.hpp"

using namespace ortholog;

namespace {

UniversalLogic universal_of(std::vector<OrthoLattice> fs) { return enumerate_universal(make_engine(std::move(fs))); }

std::vector<OrthoLattice> power(const char* name, int kappa) {
  return std::vector<OrthoLattice>(static_cast<std::size_t>(kappa), catalog_by_name(name));
}

}  // namespace

TEST_CASE("carrier equals the oracle fixed points of **") {
  const std::vector<std::vector<OrthoLattice>> cases{power("B1", 1), power("B2", 1), power("MO2", 1), power("O6", 1),
                                                     power("B2", 2), {catalog_by_name("B1"), catalog_by_name("B2")}};
  for (const auto& fs : cases) {
    const auto u = universal_of(fs);
    const oracle::Product op(fs);
    const auto expected = oracle::universal(op);
    std::vector<oracle::Set> got;
    for (const auto& x : u.carrier()) got.push_back(oracle::from_downset(op, u.poset(), x));
    CHECK(got.size() == expected.size());
    for (const auto& s : expected) CHECK(std::find(got.begin(), got.end(), s) != got.end());

    // meet is the carrier glb, coproduct the carrier lub
    for (int x = 0; x < u.size(); ++x) {
      for (int y = 0; y < u.size(); ++y) {
        CHECK(got[static_cast<std::size_t>(u.meet(x, y))] == oracle::glb(expected, {got[static_cast<std::size_t>(x)], got[static_cast<std::size_t>(y)]}));
        CHECK(got[static_cast<std::size_t>(u.coproduct(x, y))] == oracle::lub(expected, {got[static_cast<std::size_t>(x)], got[static_cast<std::size_t>(y)]}));
      }
    }
  }
}

TEST_CASE("carrier order and small examples") {
  const auto u1 = universal_of(power("B1", 1));
  CHECK(u1.size() == 2);
  const auto u = universal_of(power("B2", 1));
  CHECK(u.size() == 4);
  CHECK(u.element(u.bottom()) == u.engine().bottom());
  CHECK(u.element(u.top()) == u.engine().top());
  CHECK(u.bottom() == 0);
  CHECK(u.top() == u.size() - 1);
  CHECK(std::is_sorted(u.carrier().begin(), u.carrier().end()));

  const auto u2 = universal_of(power("B2", 2));
  const auto& pp = u2.poset();
  const auto& b2 = pp.factor(0);
  const int a1 = u2.index_of(u2.engine().principal(pp.make({b2.index_of("a"), b2.top()})));
  const int ac1 = u2.index_of(u2.engine().principal(pp.make({b2.index_of("a'"), b2.top()})));
  CHECK(u2.coproduct(a1, ac1) == u2.top());
  CHECK(u2.coproduct(a1, u2.bottom()) == a1);
  CHECK(u2.describe(a1) == "{(a,1)}");
  for (int x = 0; x < u2.size(); ++x) {
    CHECK(u2.coproduct(x, u2.star(x)) == u2.top());
    CHECK(u2.meet(x, u2.star(x)) == u2.bottom());
    // generated by the principals of its own antichain
    std::vector<DownSet> parts;
    for (TupleId t : u2.engine().maximals(u2.element(x)).members) parts.push_back(u2.engine().principal(t));
    CHECK(u2.coproduct(parts) == u2.element(x));
  }
  CHECK_THROWS_AS((void)u2.index_of(u2.engine().djoin(u2.element(a1), u2.element(ac1))), Error);
  CHECK(u2.export_antichains().size() == static_cast<std::size_t>(u2.size()));
}

TEST_CASE("image of star lands in the carrier") {
  const auto u = universal_of(power("MO2", 2));
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto y = u.engine().random_downset(rng);
    CHECK(u.find(u.engine().star(y)).has_value());
  }
}

TEST_CASE("logic axioms and the negative control") {
  VerifyOptions opts;
  opts.seed = 42;
  for (const auto& fs : {power("B2", 1), power("MO2", 2), power("O6", 2)}) {
    const auto r = verify_logic_axioms(universal_of(fs), opts);
    CHECK_MESSAGE(r.passed(), r.to_json().dump());
    CHECK(r.find("de_morgan_coproduct")->checked >= 200);
  }
  const auto u = universal_of(power("B2", 2));
  auto members = u.carrier();
  members.erase(members.begin() + 5);
  const auto mutated = UniversalLogic::from_carrier(u.engine_ptr(), members);
  const auto r = verify_logic_axioms(mutated, opts);
  CHECK_FALSE(r.passed());
  const auto* meet = r.find("closed_under_meet");
  REQUIRE(meet != nullptr);
  CHECK_FALSE(meet->pass);
  CHECK(meet->witness.has_value());
}

TEST_CASE("U_[1](E) is isomorphic to E") {
  for (const char* name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    const auto e = catalog_by_name(name);
    const auto iso = check_u1_iso(e);
    CHECK(iso.size() == static_cast<std::size_t>(e.size()));
    const auto u = universal_of({e});
    CHECK(oracle::isomorphic(e, u.as_lattice("u")));
  }
}

TEST_CASE("distributivity of U follows the factor") {
  CHECK(is_distributive_universal(universal_of(power("B2", 2))).distributive);
  CHECK(is_distributive_universal(universal_of(power("B1", 3))).distributive);
  const auto mo = universal_of(power("MO2", 2));
  const auto r = is_distributive_universal(mo);
  REQUIRE_FALSE(r.distributive);
  REQUIRE(r.witness);
  const auto [a, b, c] = *r.witness;
  CHECK(is_distributivity_witness(mo, a, b, c));
  CHECK(mo.meet(a, mo.coproduct(b, c)) != mo.coproduct(mo.meet(a, b), mo.meet(a, c)));
  // the factor witness lifted through x -> (x,1)
  const auto& pp = mo.poset();
  const auto& f = pp.factor(0);
  auto lift = [&](const char* l) { return mo.index_of(mo.engine().principal(pp.embed(0, f.index_of(l)))); };
  CHECK(is_distributivity_witness(mo, lift("q"), lift("p"), lift("p'")));
  // agrees with the oracle on a brute-force scan of the small case
  const auto small = universal_of(power("O6", 1));
  CHECK(is_distributive_universal(small).distributive == oracle::distributive(small.as_lattice("o6")));
}

TEST_CASE("p-algebra laws") {
  PAlgebraOptions opts;
  opts.seed = 1;
  const auto good = verify_p_algebra(universal_of(power("B2", 2)), opts);
  CHECK_MESSAGE(good.passed(), good.to_json().dump());
  CHECK(good.find("infinite_distributive")->mode != CheckMode::Skipped);
  const auto bad = verify_p_algebra(universal_of(power("MO2", 1)), opts);
  const auto* first = bad.find("pseudo_complement_meet");
  REQUIRE(first != nullptr);
  CHECK_FALSE(first->pass);
  CHECK(first->witness.has_value());
  CHECK(bad.find("pseudo_complement_zero")->pass);
}

TEST_CASE("enumeration limits") {
  UniversalOptions opts;
  opts.limit = 20;
  try {
    (void)enumerate_universal(make_engine(power("MO2", 2)), opts);
    FAIL("expected UniversalTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UniversalTooLarge);
  }
  ProductOptions po;
  po.max_carrier = 8;
  CHECK_THROWS_AS((void)make_engine(power("B2", 2), po), Error);
}
