#include <doctest.h>

#include "oracle.hpp"
#include "ortholog/error.hpp"
#include "ortholog/product.hpp"

using namespace ortholog;

namespace {

std::vector<OrthoLattice> family(std::initializer_list<const char*> names) {
  std::vector<OrthoLattice> out;
  for (const char* n : names) out.push_back(catalog_by_name(n));
  return out;
}

}  // namespace

TEST_CASE("carrier sizes") {
  CHECK(build_product(family({"B2", "B2"})).size() == 10);
  CHECK(build_product(family({"B1"})).size() == 2);
  CHECK(build_product(family({"B2", "MO2"})).size() == 16);
  CHECK(projected_carrier_size(family({"B2", "B2", "B2"})) == 28);
  CHECK_THROWS_AS(build_product({}), Error);
  try {
    (void)build_product(std::vector<OrthoLattice>(9, catalog_by_name("B2")));
    FAIL("expected CarrierTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CarrierTooLarge);
    CHECK(std::string(e.what()).find("19684") != std::string::npos);
  }
}

TEST_CASE("order, meet and embeddings agree with componentwise oracle") {
  for (const auto& fs : {family({"B2", "B2"}), family({"B2", "MO2"}), family({"MO2", "O6"}), family({"B1", "B2", "B2"})}) {
    const auto pp = build_product(fs);
    const oracle::Product op(fs);
    REQUIRE(static_cast<std::size_t>(pp.size()) == op.size());
    for (std::size_t i = 0; i < op.size(); ++i) {
      const TupleId x = op.id(pp, i);
      for (std::size_t j = 0; j < op.size(); ++j) {
        const TupleId y = op.id(pp, j);
        CHECK(pp.leq(x, y) == op.leq(i, j));
        // meet is the greatest lower bound
        const TupleId m = pp.meet(x, y);
        CHECK(pp.leq(m, x));
        CHECK(pp.leq(m, y));
        for (std::size_t k = 0; k < op.size(); ++k) {
          const TupleId z = op.id(pp, k);
          if (pp.leq(z, x) && pp.leq(z, y)) CHECK(pp.leq(z, m));
        }
      }
    }
    // every tuple is the meet of its coordinate embeddings
    for (TupleId t = 0; t < pp.size(); ++t) {
      TupleId acc = pp.top();
      for (int a = 0; a < pp.kappa(); ++a) acc = pp.meet(acc, pp.embed(a, pp.component(t, a)));
      CHECK(acc == t);
    }
  }
}

TEST_CASE("tuple examples") {
  const auto pp = build_product(family({"B2", "B2"}));
  const auto& b2 = pp.factor(0);
  const Elem a = b2.index_of("a");
  const Elem ac = b2.index_of("a'");
  const Elem one = b2.top();
  const TupleId a1 = pp.make({a, one});
  CHECK(pp.meet(a1, pp.make({ac, one})) == pp.bottom());
  CHECK(pp.meet(a1, pp.top()) == a1);
  CHECK(pp.meet(a1, pp.make({one, a})) == pp.make({a, a}));
  CHECK(pp.embed(0, a) == a1);
  CHECK(pp.embed(1, one) == pp.top());
  CHECK(pp.embed(1, b2.bottom()) == pp.bottom());
  CHECK(pp.make({a, b2.bottom()}) == pp.bottom());
  CHECK(pp.make({}) == pp.bottom());
  CHECK(pp.label(a1) == "(a,1)");
  CHECK(pp.label(pp.bottom()) == "bottom");
  CHECK(pp.component(pp.bottom(), 1) == b2.bottom());
  CHECK_THROWS_AS((void)pp.make({a}), Error);
  CHECK_THROWS_AS((void)pp.make({a, 17}), Error);
  CHECK(pp.down(a1).count() == 4);
}
