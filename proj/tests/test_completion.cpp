#include <doctest.h>

#include "oracle.hpp"
#include "ortholog/completion.hpp"

using namespace ortholog;

TEST_CASE("completion of finite lattices is an isomorphism") {
  for (const char* name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    const auto l = catalog_by_name(name);
    const auto c = event_space_completion(l);
    REQUIRE(c.iso.has_value());
    CHECK(c.completed.size() == l.size());
    CHECK(oracle::isomorphic(l, c.completed.as_lattice("c")));
    const auto r = completion_report(c, 42);
    CHECK_MESSAGE(r.passed(), r.to_json().dump());
    // every a goes to its principal down-set
    for (Elem a = 0; a < l.size(); ++a) {
      const auto& pp = c.completed.poset();
      const auto expected = a == l.bottom() ? c.completed.engine().bottom()
                                             : c.completed.engine().principal(pp.make({a}));
      CHECK(c.completed.element((*c.iso)[static_cast<std::size_t>(a)]) == expected);
    }
  }
}

TEST_CASE("distributivity transfers") {
  for (const char* name : {"B3", "MO2", "O6"}) {
    const auto l = catalog_by_name(name);
    const auto r = completion_distributivity(l);
    CHECK_MESSAGE(r.passed(), r.to_json().dump());
    const auto c = event_space_completion(l);
    CHECK(is_distributive_universal(c.completed).distributive == oracle::distributive(l));
  }
}

TEST_CASE("functoriality") {
  const auto lifted = completion_functorial(catalog_by_name("B2"), catalog_by_name("MO1"));
  CHECK(lifted.passed());
  CHECK(lifted.details.at("isomorphic") == true);
  CHECK(lifted.find("lift_star")->pass);

  const auto same = completion_functorial(catalog_by_name("O6"), catalog_by_name("O6"));
  CHECK(same.passed());

  const auto no = completion_functorial(catalog_by_name("B2"), catalog_by_name("MO2"));
  CHECK(no.details.at("isomorphic") == false);
  const auto* law = no.find("lift_is_iso");
  REQUIRE(law != nullptr);
  CHECK(law->mode == CheckMode::Skipped);
  CHECK(law->witness->find("NotIsomorphic") != std::string::npos);
}
