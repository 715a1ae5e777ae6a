#include <doctest.h>

#include <functional>
#include <set>

#include "ortholog/classical.hpp"
#include "ortholog/error.hpp"
#include "ortholog/universal.hpp"

using namespace ortholog;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ortholog::Error");
  return ErrorKind::SpecFormat;
}

// B1 realized on two points: 0 -> {}, 1 -> {0,1}. A sub-powerset model.
OrthoLattice b1_on_two_points() {
  return catalog_by_name("B1").with_realization(SubsetRealization{2, {0b00, 0b11}});
}

}  // namespace

TEST_CASE("algebra sizes") {
  CHECK(build_classical(catalog_by_name("B2"), 2).size() == 16);
  CHECK(build_classical(catalog_by_name("B1"), 1).size() == 2);
  CHECK(build_classical(catalog_by_name("B2"), 1).size() == 4);
  CHECK(build_classical(catalog_by_name("B3"), 2).size() == 512);
  // boxes of a two-point B1 are only the empty set and everything
  CHECK(build_classical(b1_on_two_points(), 2).size() == 2);
  for (const auto& ca : {build_classical(catalog_by_name("B2"), 2), build_classical(b1_on_two_points(), 2)}) {
    const auto r = verify_classical(ca);
    CHECK_MESSAGE(r.passed(), r.to_json().dump());
  }
}

TEST_CASE("input errors") {
  CHECK(kind_of([] { (void)build_classical(catalog_by_name("MO2"), 2); }) == ErrorKind::MismatchedInputs);
  CHECK(kind_of([] { (void)build_classical(catalog_by_name("B4"), 3); }) == ErrorKind::GroundTooLarge);
  const auto u = enumerate_universal(make_engine({catalog_by_name("B2"), catalog_by_name("B2")}));
  const auto ca3 = build_classical(catalog_by_name("B2"), 3);
  CHECK(kind_of([&] { (void)epimorphism_e(u, ca3); }) == ErrorKind::MismatchedInputs);
}

TEST_CASE("boxes and labels") {
  const GroundModel g(catalog_by_name("B2"), 2);
  const auto& e = g.lattice();
  CHECK(g.points() == 4);
  const std::vector<Elem> a_top{e.index_of("a"), e.top()};
  const auto box = g.box(a_top);
  CHECK(box.count() == 2);
  CHECK(g.box(std::vector<Elem>{}).none());
  CHECK(g.box(std::vector<Elem>{e.top(), e.top()}).all());
  CHECK(g.point_label(1) == "(0,1)");
  CHECK(g.describe(g.empty()) == "{}");
}

TEST_CASE("complement expansion") {
  const auto ca = build_classical(catalog_by_name("B2"), 2);
  const auto& g = ca.ground();
  const auto& e = g.lattice();
  const Elem a = e.index_of("a");
  const Elem ac = e.index_of("a'");
  const Elem one = e.top();
  // one box: complement is (a' x S)
  CHECK(complement_expansion(g, {{a, one}}) == g.box(std::vector<Elem>{ac, one}));
  CHECK(complement_expansion(g, {}) == g.all());
  CHECK(complement_expansion(g, std::vector<std::vector<Elem>>{std::vector<Elem>{}}) == g.all());
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::vector<Elem>> boxes;
    for (int j = 0; j < 3; ++j) {
      boxes.push_back({static_cast<Elem>(rng.below(4)), static_cast<Elem>(rng.below(4))});
    }
    CHECK(verify_complement(ca, boxes));
  }
  ExpansionOptions tiny;
  tiny.max_expansion = 3;
  CHECK(kind_of([&] { (void)complement_expansion(g, {{a, a}, {ac, ac}, {a, ac}}, tiny); }) ==
        ErrorKind::ExpansionTooLarge);
}

TEST_CASE("the epimorphism onto the classical algebra") {
  const auto u = enumerate_universal(make_engine({catalog_by_name("B2"), catalog_by_name("B2")}));
  const auto ca = build_classical(catalog_by_name("B2"), 2);
  EpimorphismOptions opts;
  opts.seed = 42;
  const auto epi = epimorphism_e(u, ca, opts);
  CHECK_MESSAGE(epi.report.passed(), epi.report.to_json().dump());
  CHECK(epi.report.find("preserves_coproduct")->checked >= 200);
  std::set<Bits> image(epi.table.begin(), epi.table.end());
  CHECK(image.size() == 16);
  const auto& pp = u.poset();
  for (TupleId t = 0; t < pp.size(); ++t) {
    const int idx = u.index_of(u.engine().principal(t));
    CHECK(epi.table[static_cast<std::size_t>(idx)] == ca.ground().box(pp, t));
  }
  const auto& e = pp.factor(0);
  const int a1 = u.index_of(u.engine().principal(pp.make({e.index_of("a"), e.top()})));
  const int ac1 = u.index_of(u.engine().principal(pp.make({e.index_of("a'"), e.top()})));
  CHECK(epi.table[static_cast<std::size_t>(u.coproduct(a1, ac1))] == ca.ground().all());
  CHECK((epi.table[static_cast<std::size_t>(a1)] | epi.table[static_cast<std::size_t>(ac1)]) == ca.ground().all());
}
