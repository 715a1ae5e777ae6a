#include <doctest.h>

#include <functional>
#include <set>

#include "oracle.hpp"
#include "ortholog/bits.hpp"
#include "ortholog/error.hpp"
#include "ortholog/lattice.hpp"
#include "ortholog/rng.hpp"
#include "ortholog/spec_io.hpp"

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

LatticeSpec spec_of(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> covers,
                    std::vector<std::pair<std::string, std::string>> ortho) {
  LatticeSpec s;
  s.name = "t";
  s.elements = std::move(elements);
  s.relation = std::move(covers);
  s.ortho = std::move(ortho);
  return s;
}

}  // namespace

TEST_CASE("bits: set algebra across word boundaries") {
  Bits a(130);
  Bits b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  CHECK(a.count() == 3);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b) == b);
  CHECK((a - b).count() == 2);
  CHECK((~a).count() == 127);
  CHECK((a | ~a).all());
  CHECK(a.indices() == std::vector<std::size_t>{0, 64, 129});
  CHECK(b.first() == 64);
  CHECK(Bits(10).first() == 10);
  // numeric order: highest bit dominates
  Bits lo(130);
  lo.set(128);
  CHECK(lo < a);
  CHECK(Bits(130) < lo);
  CHECK(a.hash() != b.hash());
}

TEST_CASE("rng: reproducible and in range") {
  Rng r1(7);
  Rng r2(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = r1.below(6);
    CHECK(x == r2.below(6));
    CHECK(x < 6);
    seen.insert(x);
  }
  CHECK(seen.size() == 6);
  CHECK(Rng(1).next() != Rng(2).next());
}

TEST_CASE("error messages carry the kind") {
  const Error e(ErrorKind::CarrierTooLarge, "boom");
  CHECK(std::string(e.what()) == "CarrierTooLarge: boom");
  CHECK(e.detail() == "boom");
  const SyntaxError s(1, 4, "label");
  CHECK(s.kind() == ErrorKind::SyntaxError);
  CHECK(std::string(s.what()).find("line 1, col 4: expected label") != std::string::npos);
}

TEST_CASE("catalog lattices") {
  CHECK(catalog_by_name("B1").size() == 2);
  CHECK(catalog_by_name("B2").size() == 4);
  CHECK(catalog_by_name("B3").size() == 8);
  CHECK(catalog_by_name("MO2").size() == 6);
  CHECK(catalog_by_name("MO3").size() == 8);
  CHECK(catalog_by_name("O6").size() == 6);
  CHECK(catalog_by_name("chain2").same_structure(catalog_by_name("B1")));
  CHECK(kind_of([] { (void)catalog_by_name("B9"); }) == ErrorKind::ParamTooLarge);
  CHECK(kind_of([] { (void)catalog_by_name("Q7"); }) == ErrorKind::SpecFormat);

  const auto b2 = catalog_by_name("B2");
  CHECK(b2.ortho(b2.index_of("a")) == b2.index_of("a'"));
  CHECK(b2.realization().has_value());
  CHECK_FALSE(catalog_by_name("MO2").realization().has_value());
  CHECK(kind_of([&] { (void)b2.index_of("zz"); }) == ErrorKind::UnknownLabel);
}

TEST_CASE("lattice tables agree with the order") {
  for (const char* name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    const auto l = catalog_by_name(name);
    for (Elem x = 0; x < l.size(); ++x) {
      CHECK(l.leq(l.bottom(), x));
      CHECK(l.leq(x, l.top()));
      CHECK(l.meet(x, l.ortho(x)) == l.bottom());
      CHECK(l.join(x, l.ortho(x)) == l.top());
      for (Elem y = 0; y < l.size(); ++y) {
        const Elem j = l.join(x, y);
        const Elem m = l.meet(x, y);
        CHECK(l.leq(x, j));
        CHECK(l.leq(y, j));
        CHECK(l.leq(m, x));
        CHECK(l.leq(m, y));
        // least upper bound by brute force
        for (Elem z = 0; z < l.size(); ++z) {
          if (l.leq(x, z) && l.leq(y, z)) CHECK(l.leq(j, z));
          if (l.leq(z, x) && l.leq(z, y)) CHECK(l.leq(z, m));
        }
      }
    }
  }
}

TEST_CASE("distributivity and orthomodularity") {
  CHECK(is_distributive(catalog_by_name("B3")).distributive);
  const auto mo2 = catalog_by_name("MO2");
  const auto r = is_distributive(mo2);
  REQUIRE_FALSE(r.distributive);
  REQUIRE(r.witness);
  const auto& w = *r.witness;
  CHECK(mo2.meet(w.a, mo2.join(w.b, w.c)) == w.lhs);
  CHECK(mo2.join(mo2.meet(w.a, w.b), mo2.meet(w.a, w.c)) == w.rhs);
  CHECK(w.lhs != w.rhs);
  for (const char* name : {"B1", "B2", "B3", "MO2", "MO3", "O6"}) {
    const auto l = catalog_by_name(name);
    CHECK(is_distributive(l).distributive == oracle::distributive(l));
  }
  CHECK(is_orthomodular(mo2));
  CHECK_FALSE(is_orthomodular(catalog_by_name("O6")));
}

TEST_CASE("validate rejects malformed lattices") {
  // a cycle
  CHECK(kind_of([] {
          (void)validate(spec_of({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}},
                                 {{"0", "1"}, {"a", "b"}}));
        }) == ErrorKind::NotAPoset);
  // bowtie: a, b both below c and d
  CHECK(kind_of([] {
          (void)validate(spec_of({"0", "a", "b", "c", "d", "1"},
                                 {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"},
                                  {"d", "1"}},
                                 {{"0", "1"}, {"a", "d"}, {"b", "c"}}));
        }) == ErrorKind::NotALattice);
  // N5 has no orthocomplementation; this candidate breaks order reversal
  CHECK(kind_of([] {
          (void)validate(spec_of({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}},
                                 {{"0", "1"}, {"a", "c"}, {"b", "b"}}));
        }) == ErrorKind::BadOrtho);
  // missing ortho
  CHECK(kind_of([] { (void)validate(spec_of({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, {{"0", "1"}})); }) ==
        ErrorKind::BadOrtho);
  CHECK(kind_of([] { (void)validate(spec_of({"0", "1"}, {{"0", "x"}}, {{"0", "1"}})); }) == ErrorKind::UnknownLabel);
  CHECK(kind_of([] { (void)validate(spec_of({"0", "0"}, {}, {})); }) == ErrorKind::SpecFormat);
  CHECK(kind_of([] { (void)validate(spec_of({"0"}, {}, {{"0", "0"}})); }) == ErrorKind::SpecFormat);
  // conflicting ortho images
  CHECK(kind_of([] {
          (void)validate(spec_of({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
                                 {{"0", "1"}, {"a", "b"}, {"b", "0"}}));
        }) == ErrorKind::BadOrtho);
}

TEST_CASE("partial ortho maps complete by symmetry") {
  const auto l = validate(spec_of({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
                                  {{"0", "1"}, {"a", "b"}}));
  CHECK(l.ortho(l.index_of("b")) == l.index_of("a"));
  CHECK(l.ortho(l.index_of("1")) == l.index_of("0"));
  CHECK(find_iso(l, catalog_by_name("B2")).has_value());
}

TEST_CASE("find_iso against permutation search") {
  const std::vector<std::string> names{"B1", "B2", "B3", "MO1", "MO2", "MO3", "O6"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      const auto la = catalog_by_name(a);
      const auto lb = catalog_by_name(b);
      const auto iso = find_iso(la, lb);
      CHECK_MESSAGE(iso.has_value() == oracle::isomorphic(la, lb), a << " vs " << b);
      if (iso) CHECK(is_ortho_iso(la, lb, *iso));
    }
  }
  CHECK(find_iso(catalog_by_name("B2"), catalog_by_name("MO1")).has_value());
  CHECK_FALSE(find_iso(catalog_by_name("B2"), catalog_by_name("MO2")).has_value());
}

TEST_CASE("spec json round trip and format errors") {
  for (const char* name : {"B2", "B3", "MO2", "O6"}) {
    const auto l = catalog_by_name(name);
    const auto back = validate(parse_lattice_spec(to_json(l)));
    CHECK(back.same_structure(l));
  }
  using nlohmann::json;
  const auto both = json::parse(R"({"name": "x", "elements": ["0", "1"], "leq": [], "covers": [], "ortho": {"0": "1"}})");
  CHECK(kind_of([&] { (void)parse_lattice_spec(both); }) == ErrorKind::SpecFormat);
  const auto extra =
      json::parse(R"({"name": "x", "elements": ["0", "1"], "covers": [["0", "1"]], "ortho": {"0": "1"}, "colour": 1})");
  CHECK(kind_of([&] { (void)parse_lattice_spec(extra); }) == ErrorKind::SpecFormat);
  const auto wrong_type = json::parse(R"({"name": "x", "elements": ["0", "1"], "covers": {"0": "1"}, "ortho": {"0": "1"}})");
  CHECK(kind_of([&] { (void)parse_lattice_spec(wrong_type); }) == ErrorKind::SpecFormat);
  const auto bad_key = json::parse(R"({"name": "x", "elements": ["0", "1"], "covers": [["0", "1"]], "ortho": {"z": "1"}})");
  CHECK(kind_of([&] { (void)validate(parse_lattice_spec(bad_key)); }) == ErrorKind::UnknownLabel);
  const auto leq = json::parse(R"({"name": "c", "elements": ["0", "1"], "leq": [["0", "1"]], "ortho": {"0": "1"}})");
  CHECK(validate(parse_lattice_spec(leq)).same_structure(catalog_by_name("B1")));
  CHECK(kind_of([] { (void)load_lattice("/nonexistent/spec.json"); }) == ErrorKind::SpecFormat);
}

TEST_CASE("dot export") {
  const auto dot = export_dot(catalog_by_name("MO2"));
  CHECK(dot.find("digraph \"MO2\"") == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("tooltip=\"ortho: p'\"") != std::string::npos);
  auto count = [](const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count(dot, "->") == 8);
  CHECK(count(dot, "[label=") == 6);
  CHECK(count(export_dot(catalog_by_name("B1")), "->") == 1);
  CHECK(count(export_dot(catalog_by_name("B2")), "->") == 4);
}

TEST_CASE("small join and meet facts") {
  const auto b2 = catalog_by_name("B2");
  CHECK(b2.join(b2.index_of("a"), b2.index_of("a'")) == b2.top());
  CHECK(b2.meet(b2.index_of("a"), b2.index_of("a'")) == b2.bottom());
  const auto mo2 = catalog_by_name("MO2");
  const Elem p = mo2.index_of("p");
  const Elem q = mo2.index_of("q");
  CHECK(mo2.meet(p, q) == mo2.bottom());
  CHECK(mo2.join(p, q) == mo2.top());
  // q ∧ (p ∨ p') = q, (q ∧ p) ∨ (q ∧ p') = 0
  const Elem pc = mo2.index_of("p'");
  CHECK(mo2.meet(q, mo2.join(p, pc)) == q);
  CHECK(mo2.join(mo2.meet(q, p), mo2.meet(q, pc)) == mo2.bottom());
  CHECK_FALSE(is_distributive(catalog_by_name("O6")).distributive);
  for (const char* name : {"B1", "B2", "B3", "B4", "MO2", "MO3", "O6"}) {
    const auto l = catalog_by_name(name);
    for (Elem x = 0; x < l.size(); ++x) {
      CHECK(l.join(x, l.bottom()) == x);
      for (Elem y = 0; y < l.size(); ++y) CHECK(l.ortho(l.join(x, y)) == l.meet(l.ortho(x), l.ortho(y)));
    }
  }
  CHECK(is_distributive(catalog_by_name("B4")).distributive);
  CHECK_FALSE(is_distributive(catalog_by_name("MO5")).distributive);
}
