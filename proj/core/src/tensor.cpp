#include "ortholog/tensor.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "ortholog/error.hpp"
#include "ortholog/rng.hpp"
#include "ortholog/spec_io.hpp"

namespace ortholog {

TensorLogic build_tensor(std::vector<OrthoLattice> factors, const TensorOptions& options) {
  return enumerate_universal(make_engine(std::move(factors), options.product, options.engine), options.universal);
}

int i_alpha(const TensorLogic& tl, int alpha, Elem a) {
  return tl.index_of(tl.engine().principal(tl.poset().embed(alpha, a)));
}

namespace {

std::string set_text(const OrthoLattice& t, const std::vector<Elem>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ", ";
    out += t.label(s[i]);
  }
  return out + "}";
}

// Pairs of carrier indices, all of them or a seeded sample.
std::vector<std::pair<int, int>> carrier_pairs(int n, int threshold, int samples, Rng& rng, CheckMode& mode) {
  std::vector<std::pair<int, int>> pairs;
  if (n <= threshold) {
    mode = CheckMode::Exhaustive;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
  }
  mode = CheckMode::Sampled;
  for (int s = 0; s < samples; ++s) {
    pairs.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                       static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
  }
  return pairs;
}

}  // namespace

Report verify_i_alpha(const TensorLogic& tl) {
  const auto& p = tl.poset();
  Report report;
  report.title = "i_alpha embeddings";
  LawCheck carrier(report, "in_carrier", CheckMode::Exhaustive);
  std::vector<std::vector<int>> maps(static_cast<std::size_t>(p.kappa()));
  for (int alpha = 0; alpha < p.kappa(); ++alpha) {
    const auto& e = p.factor(alpha);
    for (Elem a = 0; a < e.size(); ++a) {
      auto idx = tl.find(tl.engine().principal(p.embed(alpha, a)));
      carrier.expect(idx.has_value(), [&] { return "i_" + std::to_string(alpha) + "(" + e.label(a) + ") not in carrier"; });
      maps[static_cast<std::size_t>(alpha)].push_back(idx.value_or(-1));
    }
  }
  if (carrier.failed()) return report;

  LawCheck injective(report, "injective", CheckMode::Exhaustive);
  LawCheck bounds(report, "bounds", CheckMode::Exhaustive);
  LawCheck ortho(report, "ortho_to_star", CheckMode::Exhaustive);
  LawCheck meets(report, "meets", CheckMode::Exhaustive);
  LawCheck joins(report, "joins_to_coproducts", CheckMode::Exhaustive);
  LawCheck triples(report, "triple_joins", CheckMode::Exhaustive);
  for (int alpha = 0; alpha < p.kappa(); ++alpha) {
    const auto& e = p.factor(alpha);
    const auto& i = maps[static_cast<std::size_t>(alpha)];
    auto at = [&](Elem a) { return i[static_cast<std::size_t>(a)]; };
    auto name = [&](Elem a) { return "i_" + std::to_string(alpha) + "(" + e.label(a) + ")"; };
    bounds.expect(at(e.bottom()) == tl.bottom(), [&] { return name(e.bottom()) + " is not bottom"; });
    bounds.expect(at(e.top()) == tl.top(), [&] { return name(e.top()) + " is not top"; });
    for (Elem a = 0; a < e.size(); ++a) {
      ortho.expect(tl.star(at(a)) == at(e.ortho(a)), [&] { return name(a) + "* != " + name(e.ortho(a)); });
      for (Elem b = 0; b < e.size(); ++b) {
        if (a < b) injective.expect(at(a) != at(b), [&] { return name(a) + " = " + name(b); });
        meets.expect(tl.meet(at(a), at(b)) == at(e.meet(a, b)),
                     [&] { return name(a) + " ∧ " + name(b) + " != " + name(e.meet(a, b)); });
        joins.expect(tl.coproduct(at(a), at(b)) == at(e.join(a, b)),
                     [&] { return name(a) + " ∐ " + name(b) + " != " + name(e.join(a, b)); });
        for (Elem c = b + 1; c < e.size(); ++c) {
          if (a >= b) continue;
          const std::array<int, 3> xs{at(a), at(b), at(c)};
          const Elem j = e.join(e.join(a, b), c);
          triples.expect(tl.coproduct(std::span<const int>(xs)) == at(j),
                         [&] { return "∐{" + name(a) + ", " + name(b) + ", " + name(c) + "} != " + name(j); });
        }
      }
    }
  }
  return report;
}

Report verify_prop_ju(const TensorLogic& tl) {
  const auto& p = tl.poset();
  const auto& eng = tl.engine();
  Report report;
  report.title = "coordinate joins";
  LawCheck law(report, "join_is_closed", CheckMode::Exhaustive);
  const unsigned subsets = 1U << static_cast<unsigned>(p.kappa());
  for (TupleId a = 0; a < p.size(); ++a) {
    for (unsigned j = 0; j < subsets; ++j) {
      std::vector<DownSet> parts;
      for (int alpha = 0; alpha < p.kappa(); ++alpha) {
        if ((j >> static_cast<unsigned>(alpha)) & 1U) {
          parts.push_back(eng.principal(p.embed(alpha, p.component(a, alpha))));
        }
      }
      const auto d = eng.djoin(parts);
      if (!law.expect(eng.closure(d) == d, [&] {
            return "A = " + p.label(a) + ", J mask " + std::to_string(j) + ": join " + tl.describe(d) + " not closed";
          })) {
        return report;
      }
    }
  }
  return report;
}

MjResult check_mj_distributive(const OrthoLattice& t, const std::vector<std::vector<Elem>>& family,
                               const MjOptions& options) {
  // Work on the family as a set of sets.
  std::vector<std::vector<Elem>> sets;
  for (auto s : family) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const int m = static_cast<int>(sets.size());

  MjResult out;
  auto check = [&](const std::vector<int>& sub) {
    std::uint64_t total = 1;
    Elem lhs = t.top();
    for (int k : sub) {
      const auto& s = sets[static_cast<std::size_t>(k)];
      Elem j = t.bottom();
      for (Elem x : s) j = t.join(j, x);
      lhs = t.meet(lhs, j);
      if (s.empty()) {
        total = 0;
      } else if (total > options.max_expansion / s.size()) {
        throw Error(ErrorKind::ExpansionTooLarge,
                    "subfamily has more than " + std::to_string(options.max_expansion) + " choice functions");
      } else {
        total *= s.size();
      }
    }
    Elem rhs = t.bottom();
    if (total != 0) {
      std::vector<std::size_t> f(sub.size(), 0);
      for (;;) {
        Elem im = t.top();
        for (std::size_t k = 0; k < sub.size(); ++k) im = t.meet(im, sets[static_cast<std::size_t>(sub[k])][f[k]]);
        rhs = t.join(rhs, im);
        std::size_t k = sub.size();
        while (k > 0 && ++f[k - 1] == sets[static_cast<std::size_t>(sub[k - 1])].size()) f[--k] = 0;
        if (k == 0) break;
      }
    }
    ++out.subfamilies;
    if (lhs != rhs && out.holds) {
      out.holds = false;
      std::string w = "subfamily {";
      for (std::size_t k = 0; k < sub.size(); ++k) {
        if (k != 0) w += ", ";
        w += set_text(t, sets[static_cast<std::size_t>(sub[k])]);
      }
      out.witness = w + "}: meet of joins = " + t.label(lhs) + ", join of choice meets = " + t.label(rhs);
    }
  };

  std::vector<int> sub;
  if (m <= options.exhaustive_max_family) {
    out.mode = CheckMode::Exhaustive;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m) && out.holds; ++mask) {
      sub.clear();
      for (int k = 0; k < m; ++k) {
        if ((mask >> k) & 1U) sub.push_back(k);
      }
      check(sub);
    }
    return out;
  }
  out.mode = CheckMode::Sampled;
  Rng rng(options.seed);
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int s = 0; s < options.samples && out.holds; ++s) {
    std::iota(order.begin(), order.end(), 0);
    const auto k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(m, options.max_sample_size))));
    for (int i = 0; i < k; ++i) {
      const auto r = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
      std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(r)]);
    }
    sub.assign(order.begin(), order.begin() + k);
    std::sort(sub.begin(), sub.end());
    check(sub);
  }
  return out;
}

TargetPair parse_target_pair(const nlohmann::json& j, const std::vector<OrthoLattice>& factors) {
  if (!j.is_object()) throw Error(ErrorKind::SpecFormat, "target pair must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "target" && key != "embeddings") throw Error(ErrorKind::SpecFormat, "unknown key \"" + key + "\"");
  }
  if (!j.contains("target") || !j.contains("embeddings")) {
    throw Error(ErrorKind::SpecFormat, "target pair needs \"target\" and \"embeddings\"");
  }
  TargetPair pair{validate(parse_lattice_spec(j.at("target"))), {}};
  const auto& emb = j.at("embeddings");
  if (!emb.is_array() || emb.size() != factors.size()) {
    throw Error(ErrorKind::SpecFormat, "\"embeddings\" must list one map per factor (" +
                                           std::to_string(factors.size()) + ")");
  }
  for (std::size_t alpha = 0; alpha < factors.size(); ++alpha) {
    const auto& e = factors[alpha];
    const auto& map = emb[alpha];
    if (!map.is_object()) throw Error(ErrorKind::SpecFormat, "embedding " + std::to_string(alpha) + " must be an object");
    std::vector<Elem> table(static_cast<std::size_t>(e.size()), -1);
    for (const auto& [from, to] : map.items()) {
      if (!to.is_string()) throw Error(ErrorKind::SpecFormat, "embedding values must be labels");
      table[static_cast<std::size_t>(e.index_of(from))] = pair.target.index_of(to.get<std::string>());
    }
    for (Elem a = 0; a < e.size(); ++a) {
      if (table[static_cast<std::size_t>(a)] < 0) {
        throw Error(ErrorKind::SpecFormat, "embedding " + std::to_string(alpha) + " misses " + e.label(a));
      }
    }
    pair.embeddings.push_back(std::move(table));
  }
  return pair;
}

TargetPair load_target_pair(const std::filesystem::path& path, const std::vector<OrthoLattice>& factors) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SpecFormat, path.string() + ": cannot open");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorKind::SpecFormat, path.string() + ": " + ex.what());
  }
  try {
    return parse_target_pair(j, factors);
  } catch (const Error& ex) {
    throw Error(ex.kind(), path.string() + ": " + ex.detail());
  }
}

std::vector<std::vector<Elem>> embedding_family(const ProductPoset& p, const TargetPair& pair) {
  std::vector<std::vector<Elem>> out;
  for (TupleId a = 0; a < p.size(); ++a) {
    std::vector<Elem> s;
    for (int alpha = 0; alpha < p.kappa(); ++alpha) {
      s.push_back(pair.embeddings[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(p.component(a, alpha))]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

TargetPair identity_target(const TensorLogic& tl) {
  TargetPair pair{tl.as_lattice("tensor"), {}};
  const auto& p = tl.poset();
  for (int alpha = 0; alpha < p.kappa(); ++alpha) {
    std::vector<Elem> table;
    for (Elem a = 0; a < p.factor(alpha).size(); ++a) table.push_back(i_alpha(tl, alpha, a));
    pair.embeddings.push_back(std::move(table));
  }
  return pair;
}

TargetPair classical_target(const ClassicalAlgebra& ca) {
  const auto& g = ca.ground();
  const auto& e = g.lattice();
  TargetPair pair{ca.as_lattice("classical"), {}};
  for (int alpha = 0; alpha < g.kappa(); ++alpha) {
    std::vector<Elem> table;
    for (Elem a = 0; a < e.size(); ++a) {
      std::vector<Elem> comps(static_cast<std::size_t>(g.kappa()), e.top());
      comps[static_cast<std::size_t>(alpha)] = a;
      auto idx = ca.find(g.box(comps));
      if (!idx) throw Error(ErrorKind::NotInCarrier, "box of i_" + std::to_string(alpha) + "(" + e.label(a) + ")");
      table.push_back(*idx);
    }
    pair.embeddings.push_back(std::move(table));
  }
  return pair;
}

Report verify_target_pair(const ProductPoset& p, const TargetPair& pair, const MjOptions& options) {
  const auto& t = pair.target;
  Report report;
  report.title = "target pair";
  report.seed = options.seed;
  {
    LawCheck shape(report, "shape", CheckMode::Exhaustive);
    shape.expect(pair.embeddings.size() == static_cast<std::size_t>(p.kappa()),
                 [&] { return "expected " + std::to_string(p.kappa()) + " embeddings"; });
    for (std::size_t alpha = 0; alpha < pair.embeddings.size() && !shape.failed(); ++alpha) {
      const auto& table = pair.embeddings[alpha];
      shape.expect(alpha < static_cast<std::size_t>(p.kappa()) &&
                       table.size() == static_cast<std::size_t>(p.factor(static_cast<int>(alpha)).size()),
                   [&] { return "embedding " + std::to_string(alpha) + " has the wrong size"; });
      for (Elem x : table) {
        shape.expect(x >= 0 && x < t.size(), [&] { return "embedding " + std::to_string(alpha) + " leaves the target"; });
      }
    }
    if (shape.failed()) return report;
  }
  LawCheck injective(report, "injective", CheckMode::Exhaustive);
  LawCheck bounds(report, "bounds", CheckMode::Exhaustive);
  LawCheck ortho(report, "ortho", CheckMode::Exhaustive);
  LawCheck joins(report, "joins", CheckMode::Exhaustive);
  LawCheck meets(report, "meets", CheckMode::Exhaustive);
  for (int alpha = 0; alpha < p.kappa(); ++alpha) {
    const auto& e = p.factor(alpha);
    const auto& table = pair.embeddings[static_cast<std::size_t>(alpha)];
    auto at = [&](Elem a) { return table[static_cast<std::size_t>(a)]; };
    auto name = [&](Elem a) { return "e_" + std::to_string(alpha) + "(" + e.label(a) + ")"; };
    bounds.expect(at(e.bottom()) == t.bottom(), [&] { return name(e.bottom()) + " is not bottom"; });
    bounds.expect(at(e.top()) == t.top(), [&] { return name(e.top()) + " is not top"; });
    for (Elem a = 0; a < e.size(); ++a) {
      ortho.expect(at(e.ortho(a)) == t.ortho(at(a)), [&] { return name(e.ortho(a)) + " is not the ortho of " + name(a); });
      for (Elem b = 0; b < e.size(); ++b) {
        if (a < b) injective.expect(at(a) != at(b), [&] { return name(a) + " = " + name(b); });
        joins.expect(at(e.join(a, b)) == t.join(at(a), at(b)), [&] { return "join of " + name(a) + ", " + name(b); });
        meets.expect(at(e.meet(a, b)) == t.meet(at(a), at(b)), [&] { return "meet of " + name(a) + ", " + name(b); });
      }
    }
  }
  const auto mj = check_mj_distributive(t, embedding_family(p, pair), options);
  auto& law = report.add("mj_distributive", mj.mode);
  law.pass = mj.holds;
  law.checked = mj.subfamilies;
  law.witness = mj.witness;
  return report;
}

TensorMorphism universal_morphism(const TensorLogic& tl, const TargetPair& target, const MorphismOptions& options) {
  const auto& p = tl.poset();
  const auto& eng = tl.engine();
  const auto& t = target.target;
  {
    const auto check = verify_target_pair(p, target, options.mj);
    for (const auto& law : check.laws) {
      if (!law.pass) {
        throw Error(ErrorKind::TargetInvariantFailure, law.law + ": " + law.witness.value_or("failed"));
      }
    }
  }
  TensorMorphism out;
  auto& report = out.report;
  report.title = "universal morphism";
  report.seed = options.seed;
  const int n = tl.size();
  auto e = [&](int alpha, Elem a) {
    return target.embeddings[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(a)];
  };
  for (int i = 0; i < n; ++i) {
    Elem v = t.bottom();
    for (TupleId a : eng.maximals(tl.element(i)).members) {
      Elem m = t.top();
      for (int alpha = 0; alpha < p.kappa(); ++alpha) m = t.meet(m, e(alpha, p.component(a, alpha)));
      v = t.join(v, m);
    }
    out.table.push_back(v);
  }
  auto img = [&](int i) { return out.table[static_cast<std::size_t>(i)]; };

  {
    LawCheck law(report, "agrees_on_embeddings", CheckMode::Exhaustive);
    for (int alpha = 0; alpha < p.kappa(); ++alpha) {
      for (Elem a = 0; a < p.factor(alpha).size(); ++a) {
        law.expect(img(i_alpha(tl, alpha, a)) == e(alpha, a), [&] {
          return "t(i_" + std::to_string(alpha) + "(" + p.factor(alpha).label(a) + ")) != e_" + std::to_string(alpha);
        });
      }
    }
  }
  {
    LawCheck law(report, "bounds", CheckMode::Exhaustive);
    law.expect(img(tl.bottom()) == t.bottom(), [&] { return "t(bottom) = " + t.label(img(tl.bottom())); });
    law.expect(img(tl.top()) == t.top(), [&] { return "t(top) = " + t.label(img(tl.top())); });
  }
  {
    LawCheck law(report, "preserves_ortho", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      if (!law.expect(img(tl.star(i)) == t.ortho(img(i)), [&] { return "t(x*) != t(x)' at x = " + tl.describe(i); })) {
        break;
      }
    }
  }
  Rng rng(options.seed);
  CheckMode mode = CheckMode::Exhaustive;
  const auto pairs = carrier_pairs(n, options.exhaustive_threshold, options.pair_samples, rng, mode);
  {
    LawCheck meet(report, "preserves_meet", mode);
    LawCheck cop(report, "preserves_coproduct", mode);
    LawCheck mono(report, "monotone", mode);
    for (const auto& [i, j] : pairs) {
      meet.expect(img(tl.meet(i, j)) == t.meet(img(i), img(j)),
                  [&] { return "t(x ∧ y) at " + tl.describe(i) + ", " + tl.describe(j); });
      cop.expect(img(tl.coproduct(i, j)) == t.join(img(i), img(j)),
                 [&] { return "t(x ∐ y) at " + tl.describe(i) + ", " + tl.describe(j); });
      mono.expect(!tl.leq(i, j) || t.leq(img(i), img(j)),
                  [&] { return tl.describe(i) + " <= " + tl.describe(j) + " but images not ordered"; });
    }
  }
  {
    LawCheck law(report, "preserves_coproduct_subsets", CheckMode::Sampled);
    for (int s = 0; s < options.subsets; ++s) {
      const auto k = static_cast<int>(rng.below(7));
      std::vector<int> xs;
      Elem rhs = t.bottom();
      for (int i = 0; i < k; ++i) {
        xs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        rhs = t.join(rhs, img(xs.back()));
      }
      if (!law.expect(img(tl.coproduct(xs)) == rhs, [&] { return "sample " + std::to_string(s); })) break;
    }
  }
  {
    // Every member is the coproduct of the meets ∧_α i_α(A(α)) over its
    // letters, so t is forced by its values on the embeddings.
    LawCheck law(report, "generation", CheckMode::Exhaustive);
    for (int i = 0; i < n; ++i) {
      std::vector<int> parts;
      for (TupleId a : eng.maximals(tl.element(i)).members) {
        std::vector<int> coords;
        for (int alpha = 0; alpha < p.kappa(); ++alpha) coords.push_back(i_alpha(tl, alpha, p.component(a, alpha)));
        parts.push_back(tl.meet(coords));
      }
      if (!law.expect(tl.coproduct(parts) == i, [&] { return tl.describe(i) + " is not generated by its letters"; })) {
        break;
      }
    }
  }
  report.details["carrier"] = n;
  report.details["target"] = t.size();
  return out;
}

}  // namespace ortholog
