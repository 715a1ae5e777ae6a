#include "ortholog/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ortholog/error.hpp"

namespace ortholog {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Least element of the set `bounds` whose up-set equals `bounds`
// (for upper bounds), or -1.
Elem least_of(const Bits& bounds, const std::vector<Bits>& up) {
  Elem found = -1;
  const std::size_t target = bounds.count();
  bounds.for_each([&](std::size_t u) {
    if (found < 0 && up[u].count() == target && up[u] == bounds) found = static_cast<Elem>(u);
  });
  return found;
}

}  // namespace

std::optional<Elem> OrthoLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem OrthoLattice::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorKind::UnknownLabel, "no element " + quote(std::string(label)) + " in " + name_);
}

std::vector<std::pair<Elem, Elem>> OrthoLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const int n = size();
  for (Elem lo = 0; lo < n; ++lo) {
    for (Elem hi = 0; hi < n; ++hi) {
      if (lo == hi || !leq(lo, hi)) continue;
      // strictly between lo and hi
      Bits between = up_[idx(lo)] & down_[idx(hi)];
      between.reset(idx(lo));
      between.reset(idx(hi));
      if (between.none()) out.emplace_back(lo, hi);
    }
  }
  return out;
}

bool OrthoLattice::same_structure(const OrthoLattice& other) const {
  return labels_ == other.labels_ && up_ == other.up_ && ortho_ == other.ortho_;
}

OrthoLattice OrthoLattice::from_order(std::string name, std::vector<std::string> labels,
                                      std::vector<Bits> up, std::vector<Elem> ortho) {
  const std::size_t n = labels.size();
  if (n < 2) {
    throw Error(ErrorKind::SpecFormat, "a logic needs distinct bottom and top (at least 2 elements)");
  }
  if (up.size() != n || ortho.size() != n) {
    throw Error(ErrorKind::SpecFormat, "order matrix or ortho map has the wrong size");
  }

  OrthoLattice l;
  l.name_ = std::move(name);
  l.labels_ = std::move(labels);
  l.up_ = std::move(up);
  l.ortho_ = std::move(ortho);

  // Partial order checks.
  for (std::size_t x = 0; x < n; ++x) {
    if (l.up_[x].width() != n) throw Error(ErrorKind::SpecFormat, "order row has the wrong width");
    if (!l.up_[x].test(x)) {
      throw Error(ErrorKind::NotAPoset, "not reflexive at " + quote(l.labels_[x]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && l.up_[x].test(y) && l.up_[y].test(x)) {
        throw Error(ErrorKind::NotAPoset, "antisymmetry fails: " + quote(l.labels_[x]) + " <= " +
                                              quote(l.labels_[y]) + " <= " + quote(l.labels_[x]));
      }
      if (l.up_[x].test(y) && !l.up_[y].is_subset_of(l.up_[x])) {
        throw Error(ErrorKind::NotAPoset, "order is not transitive above " + quote(l.labels_[y]));
      }
    }
  }

  l.down_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    l.up_[x].for_each([&](std::size_t y) { l.down_[y].set(x); });
  }

  l.join_.assign(n * n, -1);
  l.meet_.assign(n * n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const Elem j = least_of(l.up_[x] & l.up_[y], l.up_);
      if (j < 0) {
        throw Error(ErrorKind::NotALattice,
                    "no least upper bound for (" + l.labels_[x] + ", " + l.labels_[y] + ")");
      }
      const Elem m = least_of(l.down_[x] & l.down_[y], l.down_);
      if (m < 0) {
        throw Error(ErrorKind::NotALattice,
                    "no greatest lower bound for (" + l.labels_[x] + ", " + l.labels_[y] + ")");
      }
      l.join_[x * n + y] = l.join_[y * n + x] = j;
      l.meet_[x * n + y] = l.meet_[y * n + x] = m;
    }
  }

  // Bottom is the element below everything.
  l.bottom_ = l.top_ = -1;
  for (std::size_t x = 0; x < n; ++x) {
    if (l.up_[x].all()) l.bottom_ = static_cast<Elem>(x);
    if (l.down_[x].all()) l.top_ = static_cast<Elem>(x);
  }

  // Orthocomplement checks.
  for (std::size_t x = 0; x < n; ++x) {
    const Elem c = l.ortho_[x];
    if (c < 0 || static_cast<std::size_t>(c) >= n) {
      throw Error(ErrorKind::BadOrtho, "ortho undefined for " + quote(l.labels_[x]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Elem c = l.ortho_[x];
    if (l.ortho_[idx(c)] != static_cast<Elem>(x)) {
      throw Error(ErrorKind::BadOrtho, "not an involution: " + quote(l.labels_[x]) + " -> " +
                                           quote(l.labels_[idx(c)]) + " -> " +
                                           quote(l.labels_[idx(l.ortho_[idx(c)])]));
    }
    if (l.meet(static_cast<Elem>(x), c) != l.bottom_ || l.join(static_cast<Elem>(x), c) != l.top_) {
      throw Error(ErrorKind::BadOrtho, "complement law fails for " + quote(l.labels_[x]) +
                                           " and its image " + quote(l.labels_[idx(c)]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    l.up_[x].for_each([&](std::size_t y) {
      if (!l.leq(l.ortho_[y], l.ortho_[x])) {
        throw Error(ErrorKind::BadOrtho, "not order-reversing: " + quote(l.labels_[x]) + " <= " +
                                             quote(l.labels_[y]) + " but ortho images are not reversed");
      }
    });
  }
  return l;
}

OrthoLattice OrthoLattice::with_realization(SubsetRealization realization) const {
  const int n = size();
  if (realization.ground_size < 0 || realization.ground_size > 32 ||
      realization.masks.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::SpecFormat, "subset realization has the wrong shape");
  }
  const std::uint32_t full = realization.ground_size == 32
                                 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << realization.ground_size) - 1;
  for (Elem x = 0; x < n; ++x) {
    const auto mx = realization.masks[idx(x)];
    if ((mx & ~full) != 0 || realization.masks[idx(ortho(x))] != (full & ~mx)) {
      throw Error(ErrorKind::SpecFormat, "realization does not send ortho to set complement at " + label(x));
    }
    for (Elem y = 0; y < n; ++y) {
      const auto my = realization.masks[idx(y)];
      if (leq(x, y) != ((mx & ~my) == 0)) {
        throw Error(ErrorKind::SpecFormat, "realization does not reflect the order at " + label(x) +
                                               ", " + label(y));
      }
    }
  }
  OrthoLattice out = *this;
  out.realization_ = std::move(realization);
  return out;
}

OrthoLattice validate(const LatticeSpec& spec, const ValidateOptions& options) {
  const std::size_t n = spec.elements.size();
  if (n > options.max_elements) {
    throw Error(ErrorKind::SpecFormat, "lattice has " + std::to_string(n) +
                                           " elements; limit is " + std::to_string(options.max_elements));
  }
  std::unordered_map<std::string, Elem> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.elements[i].empty()) throw Error(ErrorKind::SpecFormat, "empty element label");
    if (!index.emplace(spec.elements[i], static_cast<Elem>(i)).second) {
      throw Error(ErrorKind::SpecFormat, "duplicate label " + quote(spec.elements[i]));
    }
  }
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "undeclared label " + quote(label));
    return it->second;
  };

  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : spec.relation) {
    up[static_cast<std::size_t>(lookup(lo))].set(static_cast<std::size_t>(lookup(hi)));
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }

  std::vector<Elem> ortho(n, -1);
  auto assign = [&](Elem x, Elem y) {
    auto& slot = ortho[static_cast<std::size_t>(x)];
    if (slot >= 0 && slot != y) {
      throw Error(ErrorKind::BadOrtho, "conflicting ortho images for " +
                                           quote(spec.elements[static_cast<std::size_t>(x)]));
    }
    slot = y;
  };
  for (const auto& [from, to] : spec.ortho) assign(lookup(from), lookup(to));
  for (const auto& [from, to] : spec.ortho) {
    const Elem x = lookup(from);
    const Elem y = lookup(to);
    if (ortho[static_cast<std::size_t>(y)] < 0) assign(y, x);
  }
  return OrthoLattice::from_order(spec.name, spec.elements, std::move(up), std::move(ortho));
}

DistributivityResult is_distributive(const OrthoLattice& l) {
  const int n = l.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = l.meet(a, l.join(b, c));
        const Elem rhs = l.join(l.meet(a, b), l.meet(a, c));
        if (lhs != rhs) return {false, DistributivityWitness{a, b, c, lhs, rhs}};
      }
    }
  }
  return {true, std::nullopt};
}

bool is_orthomodular(const OrthoLattice& l) {
  const int n = l.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (l.leq(a, b) && l.join(a, l.meet(l.ortho(a), b)) != b) return false;
    }
  }
  return true;
}

namespace {

OrthoLattice boolean_lattice(int n) {
  const int size = 1 << n;
  std::vector<std::string> labels(static_cast<std::size_t>(size));
  for (int mask = 0; mask < size; ++mask) {
    std::string label;
    if (mask == 0) {
      label = "0";
    } else if (mask == size - 1) {
      label = "1";
    } else if (n == 2) {
      label = mask == 1 ? "a" : "a'";
    } else {
      for (int bit = 0; bit < n; ++bit) {
        if (mask & (1 << bit)) label += static_cast<char>('a' + bit);
      }
    }
    labels[static_cast<std::size_t>(mask)] = label;
  }
  std::vector<Bits> up(static_cast<std::size_t>(size), Bits(static_cast<std::size_t>(size)));
  std::vector<Elem> ortho(static_cast<std::size_t>(size));
  SubsetRealization real{n, {}};
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if ((x & ~y) == 0) up[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
    }
    ortho[static_cast<std::size_t>(x)] = (size - 1) ^ x;
    real.masks.push_back(static_cast<std::uint32_t>(x));
  }
  return OrthoLattice::from_order("B" + std::to_string(n), std::move(labels), std::move(up),
                                  std::move(ortho))
      .with_realization(std::move(real));
}

std::string mo_letter(int k) {
  static constexpr std::string_view kLetters = "pqrstuvw";
  if (k < static_cast<int>(kLetters.size())) return std::string(1, kLetters[static_cast<std::size_t>(k)]);
  return "x" + std::to_string(k);
}

OrthoLattice mo_lattice(int n) {
  LatticeSpec spec;
  spec.name = "MO" + std::to_string(n);
  spec.elements.push_back("0");
  for (int k = 0; k < n; ++k) {
    spec.elements.push_back(mo_letter(k));
    spec.elements.push_back(mo_letter(k) + "'");
  }
  spec.elements.push_back("1");
  for (std::size_t i = 1; i + 1 < spec.elements.size(); ++i) {
    spec.relation.emplace_back("0", spec.elements[i]);
    spec.relation.emplace_back(spec.elements[i], "1");
  }
  spec.ortho.emplace_back("0", "1");
  for (int k = 0; k < n; ++k) spec.ortho.emplace_back(mo_letter(k), mo_letter(k) + "'");
  return validate(spec, {static_cast<std::size_t>(2 * n + 2)});
}

OrthoLattice benzene() {
  LatticeSpec spec;
  spec.name = "O6";
  spec.elements = {"0", "a", "b", "b'", "a'", "1"};
  spec.relation = {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}};
  spec.ortho = {{"0", "1"}, {"a", "a'"}, {"b", "b'"}};
  return validate(spec);
}

}  // namespace

OrthoLattice catalog(CatalogKind kind, int param, const CatalogOptions& options) {
  switch (kind) {
    case CatalogKind::Boolean:
      if (param < 1 || param > options.max_boolean) {
        throw Error(ErrorKind::ParamTooLarge, "boolean parameter " + std::to_string(param) +
                                                  " outside 1.." + std::to_string(options.max_boolean));
      }
      return boolean_lattice(param);
    case CatalogKind::MO:
      if (param < 1 || param > 64) {
        throw Error(ErrorKind::ParamTooLarge, "MO parameter " + std::to_string(param) + " outside 1..64");
      }
      return mo_lattice(param);
    case CatalogKind::Benzene:
      return benzene();
    case CatalogKind::Chain2:
      return boolean_lattice(1);
  }
  throw Error(ErrorKind::SpecFormat, "unknown catalog kind");
}

OrthoLattice catalog_by_name(std::string_view name, const CatalogOptions& options) {
  auto parse_int = [&](std::string_view digits) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorKind::SpecFormat, "unknown catalog lattice '" + std::string(name) + "'");
    }
    return value;
  };
  if (name == "O6" || name == "benzene") return catalog(CatalogKind::Benzene, 0, options);
  if (name == "chain2") return catalog(CatalogKind::Chain2, 0, options);
  if (name.starts_with("MO")) return catalog(CatalogKind::MO, parse_int(name.substr(2)), options);
  if (name.starts_with("B")) return catalog(CatalogKind::Boolean, parse_int(name.substr(1)), options);
  throw Error(ErrorKind::SpecFormat, "unknown catalog lattice '" + std::string(name) + "'");
}

bool is_ortho_iso(const OrthoLattice& lhs, const OrthoLattice& rhs, const std::vector<Elem>& map) {
  const int n = lhs.size();
  if (rhs.size() != n || map.size() != static_cast<std::size_t>(n)) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Elem x = 0; x < n; ++x) {
    const Elem y = map[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = true;
  }
  for (Elem x = 0; x < n; ++x) {
    const Elem fx = map[static_cast<std::size_t>(x)];
    if (map[static_cast<std::size_t>(lhs.ortho(x))] != rhs.ortho(fx)) return false;
    for (Elem y = 0; y < n; ++y) {
      if (lhs.leq(x, y) != rhs.leq(fx, map[static_cast<std::size_t>(y)])) return false;
    }
  }
  return true;
}

namespace {

struct Invariant {
  int rank = 0;
  std::size_t up_degree = 0;
  std::size_t down_degree = 0;
  int orbit = 0;
  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const OrthoLattice& l) {
  const int n = l.size();
  // rank = length of the longest chain from bottom; elements sorted by
  // down-set size give a linear extension.
  std::vector<Elem> order(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) order[static_cast<std::size_t>(x)] = x;
  std::sort(order.begin(), order.end(),
            [&](Elem a, Elem b) { return l.down(a).count() < l.down(b).count(); });
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (Elem x : order) {
    l.down(x).for_each([&](std::size_t y) {
      if (static_cast<Elem>(y) != x) {
        rank[static_cast<std::size_t>(x)] = std::max(rank[static_cast<std::size_t>(x)], rank[y] + 1);
      }
    });
  }
  std::vector<Invariant> out(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    out[static_cast<std::size_t>(x)] = {rank[static_cast<std::size_t>(x)], l.up(x).count(),
                                        l.down(x).count(), l.ortho(x) == x ? 1 : 2};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const OrthoLattice& lhs, const OrthoLattice& rhs)
      : lhs_(lhs), rhs_(rhs), inv_l_(invariants(lhs)), inv_r_(invariants(rhs)),
        map_(static_cast<std::size_t>(lhs.size()), -1),
        used_(static_cast<std::size_t>(rhs.size()), false) {}

  std::optional<std::vector<Elem>> run() {
    if (lhs_.size() != rhs_.size()) return std::nullopt;
    auto sorted_l = inv_l_;
    auto sorted_r = inv_r_;
    std::sort(sorted_l.begin(), sorted_l.end());
    std::sort(sorted_r.begin(), sorted_r.end());
    if (sorted_l != sorted_r) return std::nullopt;
    if (extend()) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(Elem x, Elem y) const {
    if (inv_l_[static_cast<std::size_t>(x)] != inv_r_[static_cast<std::size_t>(y)]) return false;
    for (Elem z = 0; z < lhs_.size(); ++z) {
      const Elem w = map_[static_cast<std::size_t>(z)];
      if (w < 0) continue;
      if (lhs_.leq(x, z) != rhs_.leq(y, w) || lhs_.leq(z, x) != rhs_.leq(w, y)) return false;
    }
    return true;
  }

  bool assign(Elem x, Elem y, std::vector<Elem>& trail) {
    if (!consistent(x, y)) return false;
    map_[static_cast<std::size_t>(x)] = y;
    used_[static_cast<std::size_t>(y)] = true;
    trail.push_back(x);
    const Elem ox = lhs_.ortho(x);
    const Elem oy = rhs_.ortho(y);
    const Elem mapped = map_[static_cast<std::size_t>(ox)];
    if (mapped >= 0) return mapped == oy;
    if (used_[static_cast<std::size_t>(oy)]) return false;
    return assign(ox, oy, trail);
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem x : trail) {
      used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(x)])] = false;
      map_[static_cast<std::size_t>(x)] = -1;
    }
    trail.clear();
  }

  bool extend() {
    Elem x = 0;
    while (x < lhs_.size() && map_[static_cast<std::size_t>(x)] >= 0) ++x;
    if (x == lhs_.size()) return true;
    for (Elem y = 0; y < rhs_.size(); ++y) {
      if (used_[static_cast<std::size_t>(y)]) continue;
      std::vector<Elem> trail;
      if (assign(x, y, trail) && extend()) return true;
      undo(trail);
    }
    return false;
  }

  const OrthoLattice& lhs_;
  const OrthoLattice& rhs_;
  std::vector<Invariant> inv_l_;
  std::vector<Invariant> inv_r_;
  std::vector<Elem> map_;
  std::vector<bool> used_;
};

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Elem>> find_iso(const OrthoLattice& lhs, const OrthoLattice& rhs) {
  return IsoSearch(lhs, rhs).run();
}

std::string export_dot(const OrthoLattice& l) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(l.name()) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (Elem x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=\"" << dot_escape(l.label(x)) << "\", tooltip=\"ortho: "
        << dot_escape(l.label(l.ortho(x))) << "\"];\n";
  }
  for (const auto& [lo, hi] : l.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ortholog
