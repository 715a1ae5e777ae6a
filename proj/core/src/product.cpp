#include "ortholog/product.hpp"

#include <limits>

#include "ortholog/error.hpp"

namespace ortholog {

std::size_t projected_carrier_size(const std::vector<OrthoLattice>& factors) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t product = 1;
  for (const auto& f : factors) {
    const auto nonzero = static_cast<std::size_t>(f.size() - 1);
    if (nonzero != 0 && product > (kMax - 1) / nonzero) return kMax;
    product *= nonzero;
  }
  return product + 1;
}

ProductPoset build_product(std::vector<OrthoLattice> factors, const ProductOptions& options) {
  if (factors.empty()) throw Error(ErrorKind::SpecFormat, "a product needs at least one factor");
  const std::size_t projected = projected_carrier_size(factors);
  if (projected > options.max_carrier) {
    throw Error(ErrorKind::CarrierTooLarge,
                "projected carrier size " +
                    (projected == std::numeric_limits<std::size_t>::max() ? std::string("overflows")
                                                                          : std::to_string(projected)) +
                    " exceeds limit " + std::to_string(options.max_carrier));
  }

  ProductPoset p;
  p.factors_ = std::move(factors);
  const auto k = p.factors_.size();

  std::vector<std::vector<Elem>> nonzero(k);
  p.position_.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    const auto& f = p.factors_[a];
    p.position_[a].assign(static_cast<std::size_t>(f.size()), -1);
    for (Elem e = 0; e < f.size(); ++e) {
      if (e == f.bottom()) continue;
      p.position_[a][static_cast<std::size_t>(e)] = static_cast<int>(nonzero[a].size());
      nonzero[a].push_back(e);
    }
  }
  p.stride_.assign(k, 1);
  for (std::size_t a = k - 1; a-- > 0;) p.stride_[a] = p.stride_[a + 1] * nonzero[a + 1].size();

  p.tuples_.reserve(projected);
  p.tuples_.push_back(PTuple{});
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t n = 1; n < projected; ++n) {
    PTuple t;
    t.components.resize(k);
    for (std::size_t a = 0; a < k; ++a) t.components[a] = nonzero[a][digits[a]];
    p.tuples_.push_back(std::move(t));
    for (std::size_t a = k; a-- > 0;) {
      if (++digits[a] < nonzero[a].size()) break;
      digits[a] = 0;
    }
  }

  const std::size_t n = p.tuples_.size();
  p.down_.assign(n, Bits(n));
  p.up_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    p.down_[x].set(0);
    p.up_[0].set(x);
  }
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) {
      bool below = true;
      for (std::size_t a = 0; a < k && below; ++a) {
        below = p.factors_[a].leq(p.tuples_[x].components[a], p.tuples_[y].components[a]);
      }
      if (below) {
        p.down_[y].set(x);
        p.up_[x].set(y);
      }
    }
  }
  std::vector<Elem> tops(k);
  for (std::size_t a = 0; a < k; ++a) tops[a] = p.factors_[a].top();
  p.top_ = p.make(tops);
  return p;
}

Elem ProductPoset::component(TupleId t, int alpha) const {
  const auto& tu = tuples_[idx(t)];
  if (tu.is_bottom()) return factors_[static_cast<std::size_t>(alpha)].bottom();
  return tu.components[static_cast<std::size_t>(alpha)];
}

TupleId ProductPoset::make(const std::vector<Elem>& components) const {
  if (components.empty()) return 0;
  if (components.size() != factors_.size()) {
    throw Error(ErrorKind::UnknownLabel, "tuple has " + std::to_string(components.size()) +
                                             " components; expected " + std::to_string(factors_.size()));
  }
  std::size_t id = 0;
  for (std::size_t a = 0; a < components.size(); ++a) {
    const Elem e = components[a];
    if (e < 0 || e >= factors_[a].size()) {
      throw Error(ErrorKind::UnknownLabel, "component " + std::to_string(a) + " out of range");
    }
    const int pos = position_[a][static_cast<std::size_t>(e)];
    if (pos < 0) return 0;
    id += static_cast<std::size_t>(pos) * stride_[a];
  }
  return static_cast<TupleId>(id + 1);
}

TupleId ProductPoset::meet(TupleId a, TupleId b) const {
  if (a == 0 || b == 0) return 0;
  std::vector<Elem> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = factors_[i].meet(tuples_[idx(a)].components[i], tuples_[idx(b)].components[i]);
  }
  return make(out);
}

TupleId ProductPoset::embed(int alpha, Elem a) const {
  std::vector<Elem> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = factors_[i].top();
  out[static_cast<std::size_t>(alpha)] = a;
  return make(out);
}

std::string ProductPoset::label(TupleId t) const {
  const auto& tu = tuples_[idx(t)];
  if (tu.is_bottom()) return "bottom";
  std::string out = "(";
  for (std::size_t a = 0; a < tu.components.size(); ++a) {
    if (a != 0) out += ',';
    out += factors_[a].label(tu.components[a]);
  }
  return out + ")";
}

}  // namespace ortholog
