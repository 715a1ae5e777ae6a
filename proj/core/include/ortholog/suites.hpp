#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ortholog/downset.hpp"
#include "ortholog/product.hpp"
#include "ortholog/universal.hpp"

namespace ortholog {

struct CheckConfig {
  std::uint64_t seed = 0;
  ProductOptions product;
  EngineOptions engine;
  UniversalOptions universal;
};

// "s4" .. "s8", in run order.
const std::vector<std::string>& suite_names();

// Runs one suite or "all" over the built-in catalog fixtures. The result is
// a pure function of (suite, config): same input, byte-identical dump.
// Throws SpecFormat for an unknown suite name.
nlohmann::json run_check(std::string_view suite, const CheckConfig& config);

// One line per section: "s5 logic-axioms B2^2 ... ok".
std::string render_check_text(const nlohmann::json& result);

}  // namespace ortholog
