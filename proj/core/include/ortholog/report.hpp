#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ortholog {

enum class CheckMode { Exhaustive, Sampled, Skipped };

std::string_view to_string(CheckMode mode);

// One verified law. `pass` means no counterexample was found among the
// `checked` instances; skipped laws pass vacuously and say why in `witness`.
struct LawResult {
  std::string law;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t seed = 0;
  bool pass = true;
  std::uint64_t checked = 0;
  std::optional<std::string> witness;
};

struct Report {
  std::string title;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;
  nlohmann::json details = nlohmann::json::object();

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const LawResult* find(std::string_view law) const;
  [[nodiscard]] nlohmann::json to_json() const;

  LawResult& add(std::string law, CheckMode mode);
};

// Accumulates a single law: records the first failure as the witness.
class LawCheck {
 public:
  LawCheck(Report& report, std::string law, CheckMode mode);

  // Returns `ok` so callers can stop early. `witness` is invoked only for
  // the first failure.
  template <typename WitnessFn>
  bool expect(bool ok, WitnessFn&& witness) {
    auto& r = result();
    ++r.checked;
    if (!ok && r.pass) {
      r.pass = false;
      r.witness = std::string(witness());
    }
    return ok;
  }
  void count(std::uint64_t n = 1) { result().checked += n; }
  [[nodiscard]] bool failed() const { return !report_->laws[index_].pass; }

 private:
  LawResult& result() { return report_->laws[index_]; }

  Report* report_;
  std::size_t index_;
};

}  // namespace ortholog
