#include "ortholog/report.hpp"

#include <algorithm>

namespace ortholog {

std::string_view to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::Exhaustive: return "exhaustive";
    case CheckMode::Sampled: return "sampled";
    case CheckMode::Skipped: return "skipped";
  }
  return "unknown";
}

bool Report::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass; });
}

const LawResult* Report::find(std::string_view law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

LawResult& Report::add(std::string law, CheckMode mode) {
  laws.push_back(LawResult{std::move(law), mode, seed, true, 0, std::nullopt});
  return laws.back();
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["title"] = title;
  out["seed"] = seed;
  out["pass"] = passed();
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& l : laws) {
    nlohmann::json e;
    e["law"] = l.law;
    e["mode"] = std::string(to_string(l.mode));
    e["seed"] = l.seed;
    e["pass"] = l.pass;
    e["checked"] = l.checked;
    if (l.witness) e["witness"] = *l.witness;
    entries.push_back(std::move(e));
  }
  out["laws"] = std::move(entries);
  if (!details.empty()) out["details"] = details;
  return out;
}

LawCheck::LawCheck(Report& report, std::string law, CheckMode mode)
    : report_(&report), index_(report.laws.size()) {
  report.add(std::move(law), mode);
}

}  // namespace ortholog
