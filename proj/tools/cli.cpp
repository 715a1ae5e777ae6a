#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ortholog/classical.hpp"
#include "ortholog/completion.hpp"
#include "ortholog/error.hpp"
#include "ortholog/expr.hpp"
#include "ortholog/spec_io.hpp"
#include "ortholog/suites.hpp"
#include "ortholog/tensor.hpp"
#include "ortholog/universal.hpp"

namespace ortholog::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string logic;
  std::string target;
  std::string expr;
  std::string suite = "all";
  std::string format = "text";
  int kappa = 1;
  int ground = 2;
  std::optional<std::uint64_t> seed;
  std::size_t limit_poset = 4096;
  std::size_t limit_carrier = 100'000;
  std::uint64_t max_expansion = 1'000'000;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  const char* env = std::getenv("ORTHOLOG_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-') throw UsageError("ORTHOLOG_SEED is not an unsigned 64-bit integer");
  return v;
}

ProductOptions product_options(const RunConfig& cfg) { return ProductOptions{cfg.limit_poset}; }
EngineOptions engine_options(const RunConfig& cfg) { return EngineOptions{cfg.max_expansion}; }
UniversalOptions universal_options(const RunConfig& cfg) { return UniversalOptions{cfg.limit_carrier}; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_report(std::ostream& out, const Report& r) {
  out << r.title << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
  for (const auto& l : r.laws) {
    out << "  " << (l.pass ? "ok    " : "FAIL  ") << l.law << " (" << to_string(l.mode) << ", " << l.checked << ")";
    if (l.witness) out << ": " << *l.witness;
    out << '\n';
  }
}

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed, std::string_view cmd) {
  for (auto f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("--format " + cfg.format + " is not available for " + std::string(cmd));
}

UniversalLogic build_logic(const OrthoLattice& e, const RunConfig& cfg) {
  std::vector<OrthoLattice> factors(static_cast<std::size_t>(cfg.kappa), e);
  return enumerate_universal(make_engine(std::move(factors), product_options(cfg), engine_options(cfg)),
                             universal_options(cfg));
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& path = cfg.inputs.front();
  std::optional<OrthoLattice> l;
  try {
    l = load_lattice(path);
  } catch (const Error& ex) {
    err << ex.what() << '\n';
    return kExitFail;
  }
  const auto dist = is_distributive(*l);
  const bool om = is_orthomodular(*l);
  if (cfg.format == "dot") {
    out << export_dot(*l);
  } else if (cfg.format == "json") {
    json j{{"name", l->name()}, {"elements", l->size()}, {"distributive", dist.distributive}, {"orthomodular", om},
           {"lattice", to_json(*l)}};
    if (dist.witness) {
      j["distributivity_witness"] = {l->label(dist.witness->a), l->label(dist.witness->b), l->label(dist.witness->c)};
    }
    print_json(out, j);
  } else {
    out << l->name() << ": valid ortholattice, " << l->size() << " elements, distributive: " << yes_no(dist.distributive)
        << ", orthomodular: " << yes_no(om) << '\n';
    if (dist.witness) {
      const auto& w = *dist.witness;
      out << "  non-distributive at a=" << l->label(w.a) << ", b=" << l->label(w.b) << ", c=" << l->label(w.c) << '\n';
    }
  }
  return kExitPass;
}

int cmd_universal(const RunConfig& cfg, std::ostream& out) {
  const auto e = load_lattice(cfg.inputs.front());
  const auto seed = resolve_seed(cfg);
  const auto u = build_logic(e, cfg);
  if (cfg.format == "dot") {
    out << export_dot(u.as_lattice(e.name() + "^" + std::to_string(cfg.kappa)));
    return kExitPass;
  }
  const auto axioms = verify_logic_axioms(u, VerifyOptions{.seed = seed});
  const auto dist = is_distributive_universal(u, DistributivityOptions{.seed = seed});
  std::optional<bool> iso;
  if (cfg.kappa == 1) {
    try {
      (void)check_u1_iso(u);
      iso = true;
    } catch (const Error& ex) {
      if (ex.kind() != ErrorKind::IsoFailure) throw;
      iso = false;
    }
  }
  const bool pass = axioms.passed() && iso.value_or(true);
  if (cfg.format == "json") {
    json j{{"lattice", e.name()},
           {"kappa", cfg.kappa},
           {"seed", seed},
           {"poset", u.poset().size()},
           {"carrier", u.size()},
           {"iso_to_input", iso ? json(*iso) : json(nullptr)},
           {"distributive", dist.distributive},
           {"distributivity_mode", std::string(to_string(dist.mode))},
           {"axioms", axioms.to_json()},
           {"antichains", u.export_antichains()}};
    if (dist.witness) {
      const auto& w = *dist.witness;
      j["distributivity_witness"] = {u.describe(w[0]), u.describe(w[1]), u.describe(w[2])};
    }
    print_json(out, j);
  } else {
    out << "carrier=" << u.size() << ", iso-to-input: " << (iso ? yes_no(*iso) : "n/a")
        << ", distributive: " << yes_no(dist.distributive) << '\n';
    if (dist.witness) {
      const auto& w = *dist.witness;
      out << "  witness: a=" << u.describe(w[0]) << ", b=" << u.describe(w[1]) << ", c=" << u.describe(w[2]) << '\n';
    }
    print_report(out, axioms);
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_tensor(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "tensor");
  std::vector<OrthoLattice> factors;
  for (const auto& p : cfg.inputs) factors.push_back(load_lattice(p));
  const auto seed = resolve_seed(cfg);
  const auto tl = build_tensor(factors, TensorOptions{product_options(cfg), engine_options(cfg), universal_options(cfg)});
  std::vector<Report> reports{verify_i_alpha(tl), verify_prop_ju(tl), verify_logic_axioms(tl, VerifyOptions{.seed = seed})};
  std::optional<TensorMorphism> morph;
  if (!cfg.target.empty()) {
    MorphismOptions opts;
    opts.seed = seed;
    opts.mj.seed = seed;
    morph = universal_morphism(tl, load_target_pair(cfg.target, factors), opts);
    reports.push_back(morph->report);
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.passed();
  if (cfg.format == "json") {
    json names = json::array();
    for (const auto& f : factors) names.push_back(f.name());
    json j{{"factors", names}, {"seed", seed}, {"carrier", tl.size()}, {"antichains", tl.export_antichains()}};
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(r.to_json());
    j["reports"] = std::move(rs);
    if (morph) j["morphism"] = morph->table;
    print_json(out, j);
  } else {
    out << "carrier=" << tl.size() << ", factors=" << factors.size() << '\n';
    for (const auto& r : reports) print_report(out, r);
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_classical(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "classical");
  const auto seed = resolve_seed(cfg);
  const auto e = catalog(CatalogKind::Boolean, cfg.ground);
  const auto ca = build_classical(e, cfg.kappa);
  const auto u = build_logic(e, cfg);
  const auto epi = epimorphism_e(u, ca, EpimorphismOptions{.seed = seed});
  const auto alg = verify_classical(ca);
  const auto& g = ca.ground();
  const bool pass = epi.report.passed() && alg.passed();
  if (cfg.format == "json") {
    json table = json::array();
    for (int i = 0; i < u.size(); ++i) {
      json points = json::array();
      epi.table[static_cast<std::size_t>(i)].for_each([&](std::size_t p) { points.push_back(g.point_label(p)); });
      table.push_back({{"antichain", u.engine().antichain_labels(u.element(i))}, {"points", points}});
    }
    print_json(out, {{"ground", cfg.ground},
                     {"kappa", cfg.kappa},
                     {"seed", seed},
                     {"members", ca.size()},
                     {"carrier", u.size()},
                     {"table", table},
                     {"algebra", alg.to_json()},
                     {"epimorphism", epi.report.to_json()}});
  } else {
    const auto* surj = epi.report.find("surjective");
    out << "members=" << ca.size() << ", carrier=" << u.size() << ", surjective: " << yes_no(surj && surj->pass) << '\n';
    for (int i = 0; i < u.size(); ++i) {
      out << "  " << u.describe(i) << " -> " << g.describe(epi.table[static_cast<std::size_t>(i)]) << '\n';
    }
    print_report(out, alg);
    print_report(out, epi.report);
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_completion(const RunConfig& cfg, std::ostream& out) {
  const auto l = load_lattice(cfg.inputs.front());
  const auto seed = resolve_seed(cfg);
  const auto c = event_space_completion(l, universal_options(cfg));
  if (cfg.format == "dot") {
    out << export_dot(c.completed.as_lattice(l.name() + "_L"));
    return kExitPass;
  }
  const auto report = completion_report(c, seed);
  const auto dist = completion_distributivity(l, universal_options(cfg));
  const bool pass = report.passed() && dist.passed();
  if (cfg.format == "json") {
    print_json(out, {{"lattice", l.name()},
                     {"seed", seed},
                     {"carrier", c.completed.size()},
                     {"iso", c.iso.has_value()},
                     {"completion", report.to_json()},
                     {"distributivity", dist.to_json()}});
  } else {
    out << "carrier=" << c.completed.size() << ", iso: " << yes_no(c.iso.has_value())
        << ", distributive: " << yes_no(dist.details.value("source_distributive", false)) << "/"
        << yes_no(dist.details.value("completed_distributive", false)) << '\n';
    if (report.details.contains("iso")) {
      for (const auto& [from, to] : report.details["iso"].items()) out << "  " << from << " -> " << to.get<std::string>() << '\n';
    }
    print_report(out, report);
    print_report(out, dist);
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "check");
  CheckConfig config;
  config.seed = resolve_seed(cfg);
  config.product = product_options(cfg);
  config.engine = engine_options(cfg);
  config.universal = universal_options(cfg);
  const auto result = run_check(cfg.suite, config);
  if (cfg.format == "json") {
    print_json(out, result);
  } else {
    out << render_check_text(result);
  }
  return result.at("pass").get<bool>() ? kExitPass : kExitFail;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"text", "json"}, "eval");
  Expr e;
  try {
    e = parse_expr(cfg.expr);
  } catch (const SyntaxError& ex) {
    err << "-e:" << ex.line() << ":" << ex.col() << ": expected " << ex.expected() << '\n';
    if (ex.line() == 1) err << "  " << cfg.expr << '\n' << "  " << std::string(static_cast<std::size_t>(ex.col() - 1), ' ') << "^\n";
    return kExitUsage;
  }
  const auto u = build_logic(load_lattice(cfg.logic), cfg);
  const auto d = eval_expr(e, u);
  if (cfg.format == "json") {
    print_json(out, {{"expr", print_expr(e)}, {"antichain", u.engine().antichain_labels(d)}, {"closed", u.find(d).has_value()}});
  } else {
    out << u.describe(d) << '\n';
  }
  return kExitPass;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool limits) {
  cmd->add_option("--seed", cfg.seed, "Seed for sampled checks (default: $ORTHOLOG_SEED or 0)");
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  if (limits) {
    cmd->add_option("--limit-poset", cfg.limit_poset, "Maximum product carrier size")->check(CLI::PositiveNumber);
    cmd->add_option("--limit-carrier", cfg.limit_carrier, "Maximum universal logic size")->check(CLI::PositiveNumber);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Finite universal logics: construction and verification", "ortholog"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Validate a lattice-spec file");
  validate->add_option("spec", cfg.inputs, "Lattice-spec JSON")->required()->expected(1);
  add_common(validate, cfg, false);

  auto* universal = app.add_subcommand("universal", "Build U_kappa(E) and verify the logic axioms");
  universal->add_option("spec", cfg.inputs, "Lattice-spec JSON")->required()->expected(1);
  universal->add_option("--kappa", cfg.kappa, "Number of factors")->check(CLI::Range(1, 64));
  add_common(universal, cfg, true);

  auto* tensor = app.add_subcommand("tensor", "Tensor product of a family of logics");
  tensor->add_option("specs", cfg.inputs, "Lattice-spec JSON per factor")->required()->expected(1, 16);
  tensor->add_option("--target", cfg.target, "Target pair JSON for the universal morphism");
  add_common(tensor, cfg, true);

  auto* classical = app.add_subcommand("classical", "Classical epimorphism for E = 2^S");
  classical->add_option("--ground", cfg.ground, "|S|")->check(CLI::Range(1, 4));
  classical->add_option("--kappa", cfg.kappa, "Number of factors")->check(CLI::Range(1, 24));
  add_common(classical, cfg, true);

  auto* completion = app.add_subcommand("completion", "Event space completion of a lattice");
  completion->add_option("spec", cfg.inputs, "Lattice-spec JSON")->required()->expected(1);
  add_common(completion, cfg, true);

  auto* check = app.add_subcommand("check", "Run verification suites over the built-in fixtures");
  check->add_option("--suite", cfg.suite, "all, s4, s5, s6, s7 or s8");
  add_common(check, cfg, true);

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in U_kappa(E)");
  eval->add_option("--logic", cfg.logic, "Lattice-spec JSON")->required();
  eval->add_option("--kappa", cfg.kappa, "Number of factors")->check(CLI::Range(1, 64));
  eval->add_option("-e", cfg.expr, "Expression")->required();
  add_common(eval, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(cfg, out, err);
    if (*universal) return cmd_universal(cfg, out);
    if (*tensor) return cmd_tensor(cfg, out);
    if (*classical) return cmd_classical(cfg, out);
    if (*completion) return cmd_completion(cfg, out);
    if (*check) return cmd_check(cfg, out);
    if (*eval) return cmd_eval(cfg, out, err);
  } catch (const UsageError& ex) {
    err << "usage: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    // A target that fails its own invariants is a verification outcome.
    return ex.kind() == ErrorKind::TargetInvariantFailure ? kExitFail : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ortholog::cli
