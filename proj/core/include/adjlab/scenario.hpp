// Scenario documents (JSON: ring / ideals / tasks) and the built-in
// scenario registry. Identical (document, seed, budgets) inputs produce
// byte-identical report bodies.
#pragma once

#include <functional>
#include <map>
#include <optional>

#include "adjlab/report.hpp"
#include "adjlab/ideal.hpp"

namespace adjlab {

struct ScenarioParams {
  std::uint64_t seed = 1;
  bool modular = false;          // field toggle: rationals vs F_p
  std::uint32_t prime = 32003;   // used when modular
  GroebnerBudget budget = {};
  std::optional<int> size;       // scenario-specific size knob (e.g. matrix size)
  int time_budget_secs = 0;      // 0 = unlimited

  CoeffField field() const {
    return modular ? CoeffField::prime_field(prime) : CoeffField::rationals();
  }
  std::string field_string() const {
    return modular ? "p:" + std::to_string(prime) : "q";
  }
};

struct BuiltinScenario {
  std::string name;
  std::string description;
  std::vector<std::string> anchors;  // reference strings, all present in the
                                     // bundled anchor list
  std::string runtime_class;         // "fast" | "medium" | "slow" | "stretch"
  bool in_default_suite = true;
  std::function<Report(const ScenarioParams&)> run;
};

const std::vector<BuiltinScenario>& builtin_scenarios();
const BuiltinScenario* find_scenario(const std::string& name);

/// The bundled anchor list: every anchor string used by a built-in
/// scenario appears here verbatim.
const std::vector<std::string>& bundled_anchors();

/// Every scenario anchor is bundled; returns the offending strings.
std::vector<std::string> check_anchor_bundle();

/// Parse and execute a scenario document (JSON text).
Report run_document(const std::string& json_text, const ScenarioParams& params);

}  // namespace adjlab
