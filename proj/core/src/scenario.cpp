#include "adjlab/scenario.hpp"

#include <chrono>

#include "adjlab/mld.hpp"
#include "adjlab/qideal.hpp"

namespace adjlab {

namespace {

using nlohmann::json;

RingPtr ring_from_doc(const json& doc) {
  if (!doc.contains("ring")) throw std::invalid_argument("document: missing 'ring'");
  const json& r = doc["ring"];
  std::vector<std::string> vars = r.at("vars").get<std::vector<std::string>>();
  long ch = r.value("char", 0);
  CoeffField field = ch == 0
                         ? CoeffField::rationals()
                         : CoeffField::prime_field(static_cast<std::uint32_t>(ch));
  return PolyRing::make(std::move(vars), field);
}

std::map<std::string, Ideal> ideals_from_doc(const json& doc, const RingPtr& ring) {
  std::map<std::string, Ideal> out;
  if (!doc.contains("ideals")) return out;
  for (auto it = doc["ideals"].begin(); it != doc["ideals"].end(); ++it) {
    std::vector<std::string> polys = it.value().get<std::vector<std::string>>();
    out.emplace(it.key(), Ideal::from_strings(ring, polys));
  }
  return out;
}

const Ideal& named_ideal(const std::map<std::string, Ideal>& ideals,
                         const std::string& name) {
  auto it = ideals.find(name);
  if (it == ideals.end())
    throw std::invalid_argument("document: unknown ideal '" + name + "'");
  return it->second;
}

json strings_json(const std::vector<std::string>& ss) {
  json a = json::array();
  for (const auto& s : ss) a.push_back(s);
  return a;
}

}  // namespace

Report run_document(const std::string& json_text, const ScenarioParams& params) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("document parse error: ") + e.what());
  }
  std::string name = doc.value("name", "document");
  std::uint64_t seed = doc.value("seed", params.seed);
  GroebnerBudget budget = params.budget;
  if (doc.contains("budgets")) {
    budget.max_degree = doc["budgets"].value("deg_cap", budget.max_degree);
    budget.max_pairs = doc["budgets"].value("pair_cap", budget.max_pairs);
  }
  RingPtr ring = ring_from_doc(doc);
  auto ideals = ideals_from_doc(doc, ring);
  std::string field_str =
      ring->field().is_modular()
          ? "p:" + std::to_string(ring->field().characteristic())
          : "q";
  Report report(name, seed, field_str);

  if (!doc.contains("tasks")) return report;
  std::size_t task_no = 0;
  for (const auto& task : doc["tasks"]) {
    ++task_no;
    std::string op = task.at("op").get<std::string>();
    std::string id = task.value("id", "task_" + std::to_string(task_no));
    std::string anchor = task.value("anchor", "");
    auto t0 = std::chrono::steady_clock::now();
    json witness;
    bool has_expect = task.contains("expect");
    bool pass = true;

    auto expect_ideal = [&](const Ideal& got) {
      witness["result"] = strings_json(got.canonical_strings(budget));
      if (has_expect) {
        Ideal want = Ideal::from_strings(
            ring, task["expect"].get<std::vector<std::string>>());
        pass = got.equals(want, budget);
        witness["expected"] = strings_json(want.canonical_strings(budget));
      }
    };

    if (op == "groebner_basis") {
      const Ideal& I = named_ideal(ideals, task.at("ideal"));
      expect_ideal(I);
    } else if (op == "ideal_quotient") {
      Ideal got = ideal_quotient(named_ideal(ideals, task.at("lhs")),
                                 named_ideal(ideals, task.at("rhs")), budget);
      expect_ideal(got);
    } else if (op == "saturation") {
      SaturationResult got = saturation(named_ideal(ideals, task.at("lhs")),
                                        named_ideal(ideals, task.at("rhs")), budget);
      witness["stabilization_exponent"] = got.exponent;
      expect_ideal(got.ideal);
    } else if (op == "intersection") {
      Ideal got = ideal_intersection(named_ideal(ideals, task.at("lhs")),
                                     named_ideal(ideals, task.at("rhs")), budget);
      expect_ideal(got);
    } else if (op == "sum") {
      expect_ideal(ideal_sum(named_ideal(ideals, task.at("lhs")),
                             named_ideal(ideals, task.at("rhs"))));
    } else if (op == "product") {
      expect_ideal(ideal_product(named_ideal(ideals, task.at("lhs")),
                                 named_ideal(ideals, task.at("rhs"))));
    } else if (op == "elimination") {
      std::vector<std::size_t> vars;
      for (const auto& v : task.at("vars")) {
        auto idx = ring->var_index(v.get<std::string>());
        if (!idx) throw std::invalid_argument("elimination: unknown variable");
        vars.push_back(*idx);
      }
      expect_ideal(eliminate(named_ideal(ideals, task.at("ideal")), vars, budget));
    } else if (op == "krull_dimension") {
      int got = krull_dimension(named_ideal(ideals, task.at("ideal")), budget);
      witness["result"] = got;
      if (has_expect) pass = got == task["expect"].get<int>();
    } else if (op == "monomial_integral_closure") {
      expect_ideal(monomial_integral_closure(named_ideal(ideals, task.at("ideal"))));
    } else if (op == "sandwich_certificate") {
      SandwichCertificate cert = sandwich_certificate(
          named_ideal(ideals, task.at("ideal")), named_ideal(ideals, task.at("lower")),
          named_ideal(ideals, task.at("upper")), budget);
      witness["lower_contained"] = cert.lower_contained;
      witness["upper_contains"] = cert.upper_contains;
      witness["closure_checked"] = cert.closure_checked;
      witness["closures_equal"] = cert.closures_equal;
      if (!cert.failure_witness.empty()) witness["failure"] = cert.failure_witness;
      pass = cert.passed();
      if (has_expect) pass = cert.passed() == task["expect"].get<bool>();
    } else if (op == "monomial_order_of_ideal") {
      std::vector<std::int64_t> w = task.at("weights").get<std::vector<std::int64_t>>();
      auto got = monomial_order_of_ideal(MonomialValuation(std::move(w)),
                                         named_ideal(ideals, task.at("ideal")));
      witness["result"] = got ? got->get_str() : "infinity";
      if (has_expect) {
        std::string want = task["expect"].get<std::string>();
        pass = (got ? got->get_str() : "infinity") == want;
      }
    } else if (op == "mld_monomial") {
      MonomialPair pair;
      pair.arity = ring->arity();
      if (task.contains("boundary")) {
        for (const auto& fac : task["boundary"]) {
          MonomialPair::Factor f;
          f.exponent = Rational(fac.at("exponent").get<std::string>());
          const Ideal& I = named_ideal(ideals, fac.at("ideal"));
          f.gens = monomial_exponents(I);
          pair.boundary.push_back(std::move(f));
        }
      }
      MldResult got = mld_monomial(pair);
      witness["minus_infinity"] = got.minus_infinity;
      if (!got.minus_infinity) witness["value"] = got.value.get_str();
      if (has_expect) {
        std::string want = task["expect"].get<std::string>();
        std::string gotstr = got.minus_infinity ? "-infinity" : got.value.get_str();
        pass = gotstr == want;
      }
    } else {
      throw std::invalid_argument("document: unknown op '" + op + "'");
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report.add(id, anchor, pass, std::move(witness), ms);
  }
  return report;
}

}  // namespace adjlab
