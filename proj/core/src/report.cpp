#include "adjlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace adjlab {

namespace {

const char* status_str(RecordStatus s) {
  switch (s) {
    case RecordStatus::Pass:
      return "pass";
    case RecordStatus::Fail:
      return "fail";
    case RecordStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace

void Report::add(const std::string& id, const std::string& anchor, bool pass,
                 nlohmann::json witness, std::int64_t millis) {
  AssertionRecord rec;
  rec.id = id;
  rec.anchor = anchor;
  rec.status = pass ? RecordStatus::Pass : RecordStatus::Fail;
  rec.witness = std::move(witness);
  rec.millis = millis;
  records_.push_back(std::move(rec));
}

void Report::add_inconclusive(const std::string& id, const std::string& anchor,
                              nlohmann::json witness) {
  AssertionRecord rec;
  rec.id = id;
  rec.anchor = anchor;
  rec.status = RecordStatus::Inconclusive;
  rec.witness = std::move(witness);
  records_.push_back(std::move(rec));
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const AssertionRecord& r) {
        return r.status == RecordStatus::Pass;
      }));
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const AssertionRecord& r) {
        return r.status == RecordStatus::Fail;
      }));
}

std::size_t Report::inconclusive() const {
  return records_.size() - passed() - failed();
}

nlohmann::json Report::to_json(bool include_timings) const {
  nlohmann::json recs = nlohmann::json::array();
  std::vector<const AssertionRecord*> sorted;
  sorted.reserve(records_.size());
  for (const auto& r : records_) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const AssertionRecord* a, const AssertionRecord* b) {
                     return a->id < b->id;
                   });
  for (const auto* r : sorted) {
    nlohmann::json j{{"id", r->id},
                     {"anchor", r->anchor},
                     {"status", status_str(r->status)},
                     {"witness", r->witness}};
    if (include_timings) j["ms"] = r->millis;
    recs.push_back(std::move(j));
  }
  return nlohmann::json{{"scenario", scenario_},
                        {"seed", seed_},
                        {"field", field_},
                        {"records", recs},
                        {"summary",
                         {{"pass", passed()},
                          {"fail", failed()},
                          {"inconclusive", inconclusive()}}},
                        {"exit", exit_code()}};
}

std::string Report::canonical_body() const { return to_json(false).dump(2); }

std::string Report::human_table() const {
  std::ostringstream os;
  os << "scenario: " << scenario_ << "  seed: " << seed_ << "  field: " << field_
     << "\n";
  for (const auto& r : records_) {
    os << "  [" << status_str(r.status) << "] " << r.id;
    if (!r.anchor.empty()) os << "  {" << r.anchor << "}";
    os << "\n";
  }
  os << "summary: " << passed() << " pass, " << failed() << " fail, "
     << inconclusive() << " inconclusive\n";
  return os.str();
}

}  // namespace adjlab
