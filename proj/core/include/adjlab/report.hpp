// Structured verification reports: one record per assertion with an
// anchor string, a status, and witness data. The canonical body (used
// for determinism checks) excludes timings; all numbers are integers or
// exact fraction strings.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace adjlab {

enum class RecordStatus { Pass, Fail, Inconclusive };

struct AssertionRecord {
  std::string id;
  std::string anchor;  // opaque reference string tying the assertion to a
                       // statement in the bundled anchor list
  RecordStatus status = RecordStatus::Inconclusive;
  nlohmann::json witness;  // exact values only
  std::int64_t millis = 0;
};

class Report {
public:
  Report(std::string scenario, std::uint64_t seed, std::string field)
      : scenario_(std::move(scenario)), seed_(seed), field_(std::move(field)) {}

  void add(AssertionRecord rec) { records_.push_back(std::move(rec)); }
  void add(const std::string& id, const std::string& anchor, bool pass,
           nlohmann::json witness = {}, std::int64_t millis = 0);
  void add_inconclusive(const std::string& id, const std::string& anchor,
                        nlohmann::json witness = {});

  const std::vector<AssertionRecord>& records() const { return records_; }

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t inconclusive() const;

  /// 0 = all pass (inconclusive records do not fail a run), 1 otherwise.
  int exit_code() const { return failed() == 0 ? 0 : 1; }

  /// Records sorted by id; timings excluded unless requested.
  nlohmann::json to_json(bool include_timings) const;
  /// The deterministic body: to_json(false) dumped with sorted keys.
  std::string canonical_body() const;
  std::string human_table() const;

private:
  std::string scenario_;
  std::uint64_t seed_;
  std::string field_;
  std::vector<AssertionRecord> records_;
};

}  // namespace adjlab
