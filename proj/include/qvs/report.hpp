#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qvs {

using json = nlohmann::json;

/// Outcome of one law check. A check fails exactly when it carries witnesses;
/// there is no separate status flag to drift out of sync.
struct LawReport {
  std::string check;           // dotted name, e.g. "quantale.associativity"
  std::string method;          // "exhaustive", "sampled(seed=7,count=1000)", ...
  std::int64_t cases = 0;      // number of cases inspected
  std::vector<json> witnesses; // structured counterexamples, empty iff pass
  std::int64_t seen = 0;       // witnesses seen, including ones dropped past the cap

  static constexpr std::size_t max_witnesses = 8;

  bool passed() const { return witnesses.empty() && seen == 0; }

  void add_witness(json w) {
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
    ++seen;
  }

  std::int64_t witness_count() const {
    return std::max(seen, static_cast<std::int64_t>(witnesses.size()));
  }
};

using Reports = std::vector<LawReport>;

bool all_passed(const Reports& rs);
void append(Reports& dst, Reports more);
/// Prefixes every check name, e.g. scope="dstar" turns "associativity"
/// into "dstar.associativity".
Reports scoped(const std::string& scope, Reports rs);

json reports_to_json(const Reports& rs);
/// Plain-text table, one line per check.
std::string reports_to_table(const Reports& rs);

/// Malformed input: wrong dimensions, out-of-range index, value outside a
/// hom-set, unknown field. Distinct from an axiom failure, which is reported
/// as a LawReport witness.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what, json detail_ = {})
      : std::runtime_error(what), detail(std::move(detail_)) {}
  json detail;
};

/// An enumeration would exceed its configured cap. Carries the estimate.
struct CapacityError : std::runtime_error {
  CapacityError(const std::string& what, std::int64_t estimate_, std::int64_t cap_)
      : std::runtime_error(what + " (estimated " + std::to_string(estimate_) +
                           " exceeds cap " + std::to_string(cap_) + ")"),
        estimate(estimate_), cap(cap_) {}
  std::int64_t estimate;
  std::int64_t cap;
};

/// Operation requires enumerating a carrier the backend cannot enumerate
/// (the exact-rational tropical backend has no finite carrier).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration caps. Configuration, not constants: every enumerating
/// operation takes these as a parameter.
struct EnumCaps {
  std::int64_t max_presheaves = 100000;
  std::int64_t max_maps = 1000000;
};

} // namespace qvs
