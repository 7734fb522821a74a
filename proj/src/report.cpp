#include "qvs/report.hpp"

#include <algorithm>
#include <sstream>

#include "qvs/parallel.hpp"

namespace qvs {

bool all_passed(const Reports& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const LawReport& r) { return r.passed(); });
}

void append(Reports& dst, Reports more) {
  for (auto& r : more) dst.push_back(std::move(r));
}

Reports scoped(const std::string& scope, Reports rs) {
  for (auto& r : rs) r.check = scope + "." + r.check;
  return rs;
}

json reports_to_json(const Reports& rs) {
  Reports sorted = rs;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const LawReport& a, const LawReport& b) { return a.check < b.check; });
  json arr = json::array();
  for (const auto& r : sorted) {
    arr.push_back({{"check", r.check},
                   {"method", r.method},
                   {"cases", r.cases},
                   {"status", r.passed() ? "pass" : "fail"},
                   {"witnesses", r.witnesses}});
  }
  return json{{"schema", "report/1"}, {"reports", arr}};
}

std::string reports_to_table(const Reports& rs) {
  Reports sorted = rs;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const LawReport& a, const LawReport& b) { return a.check < b.check; });
  std::size_t w = 5;
  for (const auto& r : sorted) w = std::max(w, r.check.size());
  std::ostringstream os;
  for (const auto& r : sorted) {
    os << (r.passed() ? "pass  " : "FAIL  ") << r.check;
    os << std::string(w - r.check.size() + 2, ' ');
    os << r.method << "  cases=" << r.cases;
    if (!r.passed()) {
      os << "  witnesses=" << r.witness_count();
      for (const auto& wit : r.witnesses) os << "\n        " << wit.dump();
    }
    os << "\n";
  }
  return os.str();
}

} // namespace qvs

namespace qvs::par {

namespace {
bool g_parallel = true;
}

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

} // namespace qvs::par
