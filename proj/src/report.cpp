#include "wolffd/report.hpp"

#include <cstdio>
#include <sstream>

namespace wolffd {

namespace {
std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void VerificationReport::add(const std::string& name, double measured, double bound,
                             const std::string& context) {
  ReportRow row;
  row.name = name;
  row.measured = measured;
  row.bound = bound;
  row.pass = measured <= bound * (1.0 + tol_rel);
  row.context = context;
  rows.push_back(std::move(row));
}

void VerificationReport::merge(const VerificationReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

bool VerificationReport::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "name,measured,bound,pass,context\n";
  for (const auto& r : rows) {
    std::string ctx = r.context;
    for (auto& c : ctx) {
      if (c == ',') c = ';';
    }
    os << r.name << ',' << fmt17(r.measured) << ',' << fmt17(r.bound) << ','
       << (r.pass ? "true" : "false") << ',' << ctx << '\n';
  }
  return os.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << (r.pass ? "[pass] " : "[FAIL] ") << r.name << ": measured " << fmt17(r.measured)
       << "  bound " << fmt17(r.bound);
    if (!r.context.empty()) os << "  (" << r.context << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace wolffd
