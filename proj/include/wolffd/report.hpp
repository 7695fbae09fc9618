#pragma once

#include <string>
#include <vector>

namespace wolffd {

struct ReportRow {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::string context;
};

/// Named (quantity, measured, bound, pass) rows.  A row passes iff
/// measured <= bound * (1 + tol_rel); tol_rel absorbs quadrature error only.
struct VerificationReport {
  std::vector<ReportRow> rows;
  double tol_rel = 1e-3;

  void add(const std::string& name, double measured, double bound,
           const std::string& context = "");
  void merge(const VerificationReport& other);
  bool all_pass() const;
  std::string to_csv() const;
  std::string to_text() const;
};

}  // namespace wolffd
