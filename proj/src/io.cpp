#include "wolffd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wolffd {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

cplx parse_coeff(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw parse_error(where + ": coefficients must be [re, im] pairs");
  }
  return cplx(j[0].get<double>(), j[1].get<double>());
}

AnalyticPoly parse_poly(const json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected a coefficient array");
  std::vector<cplx> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(parse_coeff(c, where));
  return AnalyticPoly(std::move(coeffs));
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  return j;
}

std::string poly_json(const AnalyticPoly& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i > 0) os << ',';
    os << '[' << fmt17(p.coeffs[i].real()) << ',' << fmt17(p.coeffs[i].imag()) << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

WolffProblem read_problem_file(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object()) throw parse_error(path + ": expected a JSON object");
  WolffProblem p;
  if (!j.contains("F") || !j["F"].is_array() || j["F"].empty()) {
    throw parse_error(path + ": \"F\" must be a nonempty list of coefficient arrays");
  }
  for (const auto& f : j["F"]) p.F.polys.push_back(parse_poly(f, path + ": F"));
  if (!j.contains("H")) throw parse_error(path + ": missing \"H\"");
  p.H = parse_poly(j["H"], path + ": H");
  p.h = j.contains("h") ? parse_poly(j["h"], path + ": h") : AnalyticPoly::constant(1.0);
  if (!j.contains("delta") || !j["delta"].is_number()) {
    throw parse_error(path + ": missing positive \"delta\"");
  }
  p.delta = j["delta"].get<double>();
  if (j.contains("N")) p.params.N = j["N"].get<int>();
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (!g.is_object() || !g.contains("nr") || !g.contains("ntheta")) {
      throw parse_error(path + ": \"grid\" needs integer nr and ntheta");
    }
    p.params.grid_nr = g["nr"].get<int>();
    p.params.grid_ntheta = g["ntheta"].get<int>();
  }
  if (j.contains("normalize")) p.params.normalize = j["normalize"].get<bool>();
  if (j.contains("tol")) p.params.tol = j["tol"].get<double>();
  if (j.contains("fit_degree")) p.params.fit_degree = j["fit_degree"].get<int>();
  return p;
}

MultiplierTuple read_multiplier_file(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object() || !j.contains("F") || !j["F"].is_array() || j["F"].empty()) {
    throw parse_error(path + ": expected {\"F\": [coefficient arrays]}");
  }
  MultiplierTuple F;
  for (const auto& f : j["F"]) F.polys.push_back(parse_poly(f, path + ": F"));
  return F;
}

std::string solution_to_json(const WolffSolution& sol, const WolffProblem& p) {
  const bool is_ideal = p.h.degree() == 0 && p.h.coeff(0) == cplx(1.0);
  std::ostringstream os;
  os << "{\n  \"" << (is_ideal ? "G" : "u") << "\": [";
  for (std::size_t i = 0; i < sol.u.size(); ++i) {
    if (i > 0) os << ',';
    os << "\n    " << poly_json(sol.u[i]);
  }
  os << "\n  ],\n";
  os << "  \"residual\": " << fmt17(sol.residual) << ",\n";
  os << "  \"analyticity_defect\": " << fmt17(sol.analyticity_defect) << ",\n";
  os << "  \"norm_ratio\": " << fmt17(sol.norm_ratio) << ",\n";
  os << "  \"K_bound\": " << fmt17(sol.K_bound) << ",\n";
  os << "  \"settings\": {\n";
  os << "    \"N\": " << p.params.N << ",\n";
  os << "    \"grid\": {\"nr\": " << p.params.grid_nr << ", \"ntheta\": "
     << p.params.grid_ntheta << "},\n";
  os << "    \"tol\": " << fmt17(p.params.tol) << ",\n";
  os << "    \"delta\": " << fmt17(p.delta) << ",\n";
  os << "    \"normalize\": " << (p.params.normalize ? "true" : "false") << ",\n";
  os << "    \"applied_scale\": " << fmt17(sol.applied_scale) << ",\n";
  os << "    \"r_rec\": " << fmt17(p.params.r_rec) << ",\n";
  os << "    \"fit_residual\": " << fmt17(sol.fit_residual) << ",\n";
  os << "    \"mh_estimate\": " << fmt17(sol.mh_estimate) << "\n";
  os << "  }\n}\n";
  return os.str();
}

std::string report_to_json(const VerificationReport& report) {
  std::ostringstream os;
  os << "{\n  \"rows\": [";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    if (i > 0) os << ',';
    os << "\n    {\"name\": " << json(r.name).dump() << ", \"measured\": "
       << fmt17(r.measured) << ", \"bound\": " << fmt17(r.bound) << ", \"pass\": "
       << (r.pass ? "true" : "false") << ", \"context\": " << json(r.context).dump() << "}";
  }
  os << "\n  ],\n  \"all_pass\": " << (report.all_pass() ? "true" : "false") << "\n}\n";
  return os.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out.good()) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace wolffd
