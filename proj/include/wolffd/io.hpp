#pragma once

#include <string>

#include "wolffd/report.hpp"
#include "wolffd/wolff_solver.hpp"

namespace wolffd {

/// Parse failures carry this (maps to CLI exit 2).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Reads a problem file: {"F": [coeff array per entry], "H": coeff array,
/// "h": coeff array (default [1]), "delta": number, "N": int, "grid":
/// {"nr", "ntheta"}, "normalize": bool}.  Coefficients are [re, im] pairs.
WolffProblem read_problem_file(const std::string& path);

/// Reads {"F": [...]} (coefficient arrays only).
MultiplierTuple read_multiplier_file(const std::string& path);

/// Serializes a solution with fixed key order and 17-significant-digit
/// floats; byte-identical for identical inputs.  The tuple key is "G" when
/// the problem's h is 1, else "u".
std::string solution_to_json(const WolffSolution& sol, const WolffProblem& p);

std::string report_to_json(const VerificationReport& report);

/// Writes via a temp file in the same directory plus atomic rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace wolffd
