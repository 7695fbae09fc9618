#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wolffd {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when a problem violates the solvability hypotheses (maps to CLI exit 3).
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a requested accuracy cannot be met at the current grid /
/// truncation sizes (maps to CLI exit 4).
class refinement_error : public std::runtime_error {
 public:
  explicit refinement_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by iterative norm estimation when the iteration cap is hit.
/// Carries the last estimate so callers can still report it.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double partial)
      : std::runtime_error(what), partial_estimate(partial) {}
  double partial_estimate;
};

/// Global worker cap for parallel node loops (set by the CLI --threads flag
/// or WOLFFD_THREADS).  0 means "use hardware concurrency".
void set_thread_cap(unsigned n);
unsigned thread_cap();

/// Runs fn(i) for i in [0, n).  Each index writes only its own outputs, so
/// results are identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wolffd
