#pragma once

#include <stdexcept>
#include <string>

namespace fdd {

inline constexpr const char* kVersion = "1.0.0";

enum class Space { position, momentum };
enum class System { fd, fdd };

inline const char* to_string(Space s) {
  return s == Space::position ? "position" : "momentum";
}
inline const char* to_string(System s) { return s == System::fd ? "fd" : "fdd"; }

// Raised when an iterative numerical scheme exhausts its budget without
// meeting the requested tolerance. Carries the best estimate so callers can
// decide whether to degrade gracefully.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best, double err_est)
      : std::runtime_error(what), best_estimate(best), error_estimate(err_est) {}
  double best_estimate;
  double error_estimate;
};

}  // namespace fdd
