#pragma once

#include <stdexcept>
#include <string>

namespace tplab {

// Bad mathematical input: out-of-domain point, pole hit, dimension mismatch.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A hard size cap was exceeded (enumeration or minor-count guards).
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative scheme failed to reach its tolerance; callers must treat the
// result as unusable rather than silently accepting a truncated value.
struct convergence_error : std::runtime_error {
  explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tplab
