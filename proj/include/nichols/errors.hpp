#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

// Malformed specs, domain violations, unsupported requests.
struct spec_error : std::runtime_error {
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured size budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nichols
