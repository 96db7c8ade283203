#include "cyclecon/limits.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cyclecon/errors.hpp"

namespace cyclecon {

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("CYCLECON_BUDGET"); env && *env) {
    char* end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) limits.max_items = value;
  }
  return limits;
}

void EnumerationLimits::check_length(unsigned k, unsigned min_k) const {
  if (k < min_k) {
    throw std::invalid_argument("k must be at least " + std::to_string(min_k) + ", got " +
                                std::to_string(k));
  }
  if (k > max_length && !allow_long) {
    throw BudgetExceeded("cycle length " + std::to_string(k) + " exceeds the cap of " +
                             std::to_string(max_length) + " (pass the long-cycle override)",
                         0);
  }
}

void Budget::fail() const {
  throw BudgetExceeded(what_ + ": budget of " + std::to_string(limit_) + " items exceeded", used_);
}

}  // namespace cyclecon
