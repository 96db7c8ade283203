#pragma once

#include <cstdint>
#include <string>

namespace cyclecon {

/// Caps on exponential enumerations (cycles, semicycles, cliques).
///
/// Cycle enumeration costs grow roughly like Δ^(k-2) per edge, so lengths
/// beyond `max_length` are refused unless `allow_long` is set, and every
/// enumeration aborts with BudgetExceeded after `max_items` items.
struct EnumerationLimits {
  static constexpr unsigned kDefaultMaxLength = 8;
  static constexpr unsigned kDefaultMaxCliqueSize = 12;
  static constexpr std::uint64_t kDefaultBudget = 200'000'000;

  unsigned max_length = kDefaultMaxLength;
  unsigned max_clique_size = kDefaultMaxCliqueSize;
  bool allow_long = false;
  std::uint64_t max_items = kDefaultBudget;

  /// Defaults, with max_items taken from CYCLECON_BUDGET when set.
  static EnumerationLimits from_environment();

  /// Throws std::invalid_argument if k < min_k, BudgetExceeded if k exceeds the cap.
  void check_length(unsigned k, unsigned min_k) const;
};

/// Counts enumerated items against EnumerationLimits::max_items.
class Budget {
 public:
  Budget(const EnumerationLimits& limits, std::string what)
      : limit_(limits.max_items), what_(std::move(what)) {}

  void charge(std::uint64_t items = 1) {
    used_ += items;
    if (used_ > limit_) fail();
  }
  std::uint64_t used() const noexcept { return used_; }

 private:
  [[noreturn]] void fail() const;
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace cyclecon
