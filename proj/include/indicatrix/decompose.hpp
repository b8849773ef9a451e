#pragma once

#include "indicatrix/step_spec.hpp"
#include "indicatrix/validator.hpp"

#include <utility>
#include <vector>

namespace indicatrix {

struct PlateauEntry {
  Rat level;
  Card original = Card::continuum();
  friend bool operator==(const PlateauEntry&, const PlateauEntry&) = default;
};

/// Levels where a horizontal segment is injected after the build.
struct PlateauPlan {
  std::vector<PlateauEntry> entries;
  bool empty() const { return entries.empty(); }
};

/// Replaces f on the exceptional set by min(f(y-), f(y+)), minus one when both
/// sides are even and equal.
std::pair<StepSpec, PlateauPlan> reduce_exceptional(const StepSpec& f, const Certificate& cert);

/// One decomposition step: f = (p - 1) + rest with p simple. p is capped at 2
/// on {0,1}.
std::pair<StepSpec, StepSpec> extract_simple(const StepSpec& f);

/// p_0 >= p_1 >= ... together with the residuals they were cut from
/// (residuals[0] = f, residuals[i+1] = residuals[i] - p_i + 1).
class SimpleStream {
 public:
  explicit SimpleStream(StepSpec f);
  /// Builds from explicit items (residuals left empty).
  static SimpleStream from_items(std::vector<StepSpec> items);

  /// Ensures items()[0..depth] exist.
  void extend(std::size_t depth);
  const StepSpec& item(std::size_t i);
  const std::vector<StepSpec>& items() const { return items_; }
  const std::vector<StepSpec>& residuals() const { return residuals_; }
  /// True once a computed residual is identically 1; every later item is 1.
  bool stabilized() const { return stabilized_at_.has_value(); }
  std::optional<std::size_t> stabilized_at() const { return stabilized_at_; }

 private:
  SimpleStream() = default;
  std::vector<StepSpec> items_;
  std::vector<StepSpec> residuals_;
  std::optional<std::size_t> stabilized_at_;
  bool explicit_ = false;
};

SimpleStream simple_stream(const StepSpec& f, std::size_t depth);

/// f_n = p_0 + sum_{i=1..n} (p_i - 1).
StepSpec partial_indicatrix(SimpleStream& stream, std::size_t n);

bool is_identically_one(const StepSpec& f);

}  // namespace indicatrix
