#pragma once

#include "indicatrix/card.hpp"
#include "indicatrix/cset.hpp"
#include "indicatrix/rational.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indicatrix {

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A subset of a piece where the value is continuum.
struct Overlay {
  std::size_t piece = 0;
  CSet set;
  friend bool operator==(const Overlay&, const Overlay&) = default;
};

/// Where a level sits relative to the breakpoints.
struct SpecLocation {
  bool at_breakpoint = false;
  std::size_t index = 0;  // breakpoint index, or piece index
};

/// Finitely represented cardinality profile f: [0,1] -> {1,2,...,omega,c}.
///
/// Breakpoints 0 = b_0 < ... < b_m = 1; piece i is the open interval
/// (b_i, b_{i+1}) with value pieces()[i]; points()[i] is f(b_i). Overlays mark
/// closed subsets of a piece closure where the value is continuum; the
/// breakpoint values always win at breakpoints.
class StepSpec {
 public:
  StepSpec(std::vector<Rat> breakpoints, std::vector<Card> pieces, std::vector<Card> points,
           std::vector<Overlay> overlays = {});

  /// Value `inside` on (0,1) and `ends` at 0 and 1.
  static StepSpec constant(Card inside, Card ends);
  static StepSpec constant(Card value) { return constant(value, value); }

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Card>& pieces() const { return pieces_; }
  const std::vector<Card>& points() const { return points_; }
  const std::vector<Overlay>& overlays() const { return overlays_; }
  std::size_t piece_count() const { return pieces_.size(); }

  SpecLocation locate(const Rat& y) const;
  /// Exact f(y); overlay membership overrides the piece value.
  Card value_at(const Rat& y) const;

  /// Overlays attached to piece i.
  std::vector<const CSet*> overlays_of(std::size_t piece) const;
  bool has_overlays() const { return !overlays_.empty(); }

  /// The set f^c as a closed representable set.
  CSet continuum_set() const;

  bool all_finite() const;
  /// Largest finite value, or nullopt if some value is infinite.
  std::optional<std::int64_t> max_finite() const;

  /// Same profile with redundant breakpoints removed.
  StepSpec normalized() const;

  /// Same profile with extra breakpoints inserted (values copied).
  StepSpec refined(const std::vector<Rat>& extra) const;

  std::string str() const;

  /// Structural equality; compare normalized() forms for profile equality.
  friend bool operator==(const StepSpec&, const StepSpec&) = default;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<Card> pieces_;
  std::vector<Card> points_;
  std::vector<Overlay> overlays_;
};

/// True when both describe the same function on [0,1].
bool same_profile(const StepSpec& a, const StepSpec& b);

/// Pointwise combination on the common refinement of breakpoints. Overlays
/// are not supported (throws SpecError if either side has any).
StepSpec pointwise(const StepSpec& a, const StepSpec& b,
                   const std::function<Card(const Card&, const Card&)>& op);

/// Pointwise map of values (overlays kept).
StepSpec map_values(const StepSpec& f, const std::function<Card(const Card&)>& op);

/// Value on the open piece at a witness level (midpoint).
Rat piece_witness(const StepSpec& f, std::size_t piece);

}  // namespace indicatrix
