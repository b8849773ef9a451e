#pragma once

#include "indicatrix/rational.hpp"
#include "indicatrix/step_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace indicatrix {

struct OpenInterval {
  Rat lo;
  Rat hi;
  bool contains(const Rat& y) const { return lo < y && y < hi; }
  ClosedInterval closure() const { return {lo, hi}; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Unmaterialized tail of an infinite sequence: the half-open interval between
/// the accumulation point (excluded) and the last generated point (included).
struct Zone {
  Rat lo;
  Rat hi;
  bool accumulates_at_lo = true;
  bool contains(const Rat& y) const { return accumulates_at_lo ? (lo < y && y <= hi) : (lo <= y && y < hi); }
  friend bool operator==(const Zone&, const Zone&) = default;
};

/// p-value at an endpoint of a type-three interval, and whether the endpoint
/// also bounds the neighbouring type-three interval.
struct EndpointClass {
  int value = 1;
  bool shared = false;
  friend bool operator==(const EndpointClass&, const EndpointClass&) = default;
};

struct TypeThree {
  Rat lo;
  Rat hi;
  EndpointClass lo_class;
  EndpointClass hi_class;
  friend bool operator==(const TypeThree&, const TypeThree&) = default;
};

enum class SeqCase : std::uint8_t { BiInfinite, LeftInfinite, RightInfinite, Single };

const char* seq_case_name(SeqCase c);

/// Increasing point sequence inside one type-three interval, built by halving
/// toward the accumulation endpoints.
struct SeqSpec {
  SeqCase kind = SeqCase::Single;
  Rat lo;
  Rat hi;
  Rat anchor;  // midpoint for BiInfinite; unused otherwise

  /// Points with halving exponents 0..depth on each infinite side.
  std::vector<Rat> points(std::size_t depth) const;
  /// Tails near accumulation endpoints that `points(depth)` leaves uncovered.
  std::vector<Zone> tails(std::size_t depth) const;
};

struct FamInterval {
  Rat lo;
  Rat hi;
  std::size_t id = 0;
  OpenInterval open() const { return {lo, hi}; }
  ClosedInterval closure() const { return {lo, hi}; }
  Rat length() const { return hi - lo; }
  friend bool operator==(const FamInterval&, const FamInterval&) = default;
};

/// P_i: the intervals generated from one simple preindicatrix, sorted by lo.
/// `zones` are the unmaterialized tails of infinite sequences.
struct Family {
  std::size_t index = 0;
  std::vector<FamInterval> intervals;
  std::vector<Zone> zones;
  std::vector<SeqSpec> generators;

  bool in_zone(const Rat& y) const;
  bool in_zone(const OpenInterval& j) const;
  std::string label(std::size_t id) const { return std::to_string(index) + "." + std::to_string(id); }
};

std::vector<TypeThree> type_three(const StepSpec& p);
SeqSpec sequence_for(const TypeThree& t);
Family family(const StepSpec& p, std::size_t index, std::size_t depth);

/// Splits every interval of family i+1 at the endpoints of family i, drops the
/// parts inside family i's zones, and bisects until shorter than 1/(i+1).
/// Throws std::logic_error when a part is not covered by family i. With a
/// window, only intervals whose closure meets it are kept.
std::vector<Family> refine_families(std::vector<Family> fams,
                                    const std::optional<ClosedInterval>& window = std::nullopt);

/// Union of all zones of the given families.
std::vector<Zone> all_zones(const std::vector<Family>& fams);

}  // namespace indicatrix
