#pragma once

#include "indicatrix/rational.hpp"

#include <string>
#include <vector>

namespace indicatrix {

/// Decides y ∈ C[lo,hi], the middle-thirds Cantor set affinely placed on [lo,hi].
/// Walks the ternary map on the normalized coordinate; terminates on rationals by
/// cycle detection.
bool cantor_contains(const Rat& lo, const Rat& hi, const Rat& y);

/// Decides C[lo,hi] ∩ J != ∅ for the closed interval J.
bool cantor_meets(const Rat& lo, const Rat& hi, const ClosedInterval& j);

/// One closed component of a representable set.
struct CComponent {
  enum class Kind : std::uint8_t { Point, Interval, Cantor };

  Kind kind = Kind::Point;
  Rat lo;
  Rat hi;  // equals lo for points

  static CComponent point(Rat p) { return {Kind::Point, p, p}; }
  static CComponent interval(Rat lo, Rat hi);
  static CComponent cantor(Rat lo, Rat hi);

  bool contains(const Rat& y) const;
  bool meets(const ClosedInterval& j) const;
  ClosedInterval hull() const { return {lo, hi}; }
  std::string str() const;

  friend bool operator==(const CComponent&, const CComponent&) = default;
};

/// Finite union of points, closed intervals and affine Cantor sets. Always closed.
class CSet {
 public:
  CSet() = default;
  explicit CSet(std::vector<CComponent> components);

  const std::vector<CComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  bool contains(const Rat& y) const;
  bool meets(const ClosedInterval& j) const;
  /// Smallest closed interval containing the set. Requires non-empty.
  ClosedInterval hull() const;

  /// True when components are pairwise disjoint.
  bool pairwise_disjoint() const;

  /// Sorted, with intervals merged and components swallowed by intervals
  /// (or points by Cantor sets) dropped. Represents the same set.
  CSet normalized() const;

  CSet united(const CSet& other) const;

  friend bool operator==(const CSet&, const CSet&) = default;

 private:
  std::vector<CComponent> components_;
};

}  // namespace indicatrix
