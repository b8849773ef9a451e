#include "indicatrix/cset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace indicatrix {

namespace {

const Rat kThird(1, 3);
const Rat kTwoThirds(2, 3);

}  // namespace

bool cantor_contains(const Rat& lo, const Rat& hi, const Rat& y) {
  if (y < lo || y > hi) return false;
  Rat t = (y - lo) / (hi - lo);
  std::set<std::string> seen;
  for (;;) {
    if (t == Rat(0) || t == Rat(1) || t == kThird || t == kTwoThirds) return true;
    if (kThird < t && t < kTwoThirds) return false;
    // Purely periodic expansions without digit 1 stay in the set.
    if (!seen.insert(t.str()).second) return true;
    t = t < kThird ? t * Rat(3) : t * Rat(3) - Rat(2);
  }
}

bool cantor_meets(const Rat& lo, const Rat& hi, const ClosedInterval& j) {
  if (j.hi < lo || hi < j.lo) return false;
  const Rat w = hi - lo;
  Rat a = (max(j.lo, lo) - lo) / w;
  Rat b = (min(j.hi, hi) - lo) / w;
  std::set<std::pair<std::string, std::string>> seen;
  for (;;) {
    // A sub-block endpoint inside [a,b] is a member.
    if (a <= Rat(0) || b >= Rat(1)) return true;
    if ((a <= kThird && kThird <= b) || (a <= kTwoThirds && kTwoThirds <= b)) return true;
    if (kThird < a && b < kTwoThirds) return false;
    if (!seen.emplace(a.str(), b.str()).second) return true;  // a == b on a cycle
    if (b < kThird) {
      a *= Rat(3);
      b *= Rat(3);
    } else {
      a = a * Rat(3) - Rat(2);
      b = b * Rat(3) - Rat(2);
    }
  }
}

CComponent CComponent::interval(Rat lo, Rat hi) {
  if (!(lo < hi)) throw std::invalid_argument("interval component needs lo < hi");
  return {Kind::Interval, std::move(lo), std::move(hi)};
}

CComponent CComponent::cantor(Rat lo, Rat hi) {
  if (!(lo < hi)) throw std::invalid_argument("cantor component needs lo < hi");
  return {Kind::Cantor, std::move(lo), std::move(hi)};
}

bool CComponent::contains(const Rat& y) const {
  switch (kind) {
    case Kind::Point: return y == lo;
    case Kind::Interval: return lo <= y && y <= hi;
    case Kind::Cantor: return cantor_contains(lo, hi, y);
  }
  return false;
}

bool CComponent::meets(const ClosedInterval& j) const {
  switch (kind) {
    case Kind::Point: return j.contains(lo);
    case Kind::Interval: return hull().meets(j);
    case Kind::Cantor: return cantor_meets(lo, hi, j);
  }
  return false;
}

std::string CComponent::str() const {
  switch (kind) {
    case Kind::Point: return "{" + lo.str() + "}";
    case Kind::Interval: return "[" + lo.str() + "," + hi.str() + "]";
    case Kind::Cantor: return "C[" + lo.str() + "," + hi.str() + "]";
  }
  return "?";
}

CSet::CSet(std::vector<CComponent> components) : components_(std::move(components)) {}

bool CSet::contains(const Rat& y) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const CComponent& c) { return c.contains(y); });
}

bool CSet::meets(const ClosedInterval& j) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const CComponent& c) { return c.meets(j); });
}

ClosedInterval CSet::hull() const {
  if (components_.empty()) throw std::logic_error("hull of empty set");
  ClosedInterval h = components_.front().hull();
  for (const auto& c : components_) {
    h.lo = min(h.lo, c.lo);
    h.hi = max(h.hi, c.hi);
  }
  return h;
}

bool CSet::pairwise_disjoint() const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      const auto& a = components_[i];
      const auto& b = components_[j];
      if (!a.hull().meets(b.hull())) continue;
      if (a.kind == CComponent::Kind::Point) {
        if (b.contains(a.lo)) return false;
        continue;
      }
      if (b.kind == CComponent::Kind::Point) {
        if (a.contains(b.lo)) return false;
        continue;
      }
      // Overlapping hulls of two extended components: check the overlap.
      ClosedInterval overlap{max(a.lo, b.lo), min(a.hi, b.hi)};
      if (a.kind == CComponent::Kind::Interval) {
        if (b.meets(overlap)) return false;
        continue;
      }
      if (b.kind == CComponent::Kind::Interval) {
        if (a.meets(overlap)) return false;
        continue;
      }
      // Two Cantor sets with overlapping hulls: conservatively call them intersecting.
      return false;
    }
  }
  return true;
}

CSet CSet::normalized() const {
  std::vector<CComponent> intervals;
  std::vector<CComponent> others;
  for (const auto& c : components_) (c.kind == CComponent::Kind::Interval ? intervals : others).push_back(c);

  std::sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  std::vector<CComponent> merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }

  auto swallowed = [&](const CComponent& c) {
    for (const auto& iv : merged)
      if (iv.lo <= c.lo && c.hi <= iv.hi) return true;
    return false;
  };

  std::vector<CComponent> cantors;
  std::vector<CComponent> points;
  for (const auto& c : others) {
    if (swallowed(c)) continue;
    (c.kind == CComponent::Kind::Cantor ? cantors : points).push_back(c);
  }
  std::vector<CComponent> out = merged;
  for (const auto& c : cantors)
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  for (const auto& p : points) {
    bool inside = std::any_of(cantors.begin(), cantors.end(), [&](const auto& c) { return c.contains(p.lo); });
    if (!inside && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.kind < b.kind;
  });
  return CSet(std::move(out));
}

CSet CSet::united(const CSet& other) const {
  std::vector<CComponent> all = components_;
  all.insert(all.end(), other.components_.begin(), other.components_.end());
  return CSet(std::move(all)).normalized();
}

}  // namespace indicatrix
