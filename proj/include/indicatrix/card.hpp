#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace indicatrix {

/// A cardinality value: finite k >= 1, omega, or continuum, totally ordered
/// 1 < 2 < ... < omega < continuum.
class Card {
 public:
  enum class Kind : std::uint8_t { Finite, Omega, Continuum };

  static Card finite(std::int64_t k);
  static Card omega() { return Card(Kind::Omega, 0); }
  static Card continuum() { return Card(Kind::Continuum, 0); }

  /// "k", "omega"/"w", "c"/"continuum".
  static Card parse(std::string_view text);
  std::string str() const;

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ != Kind::Finite; }
  bool is_continuum() const { return kind_ == Kind::Continuum; }
  /// Finite value; throws for infinite cards.
  std::int64_t value() const;

  /// f - k + 1 style arithmetic used by the decomposition; infinite values absorb.
  Card minus(std::int64_t k) const;

  friend bool operator==(const Card&, const Card&) = default;
  friend std::strong_ordering operator<=>(const Card& a, const Card& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.k_ <=> b.k_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Card& c) { return os << c.str(); }

 private:
  Card(Kind kind, std::int64_t k) : kind_(kind), k_(k) {}

  Kind kind_ = Kind::Finite;
  std::int64_t k_ = 1;
};

Card card_sum(const Card& a, const Card& b);
/// a >= n in the cardinal order.
bool card_ge(const Card& a, const Card& n);

}  // namespace indicatrix
