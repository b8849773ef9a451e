#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace indicatrix {

/// Exact rational number in canonical reduced form (denominator > 0).
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p/q", "p" and plain decimals such as "0.375".
  static Rat parse(std::string_view text);

  std::string str() const;
  double to_double() const { return q_.get_d(); }
  /// Decimal rendering rounded to `digits` places (presentation only).
  std::string decimal(int digits) const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  const mpq_class& raw() const { return q_; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// 2^-k as an exact rational.
Rat pow2_inv(unsigned k);

/// Closed rational interval [lo, hi], lo <= hi.
struct ClosedInterval {
  Rat lo;
  Rat hi;

  bool contains(const Rat& y) const { return lo <= y && y <= hi; }
  bool contains(const ClosedInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool meets(const ClosedInterval& o) const { return !(o.hi < lo || hi < o.lo); }
  Rat length() const { return hi - lo; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

}  // namespace indicatrix

template <>
struct std::hash<indicatrix::Rat> {
  std::size_t operator()(const indicatrix::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
