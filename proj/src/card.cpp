#include "indicatrix/card.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace indicatrix {

Card Card::finite(std::int64_t k) {
  if (k < 1) throw std::domain_error("Card: finite value must be >= 1, got " + std::to_string(k));
  return Card(Kind::Finite, k);
}

Card Card::parse(std::string_view text) {
  if (text == "omega" || text == "w" || text == "ω") return omega();
  if (text == "c" || text == "continuum" || text == "𝔠") return continuum();
  std::int64_t k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed cardinal: '" + std::string(text) + "'");
  return finite(k);
}

std::string Card::str() const {
  switch (kind_) {
    case Kind::Finite: return std::to_string(k_);
    case Kind::Omega: return "omega";
    case Kind::Continuum: return "c";
  }
  return "?";
}

std::int64_t Card::value() const {
  if (!is_finite()) throw std::logic_error("Card::value on infinite cardinal");
  return k_;
}

Card Card::minus(std::int64_t k) const {
  if (!is_finite()) return *this;
  return finite(k_ - k);
}

Card card_sum(const Card& a, const Card& b) {
  if (a.is_finite() && b.is_finite()) return Card::finite(a.value() + b.value());
  return std::max(a, b);
}

bool card_ge(const Card& a, const Card& n) { return a >= n; }

}  // namespace indicatrix
