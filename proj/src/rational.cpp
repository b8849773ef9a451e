#include "indicatrix/rational.hpp"

#include <stdexcept>

namespace indicatrix {

Rat::Rat(long n, long d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.q_ == 0) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("malformed rational: empty");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    std::string_view den_s = s.substr(slash + 1);
    if (!all_digits(den_s)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class den(std::string(den_s), 10);
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
    return Rat(mpq_class(num, den));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num = mpz_class(std::string(int_part), 10) * scale;
    if (!frac.empty()) num += mpz_class(std::string(frac), 10);
    if (neg) num = -num;
    return Rat(mpq_class(num, scale));
  }
  return Rat(mpq_class(parse_integer(s, text)));
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpq_class scaled = q_ * scale;
  // round half away from zero
  mpz_class num = scaled.get_num();
  mpz_class den = scaled.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  mpz_class rounded = (2 * num + den) / (2 * den);
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (neg && rounded != 0) body.insert(0, "-");
  return body;
}

Rat pow2_inv(unsigned k) {
  mpz_class den = 1;
  den <<= k;
  return Rat(mpq_class(mpz_class(1), den));
}

}  // namespace indicatrix
