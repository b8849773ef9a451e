#pragma once

#include "indicatrix/card.hpp"
#include "indicatrix/rational.hpp"
#include "indicatrix/step_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace indicatrix {

/// One-sided liminf values of f at y, with f(0-) = f(1+) = 1.
struct SideValues {
  Card left = Card::finite(1);
  Card right = Card::finite(1);
  friend bool operator==(const SideValues&, const SideValues&) = default;
};

SideValues side_values(const StepSpec& f, const Rat& y);

/// Position of a level relative to the endpoint values a <= b.
enum class Region : std::uint8_t {
  Below,        // [0,a) ∪ (b,1]
  Inside,       // (a,b)
  Boundary,     // y ∈ {0,1} with (a,b) = (0,1)
  DoublePoint,  // y = a = b
};

const char* region_name(Region r);

enum class Clause : std::uint8_t {
  StarInequality,  // f(y1) + f(y2) >= 2 f(y)
  StarParity,      // forbidden equality case
  DoubleStar,      // f(y1) + f(y2) unbounded near an infinite value
  OverlayRule,     // continuum overlay on a finite piece
  HatReduction,    // the endpoint reduction drops a value below 1
  SimpleRange,     // simple preindicatrix value outside {1,2,3}
  SimpleOpen,      // {p = 3} not open
  SimpleEndpoint,  // p = 2 away from the ends of a type-three interval
};

const char* clause_name(Clause c);

struct Violation {
  Rat y;                              // level where the clause fails (witness level for pieces)
  std::optional<std::size_t> piece;   // piece index when the failure is piece-wide
  Region region = Region::Inside;
  Clause clause = Clause::StarInequality;
  bool on_reduced = false;            // failure found on the reduced spec for y ∈ {a,b}
  Card value = Card::finite(1);
  SideValues sides;
  std::string str() const;
};

std::optional<Violation> condition_at(const StepSpec& f, const Rat& y, Region region);

struct CheckedLocation {
  Rat y;
  std::optional<std::size_t> piece;
  Region region = Region::Inside;
  bool delegated = false;  // checked on the reduced spec
};

/// Successful validation. `exceptional` lists the isolated continuum levels at
/// which (**) fails (handled later by plateau injection).
struct Certificate {
  Rat a;
  Rat b;
  bool reflected = false;
  std::vector<Rat> exceptional;
  std::vector<CheckedLocation> checked;
};

struct ValidationResult {
  std::optional<Certificate> certificate;
  std::vector<Violation> violations;
  bool ok() const { return certificate.has_value(); }
};

/// Decides whether f is the indicatrix of a continuous F with F(0) = a, F(1) = b.
/// Throws SpecError for endpoints outside [0,1].
ValidationResult validate(const StepSpec& f, const Rat& a, const Rat& b);
inline ValidationResult validate(const StepSpec& f) { return validate(f, Rat(0), Rat(1)); }

/// Simple preindicatrix test: values in {1,2,3}, {p = 3} open, and every
/// 2-point an endpoint of a maximal {p = 3} interval.
std::optional<Violation> is_simple_pre(const StepSpec& p);

/// The reduced spec for endpoints a <= b: one less on (0,a) ∪ (b,1) and at
/// a, b when a != b; two less at a = b. Throws SpecError when a value would
/// drop below 1.
StepSpec hat_spec(const StepSpec& f, const Rat& a, const Rat& b);

}  // namespace indicatrix
