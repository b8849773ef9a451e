#pragma once

#include "indicatrix/builder.hpp"
#include "indicatrix/decompose.hpp"
#include "indicatrix/validator.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace indicatrix {

struct Plateau {
  Rat level;
  Rat anchor;   // smallest preimage in the unplateaued final stage
  Rat width;
  std::size_t stage = 0;  // first stage whose section at `level` is final
};

struct Assembly {
  BuildArtifact core;
  StepSpec spec = StepSpec::constant(Card::finite(1));  // the profile asked for
  Rat a;
  Rat b;
  bool reflected = false;
  bool ramp_left = false;   // [0,1/3] carries a ramp from F(0) down to 0
  bool ramp_right = false;  // [2/3,1] carries a ramp from 1 to F(1)
  PlateauPlan plan;
  std::vector<Plateau> plateaus;
  std::vector<Plf> stages;

  std::size_t top() const { return stages.size() - 1; }
};

struct DepthExhausted : std::runtime_error {
  Rat achievable;
  DepthExhausted(const std::string& what, Rat best) : std::runtime_error(what), achievable(std::move(best)) {}
};

/// Shrinks every core stage into the middle span and attaches the ramps;
/// reflects when a > b. The core must be built for hat_spec(f, min, max).
Assembly assemble_endpoints(BuildArtifact core, const Rat& a, const Rat& b);

/// Inserts a horizontal segment at each plan level, anchored at its smallest
/// stabilized preimage, and renormalizes the domain. Throws std::logic_error
/// when a level has not stabilized in the built stages.
Assembly inject_plateaus(Assembly asm_, const PlateauPlan& plan);

/// Full pipeline: validate, reduce, build, assemble, inject. Throws SpecError
/// carrying the first violation when f is rejected.
Assembly assemble(const StepSpec& f, const Rat& a, const Rat& b, const BuildOptions& opts);

/// F_n(x) for the first n whose error bound is at most eps.
struct LimitValue {
  Rat value;
  std::size_t stage = 0;
  Rat bound;
};
LimitValue eval_limit(const Assembly& s, const Rat& x, const Rat& eps);

struct SectionReport {
  Rat y;
  Card expected = Card::finite(1);
  std::vector<long> counts;  // per stage, -1 for a section containing an interval
  std::string kind;          // "finite", "omega", "continuum", "plateau"
  std::optional<std::size_t> stable_from;
  std::size_t chains = 0;
  std::size_t max_chains_per_label = 0;
  std::optional<Witness> witness;
  Address address;           // coding prefix used for the witness
  bool consistent = false;
};

/// The first stage whose section at y cannot change any more, if built.
std::optional<std::size_t> stable_stage(const BuildArtifact& core, const Rat& y);

/// A coding prefix of the given length whose tau* contains y.
Address address_towards(const CSet& k, const Rat& y, std::size_t length);

SectionReport section_report(const Assembly& s, const Rat& y, std::size_t depth);

/// Core checks plus the endpoint contract, plateau sections and, for
/// stabilized builds, the exact round trip against the requested profile.
std::vector<std::string> verify_assembly(const Assembly& s, const std::vector<Rat>& extra_levels = {});

}  // namespace indicatrix
