#pragma once

#include "indicatrix/coding.hpp"
#include "indicatrix/decompose.hpp"
#include "indicatrix/geometry.hpp"
#include "indicatrix/intervals.hpp"
#include "indicatrix/plf.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace indicatrix {

enum class BuildMode : std::uint8_t { Countable, General };

const char* mode_name(BuildMode m);

struct Rect {
  Diag d;
  std::size_t level = 0;
  std::optional<std::size_t> parent;
  bool meets_c = false;  // tau* met the y-range when children were formed
};

struct UsageEntry {
  std::string interval;  // "<family>.<id>"
  std::size_t rect = 0;
  std::size_t level = 0;
  std::size_t queue = 0;
};

struct BuildOptions {
  std::size_t stages = 3;      // rectangles for levels 0..stages, functions F_0..F_stages
  std::size_t seq_depth = 8;   // halvings materialized per infinite sequence
  std::optional<ClosedInterval> window;
};

struct BuildArtifact {
  StepSpec spec = StepSpec::constant(Card::finite(1));
  BuildMode mode = BuildMode::Countable;
  BuildOptions opts;
  std::vector<StepSpec> simple;  // p_0, p_1, ... as used by the countable builder
  std::vector<Plf> stages;       // F_0..F_N
  std::vector<Rect> rects;       // creation order, levels non-decreasing
  std::vector<UsageEntry> usage;
  std::vector<Zone> zones;
  std::size_t families = 0;      // families materialized

  std::size_t top() const { return stages.size() - 1; }
  std::vector<std::size_t> rects_at(std::size_t level) const;
  /// sup |F_m - F_n| over m >= n: the tallest level-n rectangle.
  Rat error_bound(std::size_t n) const;
  bool in_zone(const Rat& y) const;
};

/// P^{n,k}_i: queue i of unused intervals.
struct QItem {
  std::size_t family = 0;
  std::size_t id = 0;
  Rat lo;
  Rat hi;
  ClosedInterval closure() const { return {lo, hi}; }
  std::string label() const { return std::to_string(family) + "." + std::to_string(id); }
};

struct FamilyState {
  std::vector<std::vector<QItem>> queues;  // each sorted by lo, interiors disjoint
};

struct StepRect {
  ClosedInterval y;
  bool meets_c = false;
};

/// Re-indexing after one (n,k) step: drops `used`, shifts intervals lying under
/// the step's rectangles by 1 (c-disjoint) or 3 (c-meeting), then promotes
/// intervals that no longer nest in the next coarser queue.
FamilyState family_step(const FamilyState& s, const std::vector<QItem>& used, const std::vector<StepRect>& rects);

BuildArtifact build_countable(SimpleStream& stream, const StepSpec& f, const BuildOptions& opts);
BuildArtifact build_countable(const StepSpec& f, const BuildOptions& opts);
BuildArtifact build_general(const StepSpec& f, const BuildOptions& opts);
/// Countable mode when f has no continuum levels, general mode otherwise.
BuildArtifact build(const StepSpec& f, const BuildOptions& opts);

/// Section size of F_n at y predicted from the rectangles of levels < n.
std::size_t block_count(const BuildArtifact& a, std::size_t n, const Rat& y);

/// f_n = p_0 + sum (p_i - 1) from the stored simple preindicatrices.
StepSpec stored_partial(const BuildArtifact& a, std::size_t n);

/// First level where a and b differ outside the zones.
std::optional<Rat> disagreement(const StepSpec& a, const StepSpec& b, const std::vector<Zone>& zones);

struct BranchRef {
  std::vector<std::size_t> chain;  // rect indices, level 0 first
  Address label;
};

/// Maximal chains of rectangles up to `depth` whose y-ranges contain y.
std::vector<BranchRef> branches_through(const BuildArtifact& a, const Rat& y, std::size_t depth);
/// Largest number of chains reaching `depth` with one label word.
std::size_t max_chains_per_label(const std::vector<BranchRef>& chains, std::size_t depth);

struct Witness {
  std::map<Address, std::size_t> nodes;  // R_tau for tau in S
  std::size_t depth = 0;
  std::size_t branching_levels = 0;
  std::size_t leaves = 0;
  bool complete = false;
};

/// The tree (R_tau) for tau following the 0/nonzero pattern of `prefix`,
/// branching into children 1 and 2 at nonzero positions.
Witness perfect_witness(const BuildArtifact& a, const Address& prefix, const Rat& y, std::size_t depth);

/// Structural and exact checks of a finished artifact. Empty when all pass.
std::vector<std::string> verify_artifact(const BuildArtifact& a, const std::vector<Rat>& extra_levels = {});

}  // namespace indicatrix
