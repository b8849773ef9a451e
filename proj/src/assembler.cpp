#include "indicatrix/assembler.hpp"

#include <algorithm>

namespace indicatrix {

namespace {

Plf embed(const Plf& g, const Rat& lo, const Rat& hi, bool left, bool right) {
  const Rat s = left ? Rat(1, 3) : Rat(0);
  const Rat t = right ? Rat(2, 3) : Rat(1);
  std::vector<Vertex> v;
  if (left) v.push_back({Rat(0), lo});
  for (const auto& p : g.vertices()) v.push_back({s + (t - s) * p.x, p.y});
  if (right) v.push_back({Rat(1), hi});
  return Plf(std::move(v));
}

}  // namespace

Assembly assemble_endpoints(BuildArtifact core, const Rat& a, const Rat& b) {
  Assembly s;
  s.a = a;
  s.b = b;
  s.reflected = b < a;
  const Rat lo = min(a, b);
  const Rat hi = max(a, b);
  s.ramp_left = lo > Rat(0);
  s.ramp_right = hi < Rat(1);
  for (const Plf& g : core.stages) {
    Plf e = embed(g, lo, hi, s.ramp_left, s.ramp_right);
    s.stages.push_back(s.reflected ? reflect(e) : e);
  }
  s.core = std::move(core);
  return s;
}

std::optional<std::size_t> stable_stage(const BuildArtifact& core, const Rat& y) {
  std::size_t first = 0;
  bool deepest_hit = false;
  for (const auto& r : core.rects) {
    if (!r.d.yrange().contains(y)) continue;
    first = std::max(first, r.level + 1);
    if (r.level == core.top()) deepest_hit = true;
  }
  if (deepest_hit || first > core.top()) return std::nullopt;
  return first;
}

Assembly inject_plateaus(Assembly s, const PlateauPlan& plan) {
  s.plan = plan;
  if (plan.empty()) return s;
  const Rat width(1, static_cast<long>(4 * (plan.entries.size() + 1)));
  for (const auto& e : plan.entries) {
    auto st = stable_stage(s.core, e.level);
    if (!st) throw std::logic_error("plateau level " + e.level.str() + " has not stabilized in the built stages");
    const LevelSet ls = plf_level_set(s.stages[*st], e.level);
    if (ls.pieces.empty()) throw std::logic_error("plateau level " + e.level.str() + " is not attained");
    s.plateaus.push_back({e.level, ls.pieces.front().x1, width, *st});
  }
  std::vector<Rat> anchors;
  for (const auto& p : s.plateaus) anchors.push_back(p.anchor);
  std::sort(anchors.begin(), anchors.end());
  if (std::adjacent_find(anchors.begin(), anchors.end()) != anchors.end())
    throw std::logic_error("two plateaus share an anchor");

  const Rat total = Rat(1) + width * Rat(static_cast<long>(anchors.size()));
  for (Plf& g : s.stages) {
    std::map<Rat, Rat> v;
    for (const auto& p : g.vertices()) v.emplace(p.x, p.y);
    for (const Rat& x : anchors) v.emplace(x, plf_eval(g, x));
    std::vector<Vertex> out;
    std::size_t passed = 0;
    for (const auto& [x, y] : v) {
      const Rat shift = width * Rat(static_cast<long>(passed));
      out.push_back({(x + shift) / total, y});
      if (passed < anchors.size() && anchors[passed] == x) {
        ++passed;
        out.push_back({(x + shift + width) / total, y});
      }
    }
    g = Plf(std::move(out));
  }
  return s;
}

Assembly assemble(const StepSpec& f, const Rat& a, const Rat& b, const BuildOptions& opts) {
  const ValidationResult vr = validate(f, a, b);
  if (!vr.ok()) throw SpecError("rejected: " + vr.violations.front().str());
  auto [reduced, plan] = reduce_exceptional(f, *vr.certificate);
  const StepSpec core_spec = hat_spec(reduced, min(a, b), max(a, b));
  Assembly s = assemble_endpoints(build(core_spec, opts), a, b);
  s.spec = f;
  return inject_plateaus(std::move(s), plan);
}

LimitValue eval_limit(const Assembly& s, const Rat& x, const Rat& eps) {
  if (!(eps > Rat(0))) throw std::invalid_argument("eps must be positive");
  if (x < Rat(0) || x > Rat(1)) throw std::invalid_argument("x must lie in [0,1]");
  Rat best = s.core.error_bound(0);
  for (std::size_t n = 0; n <= s.top(); ++n) {
    const Rat bound = s.core.error_bound(n);
    best = min(best, bound);
    if (bound <= eps) return {plf_eval(s.stages[n], x), n, bound};
  }
  throw DepthExhausted("built stages certify only " + best.str(), best);
}

Address address_towards(const CSet& k, const Rat& y, std::size_t length) {
  Scheme scheme(k);
  Address out;
  std::vector<int> choices;
  while (out.size() < length) {
    const Cell& here = scheme.cell(choices);
    auto [c0, c1] = Scheme::split(here);
    const int pick = c0.contains(y) ? 0 : 1;
    if (pick == 1) out.push_back(0);
    out.push_back(1);
    choices.push_back(pick);
    if (here.pieces.size() == 1 && here.pieces.front().kind == CComponent::Kind::Point) {
      while (out.size() < length) out.push_back(1);
    }
  }
  out.resize(length);
  return out;
}

SectionReport section_report(const Assembly& s, const Rat& y, std::size_t depth) {
  SectionReport r;
  r.y = y;
  r.expected = s.spec.value_at(y);
  const std::size_t last = std::min(depth, s.top());
  for (std::size_t n = 0; n <= last; ++n) r.counts.push_back(plf_level_count(s.stages[n], y));

  const bool plateau = std::any_of(s.plateaus.begin(), s.plateaus.end(), [&](const Plateau& p) { return p.level == y; });
  r.stable_from = stable_stage(s.core, y);
  const auto chains = branches_through(s.core, y, last);
  r.chains = chains.size();
  r.max_chains_per_label = max_chains_per_label(chains, last);

  if (plateau) {
    r.kind = "plateau";
    r.consistent = r.expected.is_continuum() && !r.counts.empty() && r.counts.back() < 0;
  } else if (r.expected.is_finite()) {
    r.kind = "finite";
    r.consistent = r.stable_from && *r.stable_from <= last && r.counts.back() == r.expected.value();
  } else if (!r.expected.is_continuum()) {
    r.kind = "omega";
    bool growing = true;
    for (std::size_t n = 1; n < r.counts.size(); ++n) growing = growing && r.counts[n] > r.counts[n - 1];
    r.consistent = growing;
  } else {
    r.kind = "continuum";
    const CSet k = s.core.spec.continuum_set();
    if (!k.empty() && k.contains(y)) {
      r.address = address_towards(k, y, last);
      r.witness = perfect_witness(s.core, r.address, y, last);
      r.consistent = r.witness->complete && r.witness->leaves == (std::size_t{1} << r.witness->branching_levels);
    }
  }
  return r;
}

std::vector<std::string> verify_assembly(const Assembly& s, const std::vector<Rat>& extra_levels) {
  std::vector<std::string> fails = verify_artifact(s.core, extra_levels);
  for (std::size_t n = 0; n < s.stages.size(); ++n) {
    const Plf& g = s.stages[n];
    if (g.front().y != s.a || g.back().y != s.b) fails.push_back("F_" + std::to_string(n) + " misses the endpoint values");
  }
  const Plf& last = s.stages.back();
  for (const auto& p : s.plateaus)
    if (!plf_level_set(last, p.level).has_interval()) fails.push_back("no plateau at level " + p.level.str());

  const bool settled = s.core.rects_at(s.core.top()).empty() && s.core.zones.empty() && !s.core.opts.window;
  if (settled && s.core.spec.continuum_set().empty()) {
    if (auto y = disagreement(plf_indicatrix(last), s.spec, {}))
      fails.push_back("final indicatrix differs from the profile at y=" + y->str());
  }
  return fails;
}

}  // namespace indicatrix
