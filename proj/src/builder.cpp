#include "indicatrix/builder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace indicatrix {

const char* mode_name(BuildMode m) { return m == BuildMode::Countable ? "countable" : "general"; }

std::vector<std::size_t> BuildArtifact::rects_at(std::size_t level) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rects.size(); ++i)
    if (rects[i].level == level) out.push_back(i);
  return out;
}

Rat BuildArtifact::error_bound(std::size_t n) const {
  Rat b;
  for (const auto& r : rects)
    if (r.level == n) b = max(b, r.d.height());
  return b;
}

bool BuildArtifact::in_zone(const Rat& y) const {
  return std::any_of(zones.begin(), zones.end(), [&](const Zone& z) { return z.contains(y); });
}

namespace {

Plf patched(const Plf& g, const std::vector<const Diag*>& ds) {
  std::map<Rat, Rat> v;
  for (const auto& p : g.vertices()) v.emplace(p.x, p.y);
  for (const Diag* d : ds) {
    v.erase(v.upper_bound(d->xlo), v.lower_bound(d->xhi));
    for (const Vertex& p : zigzag_patch(*d)) v[p.x] = p.y;
  }
  std::vector<Vertex> out;
  out.reserve(v.size());
  for (const auto& [x, y] : v) out.push_back({x, y});
  return Plf(std::move(out));
}

void fill_stages(BuildArtifact& a) {
  a.stages.clear();
  a.stages.push_back(Plf::identity());
  for (std::size_t n = 0; n < a.opts.stages; ++n) {
    std::vector<const Diag*> ds;
    for (const auto& r : a.rects)
      if (r.level == n) ds.push_back(&r.d);
    a.stages.push_back(ds.empty() ? a.stages.back() : patched(a.stages.back(), ds));
  }
}

std::size_t add_rect(BuildArtifact& a, Diag d, std::size_t level, std::optional<std::size_t> parent, std::size_t queue) {
  a.rects.push_back({std::move(d), level, parent, false});
  const std::size_t idx = a.rects.size() - 1;
  a.usage.push_back({a.rects[idx].d.source, idx, level, queue});
  return idx;
}

void add_roots(BuildArtifact& a, const Family& p0) {
  for (const auto& iv : p0.intervals) add_rect(a, restrict_to(identity_diag(), iv.open(), p0.label(iv.id)), 0, std::nullopt, 0);
}

bool item_less(const QItem& x, const QItem& y) { return x.lo < y.lo; }

// Index of the queue interval containing `it`, if any.
std::optional<std::size_t> container(const std::vector<QItem>& q, const QItem& it) {
  auto pos = std::upper_bound(q.begin(), q.end(), it, [](const QItem& x, const QItem& y) { return x.lo < y.lo; });
  if (pos == q.begin()) return std::nullopt;
  --pos;
  if (pos->lo <= it.lo && it.hi <= pos->hi) return static_cast<std::size_t>(pos - q.begin());
  return std::nullopt;
}

bool overlaps(const std::vector<QItem>& q, const QItem& it) {
  for (const auto& x : q)
    if (x.lo < it.hi && it.lo < x.hi) return true;
  return false;
}

}  // namespace

FamilyState family_step(const FamilyState& s, const std::vector<QItem>& used, const std::vector<StepRect>& rects) {
  std::set<std::pair<std::size_t, std::size_t>> gone;
  for (const auto& u : used) gone.insert({u.family, u.id});

  FamilyState out;
  out.queues.resize(s.queues.size());
  for (std::size_t j = 0; j < s.queues.size(); ++j) {
    for (const auto& it : s.queues[j]) {
      if (gone.count({it.family, it.id})) continue;
      auto r = std::find_if(rects.begin(), rects.end(), [&](const StepRect& sr) { return sr.y.contains(it.closure()); });
      if (r == rects.end()) {
        out.queues[j].push_back(it);
        continue;
      }
      const std::size_t shift = r->meets_c ? 3 : 1;
      if (j < shift) throw std::logic_error("interval " + it.label() + " left unused under a rectangle");
      out.queues[j - shift].push_back(it);
    }
  }
  for (auto& q : out.queues) std::sort(q.begin(), q.end(), item_less);

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.queues.size(); ++i) {
      auto& lower = out.queues[i];
      auto& upper = out.queues[i + 1];
      for (std::size_t k = 0; k < upper.size();) {
        if (container(lower, upper[k])) {
          ++k;
          continue;
        }
        if (overlaps(lower, upper[k]))
          throw std::logic_error("interval " + upper[k].label() + " straddles queue " + std::to_string(i));
        lower.insert(std::upper_bound(lower.begin(), lower.end(), upper[k], item_less), upper[k]);
        upper.erase(upper.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
      }
    }
  }
  return out;
}

BuildArtifact build_countable(SimpleStream& stream, const StepSpec& f, const BuildOptions& opts) {
  BuildArtifact a;
  a.spec = f;
  a.mode = BuildMode::Countable;
  a.opts = opts;
  const std::size_t n_top = opts.stages;

  std::vector<Family> fams;
  for (std::size_t i = 0; i <= n_top; ++i) {
    a.simple.push_back(stream.item(i));
    fams.push_back(family(a.simple.back(), i, opts.seq_depth));
  }
  fams = refine_families(std::move(fams), opts.window);
  a.zones = all_zones(fams);
  a.families = fams.size();

  add_roots(a, fams[0]);
  for (std::size_t n = 0; n < n_top; ++n) {
    const Family& next = fams[n + 1];
    std::vector<bool> taken(next.intervals.size(), false);
    for (std::size_t r : a.rects_at(n)) {
      const Diag left = thirds(a.rects[r].d)[0];
      for (std::size_t k = 0; k < next.intervals.size(); ++k) {
        const auto& iv = next.intervals[k];
        if (taken[k] || !a.rects[r].d.yrange().contains(iv.closure())) continue;
        taken[k] = true;
        add_rect(a, restrict_to(left, iv.open(), next.label(iv.id)), n + 1, r, n + 1);
      }
    }
  }
  fill_stages(a);
  return a;
}

BuildArtifact build_countable(const StepSpec& f, const BuildOptions& opts) {
  SimpleStream s(f);
  return build_countable(s, f, opts);
}

BuildArtifact build_general(const StepSpec& f, const BuildOptions& opts) {
  const CSet k_set = f.continuum_set();
  if (k_set.empty()) throw std::invalid_argument("general build needs a nonempty continuum set");
  Scheme scheme(k_set);

  BuildArtifact a;
  a.spec = f;
  a.mode = BuildMode::General;
  a.opts = opts;
  const std::size_t n_top = opts.stages;

  // An interval drops at most 3 queues per (n,k) step.
  std::size_t steps = 0;
  for (std::size_t n = 0, p = 1; n < n_top; ++n, p *= 3) steps += p;
  const std::size_t top_family = 3 * steps + 4;

  SimpleStream stream(f);
  std::vector<Family> fams;
  for (std::size_t i = 0; i <= top_family; ++i) fams.push_back(family(stream.item(i), i, opts.seq_depth));
  fams = refine_families(std::move(fams), opts.window);
  a.zones = all_zones(fams);
  a.families = fams.size();

  FamilyState state;
  state.queues.resize(top_family);
  for (std::size_t j = 0; j < top_family; ++j)
    for (const auto& iv : fams[j + 1].intervals) state.queues[j].push_back({j + 1, iv.id, iv.lo, iv.hi});

  add_roots(a, fams[0]);
  std::map<Address, std::vector<std::size_t>> by_tau;
  by_tau[{}] = a.rects_at(0);

  for (std::size_t n = 0; n <= n_top; ++n) {
    std::map<Address, std::vector<std::size_t>> next;
    for (const auto& [tau, idxs] : by_tau) {
      const Cell cell = tau_star(scheme, tau);
      std::vector<QItem> used;
      std::vector<StepRect> srs;
      std::set<std::pair<std::size_t, std::size_t>> taken;
      for (std::size_t r : idxs) {
        const bool meets = cell_meets(cell, a.rects[r].d.yrange());
        a.rects[r].meets_c = meets;
        srs.push_back({a.rects[r].d.yrange(), meets});
        if (n == n_top) continue;
        const auto th = thirds(a.rects[r].d);
        for (std::size_t e = 0; e < 3; ++e) {
          if (e > 0 && !meets) break;
          for (const QItem& it : state.queues[e]) {
            if (taken.count({it.family, it.id}) || !a.rects[r].d.yrange().contains(it.closure())) continue;
            taken.insert({it.family, it.id});
            used.push_back(it);
            const std::size_t idx = add_rect(a, restrict_to(th[e], {it.lo, it.hi}, it.label()), n + 1, r, e);
            next[a.rects[idx].d.address].push_back(idx);
          }
        }
      }
      if (n == n_top) continue;
      state = family_step(state, used, srs);
      for (std::size_t j = 0; j < 3 && j < state.queues.size(); ++j)
        for (const auto& it : state.queues[j])
          if (it.family + 1 >= a.families)
            throw std::logic_error("family materialization exhausted at level " + std::to_string(n));
    }
    by_tau = std::move(next);
  }
  fill_stages(a);
  return a;
}

BuildArtifact build(const StepSpec& f, const BuildOptions& opts) {
  return f.continuum_set().empty() ? build_countable(f, opts) : build_general(f, opts);
}

std::size_t block_count(const BuildArtifact& a, std::size_t n, const Rat& y) {
  std::size_t c = 1;
  for (const auto& r : a.rects) {
    if (r.level >= n || !r.d.yrange().contains(y)) continue;
    c += (r.d.ylo < y && y < r.d.yhi) ? 2 : 1;
  }
  return c;
}

StepSpec stored_partial(const BuildArtifact& a, std::size_t n) {
  if (a.simple.empty()) throw std::logic_error("artifact carries no simple preindicatrices");
  StepSpec acc = a.simple[0];
  for (std::size_t i = 1; i <= n && i < a.simple.size(); ++i)
    acc = pointwise(acc, a.simple[i], [](const Card& x, const Card& y) { return Card::finite(x.value() + y.value() - 1); });
  return acc;
}

std::optional<Rat> disagreement(const StepSpec& a, const StepSpec& b, const std::vector<Zone>& zones) {
  std::vector<Rat> pts = a.breakpoints();
  pts.insert(pts.end(), b.breakpoints().begin(), b.breakpoints().end());
  for (const auto& z : zones) {
    if (Rat(0) <= z.lo && z.lo <= Rat(1)) pts.push_back(z.lo);
    if (Rat(0) <= z.hi && z.hi <= Rat(1)) pts.push_back(z.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto zoned = [&](const Rat& y) {
    return std::any_of(zones.begin(), zones.end(), [&](const Zone& z) { return z.contains(y); });
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!zoned(pts[i]) && a.value_at(pts[i]) != b.value_at(pts[i])) return pts[i];
    if (i + 1 < pts.size()) {
      const Rat w = midpoint(pts[i], pts[i + 1]);
      if (!zoned(w) && a.value_at(w) != b.value_at(w)) return w;
    }
  }
  return std::nullopt;
}

std::vector<BranchRef> branches_through(const BuildArtifact& a, const Rat& y, std::size_t depth) {
  std::vector<bool> hit(a.rects.size(), false);
  std::vector<bool> has_child(a.rects.size(), false);
  for (std::size_t i = 0; i < a.rects.size(); ++i)
    hit[i] = a.rects[i].level <= depth && a.rects[i].d.yrange().contains(y);
  for (std::size_t i = 0; i < a.rects.size(); ++i)
    if (hit[i] && a.rects[i].parent) has_child[*a.rects[i].parent] = true;
  std::vector<BranchRef> out;
  for (std::size_t i = 0; i < a.rects.size(); ++i) {
    if (!hit[i] || has_child[i]) continue;
    BranchRef b;
    for (std::optional<std::size_t> r = i; r; r = a.rects[*r].parent) b.chain.push_back(*r);
    std::reverse(b.chain.begin(), b.chain.end());
    b.label = a.rects[i].d.address;
    out.push_back(std::move(b));
  }
  return out;
}

std::size_t max_chains_per_label(const std::vector<BranchRef>& chains, std::size_t depth) {
  std::map<Address, std::size_t> counts;
  std::size_t best = 0;
  for (const auto& c : chains)
    if (c.label.size() == depth) best = std::max(best, ++counts[c.label]);
  return best;
}

Witness perfect_witness(const BuildArtifact& a, const Address& prefix, const Rat& y, std::size_t depth) {
  if (a.spec.continuum_set().empty()) throw std::invalid_argument("perfect witness needs a nonempty continuum set");
  if (prefix.size() < depth) throw std::invalid_argument("address prefix shorter than the witness depth");
  Witness w;
  w.depth = depth;
  std::map<std::size_t, std::vector<std::size_t>> children;
  for (std::size_t i = 0; i < a.rects.size(); ++i)
    if (a.rects[i].parent) children[*a.rects[i].parent].push_back(i);

  auto holds = [&](std::size_t r) { return a.rects[r].d.yrange().contains(y); };
  for (std::size_t r : a.rects_at(0)) {
    if (holds(r)) {
      w.nodes[{}] = r;
      break;
    }
  }
  if (w.nodes.empty()) return w;

  std::vector<Address> frontier{{}};
  bool complete = true;
  for (std::size_t n = 0; n < depth; ++n) {
    const bool branch = prefix[n] != 0;
    if (branch) ++w.branching_levels;
    std::vector<Address> next;
    for (const Address& tau : frontier) {
      const std::size_t r = w.nodes.at(tau);
      for (std::uint8_t e : branch ? std::vector<std::uint8_t>{1, 2} : std::vector<std::uint8_t>{0}) {
        Address child_tau = tau;
        child_tau.push_back(e);
        auto it = children.find(r);
        std::optional<std::size_t> found;
        if (it != children.end())
          for (std::size_t c : it->second)
            if (a.rects[c].d.address == child_tau && holds(c)) {
              found = c;
              break;
            }
        if (!found) {
          complete = false;
          continue;
        }
        w.nodes[child_tau] = *found;
        next.push_back(child_tau);
      }
    }
    frontier = std::move(next);
  }
  w.leaves = frontier.size();
  w.complete = complete;
  return w;
}

std::vector<std::string> verify_artifact(const BuildArtifact& a, const std::vector<Rat>& extra_levels) {
  std::vector<std::string> fails;
  auto fail = [&](const std::string& s) { fails.push_back(s); };
  const std::size_t n_top = a.top();

  if (a.stages.empty() || !(a.stages.front() == Plf::identity())) fail("F_0 is not the identity");

  // nesting and disjointness
  for (std::size_t i = 0; i < a.rects.size(); ++i) {
    const Rect& r = a.rects[i];
    if (r.parent) {
      const Rect& p = a.rects[*r.parent];
      if (p.level + 1 != r.level || !p.d.contains(r.d)) fail("rect " + std::to_string(i) + " is not nested in its parent");
    } else if (r.level != 0) {
      fail("rect " + std::to_string(i) + " has no parent");
    }
  }
  for (std::size_t n = 0; n <= n_top; ++n) {
    auto idx = a.rects_at(n);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return a.rects[x].d.xlo < a.rects[y].d.xlo; });
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (a.rects[idx[k - 1]].d.xhi > a.rects[idx[k]].d.xlo) fail("level " + std::to_string(n) + " rectangles overlap in x");
  }

  std::set<std::string> seen;
  for (const auto& u : a.usage)
    if (!seen.insert(u.interval).second) fail("interval " + u.interval + " used twice");

  for (std::size_t n = 0; n < n_top; ++n) {
    if (a.error_bound(n + 1) > a.error_bound(n) && !a.rects_at(n + 1).empty())
      fail("error bound increases at " + std::to_string(n + 1));
  }

  // locality: F_{n+1} = F_n outside the level-n rectangles
  for (std::size_t n = 0; n < n_top; ++n) {
    const auto idx = a.rects_at(n);
    auto inside = [&](const Rat& x) {
      return std::any_of(idx.begin(), idx.end(), [&](std::size_t r) { return a.rects[r].d.xlo < x && x < a.rects[r].d.xhi; });
    };
    for (const Plf* g : {&a.stages[n], &a.stages[n + 1]})
      for (const auto& v : g->vertices())
        if (!inside(v.x) && plf_eval(a.stages[n], v.x) != plf_eval(a.stages[n + 1], v.x))
          fail("F_" + std::to_string(n + 1) + " changes outside the level-" + std::to_string(n) + " rectangles");
  }

  // uniform bound on a grid
  for (std::size_t n = 0; n <= n_top; ++n) {
    const Rat bound = a.error_bound(n);
    for (long k = 0; k <= 64; ++k) {
      const Rat x(k, 64);
      const Rat fx = plf_eval(a.stages[n], x);
      for (std::size_t m = n + 1; m <= n_top; ++m)
        if (abs(plf_eval(a.stages[m], x) - fx) > bound)
          fail("|F_" + std::to_string(m) + " - F_" + std::to_string(n) + "| exceeds the bound at x=" + x.str());
    }
  }

  // variation: every block adds twice its height
  Rat v = Rat(1);
  for (std::size_t n = 0; n <= n_top; ++n) {
    if (plf_variation(a.stages[n]) != v) fail("variation of F_" + std::to_string(n) + " is off");
    for (const auto& r : a.rects)
      if (r.level == n) v += Rat(2) * r.d.height();
  }

  // exact section counts against the block accounting
  std::vector<Rat> levels = extra_levels;
  for (const auto& r : a.rects) {
    levels.push_back(r.d.ylo);
    levels.push_back(r.d.yhi);
    levels.push_back(midpoint(r.d.ylo, r.d.yhi));
  }
  levels.push_back(Rat(0));
  levels.push_back(Rat(1, 2));
  levels.push_back(Rat(1));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const Rat& y : levels) {
    if (y < Rat(0) || y > Rat(1)) continue;
    for (std::size_t n = 0; n <= n_top; ++n) {
      const long got = plf_level_count(a.stages[n], y);
      if (got < 0 || static_cast<std::size_t>(got) != block_count(a, n, y))
        fail("section of F_" + std::to_string(n) + " at y=" + y.str() + " has " + std::to_string(got) + " points, blocks give " +
             std::to_string(block_count(a, n, y)));
    }
  }

  // stage law against f_n
  if (a.mode == BuildMode::Countable && !a.opts.window && !a.simple.empty()) {
    for (std::size_t n = 0; n + 1 <= n_top; ++n) {
      const StepSpec fn = stored_partial(a, n);
      if (auto y = disagreement(plf_indicatrix(a.stages[n + 1]), fn, a.zones))
        fail("indicatrix of F_" + std::to_string(n + 1) + " differs from f_" + std::to_string(n) + " at y=" + y->str());
      if (a.zones.empty() && plf_variation(a.stages[n + 1]) != integral(fn))
        fail("variation of F_" + std::to_string(n + 1) + " differs from the integral of f_" + std::to_string(n));
    }
  }
  return fails;
}

}  // namespace indicatrix
