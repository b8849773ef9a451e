#include "indicatrix/step_spec.hpp"

#include <algorithm>
#include <sstream>

namespace indicatrix {

StepSpec::StepSpec(std::vector<Rat> breakpoints, std::vector<Card> pieces, std::vector<Card> points,
                   std::vector<Overlay> overlays)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      points_(std::move(points)),
      overlays_(std::move(overlays)) {
  if (breakpoints_.size() < 2) throw SpecError("spec needs at least breakpoints 0 and 1");
  if (breakpoints_.front() != Rat(0) || breakpoints_.back() != Rat(1))
    throw SpecError("breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw SpecError("breakpoints must be strictly increasing");
  if (pieces_.size() + 1 != breakpoints_.size()) throw SpecError("need one piece value per gap");
  if (points_.size() != breakpoints_.size()) throw SpecError("need one point value per breakpoint");
  for (const auto& ov : overlays_) {
    if (ov.piece >= pieces_.size()) throw SpecError("overlay refers to a missing piece");
    if (ov.set.empty()) throw SpecError("overlay set is empty");
    if (!ov.set.pairwise_disjoint()) throw SpecError("overlay components must be pairwise disjoint");
    ClosedInterval closure{breakpoints_[ov.piece], breakpoints_[ov.piece + 1]};
    if (!closure.contains(ov.set.hull())) throw SpecError("overlay lies outside its piece");
  }
  std::stable_sort(overlays_.begin(), overlays_.end(),
                   [](const Overlay& a, const Overlay& b) { return a.piece < b.piece; });
}

StepSpec StepSpec::constant(Card inside, Card ends) {
  return StepSpec({Rat(0), Rat(1)}, {inside}, {ends, ends});
}

SpecLocation StepSpec::locate(const Rat& y) const {
  if (y < Rat(0) || y > Rat(1)) throw std::domain_error("level outside [0,1]: " + y.str());
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), y);
  const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && *it == y) return {true, idx};
  return {false, idx - 1};
}

Card StepSpec::value_at(const Rat& y) const {
  const SpecLocation loc = locate(y);
  if (loc.at_breakpoint) return points_[loc.index];
  for (const auto& ov : overlays_)
    if (ov.piece == loc.index && ov.set.contains(y)) return Card::continuum();
  return pieces_[loc.index];
}

std::vector<const CSet*> StepSpec::overlays_of(std::size_t piece) const {
  std::vector<const CSet*> out;
  for (const auto& ov : overlays_)
    if (ov.piece == piece) out.push_back(&ov.set);
  return out;
}

CSet StepSpec::continuum_set() const {
  std::vector<CComponent> comps;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (pieces_[i].is_continuum()) comps.push_back(CComponent::interval(breakpoints_[i], breakpoints_[i + 1]));
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].is_continuum()) comps.push_back(CComponent::point(breakpoints_[i]));
  for (const auto& ov : overlays_) {
    for (const auto& c : ov.set.components()) {
      // Breakpoint values win over overlays, so endpoints of the piece only count
      // when the breakpoint itself is continuum (already added above).
      if (c.kind == CComponent::Kind::Point &&
          (c.lo == breakpoints_[ov.piece] || c.lo == breakpoints_[ov.piece + 1]))
        continue;
      comps.push_back(c);
    }
  }
  return CSet(std::move(comps)).normalized();
}

bool StepSpec::all_finite() const {
  auto fin = [](const Card& c) { return c.is_finite(); };
  return overlays_.empty() && std::all_of(pieces_.begin(), pieces_.end(), fin) &&
         std::all_of(points_.begin(), points_.end(), fin);
}

std::optional<std::int64_t> StepSpec::max_finite() const {
  if (!all_finite()) return std::nullopt;
  std::int64_t m = 1;
  for (const auto& c : pieces_) m = std::max(m, c.value());
  for (const auto& c : points_) m = std::max(m, c.value());
  return m;
}

StepSpec StepSpec::normalized() const {
  std::vector<Rat> bps{breakpoints_.front()};
  std::vector<Card> pcs;
  std::vector<Card> pts{points_.front()};
  std::vector<Overlay> ovs;
  // Piece index mapping for overlays: merged pieces never carry overlays.
  std::size_t current_piece_src = 0;
  Card current = pieces_.front();
  std::vector<std::size_t> src_to_dst(pieces_.size(), 0);
  src_to_dst[0] = 0;
  for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    const bool mergeable = points_[i] == current && pieces_[i] == current &&
                           overlays_of(current_piece_src).empty() && overlays_of(i).empty();
    if (mergeable) {
      src_to_dst[i] = pcs.size();
      continue;
    }
    pcs.push_back(current);
    bps.push_back(breakpoints_[i]);
    pts.push_back(points_[i]);
    current = pieces_[i];
    current_piece_src = i;
    src_to_dst[i] = pcs.size();
  }
  pcs.push_back(current);
  bps.push_back(breakpoints_.back());
  pts.push_back(points_.back());
  for (const auto& ov : overlays_) ovs.push_back({src_to_dst[ov.piece], ov.set.normalized()});
  return StepSpec(std::move(bps), std::move(pcs), std::move(pts), std::move(ovs));
}

StepSpec StepSpec::refined(const std::vector<Rat>& extra) const {
  std::vector<Rat> bps = breakpoints_;
  for (const auto& e : extra)
    if (Rat(0) <= e && e <= Rat(1)) bps.push_back(e);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  if (bps.size() == breakpoints_.size()) return *this;

  std::vector<Card> pcs;
  std::vector<Card> pts;
  std::vector<Overlay> ovs;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    pts.push_back(value_at(bps[i]));
    // Breakpoint values win over overlays, but a new breakpoint inside an overlaid
    // piece takes the base piece value only if not covered by the overlay.
    if (i + 1 < bps.size()) {
      const SpecLocation loc = locate(midpoint(bps[i], bps[i + 1]));
      pcs.push_back(pieces_[loc.index]);
      ClosedInterval sub{bps[i], bps[i + 1]};
      for (const CSet* s : overlays_of(loc.index)) {
        std::vector<CComponent> kept;
        for (const auto& c : s->components()) {
          if (sub.contains(c.hull())) {
            kept.push_back(c);
          } else if (c.hull().meets(sub) && !(c.hi == sub.lo || c.lo == sub.hi)) {
            throw SpecError("refining a spec may not cut through an overlay component");
          }
        }
        if (!kept.empty()) ovs.push_back({pcs.size() - 1, CSet(std::move(kept))});
      }
    }
  }
  // Points that an overlay covered become continuum breakpoint values.
  return StepSpec(std::move(bps), std::move(pcs), std::move(pts), std::move(ovs));
}

std::string StepSpec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    os << "{" << breakpoints_[i] << "}:" << points_[i];
    if (i + 1 < breakpoints_.size()) {
      os << " (" << pieces_[i];
      for (const CSet* s : overlays_of(i)) {
        os << " +c on";
        for (const auto& c : s->components()) os << " " << c.str();
      }
      os << ") ";
    }
  }
  return os.str();
}

bool same_profile(const StepSpec& a, const StepSpec& b) { return a.normalized() == b.normalized(); }

StepSpec pointwise(const StepSpec& a, const StepSpec& b,
                   const std::function<Card(const Card&, const Card&)>& op) {
  if (a.has_overlays() || b.has_overlays()) throw SpecError("pointwise: overlays are not supported");
  std::vector<Rat> bps = a.breakpoints();
  bps.insert(bps.end(), b.breakpoints().begin(), b.breakpoints().end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<Card> pcs;
  std::vector<Card> pts;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    pts.push_back(op(a.value_at(bps[i]), b.value_at(bps[i])));
    if (i + 1 < bps.size()) {
      const Rat w = midpoint(bps[i], bps[i + 1]);
      pcs.push_back(op(a.value_at(w), b.value_at(w)));
    }
  }
  return StepSpec(std::move(bps), std::move(pcs), std::move(pts)).normalized();
}

StepSpec map_values(const StepSpec& f, const std::function<Card(const Card&)>& op) {
  std::vector<Card> pcs;
  std::vector<Card> pts;
  for (const auto& c : f.pieces()) pcs.push_back(op(c));
  for (const auto& c : f.points()) pts.push_back(op(c));
  return StepSpec(f.breakpoints(), std::move(pcs), std::move(pts), f.overlays());
}

Rat piece_witness(const StepSpec& f, std::size_t piece) {
  return midpoint(f.breakpoints()[piece], f.breakpoints()[piece + 1]);
}

}  // namespace indicatrix
