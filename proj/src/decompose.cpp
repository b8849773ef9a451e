#include "indicatrix/decompose.hpp"

#include <algorithm>

namespace indicatrix {

std::pair<StepSpec, PlateauPlan> reduce_exceptional(const StepSpec& f, const Certificate& cert) {
  PlateauPlan plan;
  if (cert.exceptional.empty()) return {f, plan};
  const StepSpec g = f.refined(cert.exceptional);
  std::vector<Card> pts = g.points();
  for (const Rat& y : cert.exceptional) {
    const SpecLocation loc = g.locate(y);
    const SideValues s = side_values(g, y);
    Card v = std::min(s.left, s.right);
    if (s.left == s.right && s.left.is_finite() && s.left.value() % 2 == 0) v = v.minus(1);
    plan.entries.push_back({y, pts[loc.index]});
    pts[loc.index] = v;
  }
  return {StepSpec(g.breakpoints(), g.pieces(), std::move(pts), g.overlays()), plan};
}

std::pair<StepSpec, StepSpec> extract_simple(const StepSpec& f) {
  const Card one = Card::finite(1);
  const Card two = Card::finite(2);
  const Card three = Card::finite(3);
  auto above2 = [&](const Card& c) { return c > two; };

  std::vector<Card> pcs;
  std::vector<Card> pts;
  for (const Card& c : f.pieces()) pcs.push_back(c == one ? one : (above2(c) ? three : two));
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const Card& c = f.points()[i];
    if (c == one) {
      pts.push_back(one);
      continue;
    }
    const bool interior = i > 0 && i + 1 < bps.size();
    const SideValues s = side_values(f, bps[i]);
    pts.push_back(interior && above2(c) && above2(s.left) && above2(s.right) ? three : two);
  }
  StepSpec p(bps, pcs, pts);

  auto rest_of = [](const Card& fv, const Card& pv) {
    return fv.is_finite() ? Card::finite(fv.value() - pv.value() + 1) : fv;
  };
  std::vector<Card> rpcs;
  std::vector<Card> rpts;
  for (std::size_t i = 0; i < pcs.size(); ++i) rpcs.push_back(rest_of(f.pieces()[i], pcs[i]));
  for (std::size_t i = 0; i < pts.size(); ++i) rpts.push_back(rest_of(f.points()[i], pts[i]));
  StepSpec rest(bps, std::move(rpcs), std::move(rpts), f.overlays());
  return {p.normalized(), rest.normalized()};
}

bool is_identically_one(const StepSpec& f) {
  const Card one = Card::finite(1);
  return !f.has_overlays() && std::all_of(f.pieces().begin(), f.pieces().end(), [&](const Card& c) { return c == one; }) &&
         std::all_of(f.points().begin(), f.points().end(), [&](const Card& c) { return c == one; });
}

SimpleStream::SimpleStream(StepSpec f) { residuals_.push_back(std::move(f)); }

SimpleStream SimpleStream::from_items(std::vector<StepSpec> items) {
  SimpleStream s;
  s.items_ = std::move(items);
  s.explicit_ = true;
  for (std::size_t i = 0; i < s.items_.size(); ++i) {
    const bool rest_one = std::all_of(s.items_.begin() + static_cast<std::ptrdiff_t>(i), s.items_.end(), is_identically_one);
    if (rest_one) {
      s.stabilized_at_ = i;
      break;
    }
  }
  if (!s.stabilized_at_) s.stabilized_at_ = s.items_.size();
  return s;
}

void SimpleStream::extend(std::size_t depth) {
  while (items_.size() <= depth) {
    if (explicit_ || stabilized_at_) {
      items_.push_back(StepSpec::constant(Card::finite(1)));
      continue;
    }
    auto [p, rest] = extract_simple(residuals_.back());
    if (is_identically_one(p)) stabilized_at_ = items_.size();
    items_.push_back(std::move(p));
    residuals_.push_back(std::move(rest));
  }
}

const StepSpec& SimpleStream::item(std::size_t i) {
  extend(i);
  return items_[i];
}

SimpleStream simple_stream(const StepSpec& f, std::size_t depth) {
  SimpleStream s(f);
  s.extend(depth);
  return s;
}

StepSpec partial_indicatrix(SimpleStream& stream, std::size_t n) {
  StepSpec acc = stream.item(0);
  for (std::size_t i = 1; i <= n; ++i)
    acc = pointwise(acc, stream.item(i), [](const Card& a, const Card& b) {
      return Card::finite(a.value() + b.value() - 1);
    });
  return acc;
}

}  // namespace indicatrix
