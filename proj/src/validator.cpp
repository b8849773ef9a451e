#include "indicatrix/validator.hpp"

#include <algorithm>
#include <sstream>

namespace indicatrix {

namespace {

// One-sided liminf from within piece `piece` approaching y; continuum only when
// an interval overlay fills a one-sided neighbourhood.
Card side_in_piece(const StepSpec& f, std::size_t piece, const Rat& y, bool from_left) {
  for (const CSet* s : f.overlays_of(piece)) {
    for (const auto& c : s->components()) {
      if (c.kind != CComponent::Kind::Interval) continue;
      if (from_left ? (c.lo < y && y <= c.hi) : (c.lo <= y && y < c.hi)) return Card::continuum();
    }
  }
  return f.pieces()[piece];
}

bool is_even(const Card& c) { return c.is_finite() && c.value() % 2 == 0; }

}  // namespace

SideValues side_values(const StepSpec& f, const Rat& y) {
  const SpecLocation loc = f.locate(y);
  SideValues s;
  if (loc.at_breakpoint) {
    if (loc.index > 0) s.left = side_in_piece(f, loc.index - 1, y, true);
    if (loc.index < f.piece_count()) s.right = side_in_piece(f, loc.index, y, false);
  } else {
    s.left = side_in_piece(f, loc.index, y, true);
    s.right = side_in_piece(f, loc.index, y, false);
  }
  return s;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Below: return "below";
    case Region::Inside: return "inside";
    case Region::Boundary: return "boundary";
    case Region::DoublePoint: return "double-point";
  }
  return "?";
}

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::StarInequality: return "(*) inequality";
    case Clause::StarParity: return "(*) parity";
    case Clause::DoubleStar: return "(**)";
    case Clause::OverlayRule: return "overlay rule";
    case Clause::HatReduction: return "hat reduction";
    case Clause::SimpleRange: return "simple range";
    case Clause::SimpleOpen: return "simple (a) open";
    case Clause::SimpleEndpoint: return "simple (b) endpoint";
  }
  return "?";
}

std::string Violation::str() const {
  std::ostringstream os;
  os << clause_name(clause) << " at y=" << y;
  if (piece) os << " (piece " << *piece << ")";
  os << " [" << region_name(region) << (on_reduced ? ", reduced spec" : "") << "]: f=" << value
     << " sides=(" << sides.left << "," << sides.right << ")";
  return os.str();
}

std::optional<Violation> condition_at(const StepSpec& f, const Rat& y, Region region) {
  const Card v = f.value_at(y);
  const SideValues s = side_values(f, y);
  auto fail = [&](Clause c) {
    Violation out;
    out.y = y;
    out.region = region;
    out.clause = c;
    out.value = v;
    out.sides = s;
    const SpecLocation loc = f.locate(y);
    if (!loc.at_breakpoint) out.piece = loc.index;
    return out;
  };

  if (v.is_infinite()) {
    if (s.left.is_finite() && s.right.is_finite()) return fail(Clause::DoubleStar);
    return std::nullopt;
  }
  if (s.left.is_infinite() || s.right.is_infinite()) return std::nullopt;

  const std::int64_t n = v.value();
  const std::int64_t sum = s.left.value() + s.right.value();
  const std::int64_t target = region == Region::DoublePoint ? 2 * (n - 1) : 2 * n;
  if (sum < target) return fail(Clause::StarInequality);
  if (sum == target) {
    const bool both_even = is_even(s.left) && is_even(s.right);
    const bool both_odd = !is_even(s.left) && !is_even(s.right);
    const bool forbidden =
        (region == Region::Inside || region == Region::Boundary) ? both_even : both_odd;
    if (forbidden) return fail(Clause::StarParity);
  }
  return std::nullopt;
}

namespace {

// Ramp contribution removed by the endpoint reduction at level y.
int hat_delta(const Rat& a, const Rat& b, const Rat& y) {
  int d = 0;
  if (a > Rat(0) && Rat(0) < y && y <= a) ++d;
  if (b < Rat(1) && b <= y && y < Rat(1)) ++d;
  return d;
}

struct HatFailure {
  Rat y;
  std::optional<std::size_t> piece;
  Card value;
};

std::optional<HatFailure> hat_failure(const StepSpec& g, const Rat& a, const Rat& b) {
  for (std::size_t i = 0; i < g.breakpoints().size(); ++i) {
    const Rat& y = g.breakpoints()[i];
    const Card& v = g.points()[i];
    if (v.is_finite() && v.value() - hat_delta(a, b, y) < 1) return HatFailure{y, std::nullopt, v};
    if (i + 1 < g.breakpoints().size()) {
      const Rat w = piece_witness(g, i);
      const Card& pv = g.pieces()[i];
      if (pv.is_finite() && pv.value() - hat_delta(a, b, w) < 1) return HatFailure{w, i, pv};
    }
  }
  return std::nullopt;
}

}  // namespace

StepSpec hat_spec(const StepSpec& f, const Rat& a, const Rat& b) {
  if (b < a) throw SpecError("hat_spec requires a <= b");
  const StepSpec g = f.refined({a, b});
  if (auto bad = hat_failure(g, a, b))
    throw SpecError("hat reduction drops the value at y=" + bad->y.str() + " below 1");
  std::vector<Card> pcs;
  std::vector<Card> pts;
  for (std::size_t i = 0; i < g.breakpoints().size(); ++i) {
    pts.push_back(g.points()[i].minus(hat_delta(a, b, g.breakpoints()[i])));
    if (i + 1 < g.breakpoints().size())
      pcs.push_back(g.pieces()[i].minus(hat_delta(a, b, piece_witness(g, i))));
  }
  return StepSpec(g.breakpoints(), std::move(pcs), std::move(pts), g.overlays());
}

ValidationResult validate(const StepSpec& f, const Rat& a, const Rat& b) {
  if (a < Rat(0) || a > Rat(1) || b < Rat(0) || b > Rat(1)) throw SpecError("endpoint values must lie in [0,1]");
  if (b < a) {
    ValidationResult r = validate(f, b, a);
    if (r.certificate) {
      r.certificate->a = a;
      r.certificate->b = b;
      r.certificate->reflected = true;
    }
    return r;
  }

  ValidationResult result;
  Certificate cert;
  cert.a = a;
  cert.b = b;

  for (const auto& ov : f.overlays()) {
    const Card& base = f.pieces()[ov.piece];
    if (base.is_finite()) {
      Violation v;
      v.y = ov.set.hull().lo;
      v.piece = ov.piece;
      v.clause = Clause::OverlayRule;
      v.value = Card::continuum();
      v.sides = {base, base};
      result.violations.push_back(v);
    }
  }

  const bool full = a == Rat(0) && b == Rat(1);
  auto region_of = [&](const Rat& y) -> std::optional<Region> {
    if (full && (y == Rat(0) || y == Rat(1))) return Region::Boundary;
    if (y == a && y == b) return Region::DoublePoint;
    if (y == a || y == b) return std::nullopt;  // delegated
    if (a < y && y < b) return Region::Inside;
    return Region::Below;
  };

  std::vector<Rat> levels = f.breakpoints();
  levels.push_back(a);
  levels.push_back(b);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto record = [&](const StepSpec& g, const Rat& y, Region region, std::optional<std::size_t> piece,
                    bool delegated) {
    cert.checked.push_back({y, piece, region, delegated});
    auto v = condition_at(g, y, region);
    if (!v) return;
    const SpecLocation loc = g.locate(y);
    if (v->clause == Clause::DoubleStar && v->value.is_continuum() && loc.at_breakpoint) {
      cert.exceptional.push_back(y);
      return;
    }
    v->on_reduced = delegated;
    result.violations.push_back(*v);
  };

  std::vector<Rat> delegated;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Rat& y = levels[i];
    if (auto region = region_of(y)) {
      record(f, y, *region, std::nullopt, false);
    } else {
      delegated.push_back(y);
    }
    if (i + 1 < levels.size()) {
      const Rat w = midpoint(y, levels[i + 1]);
      record(f, w, *region_of(w), f.locate(w).index, false);
    }
  }

  if (!full) {
    const StepSpec g = f.refined({a, b});
    if (auto bad = hat_failure(g, a, b)) {
      Violation v;
      v.y = bad->y;
      v.piece = bad->piece;
      v.clause = Clause::HatReduction;
      v.value = bad->value;
      v.sides = side_values(f, bad->y);
      v.region = region_of(bad->y).value_or(Region::Inside);
      result.violations.push_back(v);
    } else {
      const StepSpec hat = hat_spec(f, a, b);
      for (const Rat& y : delegated) {
        const Region r = (y == Rat(0) || y == Rat(1)) ? Region::Boundary : Region::Inside;
        record(hat, y, r, std::nullopt, true);
      }
    }
  }

  std::sort(cert.exceptional.begin(), cert.exceptional.end());
  cert.exceptional.erase(std::unique(cert.exceptional.begin(), cert.exceptional.end()), cert.exceptional.end());
  if (result.violations.empty()) result.certificate = std::move(cert);
  return result;
}

std::optional<Violation> is_simple_pre(const StepSpec& p) {
  const StepSpec q = p.normalized();
  auto fail = [&](Clause c, const Rat& y, std::optional<std::size_t> piece, const Card& v) {
    Violation out;
    out.y = y;
    out.piece = piece;
    out.clause = c;
    out.value = v;
    out.sides = side_values(q, y);
    return out;
  };
  auto in_range = [](const Card& c) { return c.is_finite() && c.value() <= 3; };
  const auto& bps = q.breakpoints();
  if (q.has_overlays()) return fail(Clause::SimpleRange, q.overlays().front().set.hull().lo, q.overlays().front().piece, Card::continuum());
  for (std::size_t i = 0; i < q.piece_count(); ++i) {
    const Card& c = q.pieces()[i];
    if (!in_range(c)) return fail(Clause::SimpleRange, piece_witness(q, i), i, c);
    if (c == Card::finite(2)) return fail(Clause::SimpleEndpoint, piece_witness(q, i), i, c);
  }
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const Card& c = q.points()[i];
    if (!in_range(c)) return fail(Clause::SimpleRange, bps[i], std::nullopt, c);
    const bool left3 = i > 0 && q.pieces()[i - 1] == Card::finite(3);
    const bool right3 = i < q.piece_count() && q.pieces()[i] == Card::finite(3);
    if (c == Card::finite(3)) {
      const bool boundary = i == 0 || i + 1 == bps.size();
      if (boundary || !(left3 && right3)) return fail(Clause::SimpleOpen, bps[i], std::nullopt, c);
    } else if (c == Card::finite(2) && !left3 && !right3) {
      return fail(Clause::SimpleEndpoint, bps[i], std::nullopt, c);
    }
  }
  return std::nullopt;
}

}  // namespace indicatrix
