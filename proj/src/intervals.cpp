#include "indicatrix/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace indicatrix {

const char* seq_case_name(SeqCase c) {
  switch (c) {
    case SeqCase::BiInfinite: return "bi-infinite";
    case SeqCase::LeftInfinite: return "left-infinite";
    case SeqCase::RightInfinite: return "right-infinite";
    case SeqCase::Single: return "single";
  }
  return "?";
}

std::vector<Rat> SeqSpec::points(std::size_t depth) const {
  std::vector<Rat> out;
  const auto d = static_cast<unsigned>(depth);
  switch (kind) {
    case SeqCase::Single:
      out = {lo, hi};
      break;
    case SeqCase::LeftInfinite:
      for (unsigned k = d + 1; k-- > 0;) out.push_back(lo + (hi - lo) * pow2_inv(k));
      break;
    case SeqCase::RightInfinite:
      for (unsigned k = 0; k <= d; ++k) out.push_back(hi - (hi - lo) * pow2_inv(k));
      break;
    case SeqCase::BiInfinite:
      for (unsigned k = d + 1; k-- > 0;) out.push_back(lo + (anchor - lo) * pow2_inv(k));
      for (unsigned k = 1; k <= d; ++k) out.push_back(hi - (hi - anchor) * pow2_inv(k));
      break;
  }
  return out;
}

std::vector<Zone> SeqSpec::tails(std::size_t depth) const {
  const auto d = static_cast<unsigned>(depth);
  switch (kind) {
    case SeqCase::Single: return {};
    case SeqCase::LeftInfinite: return {{lo, lo + (hi - lo) * pow2_inv(d), true}};
    case SeqCase::RightInfinite: return {{hi - (hi - lo) * pow2_inv(d), hi, false}};
    case SeqCase::BiInfinite:
      return {{lo, lo + (anchor - lo) * pow2_inv(d), true}, {hi - (hi - anchor) * pow2_inv(d), hi, false}};
  }
  return {};
}

bool Family::in_zone(const Rat& y) const {
  return std::any_of(zones.begin(), zones.end(), [&](const Zone& z) { return z.contains(y); });
}

bool Family::in_zone(const OpenInterval& j) const {
  return std::any_of(zones.begin(), zones.end(), [&](const Zone& z) { return z.lo <= j.lo && j.hi <= z.hi; });
}

std::vector<TypeThree> type_three(const StepSpec& p0) {
  const StepSpec p = p0.normalized();
  const Card three = Card::finite(3);
  std::vector<TypeThree> out;
  const auto& bps = p.breakpoints();
  auto end_class = [&](std::size_t bp, bool other_side_three) {
    EndpointClass c;
    c.value = static_cast<int>(p.points()[bp].value());
    c.shared = other_side_three;
    return c;
  };
  for (std::size_t i = 0; i < p.piece_count(); ++i) {
    if (p.pieces()[i] != three) continue;
    // normalized: a 3-point between two 3-pieces would have been merged
    std::size_t j = i;
    while (j + 1 < p.piece_count() && p.points()[j + 1] == three && p.pieces()[j + 1] == three) ++j;
    TypeThree t;
    t.lo = bps[i];
    t.hi = bps[j + 1];
    t.lo_class = end_class(i, i > 0 && p.pieces()[i - 1] == three);
    t.hi_class = end_class(j + 1, j + 1 < p.piece_count() && p.pieces()[j + 1] == three);
    out.push_back(t);
    i = j;
  }
  return out;
}

SeqSpec sequence_for(const TypeThree& t) {
  SeqSpec s;
  s.lo = t.lo;
  s.hi = t.hi;
  s.anchor = midpoint(t.lo, t.hi);
  const int a = t.lo_class.value;
  const int b = t.hi_class.value;
  const bool two_shared = a == 2 && t.lo_class.shared;
  if ((a == 1 && b == 1) || (two_shared && b == 1)) {
    s.kind = SeqCase::BiInfinite;
  } else if ((a == 1 && b == 2) || (two_shared && b == 2)) {
    s.kind = SeqCase::LeftInfinite;
  } else if (a == 2 && !t.lo_class.shared && b == 1) {
    s.kind = SeqCase::RightInfinite;
  } else {
    s.kind = SeqCase::Single;
  }
  return s;
}

Family family(const StepSpec& p, std::size_t index, std::size_t depth) {
  Family fam;
  fam.index = index;
  for (const TypeThree& t : type_three(p)) {
    const SeqSpec s = sequence_for(t);
    const std::vector<Rat> pts = s.points(depth);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) fam.intervals.push_back({pts[k], pts[k + 1], 0});
    for (const auto& z : s.tails(depth)) fam.zones.push_back(z);
    fam.generators.push_back(s);
  }
  std::sort(fam.intervals.begin(), fam.intervals.end(), [](const FamInterval& x, const FamInterval& y) { return x.lo < y.lo; });
  for (std::size_t k = 0; k < fam.intervals.size(); ++k) fam.intervals[k].id = k;
  return fam;
}

namespace {

bool keep(const std::optional<ClosedInterval>& window, const Rat& lo, const Rat& hi) {
  return !window || ClosedInterval{lo, hi}.meets(*window);
}

void bisect_into(const Rat& lo, const Rat& hi, const Rat& bound, const std::optional<ClosedInterval>& window,
                 std::vector<FamInterval>& out) {
  if (!keep(window, lo, hi)) return;
  if (hi - lo < bound) {
    out.push_back({lo, hi, 0});
    return;
  }
  const Rat m = midpoint(lo, hi);
  bisect_into(lo, m, bound, window, out);
  bisect_into(m, hi, bound, window, out);
}

void renumber(std::vector<FamInterval>& v) {
  std::sort(v.begin(), v.end(), [](const FamInterval& x, const FamInterval& y) { return x.lo < y.lo; });
  for (std::size_t k = 0; k < v.size(); ++k) v[k].id = k;
}

}  // namespace

std::vector<Family> refine_families(std::vector<Family> fams, const std::optional<ClosedInterval>& window) {
  if (window && !fams.empty()) {
    auto& first = fams.front().intervals;
    first.erase(std::remove_if(first.begin(), first.end(), [&](const FamInterval& q) { return !keep(window, q.lo, q.hi); }),
                first.end());
    renumber(first);
  }
  for (std::size_t i = 0; i + 1 < fams.size(); ++i) {
    const Family& parent = fams[i];
    Family& child = fams[i + 1];
    std::vector<Rat> cuts;
    for (const auto& iv : parent.intervals) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const Rat bound = Rat(1, static_cast<long>(i + 1));

    std::vector<FamInterval> refined;
    for (const auto& iv : child.intervals) {
      std::vector<Rat> pts{iv.lo};
      for (const Rat& c : cuts)
        if (iv.lo < c && c < iv.hi) pts.push_back(c);
      pts.push_back(iv.hi);
      for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const OpenInterval part{pts[k], pts[k + 1]};
        if (!keep(window, part.lo, part.hi)) continue;
        const bool covered = std::any_of(parent.intervals.begin(), parent.intervals.end(), [&](const FamInterval& q) {
          return q.lo <= part.lo && part.hi <= q.hi;
        });
        if (covered) {
          bisect_into(part.lo, part.hi, bound, window, refined);
        } else if (!parent.in_zone(part)) {
          throw std::logic_error("family " + std::to_string(i + 1) + " interval (" + part.lo.str() + "," +
                                 part.hi.str() + ") is not covered by family " + std::to_string(i));
        }
      }
    }
    renumber(refined);
    child.intervals = std::move(refined);
    for (const auto& z : parent.zones) child.zones.push_back(z);
  }
  return fams;
}

std::vector<Zone> all_zones(const std::vector<Family>& fams) {
  std::vector<Zone> out;
  for (const auto& f : fams)
    for (const auto& z : f.zones)
      if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  std::sort(out.begin(), out.end(), [](const Zone& a, const Zone& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return out;
}

}  // namespace indicatrix
