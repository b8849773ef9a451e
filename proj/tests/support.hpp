#pragma once

#include "indicatrix/assembler.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using namespace indicatrix;

inline Card fin(long k) { return Card::finite(k); }
inline Rat q(long n, long d = 1) { return Rat(n, d); }

/// Pieces and point values over explicit breakpoints.
inline StepSpec spec(std::vector<Rat> bps, std::vector<Card> pieces, std::vector<Card> points) {
  return StepSpec(std::move(bps), std::move(pieces), std::move(points));
}

inline StepSpec three_two() { return StepSpec::constant(fin(3), fin(2)); }
inline StepSpec five_three() { return StepSpec::constant(fin(5), fin(3)); }
inline StepSpec omega() { return StepSpec::constant(Card::omega()); }
inline StepSpec continuum() { return StepSpec::constant(Card::continuum()); }

/// Omega on (0,1) with continuum on the Cantor set, continuum at both ends.
inline StepSpec cantor_overlay() {
  return StepSpec({q(0), q(1)}, {Card::omega()}, {Card::continuum(), Card::continuum()},
                  {Overlay{0, CSet({CComponent::cantor(q(0), q(1))})}});
}

/// 3 below 1/2, continuum at 1/2, 5 above; ends 2 and 3.
inline StepSpec plateau_spec() {
  return spec({q(0), q(1, 2), q(1)}, {fin(3), fin(5)}, {fin(2), Card::continuum(), fin(3)});
}

/// The simple preindicatrices p_0..p_3 of the worked example.
inline std::vector<StepSpec> example_stream() {
  return {
      three_two(),
      spec({q(0), q(3, 4), q(1)}, {fin(3), fin(1)}, {fin(2), fin(2), fin(1)}),
      spec({q(0), q(1, 2), q(1)}, {fin(3), fin(1)}, {fin(1), fin(2), fin(1)}),
      spec({q(0), q(1, 4), q(1, 2), q(1)}, {fin(1), fin(3), fin(1)}, {fin(1), fin(1), fin(1), fin(1)}),
  };
}

inline Plf zigzag() { return Plf({{q(0), q(0)}, {q(1, 3), q(1)}, {q(2, 3), q(0)}, {q(1), q(1)}}); }

/// Random continuous PLF onto [0,1] with at most `max_segments` pieces.
inline Plf random_plf(std::mt19937_64& rng, std::size_t max_segments) {
  std::uniform_int_distribution<std::size_t> segs(1, max_segments);
  const std::size_t n = segs(rng);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rat> ys;
  for (std::size_t i = 0; i <= n; ++i) {
    const long d = den(rng);
    ys.push_back(Rat(std::uniform_int_distribution<long>(0, d)(rng), d));
  }
  std::uniform_int_distribution<std::size_t> pick(0, n);
  const std::size_t i0 = pick(rng);
  std::size_t i1 = pick(rng);
  if (n > 0)
    while (i1 == i0) i1 = pick(rng);
  ys[i0] = q(0);
  ys[i1] = q(1);
  if (n == 0) ys = {q(0), q(1)};

  std::vector<Rat> xs{q(0)};
  for (std::size_t i = 1; i < ys.size(); ++i) xs.push_back(xs.back() + Rat(std::uniform_int_distribution<long>(1, 9)(rng)));
  std::vector<Vertex> v;
  for (std::size_t i = 0; i < ys.size(); ++i) v.push_back({xs[i] / xs.back(), ys[i]});
  return Plf(std::move(v));
}

/// Finite spec with odd piece values <= 9 and the mean of the two sides at every
/// breakpoint (the outer side of 0 and 1 counts as 1).
inline StepSpec random_odd_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> odd(0, 4);
  const int m = count(rng);
  std::vector<Rat> bps{q(0)};
  std::set<Rat> cuts;
  while (static_cast<int>(cuts.size()) < m - 1) {
    const long d = std::uniform_int_distribution<long>(2, 16)(rng);
    const Rat c(std::uniform_int_distribution<long>(1, d - 1)(rng), d);
    cuts.insert(c);
  }
  bps.insert(bps.end(), cuts.begin(), cuts.end());
  bps.push_back(q(1));
  std::vector<Card> pieces;
  std::vector<long> vals;
  for (int i = 0; i < m; ++i) {
    vals.push_back(2 * odd(rng) + 1);
    pieces.push_back(fin(vals.back()));
  }
  std::vector<Card> points;
  points.push_back(fin((1 + vals.front()) / 2));
  for (int i = 1; i < m; ++i) points.push_back(fin((vals[i - 1] + vals[i]) / 2));
  points.push_back(fin((vals.back() + 1) / 2));
  return StepSpec(bps, pieces, points);
}

/// Levels where a step spec can change: breakpoints and piece midpoints.
inline std::vector<Rat> probe_levels(const StepSpec& f) {
  std::vector<Rat> out = f.breakpoints();
  for (std::size_t i = 0; i < f.piece_count(); ++i) out.push_back(piece_witness(f, i));
  return out;
}

inline std::vector<Rat> grid(std::size_t points) {
  std::vector<Rat> out;
  for (std::size_t k = 0; k < points; ++k) out.push_back(Rat(static_cast<long>(k), static_cast<long>(points - 1)));
  return out;
}

}  // namespace fixtures
