#pragma once

#include "indicatrix/card.hpp"
#include "indicatrix/rational.hpp"
#include "indicatrix/step_spec.hpp"

#include <vector>

namespace indicatrix {

struct Vertex {
  Rat x;
  Rat y;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Exact piecewise-linear function on [0,1]: linear interpolation of vertices
/// with strictly increasing x from 0 to 1 and values in [0,1]. Collinear and
/// horizontal runs are allowed.
class Plf {
 public:
  explicit Plf(std::vector<Vertex> vertices);

  static Plf identity();

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vertex& front() const { return vertices_.front(); }
  const Vertex& back() const { return vertices_.back(); }

  friend bool operator==(const Plf&, const Plf&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// One connected component of a level set.
struct LevelPiece {
  Rat x1;
  Rat x2;  // equals x1 for isolated points
  bool is_point() const { return x1 == x2; }
  friend bool operator==(const LevelPiece&, const LevelPiece&) = default;
};

struct LevelSet {
  std::vector<LevelPiece> pieces;  // sorted by x, pairwise disjoint
  /// Number of points, or continuum when any horizontal run sits at the level.
  /// A level that is never attained has an empty piece list and count 0, which
  /// no Card can hold; use `points()`/`pieces` for that case.
  Card count() const;
  std::size_t points() const { return pieces.size(); }
  bool has_interval() const;
};

Rat plf_eval(const Plf& g, const Rat& x);
LevelSet plf_level_set(const Plf& g, const Rat& y);
/// Number of solutions of g(x) = y, or -1 if the level set contains an interval.
long plf_level_count(const Plf& g, const Rat& y);
Rat plf_variation(const Plf& g);
/// Exact indicatrix; g must map onto [0,1].
StepSpec plf_indicatrix(const Plf& g);

/// x ↦ g(1 - x).
Plf reflect(const Plf& g);

/// ∫ f(y) dy for a finite-valued step spec.
Rat integral(const StepSpec& f);

}  // namespace indicatrix
