#include "indicatrix/plf.hpp"

#include <algorithm>
#include <stdexcept>

namespace indicatrix {

Plf::Plf(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw std::invalid_argument("Plf needs at least two vertices");
  if (vertices_.front().x != Rat(0) || vertices_.back().x != Rat(1))
    throw std::invalid_argument("Plf must span x in [0,1]");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0 && !(vertices_[i - 1].x < vertices_[i].x))
      throw std::invalid_argument("Plf x-coordinates must strictly increase");
    if (vertices_[i].y < Rat(0) || vertices_[i].y > Rat(1))
      throw std::invalid_argument("Plf values must lie in [0,1]");
  }
}

Plf Plf::identity() { return Plf({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}); }

Card LevelSet::count() const {
  if (has_interval()) return Card::continuum();
  if (pieces.empty()) throw std::domain_error("level is not attained");
  return Card::finite(static_cast<std::int64_t>(pieces.size()));
}

bool LevelSet::has_interval() const {
  return std::any_of(pieces.begin(), pieces.end(), [](const LevelPiece& p) { return !p.is_point(); });
}

Rat plf_eval(const Plf& g, const Rat& x) {
  if (x < Rat(0) || x > Rat(1)) throw std::domain_error("plf_eval: x outside [0,1]: " + x.str());
  const auto& v = g.vertices();
  auto it = std::lower_bound(v.begin(), v.end(), x, [](const Vertex& a, const Rat& b) { return a.x < b; });
  if (it->x == x) return it->y;
  const Vertex& hi = *it;
  const Vertex& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

LevelSet plf_level_set(const Plf& g, const Rat& y) {
  LevelSet out;
  const auto& v = g.vertices();
  auto push = [&](const Rat& x1, const Rat& x2) {
    if (!out.pieces.empty() && out.pieces.back().x2 >= x1) {
      out.pieces.back().x2 = max(out.pieces.back().x2, x2);
      return;
    }
    out.pieces.push_back({x1, x2});
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].y == y) push(v[i].x, v[i].x);
    if (i + 1 == v.size()) break;
    const Vertex& a = v[i];
    const Vertex& b = v[i + 1];
    if (a.y == y && b.y == y) {
      push(a.x, b.x);
    } else if ((a.y < y && y < b.y) || (b.y < y && y < a.y)) {
      const Rat x = a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
      push(x, x);
    }
  }
  return out;
}

long plf_level_count(const Plf& g, const Rat& y) {
  const LevelSet ls = plf_level_set(g, y);
  return ls.has_interval() ? -1 : static_cast<long>(ls.points());
}

Rat plf_variation(const Plf& g) {
  Rat total;
  const auto& v = g.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) total += abs(v[i].y - v[i - 1].y);
  return total;
}

StepSpec plf_indicatrix(const Plf& g) {
  std::vector<Rat> levels{Rat(0), Rat(1)};
  for (const auto& vx : g.vertices()) levels.push_back(vx.y);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto count_at = [&](const Rat& y) {
    const LevelSet ls = plf_level_set(g, y);
    if (ls.pieces.empty()) throw std::domain_error("plf_indicatrix: level " + y.str() + " is not attained");
    return ls.count();
  };

  std::vector<Card> pts;
  std::vector<Card> pcs;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    pts.push_back(count_at(levels[i]));
    if (i + 1 < levels.size()) pcs.push_back(count_at(midpoint(levels[i], levels[i + 1])));
  }
  return StepSpec(std::move(levels), std::move(pcs), std::move(pts)).normalized();
}

Plf reflect(const Plf& g) {
  std::vector<Vertex> out;
  out.reserve(g.size());
  for (auto it = g.vertices().rbegin(); it != g.vertices().rend(); ++it) out.push_back({Rat(1) - it->x, it->y});
  return Plf(std::move(out));
}

Rat integral(const StepSpec& f) {
  Rat total;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const Card& c = f.pieces()[i];
    if (!c.is_finite()) throw std::domain_error("integral of an infinite piece");
    total += Rat(static_cast<long>(c.value())) * (f.breakpoints()[i + 1] - f.breakpoints()[i]);
  }
  return total;
}

}  // namespace indicatrix
