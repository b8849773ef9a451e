#include "indicatrix/coding.hpp"

#include <stdexcept>

namespace indicatrix {

ClosedInterval Cell::bound() const {
  ClosedInterval b = pieces.front().hull();
  for (const auto& p : pieces) {
    b.lo = min(b.lo, p.lo);
    b.hi = max(b.hi, p.hi);
  }
  return b;
}

bool Cell::contains(const Rat& y) const {
  for (const auto& p : pieces)
    if (p.contains(y)) return true;
  return false;
}

bool cell_meets(const Cell& c, const ClosedInterval& j) {
  for (const auto& p : c.pieces)
    if (p.meets(j)) return true;
  return false;
}

Scheme::Scheme(const CSet& target) : target_(target.normalized()) {
  if (target_.empty()) throw std::invalid_argument("coding scheme needs a nonempty set");
  memo_[{}] = Cell{target_.components()};
}

std::pair<Cell, Cell> Scheme::split(const Cell& c) {
  if (c.pieces.size() > 1) {
    const auto half = static_cast<std::ptrdiff_t>(c.pieces.size() / 2);
    return {Cell{{c.pieces.begin(), c.pieces.begin() + half}}, Cell{{c.pieces.begin() + half, c.pieces.end()}}};
  }
  const CComponent& p = c.pieces.front();
  switch (p.kind) {
    case CComponent::Kind::Point:
      return {c, c};
    case CComponent::Kind::Interval: {
      const Rat m = midpoint(p.lo, p.hi);
      return {Cell{{CComponent::interval(p.lo, m)}}, Cell{{CComponent::interval(m, p.hi)}}};
    }
    case CComponent::Kind::Cantor: {
      const Rat w = (p.hi - p.lo) / Rat(3);
      return {Cell{{CComponent::cantor(p.lo, p.lo + w)}}, Cell{{CComponent::cantor(p.hi - w, p.hi)}}};
    }
  }
  return {c, c};
}

const Cell& Scheme::cell(const std::vector<int>& choices) {
  auto it = memo_.find(choices);
  if (it != memo_.end()) return it->second;
  std::vector<int> parent(choices.begin(), choices.end() - 1);
  const Cell pc = cell(parent);
  auto [c0, c1] = split(pc);
  std::vector<int> k0 = parent;
  k0.push_back(0);
  std::vector<int> k1 = parent;
  k1.push_back(1);
  memo_[k0] = std::move(c0);
  memo_[k1] = std::move(c1);
  return memo_.at(choices);
}

std::vector<int> normalize_address(const Address& tau) {
  std::vector<int> out;
  out.reserve(tau.size());
  for (auto e : tau) out.push_back(e == 0 ? 0 : 1);
  return out;
}

std::vector<int> routing_choices(const Address& tau) {
  std::vector<int> out;
  int run = 0;
  for (int bit : normalize_address(tau)) {
    if (bit == 0) {
      ++run;
    } else {
      out.push_back(run % 2);
      run = 0;
    }
  }
  return out;
}

Cell tau_star(Scheme& s, const Address& tau) { return s.cell(routing_choices(tau)); }

}  // namespace indicatrix
