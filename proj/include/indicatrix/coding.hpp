#pragma once

#include "indicatrix/cset.hpp"
#include "indicatrix/geometry.hpp"

#include <map>
#include <string>
#include <vector>

namespace indicatrix {

/// A closed cell of the coding scheme: a finite union of representable pieces.
struct Cell {
  std::vector<CComponent> pieces;
  ClosedInterval bound() const;
  bool contains(const Rat& y) const;
  friend bool operator==(const Cell&, const Cell&) = default;
};

bool cell_meets(const Cell& c, const ClosedInterval& j);

/// Binary refinement scheme over a closed set K. A cell with several pieces
/// splits its piece list in halves; an interval bisects; a Cantor piece splits
/// into its two sub-Cantor sets; a point stays put.
class Scheme {
 public:
  explicit Scheme(const CSet& target);

  const CSet& target() const { return target_; }
  /// Cell reached by a sequence of binary routing choices.
  const Cell& cell(const std::vector<int>& choices);
  /// The two children of a cell.
  static std::pair<Cell, Cell> split(const Cell& c);

 private:
  CSet target_;
  std::map<std::vector<int>, Cell> memo_;
};

/// 2 -> 1.
std::vector<int> normalize_address(const Address& tau);
/// Routing choices consumed by a normalized address: one per 1, equal to the
/// parity of the run of 0s before it.
std::vector<int> routing_choices(const Address& tau);

/// The exact closed set of coded points over all extensions of tau.
Cell tau_star(Scheme& s, const Address& tau);

}  // namespace indicatrix
