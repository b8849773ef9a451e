#pragma once

#include "indicatrix/intervals.hpp"
#include "indicatrix/plf.hpp"
#include "indicatrix/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace indicatrix {

enum class Orient : std::uint8_t { Ascending, Descending };

using Address = std::vector<std::uint8_t>;

std::string address_str(const Address& a);

/// A rectangle [xlo,xhi]x[ylo,yhi] together with one of its diagonals.
struct Diag {
  Rat xlo;
  Rat xhi;
  Rat ylo;
  Rat yhi;
  Orient orient = Orient::Ascending;
  Address address;
  int label = 0;
  std::string source;  // family interval this diagonal was restricted to

  ClosedInterval xrange() const { return {xlo, xhi}; }
  ClosedInterval yrange() const { return {ylo, yhi}; }
  Rat height() const { return yhi - ylo; }
  Vertex start() const { return {xlo, orient == Orient::Ascending ? ylo : yhi}; }
  Vertex end() const { return {xhi, orient == Orient::Ascending ? yhi : ylo}; }
  bool contains(const Diag& o) const {
    return xlo <= o.xlo && o.xhi <= xhi && ylo <= o.ylo && o.yhi <= yhi;
  }
  friend bool operator==(const Diag&, const Diag&) = default;
};

Diag identity_diag();

/// x-thirds over the full y-range, orientations alternating so that the three
/// diagonals join into a continuous path from d.start() to d.end().
std::array<Diag, 3> thirds(const Diag& d);

/// The four vertices of q_R.
std::array<Vertex, 4> zigzag_patch(const Diag& d);

/// The part of the diagonal over the y-interval I; I must lie in d's y-range.
Diag restrict_to(const Diag& d, const OpenInterval& i, std::string source = {});

}  // namespace indicatrix
