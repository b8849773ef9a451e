#include "indicatrix/geometry.hpp"

#include <stdexcept>

namespace indicatrix {

std::string address_str(const Address& a) {
  std::string s;
  for (auto c : a) s.push_back(static_cast<char>('0' + c));
  return s;
}

Diag identity_diag() { return Diag{Rat(0), Rat(1), Rat(0), Rat(1), Orient::Ascending, {}, 0, {}}; }

std::array<Diag, 3> thirds(const Diag& d) {
  const Rat w = (d.xhi - d.xlo) / Rat(3);
  const Orient same = d.orient;
  const Orient flip = same == Orient::Ascending ? Orient::Descending : Orient::Ascending;
  std::array<Diag, 3> out;
  for (int e = 0; e < 3; ++e) {
    Diag c = d;
    c.xlo = d.xlo + w * Rat(e);
    c.xhi = e == 2 ? d.xhi : d.xlo + w * Rat(e + 1);
    c.orient = e == 1 ? flip : same;
    c.address.push_back(static_cast<std::uint8_t>(e));
    c.label = e;
    out[static_cast<std::size_t>(e)] = std::move(c);
  }
  return out;
}

std::array<Vertex, 4> zigzag_patch(const Diag& d) {
  const auto t = thirds(d);
  return {d.start(), t[0].end(), t[1].end(), d.end()};
}

Diag restrict_to(const Diag& d, const OpenInterval& i, std::string source) {
  if (!d.yrange().contains(i.closure()) || !(i.lo < i.hi))
    throw std::invalid_argument("restrict: (" + i.lo.str() + "," + i.hi.str() + ") is not inside the y-range");
  const Rat slope_x = (d.xhi - d.xlo) / (d.yhi - d.ylo);
  Diag out = d;
  out.ylo = i.lo;
  out.yhi = i.hi;
  if (d.orient == Orient::Ascending) {
    out.xlo = d.xlo + (i.lo - d.ylo) * slope_x;
    out.xhi = d.xlo + (i.hi - d.ylo) * slope_x;
  } else {
    out.xlo = d.xlo + (d.yhi - i.hi) * slope_x;
    out.xhi = d.xlo + (d.yhi - i.lo) * slope_x;
  }
  out.source = std::move(source);
  return out;
}

}  // namespace indicatrix
