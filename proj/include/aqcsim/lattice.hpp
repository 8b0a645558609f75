#pragma once

#include <compare>

namespace aqcsim {

/// 1-based lattice site label. Site i occupies bit (i - 1) of a basis index.
class SiteIndex {
 public:
  constexpr SiteIndex() = default;
  constexpr explicit SiteIndex(int one_based) : value_(one_based) {}

  constexpr int value() const { return value_; }
  constexpr int bit() const { return value_ - 1; }

  constexpr auto operator<=>(const SiteIndex&) const = default;

 private:
  int value_ = 1;
};

/// 1-based (row, col) position on a rectangular grid.
struct GridSite {
  int row = 1;
  int col = 1;
  constexpr auto operator<=>(const GridSite&) const = default;
};

/// Row-major flattening: k = (row - 1) * cols + (col - 1) + 1.
constexpr SiteIndex flatten(GridSite site, int cols) {
  return SiteIndex((site.row - 1) * cols + (site.col - 1) + 1);
}

constexpr GridSite unflatten(SiteIndex site, int cols) {
  return GridSite{site.bit() / cols + 1, site.bit() % cols + 1};
}

}  // namespace aqcsim
