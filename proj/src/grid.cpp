#include "sasaki/grid.hpp"

#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki {

SGrid::SGrid(double half_width, std::size_t count) : half_width_(half_width), count_(count) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw ValidationError("grid half-width must be positive");
  if (count < 3) throw ValidationError("grid needs at least 3 nodes");
  spacing_ = 2.0 * half_width / static_cast<double>(count - 1);
}

XGrid::XGrid(std::size_t interior_count) : count_(interior_count) {
  if (interior_count < 3) throw ValidationError("moment grid needs at least 3 nodes");
  spacing_ = 1.0 / static_cast<double>(interior_count + 1);
}

}  // namespace sasaki
