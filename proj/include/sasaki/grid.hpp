#pragma once

#include <cstddef>

namespace sasaki {

/// Uniform samples s_0 = -L, ..., s_{N-1} = +L of the log-modulus coordinate.
class SGrid {
 public:
  SGrid(double half_width, std::size_t count);

  double half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return count_; }
  double spacing() const noexcept { return spacing_; }
  double node(std::size_t i) const noexcept {
    return -half_width_ + spacing_ * static_cast<double>(i);
  }

  friend bool operator==(const SGrid&, const SGrid&) = default;

 private:
  double half_width_;
  std::size_t count_;
  double spacing_;
};

inline constexpr double kDefaultHalfWidth = 15.0;
inline constexpr std::size_t kDefaultPotentialNodes = 2049;

/// Uniform interior moment nodes x_k = k / (K + 1), k = 1..K.
class XGrid {
 public:
  explicit XGrid(std::size_t interior_count);

  std::size_t size() const noexcept { return count_; }
  double spacing() const noexcept { return spacing_; }
  /// Interior node, 0-based: x(0) = spacing.
  double node(std::size_t k) const noexcept { return spacing_ * static_cast<double>(k + 1); }

  friend bool operator==(const XGrid&, const XGrid&) = default;

 private:
  std::size_t count_;
  double spacing_;
};

inline constexpr std::size_t kDefaultMomentNodes = 4097;

}  // namespace sasaki
