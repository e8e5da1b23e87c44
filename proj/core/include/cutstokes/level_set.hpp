#pragma once

#include "cutstokes/types.hpp"

namespace cutstokes {

/// Implicit domain description: phi(x) < 0 inside, phi(x) = 0 on the
/// boundary. Circle and axis-aligned box evaluate to the exact signed
/// Euclidean distance; affine images keep the sign but distort distances.
class LevelSet {
 public:
  static LevelSet circle(const Vec2& center, double radius);
  static LevelSet axis_box(const Vec2& lo, const Vec2& hi);

  /// Domain image under x -> linear * x + shift (linear invertible).
  LevelSet transformed(const Mat2& linear, const Vec2& shift) const;

  double operator()(const Vec2& x) const;
  bool inside(const Vec2& x) const { return (*this)(x) < 0.0; }

 private:
  LevelSet() = default;

  enum class Kind { Circle, AxisBox };
  Kind kind_ = Kind::Circle;
  Vec2 center_ = Vec2::Zero();
  Vec2 half_ = Vec2::Zero();
  double radius_ = 0.0;
  bool affine_ = false;
  Mat2 inverse_linear_ = Mat2::Identity();
  Vec2 shift_ = Vec2::Zero();
};

}  // namespace cutstokes
