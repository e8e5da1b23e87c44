#include "cutstokes/level_set.hpp"

#include <algorithm>
#include <cmath>

namespace cutstokes {

LevelSet LevelSet::circle(const Vec2& center, double radius) {
  if (!(radius > 0.0)) {
    throw InvalidInput("circle level set needs radius > 0");
  }
  LevelSet ls;
  ls.kind_ = Kind::Circle;
  ls.center_ = center;
  ls.radius_ = radius;
  return ls;
}

LevelSet LevelSet::axis_box(const Vec2& lo, const Vec2& hi) {
  if (!(lo.x() < hi.x()) || !(lo.y() < hi.y())) {
    throw InvalidInput("axis_box level set needs lo < hi componentwise");
  }
  LevelSet ls;
  ls.kind_ = Kind::AxisBox;
  ls.center_ = 0.5 * (lo + hi);
  ls.half_ = 0.5 * (hi - lo);
  return ls;
}

LevelSet LevelSet::transformed(const Mat2& linear, const Vec2& shift) const {
  if (std::abs(linear.determinant()) < 1e-14) {
    throw InvalidInput("affine level-set transform must be invertible");
  }
  LevelSet ls = *this;
  // Compose: new phi(x) = old phi(old_inverse(linear^-1 (x - shift))).
  const Mat2 inv = linear.inverse();
  if (ls.affine_) {
    ls.inverse_linear_ = ls.inverse_linear_ * inv;
    ls.shift_ = linear * ls.shift_ + shift;
  } else {
    ls.inverse_linear_ = inv;
    ls.shift_ = shift;
  }
  ls.affine_ = true;
  return ls;
}

double LevelSet::operator()(const Vec2& x) const {
  Vec2 p = x;
  if (affine_) {
    p = inverse_linear_ * (x - shift_);
  }
  switch (kind_) {
    case Kind::Circle:
      return (p - center_).norm() - radius_;
    case Kind::AxisBox: {
      const Vec2 q = (p - center_).cwiseAbs() - half_;
      const Vec2 outside = q.cwiseMax(0.0);
      return outside.norm() + std::min(std::max(q.x(), q.y()), 0.0);
    }
  }
  return 0.0;
}

}  // namespace cutstokes
