#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>

namespace cutstokes {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Triangle = std::array<Vec2, 3>;

/// Axis-aligned rectangle, lo < hi componentwise.
struct Rect {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x() - lo.x(); }
  double height() const { return hi.y() - lo.y(); }
  double area() const { return width() * height(); }
  bool degenerate() const { return width() <= 0.0 || height() <= 0.0; }
};

double triangle_area(const Triangle& tri);

/// Barycentric coordinates of x with respect to tri.
Eigen::Vector3d barycentric(const Triangle& tri, const Vec2& x);

// Error hierarchy. The CLI maps ConfigError to exit code 2 and every
// other Error to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct CoverageError : Error {
  explicit CoverageError(const std::string& msg, int face) : Error(msg), offending_face(face) {}
  int offending_face;
};

struct AssumptionViolation : Error {
  using Error::Error;
};

struct SingularSystem : Error {
  using Error::Error;
};

struct SizeLimit : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace cutstokes
