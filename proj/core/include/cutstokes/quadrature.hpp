#pragma once

#include "cutstokes/types.hpp"

#include <vector>

namespace cutstokes {

/// Quadrature rule on the reference triangle, barycentric points, positive
/// weights summing to the reference measure 1/2.
struct TriRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int degree = 0;
};

/// Gauss-Legendre rule on the reference segment [0,1], weights sum to 1.
struct SegRule {
  std::vector<double> points;
  std::vector<double> weights;
  int degree = 0;
};

/// Symmetric positive-weight rule exact at least to the requested degree,
/// degrees 1..6.
TriRule triangle_rule(int degree);

/// Gauss-Legendre rule exact at least to the requested degree, degrees 1..7.
SegRule segment_rule(int degree);

/// Rule mapped to a physical triangle/segment: points and weights, with the
/// weights carrying the measure (they sum to the area resp. length).
struct MappedRule {
  std::vector<Vec2> points;
  std::vector<double> weights;
};

MappedRule map_to_triangle(const TriRule& rule, const Triangle& tri);
MappedRule map_to_segment(const SegRule& rule, const Vec2& a, const Vec2& b);

struct CutDecomposition;  // geometry.hpp

/// Integral of f over the element's part of the physical domain.
template <typename F>
double integrate_cut_volume(const CutDecomposition& decomp, F&& f, const TriRule& rule);

/// Integral of f over the element's boundary segments (0 unless Cut).
template <typename F>
double integrate_boundary(const CutDecomposition& decomp, F&& f, const SegRule& rule);

}  // namespace cutstokes
