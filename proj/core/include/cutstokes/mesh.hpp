#pragma once

#include "cutstokes/types.hpp"

#include <vector>

namespace cutstokes {

/// Mesh edge, stored once with canonical vertex order (v0 < v1).
/// For interior faces the normal points from elem[0] into elem[1];
/// for exterior faces it points out of elem[0].
struct Face {
  int v0 = -1;
  int v1 = -1;
  std::array<int, 2> elem{-1, -1};
  Vec2 normal = Vec2::Zero();

  bool interior() const { return elem[1] >= 0; }
};

/// Structured triangular background mesh. Every cell of an nx-by-ny grid is
/// split along the lower-left to upper-right diagonal into two CCW triangles.
class BackgroundMesh {
 public:
  static BackgroundMesh structured(int nx, int ny, const Rect& bbox);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_elements() const { return static_cast<int>(elements_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const Vec2& vertex(int v) const { return vertices_[v]; }
  const std::array<int, 3>& element(int e) const { return elements_[e]; }
  Triangle element_coords(int e) const;
  const Face& face(int f) const { return faces_[f]; }
  /// Face ids of element e, edge order (v0,v1), (v1,v2), (v2,v0).
  const std::array<int, 3>& element_faces(int e) const { return element_faces_[e]; }

  double h_global() const { return h_global_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  const Rect& bbox() const { return bbox_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

 private:
  std::vector<Vec2> vertices_;
  std::vector<std::array<int, 3>> elements_;
  std::vector<Face> faces_;
  std::vector<std::array<int, 3>> element_faces_;
  Rect bbox_{};
  double h_global_ = 0.0;
  double dx_ = 0.0;
  double dy_ = 0.0;
  int nx_ = 0;
  int ny_ = 0;
};

/// Bounding box [-a-l, a+l]^2 of the dilated mesh for the sliver experiments:
/// with N cells per direction the domain boundary of `base` ends up cutting
/// each boundary cell at relative height epsilon.
Rect dilated_bbox(double epsilon, int cells, const Rect& base);

}  // namespace cutstokes
