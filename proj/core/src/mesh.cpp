#include "cutstokes/mesh.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace cutstokes {

double triangle_area(const Triangle& tri) {
  const Vec2 e1 = tri[1] - tri[0];
  const Vec2 e2 = tri[2] - tri[0];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

Eigen::Vector3d barycentric(const Triangle& tri, const Vec2& x) {
  const double a = 2.0 * triangle_area(tri);
  const Vec2 r = x - tri[0];
  const Vec2 e1 = tri[1] - tri[0];
  const Vec2 e2 = tri[2] - tri[0];
  const double l1 = (r.x() * e2.y() - r.y() * e2.x()) / a;
  const double l2 = (e1.x() * r.y() - e1.y() * r.x()) / a;
  return {1.0 - l1 - l2, l1, l2};
}

Triangle BackgroundMesh::element_coords(int e) const {
  const auto& el = elements_[e];
  return {vertices_[el[0]], vertices_[el[1]], vertices_[el[2]]};
}

BackgroundMesh BackgroundMesh::structured(int nx, int ny, const Rect& bbox) {
  if (nx < 1 || ny < 1) {
    throw InvalidInput("structured mesh needs nx, ny >= 1");
  }
  if (bbox.degenerate()) {
    throw InvalidInput("structured mesh needs a non-degenerate bounding box");
  }

  BackgroundMesh m;
  m.bbox_ = bbox;
  m.nx_ = nx;
  m.ny_ = ny;
  m.dx_ = bbox.width() / nx;
  m.dy_ = bbox.height() / ny;
  m.h_global_ = std::hypot(m.dx_, m.dy_);

  m.vertices_.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      m.vertices_.emplace_back(bbox.lo.x() + i * m.dx_, bbox.lo.y() + j * m.dy_);
    }
  }

  const auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
  m.elements_.reserve(static_cast<std::size_t>(2) * nx * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int ll = vid(i, j);
      const int lr = vid(i + 1, j);
      const int ur = vid(i + 1, j + 1);
      const int ul = vid(i, j + 1);
      m.elements_.push_back({ll, lr, ur});
      m.elements_.push_back({ll, ur, ul});
    }
  }

  // Faces keyed by canonical vertex pair; first element to touch a face owns
  // slot 0, so slot order follows element index order.
  std::map<std::pair<int, int>, int> face_index;
  m.element_faces_.resize(m.elements_.size());
  for (int e = 0; e < m.num_elements(); ++e) {
    const auto& el = m.elements_[e];
    for (int k = 0; k < 3; ++k) {
      const int a = el[k];
      const int b = el[(k + 1) % 3];
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      auto it = face_index.find(key);
      if (it == face_index.end()) {
        Face f;
        f.v0 = key.first;
        f.v1 = key.second;
        f.elem[0] = e;
        it = face_index.emplace(key, m.num_faces()).first;
        m.faces_.push_back(f);
      } else {
        m.faces_[it->second].elem[1] = e;
      }
      m.element_faces_[e][k] = it->second;
    }
  }

  for (auto& f : m.faces_) {
    const Vec2 a = m.vertices_[f.v0];
    const Vec2 b = m.vertices_[f.v1];
    const Vec2 t = (b - a).normalized();
    Vec2 n(t.y(), -t.x());
    const Triangle first = m.element_coords(f.elem[0]);
    const Vec2 c0 = (first[0] + first[1] + first[2]) / 3.0;
    const Vec2 mid = 0.5 * (a + b);
    // Point away from the first adjacent element.
    if (n.dot(mid - c0) < 0.0) {
      n = -n;
    }
    f.normal = n;
  }

  return m;
}

Rect dilated_bbox(double epsilon, int cells, const Rect& base) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw InvalidInput("sliver parameter must lie in (0, 1]");
  }
  if (static_cast<double>(cells) <= 2.0 * (1.0 - epsilon)) {
    throw InvalidInput("dilated mesh needs more than 2(1-epsilon) cells per direction");
  }
  const double denom = cells - 2.0 * (1.0 - epsilon);
  const double lx = base.width() * (1.0 - epsilon) / denom;
  const double ly = base.height() * (1.0 - epsilon) / denom;
  return Rect{Vec2(base.lo.x() - lx, base.lo.y() - ly), Vec2(base.hi.x() + lx, base.hi.y() + ly)};
}

}  // namespace cutstokes
