#include "cutstokes/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace cutstokes {

double CutDecomposition::inside_area() const {
  double a = 0.0;
  for (const auto& tri : inside_tris) {
    a += triangle_area(tri);
  }
  return a;
}

SnappedValue snap_phi(double raw, double tol) {
  if (std::abs(raw) < tol) {
    return {tol, true};
  }
  return {raw, false};
}

ElementClass classify_snapped(const std::array<SnappedValue, 3>& v, double centroid_phi_raw) {
  int genuine_pos = 0;
  int on_gamma = 0;
  int neg = 0;
  for (const auto& s : v) {
    if (s.on_gamma) {
      ++on_gamma;
    } else if (s.value > 0.0) {
      ++genuine_pos;
    } else {
      ++neg;
    }
  }
  if (on_gamma == 3) {
    // Whole vertex set on the boundary: the element sits flush against a
    // fitted corner; its interior decides membership.
    return centroid_phi_raw < 0.0 ? ElementClass::Inside : ElementClass::Outside;
  }
  if (genuine_pos == 0) {
    // Any positive values are snapped boundary vertices: the true
    // intersection with the domain is the whole element up to measure zero.
    return ElementClass::Inside;
  }
  if (neg == 0) {
    return ElementClass::Outside;
  }
  return ElementClass::Cut;
}

namespace {

std::array<SnappedValue, 3> snap_triangle(const Triangle& tri, const LevelSet& phi, double tol) {
  return {snap_phi(phi(tri[0]), tol), snap_phi(phi(tri[1]), tol), snap_phi(phi(tri[2]), tol)};
}

Vec2 centroid(const Triangle& tri) { return (tri[0] + tri[1] + tri[2]) / 3.0; }

}  // namespace

ElementClass classify_element(const Triangle& tri, const LevelSet& phi, double snap_tol) {
  if (triangle_area(tri) <= 0.0) {
    throw InvalidInput("classify_element needs a CCW non-degenerate triangle");
  }
  return classify_snapped(snap_triangle(tri, phi, snap_tol), phi(centroid(tri)));
}

CutDecomposition cut_element(const Triangle& tri, const std::array<SnappedValue, 3>& v, int element_id) {
  {
    int genuine_pos = 0;
    int neg = 0;
    for (const auto& s : v) {
      if (!s.on_gamma && s.value > 0.0) ++genuine_pos;
      if (s.value < 0.0) ++neg;
    }
    if (genuine_pos == 0 || neg == 0) {
      throw InvalidInput("cut_element requires a Cut-classified element");
    }
  }

  CutDecomposition d;
  d.element = element_id;
  d.cls = ElementClass::Cut;

  // Walk the triangle boundary collecting inside vertices and edge crossings
  // in CCW order.
  std::vector<Vec2> polygon;
  std::array<Vec2, 2> crossings;
  int n_cross = 0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if (v[i].value < 0.0) {
      polygon.push_back(tri[i]);
    }
    if ((v[i].value < 0.0) != (v[j].value < 0.0)) {
      const double t = v[i].value / (v[i].value - v[j].value);
      const Vec2 x = tri[i] + t * (tri[j] - tri[i]);
      polygon.push_back(x);
      if (n_cross < 2) {
        crossings[n_cross] = x;
      }
      ++n_cross;
    }
  }
  if (n_cross != 2) {
    throw InternalError("linear cut must cross exactly two edges");
  }

  for (std::size_t k = 1; k + 1 < polygon.size(); ++k) {
    d.inside_tris.push_back({polygon[0], polygon[k], polygon[k + 1]});
  }

  // Normal from the gradient of the linear interpolant (points uphill).
  const Triangle& p = tri;
  const double a2 = 2.0 * triangle_area(p);
  Vec2 grad = Vec2::Zero();
  const std::array<Vec2, 3> grads = {
      Vec2(p[1].y() - p[2].y(), p[2].x() - p[1].x()) / a2,
      Vec2(p[2].y() - p[0].y(), p[0].x() - p[2].x()) / a2,
      Vec2(p[0].y() - p[1].y(), p[1].x() - p[0].x()) / a2,
  };
  for (int i = 0; i < 3; ++i) {
    grad += v[i].value * grads[i];
  }
  d.segments.push_back({crossings[0], crossings[1], grad.normalized()});
  return d;
}

CutDecomposition cut_element(const Triangle& tri, const LevelSet& phi, double snap_tol) {
  return cut_element(tri, snap_triangle(tri, phi, snap_tol), -1);
}

CutGeometry build_geometry(const BackgroundMesh& mesh, const LevelSet& phi) {
  CutGeometry g;
  g.snap_tol = 1e-12 * mesh.h_global();

  const int nv = mesh.num_vertices();
  const int ne = mesh.num_elements();
  g.vertex_phi.resize(nv);
  g.vertex_on_gamma.assign(nv, 0);
  for (int v = 0; v < nv; ++v) {
    const SnappedValue s = snap_phi(phi(mesh.vertex(v)), g.snap_tol);
    g.vertex_phi[v] = s.value;
    g.vertex_on_gamma[v] = s.on_gamma ? 1 : 0;
  }

  g.element_class.resize(ne);
  g.decomp.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const auto& el = mesh.element(e);
    const Triangle tri = mesh.element_coords(e);
    std::array<SnappedValue, 3> v;
    for (int k = 0; k < 3; ++k) {
      v[k] = {g.vertex_phi[el[k]], g.vertex_on_gamma[el[k]] != 0};
    }
    const ElementClass cls = classify_snapped(v, phi(centroid(tri)));
    g.element_class[e] = cls;
    CutDecomposition& d = g.decomp[e];
    d.element = e;
    d.cls = cls;
    if (cls == ElementClass::Inside) {
      d.inside_tris.push_back(tri);
    } else if (cls == ElementClass::Cut) {
      d = cut_element(tri, v, e);
    }
  }

  // Coverage: the physical domain must not reach the mesh boundary except
  // flush at fitted faces.
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const Face& face = mesh.face(f);
    if (face.interior()) continue;
    if (g.vertex_phi[face.v0] < 0.0 || g.vertex_phi[face.v1] < 0.0) {
      std::ostringstream msg;
      msg << "domain is not covered by the mesh: exterior face " << f << " has a vertex inside";
      throw CoverageError(msg.str(), f);
    }
  }

  for (int e = 0; e < ne; ++e) {
    if (g.element_class[e] == ElementClass::Cut) {
      g.sets.cut_elements.push_back(e);
    }
    if (g.element_class[e] != ElementClass::Outside) {
      g.sets.active_elements.push_back(e);
    }
  }

  std::vector<char> vertex_active(nv, 0);
  for (int e : g.sets.active_elements) {
    for (int v : mesh.element(e)) {
      vertex_active[v] = 1;
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (vertex_active[v]) {
      g.sets.active_vertices.push_back(v);
    }
  }

  for (int f = 0; f < mesh.num_faces(); ++f) {
    const Face& face = mesh.face(f);
    const bool a0 = face.elem[0] >= 0 && g.element_active(face.elem[0]);
    const bool a1 = face.elem[1] >= 0 && g.element_active(face.elem[1]);
    if (a0 && a1) {
      g.active_interior_faces.push_back(f);
      if (g.element_class[face.elem[0]] == ElementClass::Cut ||
          g.element_class[face.elem[1]] == ElementClass::Cut) {
        g.sets.stab_faces.push_back(f);
      }
    } else if (a0 != a1) {
      // Boundary face of the active submesh; fitted when it lies on the
      // domain boundary.
      if (g.vertex_on_gamma[face.v0] && g.vertex_on_gamma[face.v1]) {
        g.fitted_faces.push_back({f, a0 ? face.elem[0] : face.elem[1]});
      }
    }
  }

  return g;
}

CutSets collect_cut_sets(const BackgroundMesh& mesh, const LevelSet& phi) {
  return build_geometry(mesh, phi).sets;
}

AssumptionReport validate_assumptions(const BackgroundMesh& mesh, const CutGeometry& geom) {
  AssumptionReport report;
  if (geom.sets.cut_elements.empty()) {
    return report;  // fitted or fully interior configuration
  }

  // Multi-source BFS from uncut interior elements across interior faces of
  // the active submesh.
  const int ne = mesh.num_elements();
  std::vector<int> dist(ne, -1);
  std::deque<int> queue;
  for (int e : geom.sets.active_elements) {
    if (geom.element_class[e] == ElementClass::Inside) {
      dist[e] = 0;
      queue.push_back(e);
    }
  }
  if (queue.empty()) {
    throw AssumptionViolation("no fully interior element exists; mesh too coarse for the boundary");
  }
  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    for (int f : mesh.element_faces(e)) {
      const Face& face = mesh.face(f);
      if (!face.interior()) continue;
      const int other = face.elem[0] == e ? face.elem[1] : face.elem[0];
      if (!geom.element_active(other) || dist[other] >= 0) continue;
      dist[other] = dist[e] + 1;
      queue.push_back(other);
    }
  }

  for (int e : geom.sets.cut_elements) {
    if (dist[e] < 0) {
      std::ostringstream msg;
      msg << "cut element " << e << " cannot reach an uncut interior element";
      throw AssumptionViolation(msg.str());
    }
    report.max_walk = std::max(report.max_walk, dist[e]);
  }
  return report;
}

}  // namespace cutstokes
