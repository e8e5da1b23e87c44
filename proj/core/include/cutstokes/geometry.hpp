#pragma once

#include "cutstokes/level_set.hpp"
#include "cutstokes/mesh.hpp"
#include "cutstokes/quadrature.hpp"

#include <vector>

namespace cutstokes {

enum class ElementClass { Inside, Outside, Cut };

/// Straight piece of the linearized boundary inside one element, with the
/// unit normal pointing out of the physical domain.
struct BoundarySegment {
  Vec2 a;
  Vec2 b;
  Vec2 normal;

  double length() const { return (b - a).norm(); }
  Vec2 midpoint() const { return 0.5 * (a + b); }
};

/// Linearized intersection of one element with the physical domain.
struct CutDecomposition {
  int element = -1;
  ElementClass cls = ElementClass::Outside;
  std::vector<Triangle> inside_tris;
  std::vector<BoundarySegment> segments;

  double inside_area() const;
};

/// Element and face sets of the cut configuration: cut_elements realizes the
/// set of boundary-intersected elements, stab_faces the interior faces
/// touching them, active_* the fictitious-domain submesh.
struct CutSets {
  std::vector<int> cut_elements;
  std::vector<int> stab_faces;
  std::vector<int> active_elements;
  std::vector<int> active_vertices;
};

/// Exterior face of the active submesh that lies exactly on the domain
/// boundary (both endpoints snapped); carries the Nitsche integrals in
/// fitted configurations.
struct FittedFace {
  int face = -1;
  int owner = -1;
};

/// Full geometric model of one cut configuration.
struct CutGeometry {
  std::vector<double> vertex_phi;       // snapped values
  std::vector<char> vertex_on_gamma;    // |raw phi| < snap_tol
  std::vector<ElementClass> element_class;
  std::vector<CutDecomposition> decomp;  // indexed by element id
  CutSets sets;
  std::vector<FittedFace> fitted_faces;
  std::vector<int> active_interior_faces;  // both neighbours active, sorted
  double snap_tol = 0.0;

  bool element_active(int e) const { return element_class[e] != ElementClass::Outside; }
};

/// Vertex value snapping: values within tol of zero are pushed to +tol
/// (outside) and flagged as lying on the boundary.
struct SnappedValue {
  double value = 0.0;
  bool on_gamma = false;
};
SnappedValue snap_phi(double raw, double tol);

/// Classification from snapped vertex data. centroid_phi_raw breaks the tie
/// for elements whose vertices all sit on the boundary.
ElementClass classify_snapped(const std::array<SnappedValue, 3>& v, double centroid_phi_raw);

/// Convenience entry point matching the per-element contract; snap_tol is
/// taken relative to the triangle diameter when not supplied by a mesh.
ElementClass classify_element(const Triangle& tri, const LevelSet& phi, double snap_tol);

/// Cut an element classified Cut: linear interpolation of the snapped vertex
/// values locates the crossings, the inside polygon is fan-triangulated and
/// the boundary segment normal points towards positive phi.
CutDecomposition cut_element(const Triangle& tri, const std::array<SnappedValue, 3>& v, int element_id = -1);
CutDecomposition cut_element(const Triangle& tri, const LevelSet& phi, double snap_tol);

/// Build the full geometric model: snap, classify, decompose, collect sets
/// and fitted boundary faces. Throws CoverageError if the physical domain
/// reaches the mesh boundary with positive measure.
CutGeometry build_geometry(const BackgroundMesh& mesh, const LevelSet& phi);

/// The set-collection contract on its own.
CutSets collect_cut_sets(const BackgroundMesh& mesh, const LevelSet& phi);

struct AssumptionReport {
  int max_walk = 0;  // longest face walk from a cut element to an uncut interior one
};

/// Checks that every cut element reaches a fully interior element across
/// interior faces of the active submesh; throws AssumptionViolation otherwise.
AssumptionReport validate_assumptions(const BackgroundMesh& mesh, const CutGeometry& geom);

// Template definitions for the quadrature entry points declared in
// quadrature.hpp; they need the decomposition type.
template <typename F>
double integrate_cut_volume(const CutDecomposition& decomp, F&& f, const TriRule& rule) {
  double sum = 0.0;
  for (const auto& tri : decomp.inside_tris) {
    const MappedRule m = map_to_triangle(rule, tri);
    for (std::size_t q = 0; q < m.points.size(); ++q) {
      sum += m.weights[q] * f(m.points[q]);
    }
  }
  return sum;
}

template <typename F>
double integrate_boundary(const CutDecomposition& decomp, F&& f, const SegRule& rule) {
  double sum = 0.0;
  for (const auto& seg : decomp.segments) {
    const MappedRule m = map_to_segment(rule, seg.a, seg.b);
    for (std::size_t q = 0; q < m.points.size(); ++q) {
      sum += m.weights[q] * f(m.points[q]);
    }
  }
  return sum;
}

}  // namespace cutstokes
