#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rearr/geom/pose.hpp"

namespace rearr::geom {

// Indexed triangle mesh. Construction drops degenerate (zero-area) triangles
// and validates indices; the watertight flag is computed from edge topology.
struct TriMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;
  bool watertight = false;

  static TriMesh create(std::vector<Eigen::Vector3d> vertices,
                        std::vector<std::array<int, 3>> triangles);

  size_t triangle_count() const { return triangles.size(); }
  bool empty() const { return triangles.empty(); }

  Eigen::Vector3d triangle_vertex(int tri, int corner) const {
    return vertices[static_cast<size_t>(triangles[static_cast<size_t>(tri)][static_cast<size_t>(corner)])];
  }

  double triangle_area(int tri) const;
  Eigen::Vector3d triangle_normal(int tri) const;  // unit, by winding
  double area() const;
  double signed_volume() const;  // valid for watertight meshes
  Aabb bounds() const;
  Eigen::Vector3d centroid() const;  // area-weighted surface centroid

  TriMesh transformed(const Pose& pose) const;
};

// Merge meshes into one (re-indexes; no welding).
TriMesh merge_meshes(const std::vector<TriMesh>& meshes);

// Inclusive triangle-triangle intersection test (separating axes; touching
// counts as intersecting). Handles coplanar pairs.
bool tri_tri_intersect(const Eigen::Vector3d& a0, const Eigen::Vector3d& a1,
                       const Eigen::Vector3d& a2, const Eigen::Vector3d& b0,
                       const Eigen::Vector3d& b1, const Eigen::Vector3d& b2);

}  // namespace rearr::geom
