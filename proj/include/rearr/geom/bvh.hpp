#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rearr/geom/trimesh.hpp"

namespace rearr::geom {

struct RayHit {
  double t = 0.0;
  int triangle = -1;
};

struct ClosestHit {
  double distance = 0.0;
  int triangle = -1;
  Eigen::Vector3d point = Eigen::Vector3d::Zero();
};

// Axis-aligned bounding-volume hierarchy over a triangle mesh. The mesh is
// copied in; the tree is immutable after construction and safe to share
// across threads.
class Bvh {
 public:
  explicit Bvh(TriMesh mesh);

  const TriMesh& mesh() const { return mesh_; }
  const Aabb& bounds() const { return nodes_.empty() ? empty_bounds_ : nodes_[0].box; }

  // True iff any triangle of *this (posed by self_pose) intersects any
  // triangle of other (posed by other_pose). Touching counts.
  bool collides(const Pose& self_pose, const Bvh& other, const Pose& other_pose) const;

  // First hit along origin + t * dir, t in (t_min, t_max].
  std::optional<RayHit> raycast(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir,
                                double t_min = 0.0,
                                double t_max = std::numeric_limits<double>::infinity()) const;

  // Number of crossings along the ray (for parity containment tests).
  int count_crossings(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir) const;

  // True if the open segment (p0, p1) hits any triangle.
  bool segment_hits(const Eigen::Vector3d& p0, const Eigen::Vector3d& p1) const;

  // Closest surface point to p.
  ClosestHit closest_point(const Eigen::Vector3d& p) const;

  // True iff any triangle comes within `radius` of segment [a, b].
  bool segment_within(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double radius) const;

 private:
  struct Node {
    Aabb box;
    int left = -1;    // internal if >= 0
    int right = -1;
    int first = 0;    // leaf triangle range [first, first + count)
    int count = 0;
  };

  int build_node(std::vector<int>& order, int begin, int end,
                 const std::vector<Aabb>& tri_boxes,
                 const std::vector<Eigen::Vector3d>& centroids);

  TriMesh mesh_;
  std::vector<Node> nodes_;
  std::vector<int> tri_order_;
  Aabb empty_bounds_;
};

// One-shot pair test building temporary BVHs; the batched path holds Bvh
// instances and calls Bvh::collides directly.
bool mesh_pair_collides(const TriMesh& a, const Pose& pose_a, const TriMesh& b,
                        const Pose& pose_b);

}  // namespace rearr::geom
