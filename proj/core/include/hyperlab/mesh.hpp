#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "hyperlab/errors.hpp"

namespace hyperlab::geom {

// Triangle mesh with the adjacency needed for curvature fitting. Loaded from
// the OBJ subset (`v x y z`, `f i j k`, 1-based indices, `#` comments) or
// built directly from arrays. normal_sign converts the winding normal to the
// sphere-positive curvature convention: OBJ meshes usually wind
// counterclockwise seen from outside, which needs the inward flip (-1).
struct MeshPatch {
  Eigen::MatrixX3d vertices;
  Eigen::MatrixX3i faces;
  double normal_sign = -1.0;

  std::vector<std::vector<int>> vertex_faces;
  std::vector<std::vector<int>> neighbors;  // one-ring vertex adjacency
  std::vector<bool> boundary;
  Eigen::MatrixX3d vertex_normals;  // area-weighted, unit, includes sign

  int vertex_count() const { return static_cast<int>(vertices.rows()); }
  int face_count() const { return static_cast<int>(faces.rows()); }
};

MeshPatch mesh_load(const std::string& path, double normal_sign = -1.0);
MeshPatch mesh_from_data(Eigen::MatrixX3d vertices, Eigen::MatrixX3i faces,
                         double normal_sign = -1.0);

// Shape operator estimate at a vertex: least-squares quadric over the 2-ring
// in the tangent frame of the vertex normal.
struct MeshShape {
  Eigen::Vector2d lambdas;  // principal curvature estimates, descending
  Eigen::Vector3d normal;
  bool boundary = false;
  bool underdetermined = false;  // fewer than 6 ring neighbors
  int ring_size = 0;
};

MeshShape mesh_shape(const MeshPatch& mesh, int vertex);

// Vertex-graph Dijkstra distances from a source vertex (edge-length metric).
std::vector<double> mesh_distances(const MeshPatch& mesh, int source);

}  // namespace hyperlab::geom
