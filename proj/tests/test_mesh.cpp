#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <vector>

#include "doctest.h"
#include "hyperlab/mesh.hpp"
#include "hyperlab/util.hpp"

using namespace hyperlab;
using namespace hyperlab::geom;

namespace {

struct SimpleMesh {
  std::vector<Eigen::Vector3d> v;
  std::vector<Eigen::Vector3i> f;
};

// Icosahedron, counterclockwise seen from outside.
SimpleMesh icosahedron() {
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  SimpleMesh m;
  m.v = {{-1, p, 0}, {1, p, 0},   {-1, -p, 0}, {1, -p, 0},
         {0, -1, p}, {0, 1, p},   {0, -1, -p}, {0, 1, -p},
         {p, 0, -1}, {p, 0, 1},   {-p, 0, -1}, {-p, 0, 1}};
  for (auto& x : m.v) x.normalize();
  const int faces[20][3] = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto& fc : faces) m.f.push_back({fc[0], fc[1], fc[2]});
  return m;
}

SimpleMesh subdivide_on_sphere(const SimpleMesh& in) {
  SimpleMesh out;
  out.v = in.v;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Eigen::Vector3d p = (out.v[a] + out.v[b]).normalized();
    out.v.push_back(p);
    const int idx = static_cast<int>(out.v.size()) - 1;
    midpoint[key] = idx;
    return idx;
  };
  for (const auto& f : in.f) {
    const int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
    out.f.push_back({f[0], ab, ca});
    out.f.push_back({f[1], bc, ab});
    out.f.push_back({f[2], ca, bc});
    out.f.push_back({ab, bc, ca});
  }
  return out;
}

MeshPatch to_patch(const SimpleMesh& m, double normal_sign) {
  Eigen::MatrixX3d V(static_cast<int>(m.v.size()), 3);
  Eigen::MatrixX3i F(static_cast<int>(m.f.size()), 3);
  for (std::size_t i = 0; i < m.v.size(); ++i)
    V.row(static_cast<int>(i)) = m.v[i].transpose();
  for (std::size_t i = 0; i < m.f.size(); ++i)
    F.row(static_cast<int>(i)) = m.f[i].transpose();
  return mesh_from_data(std::move(V), std::move(F), normal_sign);
}

SimpleMesh grid_mesh(int n, double extent,
                     const std::function<double(double, double)>& height) {
  SimpleMesh m;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double x = -extent + 2.0 * extent * i / n;
      const double y = -extent + 2.0 * extent * j / n;
      m.v.push_back({x, y, height(x, y)});
    }
  auto idx = [n](int i, int j) { return i * (n + 1) + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.f.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
      m.f.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
    }
  return m;
}

SimpleMesh cylinder_mesh(double R, int n_theta, int n_z, double z_extent) {
  SimpleMesh m;
  for (int i = 0; i < n_theta; ++i)
    for (int j = 0; j <= n_z; ++j) {
      const double th = 2.0 * kPi * i / n_theta;
      const double z = -z_extent + 2.0 * z_extent * j / n_z;
      m.v.push_back({R * std::cos(th), R * std::sin(th), z});
    }
  auto idx = [n_z](int i, int j) { return i * (n_z + 1) + j; };
  for (int i = 0; i < n_theta; ++i)
    for (int j = 0; j < n_z; ++j) {
      const int ip = (i + 1) % n_theta;
      m.f.push_back({idx(i, j), idx(ip, j), idx(ip, j + 1)});
      m.f.push_back({idx(i, j), idx(ip, j + 1), idx(i, j + 1)});
    }
  return m;
}

}  // namespace

TEST_CASE("icosphere curvature estimates: mean within 5% of 1") {
  SimpleMesh m = icosahedron();
  for (int i = 0; i < 4; ++i) m = subdivide_on_sphere(m);
  const MeshPatch patch = to_patch(m, -1.0);  // outward winding

  double sum = 0.0;
  int count = 0;
  for (int v = 0; v < patch.vertex_count(); ++v) {
    const MeshShape s = mesh_shape(patch, v);
    CHECK_FALSE(s.boundary);
    CHECK_FALSE(s.underdetermined);
    sum += 0.5 * (s.lambdas[0] + s.lambdas[1]);
    ++count;
  }
  const double mean = sum / count;
  CHECK(mean == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("icosphere curvature estimates converge under refinement") {
  SimpleMesh coarse = icosahedron();
  for (int i = 0; i < 2; ++i) coarse = subdivide_on_sphere(coarse);
  SimpleMesh fine = subdivide_on_sphere(coarse);

  auto mean_abs_err = [](const SimpleMesh& m) {
    const MeshPatch patch = to_patch(m, -1.0);
    double err = 0.0;
    for (int v = 0; v < patch.vertex_count(); ++v) {
      const MeshShape s = mesh_shape(patch, v);
      err += std::abs(0.5 * (s.lambdas[0] + s.lambdas[1]) - 1.0);
    }
    return err / patch.vertex_count();
  };
  const double e_coarse = mean_abs_err(coarse);
  const double e_fine = mean_abs_err(fine);
  CHECK(e_fine < e_coarse);  // observed order >= 1
  CHECK(e_fine <= 0.55 * e_coarse);
}

TEST_CASE("flat triangulated grid: curvature estimates vanish") {
  const SimpleMesh m = grid_mesh(10, 1.0, [](double, double) { return 0.0; });
  const MeshPatch patch = to_patch(m, 1.0);
  for (int v = 0; v < patch.vertex_count(); ++v) {
    const MeshShape s = mesh_shape(patch, v);
    if (s.boundary) continue;
    CHECK(std::abs(s.lambdas[0]) <= 1e-8);
    CHECK(std::abs(s.lambdas[1]) <= 1e-8);
  }
}

TEST_CASE("cylinder mesh: sorted lambdas near (1, 0) away from boundary") {
  const SimpleMesh m = cylinder_mesh(1.0, 96, 40, 2.0);
  const MeshPatch patch = to_patch(m, -1.0);
  int checked = 0;
  for (int v = 0; v < patch.vertex_count(); ++v) {
    if (patch.boundary[v]) continue;
    if (std::abs(patch.vertices(v, 2)) > 1.0) continue;  // stay off the rim
    const MeshShape s = mesh_shape(patch, v);
    CHECK(s.lambdas[0] == doctest::Approx(1.0).epsilon(0.05));
    CHECK(std::abs(s.lambdas[1]) <= 0.05);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("boundary vertices are flagged on an open grid") {
  const SimpleMesh m = grid_mesh(4, 1.0, [](double, double) { return 0.0; });
  const MeshPatch patch = to_patch(m, 1.0);
  int boundary_count = 0;
  for (bool b : patch.boundary) boundary_count += b ? 1 : 0;
  CHECK(boundary_count == 16);  // perimeter of a 5x5 vertex grid
}

TEST_CASE("non-manifold edge is rejected with the edge listed") {
  Eigen::MatrixX3d V(5, 3);
  V << 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, -1, 0;
  Eigen::MatrixX3i F(3, 3);
  F << 0, 1, 2, 0, 1, 3, 0, 1, 4;  // edge (0,1) in three faces
  CHECK_THROWS_WITH_AS(mesh_from_data(V, F), doctest::Contains("(0,1)"),
                       MeshError);
}

TEST_CASE("underdetermined fit is flagged on a tiny patch") {
  Eigen::MatrixX3d V(4, 3);
  V << 0, 0, 0, 1, 0, 0, 0, 1, 0, -1, -1, 0;
  Eigen::MatrixX3i F(2, 3);
  F << 0, 1, 2, 0, 3, 1;
  const MeshPatch patch = mesh_from_data(V, F, 1.0);
  const MeshShape s = mesh_shape(patch, 0);
  CHECK(s.underdetermined);
}

TEST_CASE("OBJ loader round trip") {
  const char* path = "hyperlab_test_mesh.obj";
  {
    std::ofstream out(path);
    out << "# tiny tetrahedron\n";
    out << "v 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\n";
    out << "f 1 2 3\nf 1 2 4\nf 2 3 4\nf 1 3 4\n";
  }
  const MeshPatch patch = mesh_load(path, -1.0);
  CHECK(patch.vertex_count() == 4);
  CHECK(patch.face_count() == 4);
  for (bool b : patch.boundary) CHECK_FALSE(b);  // closed surface
  std::remove(path);

  CHECK_THROWS_AS(mesh_load("does_not_exist.obj"), MeshError);
}

TEST_CASE("mesh vertex-graph distances") {
  SimpleMesh m = icosahedron();
  for (int i = 0; i < 3; ++i) m = subdivide_on_sphere(m);
  const MeshPatch patch = to_patch(m, -1.0);
  const auto dist = mesh_distances(patch, 0);
  // Graph distance overestimates the geodesic distance but stays within the
  // edge-path inflation factor on a refined sphere.
  const Eigen::Vector3d p0 = patch.vertices.row(0);
  for (int v = 0; v < patch.vertex_count(); v += 50) {
    const Eigen::Vector3d q = patch.vertices.row(v);
    const double exact = std::acos(std::clamp(p0.dot(q), -1.0, 1.0));
    CHECK(dist[v] >= exact - 1e-9);
    CHECK(dist[v] <= 1.3 * exact + 0.05);
  }
}
