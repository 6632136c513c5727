#include "hyperlab/mesh.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "hyperlab/util.hpp"

namespace hyperlab::geom {

namespace {

void build_adjacency(MeshPatch& mesh) {
  const int nv = mesh.vertex_count();
  const int nf = mesh.face_count();
  mesh.vertex_faces.assign(nv, {});
  mesh.neighbors.assign(nv, {});
  mesh.boundary.assign(nv, false);

  std::map<std::pair<int, int>, int> edge_faces;
  for (int f = 0; f < nf; ++f) {
    for (int e = 0; e < 3; ++e) {
      const int a = mesh.faces(f, e);
      const int b = mesh.faces(f, (e + 1) % 3);
      if (a < 0 || a >= nv || b < 0 || b >= nv)
        throw MeshError("mesh: face references a missing vertex");
      edge_faces[{std::min(a, b), std::max(a, b)}]++;
    }
    for (int e = 0; e < 3; ++e) mesh.vertex_faces[mesh.faces(f, e)].push_back(f);
  }

  std::string bad;
  for (const auto& [edge, count] : edge_faces) {
    if (count > 2) {
      bad += " (" + std::to_string(edge.first) + "," +
             std::to_string(edge.second) + ")";
    }
  }
  if (!bad.empty()) throw MeshError("mesh: non-manifold edges:" + bad);

  std::vector<std::set<int>> nbr(nv);
  for (const auto& [edge, count] : edge_faces) {
    nbr[edge.first].insert(edge.second);
    nbr[edge.second].insert(edge.first);
    if (count == 1) {
      mesh.boundary[edge.first] = true;
      mesh.boundary[edge.second] = true;
    }
  }
  for (int v = 0; v < nv; ++v)
    mesh.neighbors[v].assign(nbr[v].begin(), nbr[v].end());

  mesh.vertex_normals = Eigen::MatrixX3d::Zero(nv, 3);
  for (int f = 0; f < nf; ++f) {
    const Eigen::Vector3d a = mesh.vertices.row(mesh.faces(f, 0));
    const Eigen::Vector3d b = mesh.vertices.row(mesh.faces(f, 1));
    const Eigen::Vector3d c = mesh.vertices.row(mesh.faces(f, 2));
    const Eigen::Vector3d area_normal = 0.5 * (b - a).cross(c - a);
    for (int e = 0; e < 3; ++e)
      mesh.vertex_normals.row(mesh.faces(f, e)) += area_normal.transpose();
  }
  for (int v = 0; v < nv; ++v) {
    const double n = mesh.vertex_normals.row(v).norm();
    if (n > 0.0)
      mesh.vertex_normals.row(v) *= mesh.normal_sign / n;
  }
}

}  // namespace

MeshPatch mesh_from_data(Eigen::MatrixX3d vertices, Eigen::MatrixX3i faces,
                         double normal_sign) {
  MeshPatch mesh;
  mesh.vertices = std::move(vertices);
  mesh.faces = std::move(faces);
  mesh.normal_sign = normal_sign;
  build_adjacency(mesh);
  return mesh;
}

MeshPatch mesh_load(const std::string& path, double normal_sign) {
  std::ifstream in(path);
  if (!in) throw MeshError("mesh: cannot open '" + path + "'");

  std::vector<Eigen::Vector3d> verts;
  std::vector<Eigen::Vector3i> faces;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Eigen::Vector3d v;
      if (!(ss >> v[0] >> v[1] >> v[2]))
        throw MeshError("mesh: malformed vertex at line " +
                        std::to_string(lineno));
      verts.push_back(v);
    } else if (tag == "f") {
      Eigen::Vector3i f;
      for (int e = 0; e < 3; ++e) {
        std::string tok;
        if (!(ss >> tok))
          throw MeshError("mesh: malformed face at line " +
                          std::to_string(lineno));
        f[e] = std::atoi(tok.substr(0, tok.find('/')).c_str()) - 1;
      }
      std::string extra;
      if (ss >> extra)
        throw MeshError("mesh: non-triangular face at line " +
                        std::to_string(lineno));
      faces.push_back(f);
    }
    // Other record types (vn, vt, o, g, s) are ignored.
  }

  MeshPatch mesh;
  mesh.vertices.resize(static_cast<int>(verts.size()), 3);
  for (std::size_t i = 0; i < verts.size(); ++i)
    mesh.vertices.row(static_cast<int>(i)) = verts[i].transpose();
  mesh.faces.resize(static_cast<int>(faces.size()), 3);
  for (std::size_t i = 0; i < faces.size(); ++i)
    mesh.faces.row(static_cast<int>(i)) = faces[i].transpose();
  mesh.normal_sign = normal_sign;
  build_adjacency(mesh);
  return mesh;
}

MeshShape mesh_shape(const MeshPatch& mesh, int vertex) {
  if (vertex < 0 || vertex >= mesh.vertex_count())
    throw ArgumentError("mesh_shape: vertex index out of range");

  MeshShape out;
  out.boundary = mesh.boundary[vertex];
  out.normal = mesh.vertex_normals.row(vertex);

  // 2-ring neighborhood.
  std::set<int> ring(mesh.neighbors[vertex].begin(),
                     mesh.neighbors[vertex].end());
  for (int n : mesh.neighbors[vertex])
    ring.insert(mesh.neighbors[n].begin(), mesh.neighbors[n].end());
  ring.erase(vertex);
  out.ring_size = static_cast<int>(ring.size());
  if (out.ring_size < 6) out.underdetermined = true;

  // Tangent frame at the vertex.
  const Eigen::Vector3d n = out.normal;
  Eigen::Vector3d t1 = std::abs(n[0]) < 0.9 ? Eigen::Vector3d(1, 0, 0)
                                            : Eigen::Vector3d(0, 1, 0);
  t1 = (t1 - t1.dot(n) * n).normalized();
  const Eigen::Vector3d t2 = n.cross(t1);

  // Quadric fit w = a u^2 + b uv + c v^2 + d u + e v over the ring.
  const int rows = std::max(out.ring_size, 5);
  Eigen::MatrixXd Amat = Eigen::MatrixXd::Zero(rows, 5);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  const Eigen::Vector3d p0 = mesh.vertices.row(vertex);
  int row = 0;
  for (int idx : ring) {
    const Eigen::Vector3d d = Eigen::Vector3d(mesh.vertices.row(idx)) - p0;
    const double u = d.dot(t1), v = d.dot(t2), w = d.dot(n);
    Amat.row(row) << u * u, u * v, v * v, u, v;
    rhs[row] = w;
    ++row;
  }
  const Eigen::VectorXd q =
      Amat.colPivHouseholderQr().solve(rhs);
  const double a = q[0], b = q[1], c = q[2], d = q[3], e = q[4];

  // Graph fundamental forms at the origin of the fitted patch.
  const double grad2 = d * d + e * e;
  Eigen::Matrix2d I;
  I << 1 + d * d, d * e, d * e, 1 + e * e;
  Eigen::Matrix2d II;
  II << 2 * a, b, b, 2 * c;
  II /= std::sqrt(1.0 + grad2);
  const Eigen::Matrix2d shape = I.inverse() * II;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(
      0.5 * (shape + shape.transpose()));
  out.lambdas = es.eigenvalues().reverse();
  return out;
}

std::vector<double> mesh_distances(const MeshPatch& mesh, int source) {
  const int nv = mesh.vertex_count();
  if (source < 0 || source >= nv)
    throw ArgumentError("mesh_distances: source out of range");
  std::vector<double> dist(nv, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (int w : mesh.neighbors[v]) {
      const double len =
          (mesh.vertices.row(v) - mesh.vertices.row(w)).norm();
      if (dist[v] + len < dist[w]) {
        dist[w] = dist[v] + len;
        heap.push({dist[w], w});
      }
    }
  }
  return dist;
}

}  // namespace hyperlab::geom
