#pragma once

// Fullerene graph representation: a cubic graph together with a rotation
// system (cyclic neighbour order per vertex) and the faces traced from it.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fullerene {

using Vertex = std::uint32_t;
using NeighborLists = std::vector<std::vector<Vertex>>;
using Rotation = std::vector<std::array<Vertex, 3>>;

enum class GraphErrc {
  BadVertexCount,
  NotCubic,
  BadNeighbor,
  AsymmetricAdjacency,
  NotConnected,
  NonClosingFace,
  BadFaceSize,
  WrongPentagonCount,
  NotSpherical,
};

inline const char* to_string(GraphErrc e) {
  switch (e) {
    case GraphErrc::BadVertexCount: return "BadVertexCount";
    case GraphErrc::NotCubic: return "NotCubic";
    case GraphErrc::BadNeighbor: return "BadNeighbor";
    case GraphErrc::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case GraphErrc::NotConnected: return "NotConnected";
    case GraphErrc::NonClosingFace: return "NonClosingFace";
    case GraphErrc::BadFaceSize: return "BadFaceSize";
    case GraphErrc::WrongPentagonCount: return "WrongPentagonCount";
    case GraphErrc::NotSpherical: return "NotSpherical";
  }
  return "GraphError";
}

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Strict validation enforces every fullerene invariant. Permissive keeps
/// the structural checks (cubic, symmetric, connected, spherical embedding)
/// but accepts arbitrary face sizes and vertex counts; it exists so that
/// small non-fullerene cubic polyhedra can be fed to the metrics code.
enum class Validation { Strict, Permissive };

struct Face {
  std::vector<Vertex> vertices;  // cyclic, in tracing order

  std::size_t size() const noexcept { return vertices.size(); }
  bool is_pentagon() const noexcept { return vertices.size() == 5; }
};

/// n = 20 or even n >= 24.
inline bool is_fullerene_vertex_count(std::size_t n) noexcept {
  return n % 2 == 0 && (n == 20 || n >= 24);
}

namespace detail {

// Darts are numbered 3*v + slot and denote v -> rotation[v][slot].
inline int slot_of(const std::array<Vertex, 3>& rot, Vertex u) noexcept {
  for (int i = 0; i < 3; ++i)
    if (rot[i] == u) return i;
  return -1;
}

struct FaceTrace {
  std::vector<Face> faces;
  std::vector<std::uint32_t> dart_face;
};

// Face tracing convention: the dart following u -> v is v -> w, where w is
// the successor of u in the rotation at v. Every rotation produced in this
// library (wind-up, planar_code input) is traced with the same rule.
inline FaceTrace trace_faces(std::span<const std::array<Vertex, 3>> rotation,
                             std::size_t max_face_size) {
  const std::size_t n = rotation.size();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  FaceTrace out;
  out.dart_face.assign(3 * n, unset);
  for (std::size_t start = 0; start < 3 * n; ++start) {
    if (out.dart_face[start] != unset) continue;
    const auto face_index = static_cast<std::uint32_t>(out.faces.size());
    Face face;
    std::size_t dart = start;
    do {
      const auto v = static_cast<Vertex>(dart / 3);
      const Vertex w = rotation[v][dart % 3];
      if (out.dart_face[dart] != unset || face.vertices.size() >= max_face_size)
        throw GraphError(GraphErrc::NonClosingFace,
                         "face starting at dart " + std::to_string(start) +
                             " does not close within " + std::to_string(max_face_size) +
                             " steps");
      out.dart_face[dart] = face_index;
      face.vertices.push_back(v);
      const int back = slot_of(rotation[w], v);
      if (back < 0)
        throw GraphError(GraphErrc::AsymmetricAdjacency,
                         std::to_string(v) + " is not in the rotation of " + std::to_string(w));
      dart = 3 * std::size_t{w} + static_cast<std::size_t>((back + 1) % 3);
    } while (dart != start);
    out.faces.push_back(std::move(face));
  }
  return out;
}

}  // namespace detail

/// Traces every face of a cubic rotation system. Each dart is used exactly
/// once. Throws NonClosingFace when a trace exceeds `max_face_size` steps.
inline std::vector<Face> extract_faces(std::span<const std::array<Vertex, 3>> rotation,
                                       std::size_t max_face_size = 6) {
  return detail::trace_faces(rotation, max_face_size).faces;
}

/// Immutable, validated fullerene (or, in permissive mode, cubic spherical)
/// graph. Safe to share across threads.
class FullereneGraph {
 public:
  std::size_t vertex_count() const noexcept { return rotation_.size(); }
  std::size_t edge_count() const noexcept { return 3 * rotation_.size() / 2; }
  std::size_t face_count() const noexcept { return faces_.size(); }

  /// Neighbours of v in rotation order.
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return rotation_[v]; }
  const std::array<Vertex, 3>& rotation(Vertex v) const noexcept { return rotation_[v]; }
  const Rotation& rotation() const noexcept { return rotation_; }

  std::span<const Face> faces() const noexcept { return faces_; }

  /// Face lying on the traced side of dart v -> rotation(v)[slot].
  std::size_t face_of_dart(Vertex v, int slot) const noexcept {
    return dart_face_[3 * std::size_t{v} + static_cast<std::size_t>(slot)];
  }

  std::size_t pentagon_count() const noexcept {
    return static_cast<std::size_t>(
        std::ranges::count_if(faces_, [](const Face& f) { return f.is_pentagon(); }));
  }

  std::uint64_t id() const noexcept { return id_; }
  FullereneGraph with_id(std::uint64_t id) const {
    FullereneGraph g = *this;
    g.id_ = id;
    return g;
  }

  NeighborLists neighbor_lists() const {
    NeighborLists out(rotation_.size());
    for (std::size_t v = 0; v < rotation_.size(); ++v)
      out[v].assign(rotation_[v].begin(), rotation_[v].end());
    return out;
  }

  /// Face adjacency. Entry i lists the faces across the edges of face i, in
  /// the cyclic order of its boundary.
  std::vector<std::vector<std::uint32_t>> face_adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const auto& cyc = faces_[f].vertices;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Vertex a = cyc[i];
        const Vertex b = cyc[(i + 1) % cyc.size()];
        const int back = detail::slot_of(rotation_[b], a);
        adj[f].push_back(static_cast<std::uint32_t>(face_of_dart(b, back)));
      }
    }
    return adj;
  }

  friend FullereneGraph build_graph(const NeighborLists& lists, std::uint64_t id,
                                    Validation mode);

 private:
  Rotation rotation_;
  std::vector<Face> faces_;
  std::vector<std::uint32_t> dart_face_;
  std::uint64_t id_ = 0;
};

/// Validates a rotation system and builds the graph with its faces.
inline FullereneGraph build_graph(const NeighborLists& lists, std::uint64_t id = 0,
                                  Validation mode = Validation::Strict) {
  const std::size_t n = lists.size();
  const bool strict = mode == Validation::Strict;
  if (n == 0 || (strict && !is_fullerene_vertex_count(n)))
    throw GraphError(GraphErrc::BadVertexCount,
                     "no fullerene has " + std::to_string(n) + " vertices");

  FullereneGraph g;
  g.id_ = id;
  g.rotation_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (lists[v].size() != 3)
      throw GraphError(GraphErrc::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                                std::to_string(lists[v].size()));
    for (int i = 0; i < 3; ++i) {
      const Vertex u = lists[v][i];
      if (u >= n || u == v)
        throw GraphError(GraphErrc::BadNeighbor,
                         "vertex " + std::to_string(v) + " lists neighbour " + std::to_string(u));
      g.rotation_[v][i] = u;
    }
    const auto& r = g.rotation_[v];
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
      throw GraphError(GraphErrc::BadNeighbor, "vertex " + std::to_string(v) + " has a multi-edge");
  }
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex u : g.rotation_[v])
      if (detail::slot_of(g.rotation_[u], static_cast<Vertex>(v)) < 0)
        throw GraphError(GraphErrc::AsymmetricAdjacency,
                         std::to_string(v) + " -> " + std::to_string(u) + " has no reverse edge");

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.rotation_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != n)
    throw GraphError(GraphErrc::NotConnected,
                     std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable");

  auto trace = detail::trace_faces(g.rotation_, 3 * n);
  g.faces_ = std::move(trace.faces);
  g.dart_face_ = std::move(trace.dart_face);

  if (strict) {
    std::size_t pentagons = 0;
    for (const Face& f : g.faces_) {
      if (f.size() != 5 && f.size() != 6)
        throw GraphError(GraphErrc::BadFaceSize,
                         "face of size " + std::to_string(f.size()));
      pentagons += f.is_pentagon();
    }
    if (pentagons != 12)
      throw GraphError(GraphErrc::WrongPentagonCount,
                       std::to_string(pentagons) + " pentagonal faces");
  }
  if (g.faces_.size() != n / 2 + 2)
    throw GraphError(GraphErrc::NotSpherical, std::to_string(g.faces_.size()) +
                                                  " faces, expected " + std::to_string(n / 2 + 2));
  return g;
}

/// True iff no two pentagonal faces share an edge.
inline bool is_ipr(const FullereneGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (int slot = 0; slot < 3; ++slot) {
      const Vertex u = g.rotation(static_cast<Vertex>(v))[slot];
      const int back = detail::slot_of(g.rotation(u), static_cast<Vertex>(v));
      if (g.faces()[g.face_of_dart(static_cast<Vertex>(v), slot)].is_pentagon() &&
          g.faces()[g.face_of_dart(u, back)].is_pentagon())
        return false;
    }
  return true;
}

}  // namespace fullerene
