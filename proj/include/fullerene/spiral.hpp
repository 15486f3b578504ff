#pragma once

// Ring-spiral machinery: face-size sequences, wind-up into a fullerene,
// canonical (lexicographically least) spirals, and exhaustive isomer
// generation by pruned depth-first search over spiral sequences.
//
// Everything here works on the dual triangulation: spiral positions are
// dual vertices (faces of the fullerene), a face of size k is a dual vertex
// of degree k, and every vertex of the fullerene is a dual triangle.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

/// Spirals are complete (every fullerene has one) below this vertex count.
inline constexpr std::size_t kSpiralCompleteBelow = 380;

enum class SpiralErrc {
  BadToken,
  WrongPentagonCount,
  LengthMismatch,
  UnsupportedN,
  NoSpiralFound,
  BadPartition,
};

inline const char* to_string(SpiralErrc e) {
  switch (e) {
    case SpiralErrc::BadToken: return "BadToken";
    case SpiralErrc::WrongPentagonCount: return "WrongPentagonCount";
    case SpiralErrc::LengthMismatch: return "LengthMismatch";
    case SpiralErrc::UnsupportedN: return "UnsupportedN";
    case SpiralErrc::NoSpiralFound: return "NoSpiralFound";
    case SpiralErrc::BadPartition: return "BadPartition";
  }
  return "SpiralError";
}

class SpiralError : public std::runtime_error {
 public:
  SpiralError(SpiralErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  SpiralErrc code() const noexcept { return code_; }

 private:
  SpiralErrc code_;
};

/// Face sizes read along a ring spiral: exactly twelve 5s, the rest 6s.
/// Ordered lexicographically with 5 < 6.
class SpiralSequence {
 public:
  SpiralSequence() = default;

  explicit SpiralSequence(std::vector<std::uint8_t> sizes) : sizes_(std::move(sizes)) {
    std::size_t fives = 0;
    for (auto s : sizes_) {
      if (s != 5 && s != 6)
        throw SpiralError(SpiralErrc::BadToken, "face size " + std::to_string(s));
      fives += s == 5;
    }
    if (fives != 12)
      throw SpiralError(SpiralErrc::WrongPentagonCount, std::to_string(fives) + " pentagons");
  }

  /// `positions` are the 1-based spiral positions of the twelve pentagons.
  static SpiralSequence from_positions(std::size_t vertex_count,
                                       const std::vector<std::size_t>& positions) {
    if (vertex_count % 2 != 0 || vertex_count < 20)
      throw SpiralError(SpiralErrc::LengthMismatch,
                        "vertex count " + std::to_string(vertex_count));
    if (positions.size() != 12)
      throw SpiralError(SpiralErrc::WrongPentagonCount,
                        std::to_string(positions.size()) + " pentagon positions");
    const std::size_t m = vertex_count / 2 + 2;
    std::vector<std::uint8_t> sizes(m, 6);
    for (std::size_t p : positions) {
      if (p < 1 || p > m)
        throw SpiralError(SpiralErrc::LengthMismatch,
                          "position " + std::to_string(p) + " outside 1.." + std::to_string(m));
      if (sizes[p - 1] == 5)
        throw SpiralError(SpiralErrc::WrongPentagonCount,
                          "position " + std::to_string(p) + " repeated");
      sizes[p - 1] = 5;
    }
    return SpiralSequence(std::move(sizes));
  }

  const std::vector<std::uint8_t>& sizes() const noexcept { return sizes_; }
  std::size_t face_count() const noexcept { return sizes_.size(); }
  std::size_t vertex_count() const noexcept { return 2 * (sizes_.size() - 2); }

  /// 1-based positions of the pentagons.
  std::vector<std::size_t> pentagon_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sizes_.size(); ++i)
      if (sizes_[i] == 5) out.push_back(i + 1);
    return out;
  }

  friend auto operator<=>(const SpiralSequence&, const SpiralSequence&) = default;
  friend bool operator==(const SpiralSequence&, const SpiralSequence&) = default;

 private:
  std::vector<std::uint8_t> sizes_;
};

/// The lexicographically least spiral of a graph over all starting faces,
/// starting edges and both winding directions. Equal canonical spirals
/// identify isomorphic fullerenes (mirror images included).
struct CanonicalSpiral {
  SpiralSequence spiral;

  friend auto operator<=>(const CanonicalSpiral&, const CanonicalSpiral&) = default;
  friend bool operator==(const CanonicalSpiral&, const CanonicalSpiral&) = default;
};

namespace detail {

inline constexpr std::size_t kMaxFaces = kSpiralCompleteBelow / 2 + 2;

/// Incremental wind-up state. Faces are attached in spiral order to the
/// open boundary ("ring") of the partial dual patch: each new face joins the
/// last face placed and the oldest open face, then keeps joining ring faces
/// that become saturated. Face sizes live outside the state since they never
/// change once placed; the fixed capacity keeps search nodes cheap to copy.
template <std::size_t Cap>
struct WindupState {
  std::array<std::uint8_t, Cap> degree{};
  std::array<std::uint8_t, Cap + 2> ring{};
  int head = 0;
  int tail = 0;
  int placed = 0;
  int pentagons = 0;
  int open = 0;  // sum of unfilled valences over ring faces

  int ring_size() const noexcept { return tail - head; }
};

struct NoTriangles {
  void operator()(int, int, int) const noexcept {}
};

struct Attachment {
  bool ok = false;
  int degree = 0;               // connections made by the new face
  bool touches_pentagon = false;
};

template <class State>
void start_windup(State& st, std::uint8_t s0, std::uint8_t s1) {
  st.degree[0] = 1;
  st.degree[1] = 1;
  st.ring[0] = 0;
  st.ring[1] = 1;
  st.head = 0;
  st.tail = 2;
  st.placed = 2;
  st.pentagons = (s0 == 5) + (s1 == 5);
  st.open = s0 + s1 - 2;
}

// Joins the next face (index st.placed) to the ring. The resulting
// connections do not depend on the new face's size, which is fixed
// afterwards by commit_face. Triangles (a, b, c) are reported with a
// consistent orientation.
template <class State, class TriangleSink>
Attachment attach_face(State& st, const std::uint8_t* size, TriangleSink&& tri) {
  Attachment a;
  if (st.ring_size() < 2) return a;
  const int k = st.placed;
  int front = st.ring[st.head];
  int back = st.ring[st.tail - 1];
  tri(front, back, k);
  ++st.degree[front];
  ++st.degree[back];
  int dk = 2;
  bool pent = size[front] == 5 || size[back] == 5;
  for (;;) {
    if (st.degree[front] == size[front]) {
      ++st.head;
      if (st.ring_size() < 2) return a;
      const int next = st.ring[st.head];
      tri(front, k, next);
      front = next;
      ++st.degree[front];
      ++dk;
      pent = pent || size[front] == 5;
    } else if (st.degree[back] == size[back]) {
      --st.tail;
      if (st.ring_size() < 2) return a;
      const int next = st.ring[st.tail - 1];
      tri(back, next, k);
      back = next;
      ++st.degree[back];
      ++dk;
      pent = pent || size[back] == 5;
    } else {
      break;
    }
  }
  a.ok = true;
  a.degree = dk;
  a.touches_pentagon = pent;
  return a;
}

template <class State>
void commit_face(State& st, const Attachment& a, std::uint8_t face_size) {
  const int k = st.placed;
  st.degree[k] = static_cast<std::uint8_t>(a.degree);
  st.ring[st.tail++] = static_cast<std::uint8_t>(k);
  st.open += face_size - 2 * a.degree;
  st.pentagons += face_size == 5;
  ++st.placed;
}

// The last face must fill the remaining hole exactly.
template <class State, class TriangleSink>
bool close_windup(const State& st, const std::uint8_t* size, std::uint8_t face_size, bool ipr,
                  TriangleSink&& tri) {
  if (st.ring_size() != face_size) return false;
  for (int i = st.head; i < st.tail; ++i) {
    const int f = st.ring[i];
    if (st.degree[f] + 1 != size[f]) return false;
    if (ipr && face_size == 5 && size[f] == 5) return false;
  }
  const int k = st.placed;
  for (int i = st.head; i < st.tail; ++i) {
    const int a = st.ring[i];
    const int b = i + 1 < st.tail ? st.ring[i + 1] : st.ring[st.head];
    tri(b, a, k);
  }
  return true;
}

/// Dual rotation system: for each face, the adjacent faces in cyclic order.
struct DualRotation {
  std::vector<std::array<std::uint16_t, 6>> nbr;
  std::vector<std::uint8_t> degree;

  std::size_t size() const noexcept { return degree.size(); }

  int index_of(std::size_t f, std::size_t g) const noexcept {
    for (int i = 0; i < degree[f]; ++i)
      if (nbr[f][i] == g) return i;
    return -1;
  }
};

// For triangle (a, b, c) the successor of b around a is c, and so on.
// `d.nbr` doubles as scratch for the (predecessor, successor) pairs.
inline void dual_from_triangles(std::size_t faces,
                                const std::vector<std::array<std::uint16_t, 3>>& tris,
                                DualRotation& d, std::vector<std::array<std::uint16_t, 6>>& to) {
  d.nbr.resize(faces);
  d.degree.assign(faces, 0);
  to.resize(faces);
  auto add = [&](std::uint16_t x, std::uint16_t p, std::uint16_t q) {
    if (d.degree[x] < 6) {
      d.nbr[x][d.degree[x]] = p;
      to[x][d.degree[x]] = q;
    }
    ++d.degree[x];
  };
  for (const auto& t : tris) {
    add(t[0], t[1], t[2]);
    add(t[1], t[2], t[0]);
    add(t[2], t[0], t[1]);
  }
  for (std::size_t x = 0; x < faces; ++x) {
    const int deg = std::min<int>(d.degree[x], 6);
    const auto from = d.nbr[x];
    std::uint16_t cur = from[0];
    for (int i = 0; i < deg; ++i) {
      d.nbr[x][i] = cur;
      for (int j = 0; j < deg; ++j)
        if (from[j] == cur) {
          cur = to[x][j];
          break;
        }
    }
  }
}

inline DualRotation dual_from_triangles(std::size_t faces,
                                        const std::vector<std::array<std::uint16_t, 3>>& tris) {
  DualRotation d;
  std::vector<std::array<std::uint16_t, 6>> scratch;
  dual_from_triangles(faces, tris, d, scratch);
  return d;
}

inline DualRotation dual_from_graph(const FullereneGraph& g) {
  const auto adj = g.face_adjacency();
  DualRotation d;
  d.nbr.resize(adj.size());
  d.degree.resize(adj.size());
  for (std::size_t f = 0; f < adj.size(); ++f) {
    if (adj[f].size() > 6)
      throw SpiralError(SpiralErrc::NoSpiralFound, "face larger than a hexagon");
    d.degree[f] = static_cast<std::uint8_t>(adj[f].size());
    for (std::size_t i = 0; i < adj[f].size(); ++i)
      d.nbr[f][i] = static_cast<std::uint16_t>(adj[f][i]);
  }
  return d;
}

enum class Unroll { Invalid, Larger, Equal, Smaller };

/// Reads the spiral that starts with face f0, continues with its neighbour
/// nbr[f0][slot] and winds in direction dir (+1 or -1). When `bound` is
/// non-empty the read stops as soon as the sequence is known to exceed it.
/// On Equal or Smaller, `out` holds the face sizes and `order` the faces.
struct SpiralReader {
  std::vector<std::uint8_t> placed, conn, ring;
  std::vector<std::uint16_t> order;
  std::vector<std::uint8_t> out;

  Unroll read(const DualRotation& dual, std::size_t f0, int slot, int dir,
              const std::vector<std::uint8_t>* bound) {
    const std::size_t m = dual.size();
    if (placed.size() != m) {
      placed.resize(m);
      conn.resize(m);
      ring.resize(m + 2);
      order.resize(m);
      out.resize(m);
    }
    std::fill(placed.begin(), placed.end(), 0);
    std::fill(conn.begin(), conn.end(), 0);
    bool smaller = bound == nullptr;
    auto emit = [&](std::size_t k, std::size_t f) -> bool {
      const std::uint8_t s = dual.degree[f];
      order[k] = static_cast<std::uint16_t>(f);
      out[k] = s;
      if (!smaller) {
        if (s > (*bound)[k]) return false;
        if (s < (*bound)[k]) smaller = true;
      }
      return true;
    };
    const std::size_t f1 = dual.nbr[f0][slot];
    if (!emit(0, f0) || !emit(1, f1)) return Unroll::Larger;
    placed[f0] = placed[f1] = 1;
    conn[f0] = conn[f1] = 1;
    int head = 0, tail = 0;
    ring[tail++] = static_cast<std::uint8_t>(f0);
    ring[tail++] = static_cast<std::uint8_t>(f1);
    for (std::size_t k = 2; k < m; ++k) {
      std::size_t front = ring[head];
      std::size_t back = ring[tail - 1];
      const int d = dual.degree[front];
      const int at = dual.index_of(front, back);
      if (at < 0) return Unroll::Invalid;
      const std::size_t x = dual.nbr[front][((at + dir) % d + d) % d];
      if (placed[x]) return Unroll::Invalid;
      if (!emit(k, x)) return Unroll::Larger;
      if (k + 1 == m) break;  // the last face is forced
      placed[x] = 1;
      ++conn[front];
      ++conn[back];
      int cx = 2;
      for (;;) {
        if (conn[front] == dual.degree[front]) {
          ++head;
          if (tail - head < 2) return Unroll::Invalid;
          front = ring[head];
          if (dual.index_of(x, front) < 0) return Unroll::Invalid;
          ++conn[front];
          ++cx;
        } else if (conn[back] == dual.degree[back]) {
          --tail;
          if (tail - head < 2) return Unroll::Invalid;
          back = ring[tail - 1];
          if (dual.index_of(x, back) < 0) return Unroll::Invalid;
          ++conn[back];
          ++cx;
        } else {
          break;
        }
      }
      int placed_nbrs = 0;
      for (int i = 0; i < dual.degree[x]; ++i) placed_nbrs += placed[dual.nbr[x][i]];
      if (placed_nbrs != cx || cx >= dual.degree[x]) return Unroll::Invalid;
      conn[x] = static_cast<std::uint8_t>(cx);
      ring[tail++] = static_cast<std::uint8_t>(x);
    }
    return smaller ? Unroll::Smaller : Unroll::Equal;
  }
};

/// Least spiral over all starts; pentagon starts first, hexagon starts only
/// if no pentagon start yields a spiral.
inline std::optional<std::vector<std::uint8_t>> least_spiral(const DualRotation& dual) {
  SpiralReader reader;
  std::optional<std::vector<std::uint8_t>> best;
  for (std::uint8_t start_size : {std::uint8_t{5}, std::uint8_t{6}}) {
    if (best) break;
    for (std::size_t f = 0; f < dual.size(); ++f) {
      if (dual.degree[f] != start_size) continue;
      for (int slot = 0; slot < dual.degree[f]; ++slot)
        for (int dir : {1, -1}) {
          const auto r = reader.read(dual, f, slot, dir, best ? &*best : nullptr);
          if (r == Unroll::Smaller) best = reader.out;
        }
    }
  }
  return best;
}

/// True when no start yields a spiral strictly smaller than `seq`.
inline bool is_least_spiral(const DualRotation& dual, const std::vector<std::uint8_t>& seq,
                            SpiralReader& reader) {
  for (std::size_t f = 0; f < dual.size(); ++f) {
    if (dual.degree[f] > seq[0]) continue;  // cannot beat seq at position 0
    for (int slot = 0; slot < dual.degree[f]; ++slot)
      for (int dir : {1, -1})
        if (reader.read(dual, f, slot, dir, &seq) == Unroll::Smaller) return false;
  }
  return true;
}

inline bool is_least_spiral(const DualRotation& dual, const std::vector<std::uint8_t>& seq) {
  SpiralReader reader;
  return is_least_spiral(dual, seq, reader);
}

struct WoundUp {
  std::vector<std::array<std::uint16_t, 3>> triangles;
};

inline bool wind_up_triangles(const std::vector<std::uint8_t>& sizes, bool ipr, WoundUp& w) {
  const std::size_t m = sizes.size();
  w.triangles.clear();
  if (m < 3 || m > kMaxFaces) return false;
  auto tri = [&](int a, int b, int c) {
    w.triangles.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                           static_cast<std::uint16_t>(c)});
  };
  if (ipr && sizes[0] == 5 && sizes[1] == 5) return false;
  WindupState<kMaxFaces> st;
  start_windup(st, sizes[0], sizes[1]);
  for (std::size_t k = 2; k + 1 < m; ++k) {
    const auto a = attach_face(st, sizes.data(), tri);
    if (!a.ok || a.degree >= sizes[k]) return false;
    if (ipr && sizes[k] == 5 && a.touches_pentagon) return false;
    commit_face(st, a, sizes[k]);
  }
  if (!close_windup(st, sizes.data(), sizes[m - 1], ipr, tri)) return false;
  return true;
}

inline std::optional<WoundUp> wind_up_triangles(const std::vector<std::uint8_t>& sizes,
                                                bool ipr = false) {
  WoundUp w;
  if (!wind_up_triangles(sizes, ipr, w)) return std::nullopt;
  return w;
}

// Fullerene vertices are dual triangles; the neighbour across directed dual
// edge a -> b of a triangle is the triangle holding b -> a.
inline FullereneGraph graph_from_triangles(std::size_t faces,
                                           const std::vector<std::array<std::uint16_t, 3>>& tris,
                                           std::uint64_t id) {
  std::vector<std::int32_t> holder(faces * faces, -1);
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int i = 0; i < 3; ++i)
      holder[std::size_t{tris[t][i]} * faces + tris[t][(i + 1) % 3]] = static_cast<std::int32_t>(t);
  NeighborLists lists(tris.size());
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int i = 0; i < 3; ++i) {
      const std::int32_t u = holder[std::size_t{tris[t][(i + 1) % 3]} * faces + tris[t][i]];
      lists[t].push_back(static_cast<Vertex>(u < 0 ? t : u));
    }
  return build_graph(lists, id);
}

}  // namespace detail

/// Winds a spiral up into a fullerene. Returns nullopt when the spiral does
/// not close into a sphere.
inline std::optional<FullereneGraph> wind_up(const SpiralSequence& spiral, std::uint64_t id = 0) {
  if (spiral.face_count() > detail::kMaxFaces) return std::nullopt;
  auto w = detail::wind_up_triangles(spiral.sizes());
  if (!w) return std::nullopt;
  try {
    return detail::graph_from_triangles(spiral.face_count(), w->triangles, id);
  } catch (const GraphError&) {
    return std::nullopt;
  }
}

inline CanonicalSpiral canonical_spiral(const FullereneGraph& g) {
  if (g.vertex_count() >= kSpiralCompleteBelow)
    throw SpiralError(SpiralErrc::UnsupportedN, "n = " + std::to_string(g.vertex_count()));
  auto best = detail::least_spiral(detail::dual_from_graph(g));
  if (!best)
    throw SpiralError(SpiralErrc::NoSpiralFound, "n = " + std::to_string(g.vertex_count()));
  return CanonicalSpiral{SpiralSequence(std::move(*best))};
}

/// Generation is supported for n = 20 and even 24 <= n < 380.
inline void check_generation_n(std::size_t n) {
  if (!is_fullerene_vertex_count(n) || n >= kSpiralCompleteBelow)
    throw SpiralError(SpiralErrc::UnsupportedN,
                      "fullerenes exist only for n = 20 and even n >= 24; generation is limited "
                      "to n < 380 (got n = " + std::to_string(n) + ")");
}

struct GeneratedFullerene {
  CanonicalSpiral spiral;
  FullereneGraph graph;
};

/// Exhaustive search over spiral sequences for one vertex count. Sequences
/// are explored in lexicographic order (5 before 6), partial wind-ups are
/// pruned as soon as they cannot close, and a completed sequence is emitted
/// only if it is the canonical spiral of its graph. The output therefore
/// contains one graph per isomorphism class, sorted by canonical spiral.
///
/// The search splits into partitions identified by a fixed-length prefix of
/// face sizes (a string of '5' and '6'); partitions are independent and
/// their outputs concatenate, in partition order, to the full stream.
class SpiralSearch {
 public:
  SpiralSearch(std::size_t n, bool ipr_only) : n_(n), m_(n / 2 + 2), ipr_(ipr_only) {
    check_generation_n(n);
    depth_ = std::min<std::size_t>(8, m_ - 1);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  bool ipr_only() const noexcept { return ipr_; }
  std::size_t partition_depth() const noexcept { return depth_; }

  /// Feasible prefixes of length partition_depth(), in lexicographic order.
  std::vector<std::string> partitions() const {
    std::vector<std::string> out;
    std::string prefix;
    collect_prefixes(prefix, out);
    return out;
  }

  /// Runs one partition; emit(GeneratedFullerene&&) is called per isomer.
  template <class Emit>
  void run(std::string_view prefix, Emit&& emit) const {
    if (prefix.size() != depth_)
      throw SpiralError(SpiralErrc::BadPartition, std::string(prefix));
    Sizes sizes{};
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] != '5' && prefix[i] != '6')
        throw SpiralError(SpiralErrc::BadPartition, std::string(prefix));
      sizes[i] = static_cast<std::uint8_t>(prefix[i] - '0');
    }
    if (m_ <= 64)
      run_with<64>(sizes, emit);
    else
      run_with<detail::kMaxFaces>(sizes, emit);
  }

  template <class Emit>
  void run_all(Emit&& emit) const {
    for (const auto& p : partitions()) run(p, emit);
  }

 private:
  using Sizes = std::array<std::uint8_t, detail::kMaxFaces>;

  // Per-run buffers for the canonicity test of completed sequences.
  struct Scratch {
    std::vector<std::uint8_t> seq;
    detail::WoundUp wound;
    detail::DualRotation dual;
    std::vector<std::array<std::uint16_t, 6>> succ;
    detail::SpiralReader reader;
  };


  template <std::size_t Cap, class Emit>
  void run_with(Sizes& sizes, Emit& emit) const {
    detail::WindupState<Cap> st;
    if (!replay(sizes, depth_, st)) return;
    Scratch scratch;
    search(sizes, st, scratch, emit);
  }

  // Replays a prefix; false if it is infeasible.
  template <class State>
  bool replay(const Sizes& sizes, std::size_t len, State& st) const {
    if (len < 2) return false;
    if (ipr_ && sizes[0] == 5 && sizes[1] == 5) return false;
    detail::start_windup(st, sizes[0], sizes[1]);
    if (!feasible(st)) return false;
    for (std::size_t k = 2; k < len; ++k) {
      if (static_cast<std::size_t>(st.placed) + 1 == m_) return false;
      const auto a = detail::attach_face(st, sizes.data(), detail::NoTriangles{});
      if (!a.ok || a.degree >= sizes[k]) return false;
      if (ipr_ && sizes[k] == 5 && a.touches_pentagon) return false;
      detail::commit_face(st, a, sizes[k]);
      if (!feasible(st)) return false;
    }
    return true;
  }

  template <class State>
  bool feasible(const State& st) const noexcept {
    const int faces_left = static_cast<int>(m_) - st.placed;
    const int pents_left = 12 - st.pentagons;
    if (pents_left < 0 || pents_left > faces_left) return false;
    // The unfilled valence around the ring equals the boundary length of
    // the cap still to be placed, at most 4F + 2 - P for F faces holding P
    // pentagons.
    return st.open <= 4 * faces_left + 2 - pents_left;
  }

  void collect_prefixes(std::string& prefix, std::vector<std::string>& out) const {
    if (prefix.size() == depth_) {
      Sizes sizes{};
      for (std::size_t i = 0; i < prefix.size(); ++i)
        sizes[i] = static_cast<std::uint8_t>(prefix[i] - '0');
      detail::WindupState<detail::kMaxFaces> st;
      if (replay(sizes, depth_, st)) out.push_back(prefix);
      return;
    }
    for (char c : {'5', '6'}) {
      prefix.push_back(c);
      collect_prefixes(prefix, out);
      prefix.pop_back();
    }
  }

  template <class State, class Emit>
  void search(Sizes& sizes, State& st, Scratch& scratch, Emit& emit) const {
    const auto k = static_cast<std::size_t>(st.placed);
    if (k + 1 == m_) {
      if (st.pentagons < 11) return;
      const std::uint8_t last = st.pentagons == 12 ? 6 : 5;
      if (!detail::close_windup(st, sizes.data(), last, ipr_, detail::NoTriangles{})) return;
      sizes[k] = last;
      finish(sizes, scratch, emit);
      return;
    }
    const auto a = detail::attach_face(st, sizes.data(), detail::NoTriangles{});
    if (!a.ok) return;
    const bool can_five = a.degree < 5 && st.pentagons < 12 && !(ipr_ && a.touches_pentagon);
    const bool can_six = 12 - st.pentagons <= static_cast<int>(m_ - k - 1);
    if (can_five) {
      State child = st;
      detail::commit_face(child, a, 5);
      sizes[k] = 5;
      if (feasible(child)) search(sizes, child, scratch, emit);
    }
    if (can_six) {
      detail::commit_face(st, a, 6);
      sizes[k] = 6;
      if (feasible(st)) search(sizes, st, scratch, emit);
    }
  }

  template <class Emit>
  void finish(const Sizes& sizes, Scratch& scratch, Emit& emit) const {
    scratch.seq.assign(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(m_));
    if (!detail::wind_up_triangles(scratch.seq, ipr_, scratch.wound))
      throw SpiralError(SpiralErrc::NoSpiralFound, "search and wind-up disagree");
    detail::dual_from_triangles(m_, scratch.wound.triangles, scratch.dual, scratch.succ);
    if (!detail::is_least_spiral(scratch.dual, scratch.seq, scratch.reader)) return;
    auto graph = detail::graph_from_triangles(m_, scratch.wound.triangles, 0);
    emit(GeneratedFullerene{CanonicalSpiral{SpiralSequence(scratch.seq)}, std::move(graph)});
  }

  std::size_t n_;
  std::size_t m_;
  bool ipr_;
  std::size_t depth_;
};

/// All isomers with n vertices (IPR only if requested), sorted by canonical
/// spiral; graph ids are the 0-based positions in that order.
inline std::vector<GeneratedFullerene> generate(std::size_t n, bool ipr_only = false) {
  SpiralSearch search(n, ipr_only);
  std::vector<GeneratedFullerene> out;
  search.run_all([&](GeneratedFullerene&& g) {
    g.graph = g.graph.with_id(out.size());
    out.push_back(std::move(g));
  });
  return out;
}

}  // namespace fullerene
