#pragma once

// Distance-based vertex and graph invariants: shortest-path distances,
// (r,s)-transmissions tr_{r,s}(v) = sum_u sum_{i=r..s} d(v,u)^i, the
// generalised Wiener indices W_{r,s}, hyper-Wiener and
// Tratch-Stankevich-Zefirov indices, and Wiener (r,s)-complexity.
//
// All arithmetic is exact. Values are unsigned 64-bit; callers that cannot
// rule out overflow get MetricsErrc::Overflow, except complexity(), which
// falls back to 128-bit arithmetic.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

template <class G>
concept VertexGraph = requires(const G& g, Vertex v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::ranges::input_range;
};

/// Plain adjacency-list graph for inputs that are not fullerenes.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;
  explicit AdjacencyGraph(NeighborLists adj) : adj_(std::move(adj)) {}

  static AdjacencyGraph from_edges(std::size_t n,
                                   const std::vector<std::pair<Vertex, Vertex>>& edges) {
    NeighborLists adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return AdjacencyGraph(std::move(adj));
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }

 private:
  NeighborLists adj_;
};

enum class MetricsErrc { Disconnected, BadExponentRange, Overflow };

inline const char* to_string(MetricsErrc e) {
  switch (e) {
    case MetricsErrc::Disconnected: return "Disconnected";
    case MetricsErrc::BadExponentRange: return "BadExponentRange";
    case MetricsErrc::Overflow: return "Overflow";
  }
  return "MetricsError";
}

class MetricsError : public std::runtime_error {
 public:
  MetricsError(MetricsErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  MetricsErrc code() const noexcept { return code_; }

 private:
  MetricsErrc code_;
};

/// Exponent range [r, s] with 1 <= r <= s.
struct RsPair {
  unsigned r = 1;
  unsigned s = 1;

  void validate() const {
    if (r < 1 || r > s)
      throw MetricsError(MetricsErrc::BadExponentRange,
                         "need 1 <= r <= s, got r = " + std::to_string(r) +
                             ", s = " + std::to_string(s));
  }

  friend auto operator<=>(const RsPair&, const RsPair&) = default;
  friend bool operator==(const RsPair&, const RsPair&) = default;
};

inline std::string to_string(const RsPair& p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

/// The six exponent ranges surveyed by default, in column order.
inline std::vector<RsPair> default_rs_pairs() {
  return {{1, 1}, {2, 2}, {1, 2}, {3, 3}, {2, 3}, {1, 3}};
}

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> d) : n_(n), d_(std::move(d)) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t at(std::size_t v, std::size_t u) const noexcept { return d_[v * n_ + u]; }
  std::span<const std::uint32_t> row(std::size_t v) const noexcept {
    return {d_.data() + v * n_, n_};
  }
  std::uint32_t diameter() const noexcept {
    return d_.empty() ? 0 : *std::ranges::max_element(d_);
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// One breadth-first search per source vertex.
template <VertexGraph G>
DistanceMatrix all_pairs_distances(const G& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unreached = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> d(n * n, unreached);
  std::vector<Vertex> queue(n);
  for (std::size_t src = 0; src < n; ++src) {
    std::uint32_t* row = d.data() + src * n;
    std::size_t head = 0, tail = 0;
    row[src] = 0;
    queue[tail++] = static_cast<Vertex>(src);
    while (head < tail) {
      const Vertex v = queue[head++];
      for (Vertex u : g.neighbors(v))
        if (row[u] == unreached) {
          row[u] = row[v] + 1;
          queue[tail++] = u;
        }
    }
    if (tail != n)
      throw MetricsError(MetricsErrc::Disconnected,
                         std::to_string(n - tail) + " vertices unreachable from " +
                             std::to_string(src));
  }
  return DistanceMatrix(n, std::move(d));
}

namespace detail {

using u128 = unsigned __int128;

inline u128 ipow(u128 base, unsigned e) {
  u128 r = 1;
  while (e--) r *= base;
  return r;
}

// Upper bound of sum_{i=r..s} d^i over (count) terms with d <= diam,
// saturated at 2^127.
inline u128 term_bound(std::size_t count, std::uint32_t diam, const RsPair& p) {
  constexpr u128 cap = u128{1} << 127;
  u128 total = 0;
  for (unsigned i = p.r; i <= p.s; ++i) {
    u128 t = 1;
    for (unsigned k = 0; k < i; ++k) {
      if (t > cap / (diam ? diam : 1)) return cap;
      t *= diam;
    }
    if (count && t > cap / count) return cap;
    total += t * count;
    if (total >= cap) return cap;
  }
  return total;
}

inline bool fits_u64(const DistanceMatrix& d, const RsPair& p, std::size_t multiplier) {
  const std::size_t n = d.size();
  return term_bound(n * multiplier, d.diameter(), p) <= std::numeric_limits<std::uint64_t>::max();
}

// Per-vertex count of vertices at each distance.
inline std::vector<std::vector<std::uint32_t>> distance_histograms(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  const std::size_t diam = d.diameter();
  std::vector<std::vector<std::uint32_t>> h(n, std::vector<std::uint32_t>(diam + 1, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (auto x : d.row(v)) ++h[v][x];
  return h;
}

template <class Int>
std::vector<Int> transmissions_as(const DistanceMatrix& d, const RsPair& p) {
  const auto hist = distance_histograms(d);
  std::vector<Int> out(d.size(), 0);
  for (std::size_t v = 0; v < d.size(); ++v)
    for (std::size_t k = 1; k < hist[v].size(); ++k) {
      if (!hist[v][k]) continue;
      Int per = 0;
      for (unsigned i = p.r; i <= p.s; ++i) per += static_cast<Int>(ipow(k, i));
      out[v] += per * hist[v][k];
    }
  return out;
}

template <class Int>
std::size_t count_distinct(std::vector<Int> values) {
  std::ranges::sort(values);
  return static_cast<std::size_t>(std::ranges::unique(values).begin() - values.begin());
}

}  // namespace detail

/// Per-vertex tr_{r,s} values of one graph.
struct TransmissionProfile {
  RsPair pair;
  std::vector<std::uint64_t> values;
};

inline void require_u64(const DistanceMatrix& d, const RsPair& p, std::size_t multiplier) {
  if (!detail::fits_u64(d, p, multiplier))
    throw MetricsError(MetricsErrc::Overflow, "values for " + to_string(p) + " with n = " +
                                                  std::to_string(d.size()) +
                                                  " may exceed 64 bits");
}

inline TransmissionProfile transmission_profile(const DistanceMatrix& d, RsPair p) {
  p.validate();
  require_u64(d, p, 1);
  return {p, detail::transmissions_as<std::uint64_t>(d, p)};
}

/// tr_{r,s}(v).
inline std::uint64_t transmission(const DistanceMatrix& d, Vertex v, unsigned r, unsigned s) {
  const RsPair p{r, s};
  p.validate();
  require_u64(d, p, 1);
  std::uint64_t total = 0;
  for (auto x : d.row(v))
    for (unsigned i = r; i <= s; ++i) total += static_cast<std::uint64_t>(detail::ipow(x, i));
  return total;
}

/// W_{r,s}: sum over unordered vertex pairs of sum_{i=r..s} d^i.
inline std::uint64_t wiener_rs(const DistanceMatrix& d, unsigned r, unsigned s) {
  const RsPair p{r, s};
  p.validate();
  require_u64(d, p, d.size());
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < d.size(); ++v)
    for (std::size_t u = v + 1; u < d.size(); ++u)
      for (unsigned i = r; i <= s; ++i)
        total += static_cast<std::uint64_t>(detail::ipow(d.at(v, u), i));
  return total;
}

/// Number of distinct tr_{r,s} values over the vertices.
inline std::size_t complexity(const DistanceMatrix& d, unsigned r, unsigned s) {
  const RsPair p{r, s};
  p.validate();
  if (detail::fits_u64(d, p, 1))
    return detail::count_distinct(detail::transmissions_as<std::uint64_t>(d, p));
  return detail::count_distinct(detail::transmissions_as<detail::u128>(d, p));
}

/// All tr_{r,s} values pairwise distinct.
inline bool is_irregular(const DistanceMatrix& d, unsigned r, unsigned s) {
  return complexity(d, r, s) == d.size();
}

template <VertexGraph G>
bool is_irregular(const G& g, unsigned r, unsigned s) {
  return is_irregular(all_pairs_distances(g), r, s);
}

/// Non-negative fraction in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    const auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

inline std::string to_string(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" +
                                    std::to_string(q.denominator());
}

struct IndexReport {
  std::uint64_t wiener = 0;                       // W = W_{1,1}
  std::map<RsPair, std::uint64_t> wiener_rs;      // W_{r,s}
  Rational hyper_wiener;                          // WW = W_{1,2} / 2
  Rational tsz;                                   // (2 W_{1,2} + W_{2,3}) / 6
  std::map<unsigned, std::uint64_t> moments;      // W_{k,k}
};

/// W, WW, TSZ, the default W_{r,s} ranges, any extra ranges, and the
/// requested distance moments.
inline IndexReport index_report(const DistanceMatrix& d, const std::vector<unsigned>& moments = {},
                                const std::vector<RsPair>& extra_pairs = {}) {
  IndexReport rep;
  std::vector<RsPair> pairs = default_rs_pairs();
  pairs.insert(pairs.end(), extra_pairs.begin(), extra_pairs.end());
  for (const auto& p : pairs) rep.wiener_rs.try_emplace(p, wiener_rs(d, p.r, p.s));
  for (unsigned k : moments) {
    const auto w = wiener_rs(d, k, k);
    rep.moments[k] = w;
    rep.wiener_rs.try_emplace(RsPair{k, k}, w);
  }
  rep.wiener = rep.wiener_rs.at({1, 1});
  const auto w12 = rep.wiener_rs.at({1, 2});
  const auto w23 = rep.wiener_rs.at({2, 3});
  rep.hyper_wiener = Rational(w12, 2);
  rep.tsz = Rational(2 * w12 + w23, 6);
  return rep;
}

/// Per-vertex distance power sums M_k(v) = sum_u d(v,u)^k for k = 1..kmax.
/// tr_{r,s}(v) is the sum of M_r..M_s; the survey evaluates every exponent
/// range of interest from one table.
class MomentTable {
 public:
  MomentTable(const DistanceMatrix& d, unsigned kmax) : n_(d.size()), kmax_(kmax) {
    require_u64(d, RsPair{1, kmax}, 1);
    m_.assign(n_ * kmax, 0);
    const auto hist = detail::distance_histograms(d);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t dist = 1; dist < hist[v].size(); ++dist) {
        std::uint64_t power = 1;
        for (unsigned k = 1; k <= kmax; ++k) {
          power *= dist;
          m_[v * kmax + (k - 1)] += power * hist[v][dist];
        }
      }
  }

  std::uint64_t moment(std::size_t v, unsigned k) const noexcept {
    return m_[v * kmax_ + (k - 1)];
  }

  std::uint64_t transmission(std::size_t v, const RsPair& p) const noexcept {
    std::uint64_t t = 0;
    for (unsigned k = p.r; k <= p.s; ++k) t += moment(v, k);
    return t;
  }

  std::vector<std::uint64_t> profile(const RsPair& p) const {
    std::vector<std::uint64_t> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = transmission(v, p);
    return out;
  }

  std::size_t complexity(const RsPair& p) const { return detail::count_distinct(profile(p)); }

  std::size_t size() const noexcept { return n_; }
  unsigned max_exponent() const noexcept { return kmax_; }

 private:
  std::size_t n_;
  unsigned kmax_;
  std::vector<std::uint64_t> m_;
};

}  // namespace fullerene
