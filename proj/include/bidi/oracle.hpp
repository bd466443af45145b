// Copyright 2026 The bidi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIDI_ORACLE_HPP
#define BIDI_ORACLE_HPP

// Brute-force reference implementations for cross-checking.
//
// Nothing here calls into balance.hpp, uniform.hpp or convert.hpp; cycle
// signs, end-sign products and source/sink tests are recomputed from the
// raw overlays so the exhaustive suites compare two independent routes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bidi/structures.hpp"

namespace bidi::oracle {

using EdgeCycle = std::vector<EdgeId>;

namespace detail {

// Rotation starting at the smallest edge id, read in whichever direction
// puts the smaller neighbour second.
inline EdgeCycle canonical_cycle(const EdgeCycle& c) {
  const std::size_t k = c.size();
  const auto pos = static_cast<std::size_t>(std::ranges::min_element(c) - c.begin());
  EdgeCycle fwd(k);
  EdgeCycle bwd(k);
  for (std::size_t i = 0; i < k; ++i) {
    fwd[i] = c[(pos + i) % k];
    bwd[i] = c[(pos + k - i) % k];
  }
  return std::min(fwd, bwd);
}

inline void extend_paths(const Graph& g, VertexId start, VertexId at, std::vector<bool>& on_path,
                         EdgeCycle& path, std::set<EdgeCycle>& found) {
  for (HalfEdge h : g.incident(at)) {
    if (g.is_loop(h.edge)) continue;
    if (!path.empty() && std::ranges::find(path, h.edge) != path.end()) continue;
    const VertexId next = g.end(h.opposite());
    if (next == start) {
      if (path.size() >= 2) {
        path.push_back(h.edge);
        found.insert(canonical_cycle(path));
        path.pop_back();
      }
      continue;
    }
    if (next < start || on_path[next]) continue;
    on_path[next] = true;
    path.push_back(h.edge);
    extend_paths(g, start, next, on_path, path, found);
    path.pop_back();
    on_path[next] = false;
  }
}

inline Sign product(const SignedGraph& s, const EdgeCycle& c) {
  Sign p = Sign::Plus;
  for (EdgeId e : c) p *= s.sigma(e);
  return p;
}

}  // namespace detail

/// Every cycle of g exactly once: loops, digons from parallel pairs, and
/// simple cycles of length >= 3. Each cycle is rotated to start at its
/// smallest edge id and read toward its smaller neighbour; the list is
/// sorted lexicographically.
inline std::vector<EdgeCycle> enumerate_cycles(const Graph& g) {
  std::set<EdgeCycle> found;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) found.insert({e});
  }
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    if (g.is_loop(a)) continue;
    auto pa = g.endpoints(a);
    std::ranges::sort(pa);
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      auto pb = g.endpoints(b);
      std::ranges::sort(pb);
      if (pa == pb) found.insert({a, b});
    }
  }
  std::vector<bool> on_path(g.vertex_count(), false);
  EdgeCycle path;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = true;
    detail::extend_paths(g, s, s, on_path, path, found);
    on_path[s] = false;
  }
  return {found.begin(), found.end()};
}

inline bool balanced_by_cycles(const SignedGraph& s, const std::vector<EdgeCycle>& cycles) {
  return std::ranges::all_of(cycles, [&](const EdgeCycle& c) {
    return detail::product(s, c) == Sign::Plus;
  });
}

inline bool balanced_by_cycles(const SignedGraph& s) {
  return balanced_by_cycles(s, enumerate_cycles(s.graph()));
}

/// Even cycles positive, odd cycles negative.
inline bool antibalanced_by_cycles(const SignedGraph& s, const std::vector<EdgeCycle>& cycles) {
  return std::ranges::all_of(cycles, [&](const EdgeCycle& c) {
    return detail::product(s, c) == parity_sign(c.size());
  });
}

inline bool antibalanced_by_cycles(const SignedGraph& s) {
  return antibalanced_by_cycles(s, enumerate_cycles(s.graph()));
}

namespace detail {

inline bool uniform_after_flip(const BidirectedGraph& b, const std::vector<bool>& flip) {
  const Graph& g = b.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto ends = g.incident(v);
    std::optional<Sign> seen;
    for (HalfEdge h : ends) {
      Sign x = b.beta(h);
      if (flip[h.edge]) x = -x;
      if (!seen) {
        seen = x;
      } else if (*seen != x) {
        return false;
      }
    }
  }
  return true;
}

inline bool search_subsets(const BidirectedGraph& b, EdgeId next, std::vector<bool>& flip,
                           std::vector<EdgeId>& chosen) {
  if (uniform_after_flip(b, flip)) return true;
  for (EdgeId e = next; e < b.graph().edge_count(); ++e) {
    flip[e] = true;
    chosen.push_back(e);
    if (search_subsets(b, e + 1, flip, chosen)) return true;
    chosen.pop_back();
    flip[e] = false;
  }
  return false;
}

}  // namespace detail

inline constexpr std::size_t kDefaultReorientationBound = 20;

/// First edge set, in lexicographic order of sorted id lists, whose
/// reorientation leaves every vertex a source, a sink or isolated.
/// Throws std::length_error above `max_edges` edges.
inline std::optional<std::vector<EdgeId>> uniformizable_by_enumeration(
    const BidirectedGraph& b, std::size_t max_edges = kDefaultReorientationBound) {
  if (b.graph().edge_count() > max_edges) {
    throw std::length_error("too many edges for exhaustive reorientation search");
  }
  std::vector<bool> flip(b.graph().edge_count(), false);
  std::vector<EdgeId> chosen;
  if (detail::search_subsets(b, 0, flip, chosen)) return chosen;
  return std::nullopt;
}

/// Every labeled multigraph within the bounds, as multisets of unordered
/// vertex pairs with the smaller endpoint on side 0.
struct GraphEnumeration {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 4;
  bool allow_loops = true;
  bool allow_parallel = true;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t n = 0; n <= max_vertices; ++n) {
      std::vector<std::pair<VertexId, VertexId>> slots;
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u; v < n; ++v) {
          if (u != v || allow_loops) slots.emplace_back(u, v);
        }
      }
      std::vector<std::pair<VertexId, VertexId>> chosen;
      for (std::size_t m = 0; m <= max_edges; ++m) {
        choose(n, slots, 0, m, chosen, fn);
      }
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for_each([&](const Graph&) { ++c; });
    return c;
  }

 private:
  template <typename Fn>
  void choose(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& slots,
              std::size_t from, std::size_t remaining,
              std::vector<std::pair<VertexId, VertexId>>& chosen, Fn& fn) const {
    if (remaining == 0) {
      fn(Graph(n, chosen));
      return;
    }
    for (std::size_t i = from; i < slots.size(); ++i) {
      chosen.push_back(slots[i]);
      choose(n, slots, allow_parallel ? i : i + 1, remaining - 1, chosen, fn);
      chosen.pop_back();
    }
  }
};

/// Reproducible generator: std::mt19937_64 seeded with `seed`, every draw
/// reduced as `next() % bound`. Graphs are drawn as follows.
///   1. Candidate slots are the unordered pairs {u, v}, u <= v, in
///      lexicographic order, loops only when allowed.
///   2. Each edge picks slot index next() % (#slots); without parallels the
///      picked slot is removed from the candidate list.
///   3. A draw next() % 2 == 1 swaps the edge's sides.
///   4. After all edges, each edge draws beta(side 0) then beta(side 1),
///      with next() % 2 == 0 meaning +.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Sign sign() { return below(2) == 0 ? Sign::Plus : Sign::Minus; }

 private:
  std::mt19937_64 engine_;
};

inline Graph random_graph(SeededRng& rng, std::size_t vertex_count, std::size_t edge_count,
                          bool allow_loops, bool allow_parallel) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId u = 0; u < vertex_count; ++u) {
    for (VertexId v = u; v < vertex_count; ++v) {
      if (u != v || allow_loops) slots.emplace_back(u, v);
    }
  }
  if (edge_count > 0 && slots.empty()) {
    throw std::invalid_argument("no vertex pair available for edges");
  }
  if (!allow_parallel && edge_count > slots.size()) {
    throw std::invalid_argument("more edges than distinct vertex pairs");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    const auto k = static_cast<std::size_t>(rng.below(slots.size()));
    auto pair = slots[k];
    if (!allow_parallel) slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(k));
    if (rng.below(2) == 1) std::swap(pair.first, pair.second);
    edges.push_back(pair);
  }
  return Graph(vertex_count, edges);
}

inline BidirectedGraph random_bidirected(std::size_t vertex_count, std::size_t edge_count,
                                         bool allow_loops, bool allow_parallel,
                                         std::uint64_t seed) {
  SeededRng rng(seed);
  Graph g = random_graph(rng, vertex_count, edge_count, allow_loops, allow_parallel);
  std::vector<BidirectedGraph::EndSigns> beta(edge_count);
  for (auto& ends : beta) {
    ends[0] = rng.sign();
    ends[1] = rng.sign();
  }
  return BidirectedGraph(std::move(g), std::move(beta));
}

/// Same graph draw as random_bidirected, then n signs per edge in order.
inline DnSignedGraph random_dn(std::size_t n, std::size_t vertex_count, std::size_t edge_count,
                               bool allow_loops, bool allow_parallel, std::uint64_t seed) {
  SeededRng rng(seed);
  Graph g = random_graph(rng, vertex_count, edge_count, allow_loops, allow_parallel);
  std::vector<Sign> flat(n * edge_count);
  for (auto& x : flat) x = rng.sign();
  return DnSignedGraph(n, std::move(g), std::move(flat));
}

}  // namespace bidi::oracle

#endif  // BIDI_ORACLE_HPP
