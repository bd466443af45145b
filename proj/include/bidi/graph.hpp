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

#ifndef BIDI_GRAPH_HPP
#define BIDI_GRAPH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bidi {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One end of an edge. Side 0 is the tail of the edge's canonical
/// orientation and side 1 its head, so the two ends of a loop stay distinct.
struct HalfEdge {
  EdgeId edge = 0;
  std::uint8_t side = 0;

  constexpr HalfEdge opposite() const noexcept {
    return {edge, static_cast<std::uint8_t>(side ^ 1U)};
  }

  friend constexpr auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

/// Undirected multigraph with loops and parallel edges.
///
/// Vertices are 0..vertex_count()-1 and edges 0..edge_count()-1 in
/// insertion order. Edge e joins end(e, 0) to end(e, 1). Instances are
/// immutable once built.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t vertex_count,
        std::span<const std::pair<VertexId, VertexId>> endpoint_pairs)
      : vertex_count_(vertex_count), incidence_(vertex_count) {
    ends_.reserve(endpoint_pairs.size());
    for (std::size_t i = 0; i < endpoint_pairs.size(); ++i) {
      auto [u, v] = endpoint_pairs[i];
      if (u >= vertex_count || v >= vertex_count) {
        throw std::out_of_range("edge " + std::to_string(i) + " endpoint (" +
                                std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for " +
                                std::to_string(vertex_count) + " vertices");
      }
      const auto e = static_cast<EdgeId>(i);
      ends_.push_back({u, v});
      incidence_[u].push_back({e, 0});
      incidence_[v].push_back({e, 1});
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return ends_.size(); }

  bool has_edge(EdgeId e) const noexcept { return e < ends_.size(); }
  bool has_vertex(VertexId v) const noexcept { return v < vertex_count_; }

  VertexId end(EdgeId e, std::uint8_t side) const {
    return ends_.at(e).at(side);
  }
  VertexId end(HalfEdge h) const { return end(h.edge, h.side); }

  const std::array<VertexId, 2>& endpoints(EdgeId e) const { return ends_.at(e); }

  bool is_loop(EdgeId e) const {
    const auto& p = ends_.at(e);
    return p[0] == p[1];
  }

  /// Half-edges attached to v in (edge id, side) order; a loop at v
  /// contributes both of its ends.
  std::span<const HalfEdge> incident(VertexId v) const {
    if (!has_vertex(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return incidence_[v];
  }

  std::size_t degree(VertexId v) const { return incident(v).size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.ends_ == b.ends_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::array<VertexId, 2>> ends_;
  std::vector<std::vector<HalfEdge>> incidence_;
};

inline Graph build_graph(std::size_t vertex_count,
                         std::span<const std::pair<VertexId, VertexId>> endpoint_pairs) {
  return Graph(vertex_count, endpoint_pairs);
}

inline Graph build_graph(std::size_t vertex_count,
                         std::initializer_list<std::pair<VertexId, VertexId>> endpoint_pairs) {
  return Graph(vertex_count, std::span(endpoint_pairs.begin(), endpoint_pairs.size()));
}

inline std::vector<HalfEdge> incident_half_edges(const Graph& g, VertexId v) {
  auto span = g.incident(v);
  return {span.begin(), span.end()};
}

}  // namespace bidi

#endif  // BIDI_GRAPH_HPP
