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

#ifndef BIDI_STRUCTURES_HPP
#define BIDI_STRUCTURES_HPP

// Sign overlays on a Graph: one sign per half-edge (bidirection), one per
// edge (signature), and orientation-sensitive 2- and n-tuples per edge.

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bidi/graph.hpp"
#include "bidi/sign.hpp"

namespace bidi {

namespace detail {

inline void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                " entries, got " + std::to_string(got));
  }
}

inline void require_edge(const Graph& g, EdgeId e) {
  if (!g.has_edge(e)) throw std::out_of_range("unknown edge id " + std::to_string(e));
}

}  // namespace detail

/// A graph with an independent sign on each end of each edge.
///
/// beta(h) = + draws an arrow at h pointing into its vertex, - one pointing
/// out of it.
class BidirectedGraph {
 public:
  using EndSigns = std::array<Sign, 2>;

  BidirectedGraph() = default;
  BidirectedGraph(Graph graph, std::vector<EndSigns> beta)
      : graph_(std::move(graph)), beta_(std::move(beta)) {
    detail::require_size(beta_.size(), graph_.edge_count(), "bidirection");
  }

  const Graph& graph() const noexcept { return graph_; }
  Sign beta(HalfEdge h) const { return beta_.at(h.edge).at(h.side); }
  Sign beta(EdgeId e, std::uint8_t side) const { return beta_.at(e).at(side); }
  const EndSigns& ends(EdgeId e) const { return beta_.at(e); }
  std::span<const EndSigns> all_ends() const noexcept { return beta_; }

  friend bool operator==(const BidirectedGraph&, const BidirectedGraph&) = default;

 private:
  Graph graph_;
  std::vector<EndSigns> beta_;
};

/// A graph with a sign on each edge.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(Graph graph, std::vector<Sign> sigma)
      : graph_(std::move(graph)), sigma_(std::move(sigma)) {
    detail::require_size(sigma_.size(), graph_.edge_count(), "edge signature");
  }

  const Graph& graph() const noexcept { return graph_; }
  Sign sigma(EdgeId e) const { return sigma_.at(e); }
  std::span<const Sign> signs() const noexcept { return sigma_; }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Graph graph_;
  std::vector<Sign> sigma_;
};

/// A graph whose edges carry an ordered sign pair (a, b) read along the
/// canonical orientation; read backwards it is (b, a).
class Di2SignedGraph {
 public:
  using Label = std::array<Sign, 2>;

  Di2SignedGraph() = default;
  Di2SignedGraph(Graph graph, std::vector<Label> labels)
      : graph_(std::move(graph)), labels_(std::move(labels)) {
    detail::require_size(labels_.size(), graph_.edge_count(), "2-tuple labeling");
  }

  const Graph& graph() const noexcept { return graph_; }
  const Label& label(EdgeId e) const { return labels_.at(e); }
  std::span<const Label> labels() const noexcept { return labels_; }

  friend bool operator==(const Di2SignedGraph&, const Di2SignedGraph&) = default;

 private:
  Graph graph_;
  std::vector<Label> labels_;
};

/// A graph whose edges carry a sign n-tuple read along the canonical
/// orientation; read backwards the tuple is reversed.
class DnSignedGraph {
 public:
  DnSignedGraph() = default;

  /// `flat_labels` holds edge 0's tuple, then edge 1's, and so on.
  DnSignedGraph(std::size_t n, Graph graph, std::vector<Sign> flat_labels)
      : n_(n), graph_(std::move(graph)), labels_(std::move(flat_labels)) {
    if (n_ == 0) throw std::invalid_argument("tuple length n must be positive");
    detail::require_size(labels_.size(), n_ * graph_.edge_count(), "n-tuple labeling");
  }

  DnSignedGraph(std::size_t n, Graph graph, const std::vector<std::vector<Sign>>& labels)
      : n_(n), graph_(std::move(graph)) {
    if (n_ == 0) throw std::invalid_argument("tuple length n must be positive");
    detail::require_size(labels.size(), graph_.edge_count(), "n-tuple labeling");
    labels_.reserve(n_ * labels.size());
    for (const auto& t : labels) {
      detail::require_size(t.size(), n_, "n-tuple");
      labels_.insert(labels_.end(), t.begin(), t.end());
    }
  }

  std::size_t n() const noexcept { return n_; }
  const Graph& graph() const noexcept { return graph_; }

  /// Stored tuple of e, relative to the canonical orientation.
  std::span<const Sign> label(EdgeId e) const {
    detail::require_edge(graph_, e);
    return std::span<const Sign>(labels_).subspan(std::size_t{e} * n_, n_);
  }

  friend bool operator==(const DnSignedGraph&, const DnSignedGraph&) = default;

 private:
  std::size_t n_ = 1;
  Graph graph_;
  std::vector<Sign> labels_;
};

/// Label of e read starting from the given side.
inline std::vector<Sign> oriented_label(const DnSignedGraph& g, EdgeId e, std::uint8_t from_side) {
  if (from_side > 1) throw std::invalid_argument("side must be 0 or 1");
  auto stored = g.label(e);
  std::vector<Sign> out(stored.begin(), stored.end());
  if (from_side == 1) std::ranges::reverse(out);
  return out;
}

inline Di2SignedGraph::Label oriented_label(const Di2SignedGraph& g, EdgeId e,
                                            std::uint8_t from_side) {
  if (from_side > 1) throw std::invalid_argument("side must be 0 or 1");
  detail::require_edge(g.graph(), e);
  auto l = g.label(e);
  return from_side == 0 ? l : Di2SignedGraph::Label{l[1], l[0]};
}

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) noexcept { return p == Parity::Even ? "even" : "odd"; }

/// A cycle given by its edges in walk order, with the product of its edge
/// signs in some signed graph over the same underlying graph.
struct CycleWitness {
  std::vector<EdgeId> edges;
  Sign sign = Sign::Plus;

  std::size_t length() const noexcept { return edges.size(); }
  Parity parity() const noexcept { return edges.size() % 2 == 0 ? Parity::Even : Parity::Odd; }

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Vertex sequence of the closed walk traced by `edges`, or an empty vector
/// if the edges do not form a cycle (a closed walk repeating neither an edge
/// nor a vertex). A single loop and a pair of parallel edges are cycles.
inline std::vector<VertexId> cycle_vertices(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return {};
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) return {};
  }
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::ranges::sort(sorted);
  if (std::ranges::adjacent_find(sorted) != sorted.end()) return {};

  for (std::uint8_t start_side : {0, 1}) {
    const VertexId start = g.end(edges[0], start_side);
    std::vector<VertexId> walk;
    walk.reserve(edges.size());
    VertexId cur = start;
    bool ok = true;
    for (EdgeId e : edges) {
      const auto& p = g.endpoints(e);
      if (p[0] == cur) {
        walk.push_back(cur);
        cur = p[1];
      } else if (p[1] == cur) {
        walk.push_back(cur);
        cur = p[0];
      } else {
        ok = false;
        break;
      }
    }
    if (!ok || cur != start) continue;
    std::vector<VertexId> seen = walk;
    std::ranges::sort(seen);
    if (std::ranges::adjacent_find(seen) != seen.end()) continue;
    return walk;
  }
  return {};
}

}  // namespace bidi

#endif  // BIDI_STRUCTURES_HPP
