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

#ifndef BIDI_UNIFORM_HPP
#define BIDI_UNIFORM_HPP

// Sources, sinks and reorientation of bidirected graphs.
//
// A bidirected graph can be reoriented into one where every vertex is a
// source or a sink exactly when its associated signed graph is
// antibalanced. uniformize() decides this and returns either the
// reorientation (with the resulting uniform bidirection and its
// sink/source marking) or a cycle that breaks antibalance.

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bidi/balance.hpp"
#include "bidi/convert.hpp"
#include "bidi/structures.hpp"

namespace bidi {

enum class VertexRole { Source, Sink, Isolated, Mixed };

inline const char* to_string(VertexRole r) noexcept {
  switch (r) {
    case VertexRole::Source: return "source";
    case VertexRole::Sink: return "sink";
    case VertexRole::Isolated: return "isolated";
    case VertexRole::Mixed: return "mixed";
  }
  return "?";
}

/// Sink if every end at v is +, source if every end is -. Both ends of a
/// loop count.
inline VertexRole vertex_role(const BidirectedGraph& b, VertexId v) {
  auto ends = b.graph().incident(v);
  if (ends.empty()) return VertexRole::Isolated;
  const Sign first = b.beta(ends.front());
  for (HalfEdge h : ends.subspan(1)) {
    if (b.beta(h) != first) return VertexRole::Mixed;
  }
  return first == Sign::Plus ? VertexRole::Sink : VertexRole::Source;
}

inline bool is_uniform(const BidirectedGraph& b) {
  for (VertexId v = 0; v < b.graph().vertex_count(); ++v) {
    if (vertex_role(b, v) == VertexRole::Mixed) return false;
  }
  return true;
}

/// Negates both end signs of every edge in `edges`. Repeated ids count once.
inline BidirectedGraph reorient(const BidirectedGraph& b, std::span<const EdgeId> edges) {
  const Graph& g = b.graph();
  std::vector<bool> flip(g.edge_count(), false);
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) throw std::out_of_range("unknown edge id " + std::to_string(e));
    flip[e] = true;
  }
  const auto old = b.all_ends();
  std::vector<BidirectedGraph::EndSigns> beta(old.begin(), old.end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (flip[e]) beta[e] = {-beta[e][0], -beta[e][1]};
  }
  return BidirectedGraph(g, std::move(beta));
}

struct Uniformizable {
  /// Sorted edge ids to reorient.
  std::vector<EdgeId> reorient_set;
  BidirectedGraph uniform;
  /// + on sinks and isolated vertices, - on sources.
  VertexSignature signature;
};

struct NotUniformizable {
  /// Cycle of the associated signed graph with sign != (-1)^length.
  CycleWitness witness;
};

using UniformizationResult = std::variant<Uniformizable, NotUniformizable>;

inline bool holds(const UniformizationResult& r) noexcept {
  return std::holds_alternative<Uniformizable>(r);
}

inline UniformizationResult uniformize(const BidirectedGraph& b) {
  const Graph& g = b.graph();
  auto verdict = is_antibalanced(associated_signed(b));
  if (auto* bad = std::get_if<Unbalanced>(&verdict)) {
    return NotUniformizable{std::move(bad->witness)};
  }
  VertexSignature mu = std::move(std::get<Balanced>(verdict).signature);

  // Every end at u takes mu(u). Since sigma(uv) = -mu(u)mu(v), each edge
  // keeps both ends or flips both, so comparing side 0 suffices.
  std::vector<BidirectedGraph::EndSigns> beta;
  beta.reserve(g.edge_count());
  std::vector<EdgeId> flipped;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& p = g.endpoints(e);
    beta.push_back({mu[p[0]], mu[p[1]]});
    if (b.beta(e, 0) != mu[p[0]]) flipped.push_back(e);
  }
  return Uniformizable{std::move(flipped), BidirectedGraph(g, std::move(beta)), std::move(mu)};
}

}  // namespace bidi

#endif  // BIDI_UNIFORM_HPP
