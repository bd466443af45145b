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

#ifndef BIDI_BALANCE_HPP
#define BIDI_BALANCE_HPP

// Balance and antibalance tests for signed graphs. Both return a
// certificate: a vertex signature when the property holds, a violating
// cycle when it does not.

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

#include "bidi/convert.hpp"
#include "bidi/structures.hpp"

namespace bidi {

struct VertexSignature {
  std::vector<Sign> mu;

  Sign operator[](VertexId v) const { return mu.at(v); }
  std::size_t size() const noexcept { return mu.size(); }

  friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
};

/// V1 holds the + vertices of a signature, V2 the - vertices. Both sorted.
struct Bipartition {
  std::vector<VertexId> v1;
  std::vector<VertexId> v2;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct Balanced {
  VertexSignature signature;
};

struct Unbalanced {
  CycleWitness witness;
};

using BalanceResult = std::variant<Balanced, Unbalanced>;

inline bool holds(const BalanceResult& r) noexcept {
  return std::holds_alternative<Balanced>(r);
}

enum class SignatureMode { Balance, Antibalance };

/// Product of the edge signs along c. Throws std::invalid_argument when
/// c.edges is not a cycle of s.
inline Sign cycle_sign(const SignedGraph& s, const CycleWitness& c) {
  if (cycle_vertices(s.graph(), c.edges).empty()) {
    throw std::invalid_argument("edge list is not a cycle");
  }
  Sign p = Sign::Plus;
  for (EdgeId e : c.edges) p *= s.sigma(e);
  return p;
}

/// Checks sigma(uv) = mu(u) mu(v) on every edge (balance mode), or
/// sigma(uv) = -mu(u) mu(v) (antibalance mode).
inline bool verify_signature(const SignedGraph& s, const VertexSignature& mu, SignatureMode mode) {
  const Graph& g = s.graph();
  if (mu.size() != g.vertex_count()) {
    throw std::invalid_argument("signature size does not match vertex count");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& p = g.endpoints(e);
    Sign want = mu[p[0]] * mu[p[1]];
    if (mode == SignatureMode::Antibalance) want = -want;
    if (s.sigma(e) != want) return false;
  }
  return true;
}

/// Balance test by spanning-forest labeling.
///
/// Components are rooted at their lowest vertex with mu = + and searched
/// breadth-first, scanning incident half-edges in (edge id, side) order.
/// Tree edges fix mu(v) = mu(u) sigma(uv). The lowest-id non-tree edge that
/// disagrees with mu closes the reported cycle with the tree paths to the
/// lowest common ancestor of its ends; a negative loop is its own witness.
inline BalanceResult is_balanced(const SignedGraph& s) {
  const Graph& g = s.graph();
  const std::size_t n = g.vertex_count();
  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();

  std::vector<Sign> mu(n, Sign::Plus);
  std::vector<bool> visited(n, false);
  std::vector<EdgeId> parent_edge(n, kNone);
  std::vector<VertexId> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> tree_edge(g.edge_count(), false);

  std::deque<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (HalfEdge h : g.incident(u)) {
        const VertexId v = g.end(h.opposite());
        if (visited[v]) continue;
        visited[v] = true;
        mu[v] = mu[u] * s.sigma(h.edge);
        parent[v] = u;
        parent_edge[v] = h.edge;
        depth[v] = depth[u] + 1;
        tree_edge[h.edge] = true;
        queue.push_back(v);
      }
    }
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    const VertexId u = g.end(e, 0);
    const VertexId v = g.end(e, 1);
    if (s.sigma(e) == mu[u] * mu[v]) continue;

    // Cycle: u -e-> v, up from v to the ancestor, down to u.
    std::vector<EdgeId> up_from_v;
    std::vector<EdgeId> up_from_u;
    VertexId a = u;
    VertexId b = v;
    while (depth[a] > depth[b]) {
      up_from_u.push_back(parent_edge[a]);
      a = parent[a];
    }
    while (depth[b] > depth[a]) {
      up_from_v.push_back(parent_edge[b]);
      b = parent[b];
    }
    while (a != b) {
      up_from_u.push_back(parent_edge[a]);
      a = parent[a];
      up_from_v.push_back(parent_edge[b]);
      b = parent[b];
    }
    CycleWitness w;
    w.edges.push_back(e);
    w.edges.insert(w.edges.end(), up_from_v.begin(), up_from_v.end());
    w.edges.insert(w.edges.end(), up_from_u.rbegin(), up_from_u.rend());
    w.sign = Sign::Plus;
    for (EdgeId x : w.edges) w.sign *= s.sigma(x);
    return Unbalanced{std::move(w)};
  }
  return Balanced{VertexSignature{std::move(mu)}};
}

/// Antibalance test: balance of the negated graph. On success the signature
/// satisfies sigma(uv) = -mu(u) mu(v); otherwise the witness is a cycle whose
/// sign in s differs from (-1)^length.
inline BalanceResult is_antibalanced(const SignedGraph& s) {
  auto r = is_balanced(negate_signed(s));
  if (auto* u = std::get_if<Unbalanced>(&r)) {
    Sign p = Sign::Plus;
    for (EdgeId e : u->witness.edges) p *= s.sigma(e);
    u->witness.sign = p;
  }
  return r;
}

inline Bipartition signature_to_bipartition(const VertexSignature& mu) {
  Bipartition out;
  for (VertexId v = 0; v < mu.size(); ++v) {
    (mu[v] == Sign::Plus ? out.v1 : out.v2).push_back(v);
  }
  return out;
}

}  // namespace bidi

#endif  // BIDI_BALANCE_HPP
