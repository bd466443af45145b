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

#ifndef BIDI_TESTS_TEST_SUPPORT_HPP
#define BIDI_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "bidi/structures.hpp"

namespace bidi::test {

inline constexpr Sign P = Sign::Plus;
inline constexpr Sign M = Sign::Minus;

inline Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph directed_cycle(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline BidirectedGraph uniform_ends(const Graph& g, Sign a, Sign b) {
  return BidirectedGraph(g, std::vector<BidirectedGraph::EndSigns>(g.edge_count(), {a, b}));
}

inline SignedGraph all_signs(const Graph& g, Sign s) {
  return SignedGraph(g, std::vector<Sign>(g.edge_count(), s));
}

/// Signing of g given by the low edge_count bits of mask (bit set = -).
inline std::vector<Sign> signs_from_mask(std::size_t edge_count, std::uint64_t mask) {
  std::vector<Sign> s(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) s[i] = (mask >> i) & 1U ? M : P;
  return s;
}

/// Edge subsets forming a cycle, found by checking every subset: the edges
/// must be connected and meet every touched vertex exactly twice (a loop
/// counts twice). Independent of both the library and the DFS oracle.
inline std::size_t count_cycles_by_subsets(const Graph& g) {
  const std::size_t m = g.edge_count();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<std::size_t> comp(g.vertex_count());
    for (std::size_t v = 0; v < comp.size(); ++v) comp[v] = v;
    auto find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (EdgeId e = 0; e < m; ++e) {
      if (!((mask >> e) & 1U)) continue;
      const auto& p = g.endpoints(e);
      ++deg[p[0]];
      ++deg[p[1]];
      comp[find(p[0])] = find(p[1]);
    }
    bool ok = true;
    std::size_t root = SIZE_MAX;
    for (std::size_t v = 0; v < deg.size() && ok; ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2) ok = false;
      if (root == SIZE_MAX) root = find(v);
      if (find(v) != root) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace bidi::test

#endif  // BIDI_TESTS_TEST_SUPPORT_HPP
