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

#ifndef BIDI_CONVERT_HPP
#define BIDI_CONVERT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "bidi/structures.hpp"

namespace bidi {

/// The label (a, b) of an edge becomes end signs a at side 0 and b at side 1.
inline BidirectedGraph di2_to_bidirected(const Di2SignedGraph& d) {
  const auto labels = d.labels();
  return BidirectedGraph(d.graph(),
                         std::vector<BidirectedGraph::EndSigns>(labels.begin(), labels.end()));
}

/// Inverse of di2_to_bidirected.
inline Di2SignedGraph bidirected_to_di2(const BidirectedGraph& b) {
  const auto ends = b.all_ends();
  return Di2SignedGraph(b.graph(), std::vector<Di2SignedGraph::Label>(ends.begin(), ends.end()));
}

/// sigma(e) = -beta(e,0) * beta(e,1).
inline SignedGraph associated_signed(const BidirectedGraph& b) {
  std::vector<Sign> sigma;
  sigma.reserve(b.graph().edge_count());
  for (const auto& ends : b.all_ends()) sigma.push_back(-(ends[0] * ends[1]));
  return SignedGraph(b.graph(), std::move(sigma));
}

inline SignedGraph negate_signed(const SignedGraph& s) {
  std::vector<Sign> sigma;
  sigma.reserve(s.graph().edge_count());
  for (Sign x : s.signs()) sigma.push_back(-x);
  return SignedGraph(s.graph(), std::move(sigma));
}

/// Negative of the associated signed graph: each edge gets a1 * a2.
inline SignedGraph induced_signed(const Di2SignedGraph& d) {
  return negate_signed(associated_signed(di2_to_bidirected(d)));
}

/// Splits an n-tuple labeling (a1..am [c] bm..b1) into m bidirections
/// (ai at side 0, bi at side 1) and, for odd n, the signed graph of centers.
struct DnDecomposition {
  std::vector<BidirectedGraph> bidirections;
  std::optional<SignedGraph> center;

  std::size_t n() const noexcept { return 2 * bidirections.size() + (center ? 1 : 0); }

  friend bool operator==(const DnDecomposition&, const DnDecomposition&) = default;
};

inline DnDecomposition decompose_dn(const DnSignedGraph& d) {
  const Graph& g = d.graph();
  const std::size_t n = d.n();
  const std::size_t m = n / 2;
  const std::size_t edges = g.edge_count();

  DnDecomposition out;
  out.bidirections.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<BidirectedGraph::EndSigns> beta;
    beta.reserve(edges);
    for (EdgeId e = 0; e < edges; ++e) {
      auto t = d.label(e);
      beta.push_back({t[i], t[n - 1 - i]});
    }
    out.bidirections.emplace_back(g, std::move(beta));
  }
  if (n % 2 == 1) {
    std::vector<Sign> c;
    c.reserve(edges);
    for (EdgeId e = 0; e < edges; ++e) c.push_back(d.label(e)[m]);
    out.center.emplace(g, std::move(c));
  }
  return out;
}

/// Inverse of decompose_dn. Throws std::invalid_argument when the components
/// are not all over the same graph, or when there are no components at all.
inline DnSignedGraph compose_dn(const DnDecomposition& dec) {
  const Graph* g = nullptr;
  if (!dec.bidirections.empty()) {
    g = &dec.bidirections.front().graph();
  } else if (dec.center) {
    g = &dec.center->graph();
  } else {
    throw std::invalid_argument("decomposition has no components");
  }
  for (const auto& b : dec.bidirections) {
    if (!(b.graph() == *g)) throw std::invalid_argument("bidirections over different graphs");
  }
  if (dec.center && !(dec.center->graph() == *g)) {
    throw std::invalid_argument("center signature over a different graph");
  }

  const std::size_t n = dec.n();
  const std::size_t m = dec.bidirections.size();
  std::vector<Sign> flat(n * g->edge_count());
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    Sign* t = flat.data() + std::size_t{e} * n;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& ends = dec.bidirections[i].ends(e);
      t[i] = ends[0];
      t[n - 1 - i] = ends[1];
    }
    if (dec.center) t[m] = dec.center->sigma(e);
  }
  return DnSignedGraph(n, *g, std::move(flat));
}

}  // namespace bidi

#endif  // BIDI_CONVERT_HPP
