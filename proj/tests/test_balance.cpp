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

#include <catch_amalgamated.hpp>

#include <algorithm>

#include "bidi/balance.hpp"
#include "bidi/oracle.hpp"
#include "test_support.hpp"

using namespace bidi;
using bidi::test::M;
using bidi::test::P;

namespace {

bool same_edge_set(std::vector<EdgeId> a, std::vector<EdgeId> b) {
  std::ranges::sort(a);
  std::ranges::sort(b);
  return a == b;
}

// Soundness of whatever certificate came back.
void check_certificate(const SignedGraph& s, const BalanceResult& r, SignatureMode mode) {
  if (const auto* ok = std::get_if<Balanced>(&r)) {
    REQUIRE(ok->signature.size() == s.graph().vertex_count());
    CHECK(verify_signature(s, ok->signature, mode));
  } else {
    const CycleWitness& w = std::get<Unbalanced>(r).witness;
    REQUIRE_FALSE(cycle_vertices(s.graph(), w.edges).empty());
    CHECK(cycle_sign(s, w) == w.sign);
    const Sign allowed = mode == SignatureMode::Balance ? P : parity_sign(w.length());
    CHECK(w.sign != allowed);
  }
}

}  // namespace

TEST_CASE("cycle_sign", "[balance]") {
  SignedGraph tri(test::triangle(), {P, P, M});
  CHECK(cycle_sign(tri, {{0, 1, 2}}) == M);

  SignedGraph loop(build_graph(1, {{0, 0}}), {M});
  CHECK(cycle_sign(loop, {{0}}) == M);

  SignedGraph digon(build_graph(2, {{0, 1}, {1, 0}}), {P, M});
  CHECK(cycle_sign(digon, {{0, 1}}) == M);

  CHECK_THROWS_AS(cycle_sign(tri, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_sign(tri, {{}}), std::invalid_argument);
}

TEST_CASE("is_balanced examples", "[balance]") {
  SECTION("all-positive triangle") {
    auto r = is_balanced(test::all_signs(test::triangle(), P));
    REQUIRE(holds(r));
    CHECK(std::get<Balanced>(r).signature.mu == std::vector<Sign>{P, P, P});
  }
  SECTION("one negative edge") {
    SignedGraph s(test::triangle(), {P, P, M});
    auto r = is_balanced(s);
    REQUIRE_FALSE(holds(r));
    const auto& w = std::get<Unbalanced>(r).witness;
    CHECK(same_edge_set(w.edges, {0, 1, 2}));
    CHECK(w.edges == std::vector<EdgeId>{1, 2, 0});
    CHECK(w.sign == M);
    CHECK(w.parity() == Parity::Odd);
  }
  SECTION("negative loop is its own witness") {
    SignedGraph s(build_graph(2, {{0, 1}, {1, 1}}), {M, M});
    auto r = is_balanced(s);
    REQUIRE_FALSE(holds(r));
    CHECK(std::get<Unbalanced>(r).witness.edges == std::vector<EdgeId>{1});
  }
  SECTION("positive loop never violates") {
    SignedGraph s(build_graph(2, {{0, 1}, {1, 1}}), {M, P});
    auto r = is_balanced(s);
    REQUIRE(holds(r));
    CHECK(std::get<Balanced>(r).signature.mu == std::vector<Sign>{P, M});
  }
  SECTION("negative digon") {
    SignedGraph s(build_graph(2, {{0, 1}, {1, 0}}), {P, M});
    auto r = is_balanced(s);
    REQUIRE_FALSE(holds(r));
    CHECK(same_edge_set(std::get<Unbalanced>(r).witness.edges, {0, 1}));
  }
  SECTION("isolated vertices and several components get + roots") {
    SignedGraph s(build_graph(5, {{1, 2}, {3, 4}}), {M, M});
    auto r = is_balanced(s);
    REQUIRE(holds(r));
    CHECK(std::get<Balanced>(r).signature.mu == std::vector<Sign>{P, P, M, P, M});
  }
  SECTION("empty graph") {
    auto r = is_balanced(SignedGraph(build_graph(0, {}), {}));
    REQUIRE(holds(r));
    CHECK(std::get<Balanced>(r).signature.mu.empty());
  }
}

TEST_CASE("is_antibalanced examples", "[balance]") {
  SECTION("all-negative triangle") {
    auto r = is_antibalanced(test::all_signs(test::triangle(), M));
    REQUIRE(holds(r));
    CHECK(verify_signature(test::all_signs(test::triangle(), M), std::get<Balanced>(r).signature,
                           SignatureMode::Antibalance));
  }
  SECTION("all-positive triangle") {
    auto r = is_antibalanced(test::all_signs(test::triangle(), P));
    REQUIRE_FALSE(holds(r));
    const auto& w = std::get<Unbalanced>(r).witness;
    CHECK(same_edge_set(w.edges, {0, 1, 2}));
    CHECK(w.sign == P);
  }
  SECTION("positive loop") {
    auto r = is_antibalanced(SignedGraph(build_graph(1, {{0, 0}}), {P}));
    REQUIRE_FALSE(holds(r));
    CHECK(std::get<Unbalanced>(r).witness.edges == std::vector<EdgeId>{0});
  }
  SECTION("all-positive even cycle") {
    auto r = is_antibalanced(test::all_signs(test::directed_cycle(4), P));
    REQUIRE(holds(r));
    CHECK(std::get<Balanced>(r).signature.mu == std::vector<Sign>{P, M, P, M});
  }
}

TEST_CASE("signature_to_bipartition", "[balance]") {
  CHECK(signature_to_bipartition({{P, P, P}}) == Bipartition{{0, 1, 2}, {}});
  CHECK(signature_to_bipartition({{P, M, P}}) == Bipartition{{0, 2}, {1}});
  CHECK(signature_to_bipartition({}) == Bipartition{});
}

TEST_CASE("verify_signature", "[balance]") {
  SignedGraph tri = test::all_signs(test::triangle(), P);
  VertexSignature plus{{P, P, P}};
  CHECK(verify_signature(tri, plus, SignatureMode::Balance));
  CHECK_FALSE(verify_signature(tri, plus, SignatureMode::Antibalance));
  CHECK_THROWS_AS(verify_signature(tri, VertexSignature{{P}}, SignatureMode::Balance),
                  std::invalid_argument);

  SignedGraph loops(build_graph(1, {{0, 0}, {0, 0}}), {P, M});
  CHECK_FALSE(verify_signature(loops, {{P}}, SignatureMode::Balance));
  CHECK_FALSE(verify_signature(loops, {{M}}, SignatureMode::Antibalance));
}

TEST_CASE("forests are balanced and antibalanced", "[balance][property]") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 8;
    std::vector<std::pair<VertexId, VertexId>> edges;
    oracle::SeededRng rng(seed);
    for (VertexId v = 1; v < n; ++v) {
      if (rng.below(4) != 0) edges.emplace_back(static_cast<VertexId>(rng.below(v)), v);
    }
    Graph g(n, edges);
    SignedGraph s(g, test::signs_from_mask(g.edge_count(), rng.below(1U << 10)));
    CHECK(holds(is_balanced(s)));
    CHECK(holds(is_antibalanced(s)));
  }
}

TEST_CASE("switching preserves the verdict", "[balance][property]") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 1 + seed % 7;
    BidirectedGraph b = oracle::random_bidirected(n, seed % 11, true, true, seed);
    const Graph& g = b.graph();
    oracle::SeededRng rng(seed + 1000);
    std::vector<Sign> sigma(g.edge_count());
    for (auto& x : sigma) x = rng.sign();
    std::vector<Sign> tau(n);
    for (auto& x : tau) x = rng.sign();
    std::vector<Sign> switched(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      switched[e] = tau[g.end(e, 0)] * sigma[e] * tau[g.end(e, 1)];
    }
    SignedGraph s(g, sigma);
    SignedGraph t(g, switched);
    CHECK(holds(is_balanced(s)) == holds(is_balanced(t)));
    CHECK(holds(is_antibalanced(s)) == holds(is_antibalanced(t)));
    check_certificate(s, is_balanced(s), SignatureMode::Balance);
    check_certificate(t, is_antibalanced(t), SignatureMode::Antibalance);
  }
}

TEST_CASE("verdicts agree with cycle enumeration on every small graph",
          "[balance][exhaustive]") {
  // Every labeled multigraph with <= 5 vertices and <= 6 edges, every signing.
  const oracle::GraphEnumeration graphs{5, 6, true, true};
  std::size_t signings = 0;
  std::size_t mismatches = 0;
  std::size_t bad_certificates = 0;
  graphs.for_each([&](const Graph& g) {
    const auto cycles = oracle::enumerate_cycles(g);
    const std::size_t m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      SignedGraph s(g, test::signs_from_mask(m, mask));
      ++signings;
      const BalanceResult bal = is_balanced(s);
      const BalanceResult anti = is_antibalanced(s);
      if (holds(bal) != oracle::balanced_by_cycles(s, cycles)) ++mismatches;
      if (holds(anti) != oracle::antibalanced_by_cycles(s, cycles)) ++mismatches;
      if (holds(anti) != holds(is_balanced(negate_signed(s)))) ++mismatches;

      if (const auto* ok = std::get_if<Balanced>(&bal)) {
        if (!verify_signature(s, ok->signature, SignatureMode::Balance)) ++bad_certificates;
        // The bipartition separates exactly the negative edges.
        const Bipartition parts = signature_to_bipartition(ok->signature);
        std::vector<bool> in_v1(g.vertex_count(), false);
        for (VertexId v : parts.v1) in_v1[v] = true;
        for (EdgeId e = 0; e < m; ++e) {
          const bool crosses = in_v1[g.end(e, 0)] != in_v1[g.end(e, 1)];
          if (crosses != (s.sigma(e) == M)) ++bad_certificates;
        }
      } else {
        const auto& w = std::get<Unbalanced>(bal).witness;
        if (cycle_vertices(g, w.edges).empty() || cycle_sign(s, w) != M || w.sign != M) {
          ++bad_certificates;
        }
      }
      if (const auto* ok = std::get_if<Balanced>(&anti)) {
        if (!verify_signature(s, ok->signature, SignatureMode::Antibalance)) ++bad_certificates;
      } else {
        const auto& w = std::get<Unbalanced>(anti).witness;
        if (cycle_vertices(g, w.edges).empty() || cycle_sign(s, w) == parity_sign(w.length())) {
          ++bad_certificates;
        }
      }
    }
  });
  INFO("signings checked: " << signings);
  CHECK(signings > 1'000'000);
  CHECK(mismatches == 0);
  CHECK(bad_certificates == 0);
}
