// Copyright 2026 The pafind Authors
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

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "pafind/errors.hpp"
#include "pafind/generator.hpp"
#include "pafind/oracle.hpp"

using namespace pafind;

namespace {

// Vertex 1 and 2 are pure self-loops; vertex 3 points at 1, 1, 2.
PAGraph parallel_edge_graph() {
  return PAGraph::from_left_choices(3, 3, {1, 1, 1, 2, 2, 2, 1, 1, 2});
}

}  // namespace

TEST_CASE("handles are a permutation that hides indices") {
  const PAGraph g = generate_sequential(1000, 2, 3);
  const LocalOracle a(g, 10);
  const LocalOracle b(g, 11);
  std::set<VertexId> seen;
  int moved = 0;
  for (std::uint32_t h = 0; h < 1000; ++h) {
    seen.insert(a.resolve(Handle{h}));
    CHECK(a.handle_of(a.resolve(Handle{h})) == Handle{h});
    moved += a.resolve(Handle{h}) != b.resolve(Handle{h});
  }
  CHECK(seen.size() == 1000);
  CHECK(moved > 900);
  CHECK(a.is_target(a.handle_of(1)));
  CHECK_FALSE(a.is_target(a.handle_of(2)));
  CHECK_THROWS_AS(a.resolve(Handle{1000}), HandleError);
  CHECK_THROWS_AS(a.is_target(Handle{5000}), HandleError);
}

TEST_CASE("sorted neighbor lists") {
  const PAGraph g = generate_sequential(2000, 4, 8);
  const LocalOracle oracle(g, 1);
  OracleSession session(oracle);
  for (VertexId v : {1u, 2u, 50u, 1999u}) {
    const Handle h = oracle.handle_of(v);
    const auto ranked = session.neighborhood(h);
    std::set<VertexId> expected;
    for (VertexId u : g.left_choices(v)) {
      if (u != v) expected.insert(u);
    }
    for (VertexId u : g.right_neighbors(v)) expected.insert(u);
    std::set<VertexId> got;
    for (std::size_t k = 0; k < ranked.size(); ++k) {
      got.insert(oracle.resolve(ranked[k].handle));
      CHECK(ranked[k].degree == g.degree(oracle.resolve(ranked[k].handle)));
      if (k > 0) {
        const bool ordered =
            ranked[k - 1].degree > ranked[k].degree ||
            (ranked[k - 1].degree == ranked[k].degree &&
             ranked[k - 1].handle < ranked[k].handle);
        CHECK(ordered);
      }
    }
    CHECK(got == expected);
    CHECK(got.size() == ranked.size());
  }
}

TEST_CASE("query costs") {
  const PAGraph g = generate_sequential(500, 4, 2);
  const LocalOracle oracle(g, 3);
  OracleSession session(oracle);
  Rng rng(4);
  const Handle s = session.start(rng);
  CHECK(session.cost() == 0);
  session.is_target(s);
  CHECK(session.cost() == 0);
  session.degree(s);
  CHECK(session.cost() == 1);
  const auto top = session.top_k_neighbors(s, 2);
  CHECK(session.cost() == 2);
  session.random_neighbor(s, rng);
  CHECK(session.cost() == 3);
  session.random_neighbor_above(s, 5.0, rng);
  CHECK(session.cost() == 4);
  session.neighborhood(s);
  CHECK(session.cost() == 5);
  CHECK(top.size() <= 2);
}

TEST_CASE("top_k excludes the given handle and respects k") {
  const PAGraph g = generate_sequential(3000, 6, 5);
  const LocalOracle oracle(g, 9);
  OracleSession session(oracle, true);
  const Handle v = oracle.handle_of(1);
  const auto all = session.neighborhood(v);
  REQUIRE(all.size() >= 4);
  const auto top = session.top_k_neighbors(v, 3, all[0].handle);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == all[1].handle);
  CHECK(top[1] == all[2].handle);
  CHECK(top[2] == all[3].handle);
  CHECK(session.contract_violations() == 0);
  session.top_k_neighbors(v, 7);
  CHECK(session.contract_violations() == 1);
  CHECK_THROWS_AS(session.top_k_neighbors(v, 0), ParameterError);
}

TEST_CASE("random_neighbor weights parallel edges") {
  const PAGraph g = parallel_edge_graph();
  CHECK(g.degree(3) == 3);
  const LocalOracle oracle(g, 1);
  OracleSession session(oracle);
  Rng rng(77);
  const int draws = 60000;
  int to_one = 0;
  for (int k = 0; k < draws; ++k) {
    to_one += oracle.resolve(session.random_neighbor(oracle.handle_of(3), rng)) == 1;
  }
  const double p = 2.0 / 3.0;
  CHECK(std::abs(static_cast<double>(to_one) / draws - p) <
        4 * std::sqrt(p * (1 - p) / draws));
  // The self-loop vertex only ever sees itself or 3.
  for (int k = 0; k < 1000; ++k) {
    const VertexId u =
        oracle.resolve(session.random_neighbor(oracle.handle_of(2), rng));
    CHECK((u == 2 || u == 3));
  }
}

TEST_CASE("random_neighbor_above restricts to qualifying neighbors") {
  const PAGraph g = generate_sequential(2000, 3, 12);
  const LocalOracle oracle(g, 2);
  OracleSession session(oracle);
  Rng rng(5);
  const Handle v = oracle.handle_of(5);
  const double threshold = 20.0;
  bool any = false;
  for (int k = 0; k < 200; ++k) {
    const auto u = session.random_neighbor_above(v, threshold, rng);
    if (!u) continue;
    any = true;
    CHECK(g.degree(oracle.resolve(*u)) >= threshold);
  }
  const auto ranked = session.neighborhood(v);
  const bool qualifying = std::any_of(ranked.begin(), ranked.end(), [&](auto& r) {
    return r.degree >= threshold;
  });
  CHECK(any == qualifying);
  CHECK_FALSE(session.random_neighbor_above(v, 1e12, rng).has_value());
}

TEST_CASE("stationary weights sum to one") {
  const PAGraph g = generate_sequential(300, 2, 1);
  const LocalOracle oracle(g, 1);
  double total = 0.0;
  for (std::uint32_t h = 0; h < 300; ++h) total += oracle.stationary_weight(Handle{h});
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("audit transcript") {
  const PAGraph g = generate_sequential(400, 2, 1);
  const LocalOracle oracle(g, 1);
  OracleSession session(oracle, true);
  Rng rng(1);
  const Handle s = session.start(rng);
  const Handle u = session.random_neighbor(s, rng);
  CHECK(session.produced_all(std::vector<Handle>{s, u}));
  Handle stranger{0};
  while (stranger == s || stranger == u) ++stranger.value;
  CHECK_FALSE(session.produced_all(std::vector<Handle>{stranger}));
  session.degree(stranger);
  CHECK(session.locality_violations() == 1);
  std::ostringstream out;
  session.write_transcript(out);
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);

  OracleSession plain(oracle);
  CHECK_THROWS_AS(plain.produced_all(std::vector<Handle>{s}), ConfigError);
}
