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

#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"

#include "pafind/errors.hpp"
#include "pafind/generator.hpp"
#include "pafind/graph_io.hpp"

using namespace pafind;

TEST_CASE("entry width") {
  CHECK(left_choice_width(255) == 1);
  CHECK(left_choice_width(256) == 2);
  CHECK(left_choice_width(65535) == 2);
  CHECK(left_choice_width(65536) == 4);
}

TEST_CASE("graph files round-trip") {
  for (std::uint32_t n : {1u, 200u, 1000u, 70000u}) {
    CAPTURE(n);
    const PAGraph g = n == 1000 ? generate_continuous(n, 3, 4).graph
                                : generate_sequential(n, n > 1000 ? 1 : 3, 4);
    std::stringstream buffer;
    write_graph(buffer, g);
    CHECK(buffer.str().size() == 25 + g.edge_count() * left_choice_width(n));
    CHECK(buffer.str().substr(0, 4) == "PAG1");
    const PAGraph back = read_graph(buffer);
    CHECK(back == g);
    CHECK(back.seed() == g.seed());
    CHECK(back.construction() == g.construction());
  }
}

TEST_CASE("xi files round-trip") {
  const auto sample = generate_continuous(300, 2, 8);
  std::stringstream buffer;
  write_xi(buffer, sample.realization);
  CHECK(buffer.str().size() == 4 + 8 + 4 + 8 + 8 * 601);
  const auto back = read_xi(buffer);
  CHECK(back.n() == 300);
  CHECK(back.m() == 2);
  CHECK(back.seed() == 8);
  for (std::uint64_t N = 1; N <= 601; ++N) REQUIRE(back.xi(N) == sample.realization.xi(N));
  for (std::uint64_t j = 0; j <= 300; ++j) REQUIRE(back.W(j) == sample.realization.W(j));

  const auto path = std::filesystem::temp_directory_path() / "pafind_io_test.pax";
  save_xi(path, sample.realization);
  CHECK(load_xi(path).W(300) == sample.realization.W(300));
  std::filesystem::remove(path);
}

TEST_CASE("corrupt files are rejected") {
  std::stringstream bad("PAGX0000000000000000000000000");
  CHECK_THROWS_AS(read_graph(bad), IoError);
  const PAGraph g = generate_sequential(50, 2, 1);
  std::stringstream buffer;
  write_graph(buffer, g);
  std::string truncated = buffer.str();
  truncated.resize(truncated.size() - 3);
  std::stringstream cut(truncated);
  CHECK_THROWS_AS(read_graph(cut), IoError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.pag"), IoError);
}

TEST_CASE("edge list") {
  const PAGraph g = generate_sequential(40, 2, 3);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  std::uint64_t lines = 0;
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  while (in >> u >> v) {
    CHECK(u <= v);
    const VertexId t = static_cast<VertexId>(lines / 2 + 1);
    CHECK(v == t);
    CHECK(g.left_choices(t)[lines % 2] == u);
    ++lines;
  }
  CHECK(lines == 80);
}
