#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "forkdiv/graph6.hpp"
#include "helpers.hpp"

using namespace forkdiv;

#ifndef FORKDIV_TEST_DATA
#define FORKDIV_TEST_DATA "tests/data"
#endif

TEST_CASE("format-defined encodings") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(2)) == "A?");
  CHECK(parse_graph6("@").size() == 1);
  CHECK(parse_graph6("@").edge_count() == 0);
  const Graph e2 = parse_graph6("A?");
  CHECK(e2.size() == 2);
  CHECK(e2.edge_count() == 0);
}

TEST_CASE("c5 against the reference decoder fixture") {
  std::ifstream in(std::string(FORKDIV_TEST_DATA) + "/c5_reference.g6");
  REQUIRE(in);
  std::string line;
  REQUIRE(std::getline(in, line));
  const Graph decoded = parse_graph6(line);
  CHECK(decoded == testutil::cycle(5));
  CHECK(to_graph6(testutil::cycle(5)) == line);
}

TEST_CASE("round trip on every labeled graph up to n=5") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < testutil::labeled_graph_count(n); ++mask) {
      const Graph g = testutil::labeled_graph(n, mask);
      CHECK(parse_graph6(to_graph6(g)) == g);
    }
  }
}

TEST_CASE("round trip at the 63 and 64 vertex boundary") {
  std::mt19937 rng(3);
  for (int n : {62, 63, 64}) {
    const Graph g = testutil::random_graph(n, rng, 0.2);
    const std::string line = to_graph6(g);
    CHECK(parse_graph6(line) == g);
    if (n >= 63) CHECK(line[0] == '~');
  }
}

TEST_CASE("decode errors name the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), DecodeError);
  CHECK_THROWS_AS(parse_graph6("\x1f"), DecodeError);   // below printable range
  CHECK_THROWS_AS(parse_graph6("D"), DecodeError);      // truncated payload
  CHECK_THROWS_AS(parse_graph6("A@"), DecodeError);     // nonzero padding
  CHECK_THROWS_AS(parse_graph6("A??"), DecodeError);    // trailing bytes
  CHECK_THROWS_AS(parse_graph6("~~????"), DecodeError); // 36-bit order form
  CHECK_THROWS_AS(parse_graph6("~?B?"), DecodeError);   // order 129 > 64
  CHECK_THROWS_AS(parse_graph6("?"), DecodeError);      // order 0
  try {
    parse_graph6("A@");
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.offset == 1);
  }
}

TEST_CASE("header stripping for corpus lines") {
  CHECK(strip_graph6_header(">>graph6<<Dhc") == "Dhc");
  CHECK(strip_graph6_header("Dhc\r") == "Dhc");
  CHECK(strip_graph6_header(">>graph6<<") == "");
}

TEST_CASE("edge list round trip and errors") {
  const Graph g = testutil::petersen();
  std::stringstream buf;
  write_edge_list(g, buf);
  CHECK(read_edge_list(buf) == g);

  std::stringstream bad1("3 1\n0 3\n");
  CHECK_THROWS_AS(read_edge_list(bad1), DecodeError);
  std::stringstream bad2("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad2), DecodeError);
  std::stringstream bad3("x");
  CHECK_THROWS_AS(read_edge_list(bad3), DecodeError);
}
