#include <doctest.h>

#include <random>
#include <string>
#include <utility>

#include "mop/doubling.hpp"
#include "mop/extend.hpp"
#include "mop/gallery.hpp"
#include "mop/io.hpp"
#include "mop/rotation.hpp"
#include "oracles.hpp"

using namespace mop;

namespace {

Graph wheel_of_fans() {
  Graph g(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (auto [u, v] : {std::pair{0, 2}, {0, 4}, {0, 6}, {2, 4}, {4, 6}}) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("family emission, frozen") {
  CHECK(emit_family(base_family()) ==
        "family 1 4\n"
        "graph 0 d=1\n"
        "0 1\n"
        "0 2\n"
        "0 3\n"
        "1 2\n"
        "2 3\n");
}

TEST_CASE("families survive the round trip") {
  std::vector<Family> cases;
  for (int t : {1, 2, 5}) cases.push_back(rotation_family(t));
  for (int s : {0, 1, 2}) cases.push_back(doubling_family(s));
  cases.push_back(k7_minus_e_family());
  cases.push_back(extend_to(rotation_family(2), 12));
  for (const Family& f : cases) {
    std::string text = emit_family(f);
    CHECK(parse_family(text) == f);
    CHECK(parse_family(text, true) == f);
    CHECK(emit_family(parse_family(text)) == text);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  Family f = parse_family(
      "# a remark\n"
      "family 1 4   # trailing\n"
      "\n"
      "graph 0 d=1\n"
      "0 1\n\n"
      "0 2\n"
      "0 3\n"
      "1 2\n"
      "2 3\n");
  CHECK(f == base_family());
}

TEST_CASE("lenient mode normalizes, strict mode refuses") {
  std::string swapped =
      "family 1 4\n"
      "graph 0\n"
      "2 0\n"
      "0 1\n"
      "0 3\n"
      "1 2\n"
      "2 3\n";
  Family f = parse_family(swapped);
  Family want = base_family();
  want.members[0].step.reset();
  CHECK(f == want);
  CHECK_THROWS_AS(parse_family(swapped, true), ParseError);

  std::string unsorted =
      "family 1 3\n"
      "graph 0\n"
      "1 2\n"
      "0 1\n";
  CHECK(parse_family(unsorted).members[0].edges == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(parse_family(unsorted, true), ParseError);
}

TEST_CASE("malformed families are rejected with line numbers") {
  auto line_of = [](const std::string& text, bool strict = false) {
    try {
      parse_family(text, strict);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("family 1\n") == 1);
  CHECK(line_of("graph 0\n") == 1);
  CHECK(line_of("family 1 4\ngraph 1\n") == 2);
  CHECK(line_of("family 1 4\ngraph 0\n0 0\n") == 3);
  CHECK(line_of("family 1 4\ngraph 0\n0 4\n") == 3);
  CHECK(line_of("family 1 4\ngraph 0\n0 -1\n") == 3);
  CHECK(line_of("family 1 4\ngraph 0\n0 1\n0 1\n") == 4);       // duplicate
  CHECK(line_of("family 1 4\ngraph 0\n0 1 2\n") == 3);
  CHECK(line_of("family 1 4\ngraph 0 d=0\n") == 2);
  CHECK(line_of("family 1 4\ngraph 0 d=x\n") == 2);
  CHECK(line_of("family 2 4\ngraph 0\n0 1\n") == 3);            // member count
  CHECK(line_of("family 1 4\n0 1\n") == 2);                     // edge before graph
  CHECK(line_of("family one 4\n") == 1);
}

TEST_CASE("graph6 bytes, frozen") {
  CHECK(emit_graph6(complete_graph(3)) == "Bw");
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(emit_graph6(c5) == "Dhc");
  CHECK(emit_graph6(base_family().member_graph(0)) == "C|");
  CHECK(emit_graph6(wheel_of_fans()) == "GxkK[C");
  CHECK(emit_graph6(complete_minus_matching(7, {{0, 4}})) == "F~^~w");
  CHECK(emit_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 round trips and matches the reference decoder") {
  std::mt19937 rng(20260816);
  std::vector<Graph> cases = {Graph(1), Graph(5), complete_graph(9),
                              wheel_of_fans(), rotation_base(5)};
  for (int n : {2, 7, 13, 40, 62}) {
    cases.push_back(testkit::random_graph(n, 0.3, rng));
    cases.push_back(testkit::random_graph(n, 0.8, rng));
  }
  for (const Graph& g : cases) {
    std::string s = emit_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(testkit::decode_graph6_reference(s) == g);
  }
}

TEST_CASE("graph6 rejects damage") {
  CHECK_THROWS_AS(emit_graph6(Graph(63)), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);   // order 0
  CHECK_THROWS_AS(parse_graph6("Bw "), std::invalid_argument); // length
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("Bx"), std::invalid_argument);  // padding bit set
  CHECK_THROWS_AS(parse_graph6(std::string(1, '\x1f')), std::invalid_argument);
}

TEST_CASE("dot output pins certified graphs on a circle") {
  Graph g = base_family().member_graph(0);
  CertifyResult cert = certify_mop(g);
  REQUIRE(cert.ok());
  std::string dot = emit_dot(g, &*cert.certificate);
  CHECK(dot.find("graph mop {") == 0);
  CHECK(dot.find("0 [pos=\"0.0000,2.0000!\"];") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  std::size_t dashed = 0;
  for (std::size_t at = dot.find("[style=dashed]"); at != std::string::npos;
       at = dot.find("[style=dashed]", at + 1)) {
    ++dashed;
  }
  CHECK(dashed == 1);  // the single chord {0,2}

  std::string plain = emit_dot(g);
  CHECK(plain.find("pos=") == std::string::npos);
  CHECK(plain.find("  2;\n") != std::string::npos);
  CHECK(plain.back() == '\n');
}
