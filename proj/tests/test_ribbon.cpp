#include "doctest.h"
#include "isopair/honeycomb.hpp"
#include "isopair/ribbon.hpp"

#include <algorithm>

using namespace isopair;

namespace {

RibbonGraph bigon() {
  RibbonGraph g;
  int b = g.add_vertex(Color::Black, 2), w = g.add_vertex(Color::White, 2);
  g.connect(g.half_edge(b, 0), g.half_edge(w, 0));
  g.connect(g.half_edge(b, 1), g.half_edge(w, 1));
  return g;
}

}  // namespace

TEST_CASE("theta graph is a one-faced torus") {
  auto g = theta_graph();
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 3);
  CHECK(faces(g).size() == 1);
  CHECK(euler_characteristic(g) == 0);
  CHECK(zigzag_cycles(g).size() == 3);
}

TEST_CASE("bigon on the sphere") {
  auto g = bigon();
  CHECK(faces(g).size() == 2);
  CHECK(euler_characteristic(g) == 2);
}

TEST_CASE("conjugation is an involution and swaps faces with zig-zags") {
  for (int n = 1; n <= 3; ++n) {
    auto g = glue_torus(constant_triangle<Scalar>(Kind::T, n, Scalar(1)),
                        constant_triangle<Scalar>(Kind::TPrime, n, Scalar(1)))
                 .graph;
    auto c = g.conjugate();
    CHECK(ribbon_isomorphic(c.conjugate(), g));
    std::vector<std::vector<int>> z, f;
    for (const auto& cyc : zigzag_cycles(g)) z.push_back(edge_set(g, cyc));
    for (const auto& cyc : faces(c)) f.push_back(edge_set(c, cyc));
    std::sort(z.begin(), z.end());
    std::sort(f.begin(), f.end());
    CHECK(z == f);
  }
}

TEST_CASE("monodromy and gauge invariance") {
  auto net = torus_from_weights<Scalar>(2, {Scalar(2), Scalar(3), Scalar(5), Scalar(7)},
                                       {Scalar(11), Scalar(13), Scalar(17), Scalar(19)});
  auto conn = net.connection();
  std::vector<Scalar> before;
  for (const auto& f : faces(net.graph)) before.push_back(monodromy(net.graph, conn, f));
  auto gauged = gauge_transform(net.graph, conn, 0, Scalar::rational(3, 7));
  auto back = gauge_transform(net.graph, gauged, 0, Scalar::rational(7, 3));
  CHECK(back.weight == conn.weight);
  std::size_t i = 0;
  for (const auto& f : faces(net.graph)) CHECK(monodromy(net.graph, gauged, f) == before[i++]);
  Connection<Scalar> ones{std::vector<Scalar>(net.graph.num_edges(), Scalar(1))};
  for (const auto& z : zigzag_cycles(net.graph)) CHECK(monodromy(net.graph, ones, z) == Scalar(1));
}

TEST_CASE("graph JSON round trip and errors") {
  auto g = theta_graph();
  CHECK(ribbon_isomorphic(ribbon_from_json(ribbon_to_json(g)), g));
  CHECK_THROWS_AS(ribbon_from_json("{"), ParseError);
  CHECK_THROWS_AS(ribbon_from_json(R"({"vertices":[{"color":"black","degree":1}],"edges":[]})"), ParseError);
  CHECK(ribbon_to_dot(g).find("graph G") == 0);
}
