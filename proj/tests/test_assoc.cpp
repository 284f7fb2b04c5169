#include <doctest.h>

#include <set>

#include "test_helpers.hpp"
#include "unihyp/assoc.hpp"

using namespace unihyp;
using namespace unihyp::testing;

namespace {

std::set<std::set<Mask>> class_sets(const Hypergraph& h, const DEPartition& de) {
  AssociatedGraph g = build_associated_graph(h);
  std::set<std::set<Mask>> out;
  for (const auto& cls : de.classes) {
    std::set<Mask> s;
    for (int i : cls) s.insert(g.parts[i]);
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("graphs are fixed points of the associated graph") {
  Hypergraph k3 = triangle_k3();
  AssociatedGraph g = build_associated_graph(k3);
  CHECK(g.k == 3);
  CHECK(g.edges.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(g.node_degree(i) == 2);
}

TEST_CASE("single 3-edge splits into three disjoint pairs") {
  AssociatedGraph g = build_associated_graph(single_three_edge());
  CHECK(g.k == 6);
  CHECK(g.edges.size() == 3);
  CHECK(g.component_count == 3);
  for (char b : g.component_bipartite) CHECK(b);
}

TEST_CASE("six-vertex example: twelve nodes, seven pairs") {
  AssociatedGraph g = build_associated_graph(six_vertex_three_edges());
  CHECK(g.k == 12);
  CHECK(g.edges.size() == 7);
}

TEST_CASE("node degrees equal modified unified degrees") {
  Hypergraph h = uni_connected_ten();
  IndexSet idx = index_set(h);
  DegreeTable deg = degrees(h, idx);
  AssociatedGraph g = build_associated_graph(h, idx);
  for (int i = 0; i < g.k; ++i) CHECK(g.node_degree(i) == deg.d_star[i]);
}

TEST_CASE("loops are rejected") {
  Hypergraph h = Hypergraph::from_token_edges({{{"1"}, 1}, {{"1", "2"}, 1}});
  CHECK_THROWS_AS(build_associated_graph(h), Error);
}

TEST_CASE("de-components of the six-vertex example without {5,6}") {
  Hypergraph h = six_vertex_three_edges();
  DEPartition de = de_components(h);
  CHECK(de.class_count == 5);
  auto got = class_sets(h, de);
  std::set<std::set<Mask>> want = {
      {part_of(h, {"1"}), part_of(h, {"2", "3"})},
      {part_of(h, {"2"}), part_of(h, {"1", "3"})},
      {part_of(h, {"3"}), part_of(h, {"4"}), part_of(h, {"1", "2"}), part_of(h, {"5", "6"})},
      {part_of(h, {"5"}), part_of(h, {"4", "6"})},
      {part_of(h, {"6"}), part_of(h, {"4", "5"})},
  };
  CHECK(got == want);
}

TEST_CASE("de-components of the published example (with {5,6}) are the four classes") {
  Hypergraph h = six_vertex_paper_example();
  DEPartition de = de_components(h);
  REQUIRE(de.class_count == 4);
  auto got = class_sets(h, de);
  std::set<std::set<Mask>> want = {
      {part_of(h, {"1"}), part_of(h, {"2", "3"})},
      {part_of(h, {"2"}), part_of(h, {"1", "3"})},
      {part_of(h, {"3"}), part_of(h, {"4"}), part_of(h, {"1", "2"}), part_of(h, {"5", "6"})},
      {part_of(h, {"5"}), part_of(h, {"6"}), part_of(h, {"4", "5"}), part_of(h, {"4", "6"})},
  };
  CHECK(got == want);
  for (int c = 0; c < 4; ++c) {
    CHECK_FALSE(de.is_trivial[c]);
    CHECK_FALSE(de.has_odd_exact_cycle[c]);
  }
  // [{1}] and [{2}] induce the same exact subhypergraph ({1,2,3}, {{1,2,3}})
  CHECK(de.equality_group_count == 3);
}

TEST_CASE("deeply connected hypergraphs have one class") {
  DEPartition de = de_components(triangle_k3());
  CHECK(de.class_count == 1);
  CHECK(de.has_odd_exact_cycle[0]);
}

TEST_CASE("single 3-edge: three classes, none trivial, none odd") {
  DEPartition de = de_components(single_three_edge());
  CHECK(de.class_count == 3);
  for (int c = 0; c < 3; ++c) {
    CHECK_FALSE(de.is_trivial[c]);
    CHECK_FALSE(de.has_odd_exact_cycle[c]);
  }
}

TEST_CASE("trivial classes are isolated vertices") {
  Hypergraph h = from_edges({{"1", "2"}}, {"3"});
  DEPartition de = de_components(h);
  CHECK(de.class_count == 2);
  int trivial = de.is_trivial[0] + de.is_trivial[1];
  CHECK(trivial == 1);
}

TEST_CASE("exact subhypergraph induced by a class") {
  Hypergraph h = single_three_edge();
  Hypergraph sub = exact_subhypergraph(h, {part_of(h, {"1"}), part_of(h, {"2", "3"})});
  CHECK(sub.vertex_count() == 3);
  REQUIRE(sub.edges().size() == 1);
  CHECK(mask_size(sub.edges()[0].first) == 3);
}

TEST_CASE("exact subhypergraph of the six-vertex example class") {
  Hypergraph h = six_vertex_three_edges();
  std::vector<Mask> d = {part_of(h, {"5"}), part_of(h, {"6"}), part_of(h, {"4", "5"}),
                         part_of(h, {"4", "6"})};
  Hypergraph sub = exact_subhypergraph(h, d);
  CHECK(sub.vertex_count() == 3);  // {4,5,6}
  REQUIRE(sub.edges().size() == 1);
  CHECK(mask_size(sub.edges()[0].first) == 3);
}

TEST_CASE("graphs: exact subhypergraph is the induced subgraph") {
  Hypergraph h = triangle_k3();
  Hypergraph sub = exact_subhypergraph(h, {part_of(h, {"1"}), part_of(h, {"2"})});
  CHECK(sub.vertex_count() == 2);
  REQUIRE(sub.edges().size() == 1);
}

TEST_CASE("invalid induce set is rejected") {
  Hypergraph h = single_three_edge();
  // {2,3} has no neighbor inside D = {{2},{2,3}}
  CHECK_THROWS_AS(exact_subhypergraph(h, {part_of(h, {"2"}), part_of(h, {"2", "3"})}), Error);
}
