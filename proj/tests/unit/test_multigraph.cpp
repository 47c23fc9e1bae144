#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mongraph/errors.hpp"
#include "mongraph/multigraph.hpp"
#include "support.hpp"

using namespace mongraph;

namespace {

Multigraph relabel(const Multigraph &g, const std::vector<VertexId> &perm)
{
  // Vertex v of g becomes vertex perm[v] of the result.
  std::vector<VertexId> inverse(perm.size());
  for (VertexId v = 0; v < perm.size(); ++v)
    inverse[perm[v]] = v;
  Multigraph h;
  for (VertexId w = 0; w < perm.size(); ++w)
    h.add_vertex(g.label(inverse[w]));
  for (auto const &e : g.edges())
    h.add_edges(perm[e.u], perm[e.v], e.multiplicity);
  for (VertexId v = 0; v < perm.size(); ++v) {
    h.add_loops(perm[v], g.loop_count(v));
    h.add_free_edges(perm[v], g.free_edge_count(v));
  }
  return h;
}

bool certificate_valid(const Multigraph &a, const Multigraph &b, const std::vector<VertexId> &map)
{
  for (VertexId u = 0; u < a.vertex_count(); ++u) {
    if (a.loop_count(u) != b.loop_count(map[u]) || a.free_edge_count(u) != b.free_edge_count(map[u]))
      return false;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      if (u != v && a.multiplicity(u, v) != b.multiplicity(map[u], map[v]))
        return false;
    }
  }
  return true;
}

std::vector<int> degree_key(const oracle::Graph &g)
{
  std::vector<int> d;
  for (int v = 0; v < g.n; ++v)
    d.push_back(std::accumulate(g.adj[v].begin(), g.adj[v].end(), 0));
  std::sort(d.begin(), d.end());
  return d;
}

} // namespace

TEST(Multigraph, DegreeCountsLoopsTwiceAndFreeEdgesOnce)
{
  Multigraph g;
  auto a = g.add_vertex("a");
  auto b = g.add_vertex("b");
  g.add_edges(a, b, 2);
  g.add_loops(a);
  g.add_free_edges(b, 3);
  EXPECT_EQ(g.degree(a), 4u);
  EXPECT_EQ(g.degree(b), 5u);
  EXPECT_EQ(g.dart_count(), 9u);
  EXPECT_EQ(g.multiplicity(a, b), 2u);
  EXPECT_EQ(g.multiplicity(a, a), 1u);
  EXPECT_THROW(g.add_vertex("a"), Error);
  EXPECT_TRUE(is_connected(g));
  g.add_vertex("c");
  EXPECT_FALSE(is_connected(g));
}

TEST(Multigraph, JsonRoundTripAndDot)
{
  Multigraph g;
  g.add_vertex("()");
  g.add_vertex("(1,2)");
  g.add_edges(0, 1, 3);
  g.add_loops(1, 2);
  g.add_free_edges(0);
  auto text = to_json(g);
  EXPECT_EQ(multigraph_from_json(text), g);
  EXPECT_EQ(to_json(multigraph_from_json(text)), text);

  auto dot = to_dot(g, "G");
  EXPECT_NE(dot.find("graph \"G\" {"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n') > 5, true);
  EXPECT_NE(dot.find("free_end"), std::string::npos);

  EXPECT_THROW(multigraph_from_json("{"), Error);
  EXPECT_THROW(multigraph_from_json(R"({"vertices":["a"],"edges":[{"u":"a","v":"z","mult":1}]})"), Error);
}

TEST(Multigraph, FixturesLoad)
{
  for (auto [name, v, e] : {std::tuple{"tetrahedron", 4u, 6u}, std::tuple{"octahedron", 6u, 12u},
                            std::tuple{"cube", 8u, 12u}, std::tuple{"icosahedron", 12u, 30u},
                            std::tuple{"dodecahedron", 20u, 30u}}) {
    auto g = multigraph_from_json(test::read_fixture(std::string(name) + ".json"));
    EXPECT_EQ(g.vertex_count(), v) << name;
    EXPECT_EQ(g.ordinary_edge_count(), e) << name;
    EXPECT_TRUE(is_planar(g)) << name;
  }
}

TEST(Multigraph, IsomorphismAgreesWithExhaustiveOracle)
{
  // All simple graphs up to 7 vertices: every graph against a random
  // relabelling of itself, and every pair sharing a degree sequence.
  std::mt19937 rng(11);
  std::size_t compared = 0;
  for (int n = 1; n <= 7; ++n) {
    auto graphs = oracle::all_simple_graphs(n);
    std::map<std::vector<int>, std::vector<std::size_t>> by_degrees;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      by_degrees[degree_key(graphs[i])].push_back(i);

    for (auto const &og : graphs) {
      Multigraph g = test::from_oracle(og);
      std::vector<VertexId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Multigraph h = relabel(g, perm);
      auto iso = are_isomorphic(g, h);
      ASSERT_TRUE(iso.has_value());
      EXPECT_TRUE(certificate_valid(g, h, *iso));
    }
    for (auto const &[key, members] : by_degrees) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          auto const &a = graphs[members[i]];
          auto const &b = graphs[members[j]];
          // The oracle's list has one graph per class.
          ASSERT_FALSE(oracle::isomorphic(a, b));
          EXPECT_FALSE(are_isomorphic(test::from_oracle(a), test::from_oracle(b)).has_value());
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 3000u);
}

TEST(Multigraph, MultigraphIsomorphismAgreesWithOracle)
{
  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + trial % 5;
    oracle::Graph a(n), b(n);
    for (auto *g : {&a, &b}) {
      for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
          if (rng() % 3 == 0)
            g->add(u, v, 1 + static_cast<int>(rng() % 2));
        }
        g->free[u] = rng() % 4 == 0 ? 1 : 0;
      }
    }
    if (trial % 2 == 0)
      b = a;  // then shuffled below
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph mb = relabel(test::from_oracle(b), perm);
    bool expected = oracle::isomorphic(a, test::to_oracle(mb));
    auto found = are_isomorphic(test::from_oracle(a), mb);
    EXPECT_EQ(found.has_value(), expected) << "trial " << trial;
    if (found)
      EXPECT_TRUE(certificate_valid(test::from_oracle(a), mb, *found));
  }
}

TEST(Multigraph, PlanarityAgreesWithKuratowskiOracle)
{
  std::size_t nonplanar = 0;
  std::size_t total = 0;
  for (int n = 1; n <= 8; ++n) {
    for (auto const &og : oracle::all_simple_graphs(n)) {
      bool expected = oracle::planar(og);
      EXPECT_EQ(is_planar(test::from_oracle(og)), expected);
      nonplanar += !expected;
      ++total;
    }
  }
  EXPECT_EQ(total, 13598u);
  EXPECT_EQ(nonplanar, 5617u);
}

TEST(Multigraph, LoopsParallelAndFreeEdgesDoNotAffectPlanarity)
{
  oracle::Graph k5(5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v)
      k5.add(u, v);
  }
  Multigraph g = test::from_oracle(k5);
  EXPECT_FALSE(is_planar(g));
  g.add_edges(0, 1, 3);
  g.add_loops(2, 2);
  EXPECT_FALSE(is_planar(g));

  Multigraph path;
  for (const char *s : {"a", "b", "c"})
    path.add_vertex(s);
  path.add_edges(0, 1, 4);
  path.add_edges(1, 2);
  path.add_loops(0, 3);
  path.add_free_edges(2, 2);
  EXPECT_TRUE(is_planar(path));
  EXPECT_EQ(simplify(path).ordinary_edge_count(), 2u);
  EXPECT_EQ(simplify(path).total_loops(), 0u);
}

TEST(Multigraph, BudgetExhaustionIsReportedNotGuessed)
{
  auto a = multigraph_from_json(test::read_fixture("dodecahedron.json"));
  auto b = relabel(a, [] {
    std::vector<VertexId> p(20);
    std::iota(p.rbegin(), p.rend(), 0);
    return p;
  }());
  try {
    auto iso = are_isomorphic(a, b, 1);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(certificate_valid(a, b, *iso));
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Bound);
  }
  EXPECT_TRUE(are_isomorphic(a, b).has_value());
}
