#include <gtest/gtest.h>

#include <algorithm>

#include "mongraph/errors.hpp"
#include "mongraph/verify.hpp"
#include "support.hpp"

using namespace mongraph;

namespace {

MonodromyGraph mon(const std::string &group, const std::string &u, const std::string &rho, const std::string &tau)
{
  auto g = test::group(group);
  return build_monodromy(test::sub(g, u), test::el(g, rho), test::el(g, tau));
}

Multigraph complete(std::size_t n)
{
  Multigraph g;
  for (std::size_t v = 0; v < n; ++v)
    g.add_vertex(std::to_string(v + 1));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v)
      g.add_edges(u, v);
  }
  return g;
}

} // namespace

TEST(Monodromy, RegularIcosahedron)
{
  auto mg = mon("A5", "", "(1,5,4,3,2)", "(1,2)(3,4)");
  auto ico = multigraph_from_json(test::read_fixture("icosahedron.json"));
  EXPECT_EQ(mg.graph.vertex_count(), 12u);
  EXPECT_EQ(mg.graph.ordinary_edge_count(), 30u);
  EXPECT_TRUE(are_isomorphic(mg.graph, ico).has_value());
  EXPECT_EQ(mg.graph.label(0), "()");
}

TEST(Monodromy, FourVertexGraphWithTwoLoops)
{
  auto mg = mon("A5", "(1,5,2,4,3)", "(1,5,4,3,2)", "(1,2)(3,4)");
  auto const &g = mg.graph;
  ASSERT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.total_loops(), 2u);
  EXPECT_EQ(g.total_free_edges(), 0u);
  std::vector<std::size_t> degrees;
  for (VertexId v = 0; v < 4; ++v)
    degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<std::size_t>{1, 1, 5, 5}));

  // A path a - b = c - d whose doubled middle edge joins the two loop
  // vertices.
  auto simple = simplify(g);
  EXPECT_EQ(simple.ordinary_edge_count(), 3u);
  std::vector<std::size_t> mults;
  for (auto const &e : g.edges())
    mults.push_back(e.multiplicity);
  std::sort(mults.begin(), mults.end());
  EXPECT_EQ(mults, (std::vector<std::size_t>{1, 1, 2}));
  for (VertexId v = 0; v < 4; ++v)
    EXPECT_EQ(g.loop_count(v), g.degree(v) == 5 ? 1u : 0u);
}

TEST(Monodromy, FreeEdgesOfTheA4Graph)
{
  auto mg = mon("A4", "(1,3)(2,4)", "(1,3,2)", "(1,2)(3,4)");
  EXPECT_EQ(mg.graph.total_free_edges(), 2u);
  EXPECT_EQ(mg.graph.vertex_count(), 2u);
}

TEST(Monodromy, ValencyAndNeighbourhood)
{
  for (auto [group, u, rho, tau] :
       {std::tuple{"A5", "(1,5,2,4,3)", "(1,5,4,3,2)", "(1,2)(3,4)"}, std::tuple{"S4", "(3,4)", "(1,2,3,4)", "(2,3)"},
        std::tuple{"A4", "(1,3)(2,4)", "(1,3,2)", "(1,2)(3,4)"}, std::tuple{"A5", "(1,5,4)", "(1,5,4)", "(1,2)(3,4)"}}) {
    auto mg = mon(group, u, rho, tau);
    for (VertexId v = 0; v < mg.graph.vertex_count(); ++v) {
      ElementId rep = mg.vertex_blocks.blocks()[v].representative;
      EXPECT_EQ(valency(mg, rep), mg.graph.degree(v));
      auto expected = mg.graph.neighbours(v);
      auto found = neighborhood(mg, rep);
      EXPECT_EQ(found, expected) << group << " " << u;
    }
  }
}

TEST(Monodromy, TransversalIndependence)
{
  auto mg = mon("S4", "(2,3,4)", "(1,2,4)", "(2,3)");
  for (std::uint32_t seed = 0; seed < 20; ++seed)
    EXPECT_TRUE(transversal_independence_check(mg, random_transversal(mg.darts, seed)));
  EXPECT_THROW(transversal_independence_check(mg, {0, 0, 0, 0, 0, 0, 0, 0}), Error);
}

TEST(Monodromy, LeftActionIsAutomorphism)
{
  auto mg = mon("S4", "(3,4)", "(1,2,3,4)", "(2,3)");
  auto autos = left_automorphisms(mg);
  EXPECT_EQ(autos.normalizer_order, 4u);
  EXPECT_FALSE(autos.permutations.empty());

  auto companion = arc_transitive_companion(mg.group, mg.rho, mg.tau);
  auto ca = left_automorphisms(companion);
  EXPECT_EQ(ca.normalizer_order, 24u);
  EXPECT_EQ(arc_orbit_count(companion.graph, ca.permutations), 1u);
  EXPECT_EQ(vertex_orbit_count(companion.graph, ca.permutations), 1u);
}

TEST(Monodromy, PreconditionErrors)
{
  auto g = test::group("S4");
  try {
    build_monodromy(Subgroup::trivial(g), test::el(g, "(1,2,3,4)"), test::el(g, "(1,2,3)"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), "NotInvolution");
    EXPECT_EQ(exit_code(e.kind()), 3);
  }
  try {
    build_monodromy(Subgroup::trivial(g), test::el(g, "(1,2)"), test::el(g, "(3,4)"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), "NotGenerating");
  }
}

TEST(Monodromy, RepresentationRoundTrips)
{
  // Group orders come from the dart permutations built by hand: K2 has two
  // darts swapped by tau, K3 gives S3, K4 the order-96 group found by the
  // prototype closure.
  for (auto [n, order] : {std::pair{2u, 2u}, std::pair{3u, 6u}, std::pair{4u, 96u}}) {
    auto g = complete(n);
    auto rep = monodromy_representation(g);
    EXPECT_EQ(rep.group->order(), order) << "K" << n;
    EXPECT_TRUE(are_isomorphic(g, rep.rebuilt.graph).has_value());
    EXPECT_TRUE(rep.stabilizer.contains(FiniteGroup::identity()));
  }

  Multigraph p;
  for (const char *s : {"a", "b", "c", "d"})
    p.add_vertex(s);
  p.add_edges(0, 1);
  p.add_edges(1, 2);
  p.add_edges(2, 3);
  p.add_loops(0);
  p.add_loops(3);
  auto rep = monodromy_representation(p);
  EXPECT_TRUE(are_isomorphic(p, rep.rebuilt.graph).has_value());

  Multigraph f;
  f.add_vertex("x");
  f.add_vertex("y");
  f.add_edges(0, 1, 2);
  f.add_free_edges(1);
  EXPECT_TRUE(are_isomorphic(f, monodromy_representation(f).rebuilt.graph).has_value());
}

TEST(Monodromy, RepresentationWithRotation)
{
  auto g = complete(4);
  RotationSystem rot{{0, 2, 1}, {0, 1, 2}, {2, 1, 0}, {1, 0, 2}};
  auto rep = monodromy_representation(g, rot);
  EXPECT_TRUE(are_isomorphic(g, rep.rebuilt.graph).has_value());
  RotationSystem bad{{0, 0, 1}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  EXPECT_THROW(monodromy_representation(g, bad), Error);
}

TEST(Monodromy, RepresentationErrors)
{
  Multigraph empty;
  EXPECT_THROW(monodromy_representation(empty), Error);
  Multigraph two;
  two.add_vertex("a");
  two.add_vertex("b");
  two.add_loops(0);
  two.add_loops(1);
  try {
    monodromy_representation(two);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), "NotConnected");
  }
  try {
    monodromy_representation(complete(6), std::nullopt, 100);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Bound);
  }
}
