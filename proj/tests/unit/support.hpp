#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "mongraph/algmap.hpp"
#include "mongraph/monodromy.hpp"
#include "oracles/oracles.hpp"

namespace test {

inline mongraph::GroupPtr group(const std::string &spec)
{ return mongraph::make_group(mongraph::parse_group_spec(spec)); }

inline mongraph::ElementId el(const mongraph::GroupPtr &g, const std::string &text)
{ return g->id_of(mongraph::parse_permutation(text, g->degree())); }

inline mongraph::Subgroup sub(const mongraph::GroupPtr &g, const std::string &gens)
{ return mongraph::parse_subgroup(g, gens); }

inline std::string read_fixture(const std::string &name)
{
  std::ifstream in(std::string(MONGRAPH_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline oracle::Perm to_oracle(const mongraph::Permutation &p)
{
  auto images = p.images();
  return {images.begin(), images.end()};
}

inline std::vector<oracle::Perm> elements(const mongraph::FiniteGroup &g)
{
  std::vector<oracle::Perm> out;
  for (auto const &p : g.elements())
    out.push_back(to_oracle(p));
  return out;
}

inline std::vector<oracle::Perm> elements(const mongraph::Subgroup &u)
{
  std::vector<oracle::Perm> out;
  for (auto id : u.elements())
    out.push_back(to_oracle(u.parent()->element(id)));
  return out;
}

// Dart actions of M(G;U,rho,tau) computed entirely by the oracle.
inline oracle::Darts oracle_darts(const mongraph::Subgroup &u, mongraph::ElementId rho, mongraph::ElementId tau)
{
  auto const &g = *u.parent();
  return oracle::dart_actions(elements(u), to_oracle(g.element(rho)), to_oracle(g.element(tau)), elements(g));
}

inline oracle::Graph to_oracle(const mongraph::Multigraph &m)
{
  oracle::Graph g(static_cast<int>(m.vertex_count()));
  for (auto const &e : m.edges())
    g.add(static_cast<int>(e.u), static_cast<int>(e.v), static_cast<int>(e.multiplicity));
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    g.add(static_cast<int>(v), static_cast<int>(v), static_cast<int>(m.loop_count(v)));
    g.free[v] = static_cast<int>(m.free_edge_count(v));
  }
  return g;
}

inline mongraph::Multigraph from_oracle(const oracle::Graph &g)
{
  mongraph::Multigraph m;
  for (int v = 0; v < g.n; ++v)
    m.add_vertex(std::to_string(v));
  for (int u = 0; u < g.n; ++u) {
    for (int v = u; v < g.n; ++v) {
      if (g.adj[u][v] > 0)
        m.add_edges(u, v, g.adj[u][v]);
    }
    if (g.free[u] > 0)
      m.add_free_edges(u, g.free[u]);
  }
  return m;
}

} // namespace test
