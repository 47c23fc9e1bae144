#ifndef MONGRAPH_MONODROMY_HPP
#define MONGRAPH_MONODROMY_HPP

#include <optional>
#include <vector>

#include "coset.hpp"
#include "multigraph.hpp"

namespace mongraph {

// Throws Precondition NotInvolution (tau^2 != 1) or NotGenerating
// (<rho, tau> != G).
void check_generating_pair(const FiniteGroup &group, ElementId rho, ElementId tau);

// The monodromy graph Mon(G; U, rho, tau).
//
// Vertices are the double cosets U g <rho>, labelled by their least element
// in cycle notation. The dart Ug lies on the edge {Ug<rho>, Ug tau<rho>}; it
// is a free edge when Ug tau = Ug and a loop when the two double cosets
// coincide otherwise.
struct MonodromyGraph
{
  GroupPtr group;
  Subgroup stabilizer;
  ElementId rho = 0;
  ElementId tau = 0;
  Subgroup rotation;                       // <rho>
  CosetSpace darts;                        // [G : U]
  DoubleCosetDecomposition vertex_blocks;  // U \ G / <rho>
  std::vector<ElementId> transversal;      // the S used to build the edges
  Multigraph graph;
  bool core_free = true;  // a non-trivial core is reported, not rejected

  VertexId vertex_of(ElementId g) const { return vertex_blocks.block_of(g); }
};

MonodromyGraph build_monodromy(const Subgroup &stabilizer, ElementId rho, ElementId tau);
// Same construction over a caller-supplied right transversal.
MonodromyGraph build_monodromy(const Subgroup &stabilizer, ElementId rho, ElementId tau,
                               const std::vector<ElementId> &transversal);

// |<rho>| / |<rho> ∩ U^h|.
std::size_t valency(const MonodromyGraph &mg, ElementId h);

// {U g tau <rho> : g in U k <rho>, g tau not in U g}, as vertex ids.
std::vector<VertexId> neighborhood(const MonodromyGraph &mg, ElementId k);

// Rebuilds over `alternative` and compares the graphs. Throws
// Precondition("InvalidTransversal") if it is not a right transversal.
bool transversal_independence_check(const MonodromyGraph &mg,
                                    const std::vector<ElementId> &alternative);

using VertexPermutation = std::vector<VertexId>;

// a_L : U h <rho> -> a^-1 U h <rho>, for a in N_G(U).
VertexPermutation left_action(const MonodromyGraph &mg, ElementId a);

struct LeftAutomorphismGroup
{
  std::size_t normalizer_order = 0;
  std::vector<VertexPermutation> permutations;  // distinct, sorted
};

// Every a_L is checked to preserve multiplicities, loops and free edges and
// the set is checked to be closed; failures throw Verification.
LeftAutomorphismGroup left_automorphisms(const MonodromyGraph &mg);

// Orbits of the group generated by `perms` on vertices / on arcs (ordered
// adjacent pairs, a loop giving the arc (v, v)).
std::size_t vertex_orbit_count(const Multigraph &g, const std::vector<VertexPermutation> &perms);
std::size_t arc_orbit_count(const Multigraph &g, const std::vector<VertexPermutation> &perms);

// Mon(G; 1, rho, tau).
MonodromyGraph arc_transitive_companion(const GroupPtr &group, ElementId rho, ElementId tau);

// Rotation at each vertex: a cyclic order of its incident darts given as
// local indices. Local darts of a vertex are listed as: ordinary edge ends
// (edge records in order, one per parallel copy), then two per loop, then
// one per free edge.
using RotationSystem = std::vector<std::vector<std::size_t>>;

struct MonodromyRepresentation
{
  Permutation rho_darts;  // rotation on the dart set
  Permutation tau_darts;  // dart reversal; fixes free-edge darts
  GroupPtr group;         // <rho, tau>
  ElementId rho = 0;
  ElementId tau = 0;
  Subgroup stabilizer;    // stabiliser of dart 0
  MonodromyGraph rebuilt;
  std::vector<VertexId> certificate;  // input vertex -> rebuilt vertex
};

// Throws Precondition("EmptyGraph"), Precondition("NotConnected"),
// Bound("ClosureExceedsBound") and Verification if the rebuilt graph is not
// isomorphic to the input.
MonodromyRepresentation monodromy_representation(const Multigraph &sigma,
                                                 const std::optional<RotationSystem> &rotation = std::nullopt,
                                                 std::size_t bound = default_order_bound);

} // namespace mongraph

#endif // MONGRAPH_MONODROMY_HPP
