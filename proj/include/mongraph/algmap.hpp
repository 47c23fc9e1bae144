#ifndef MONGRAPH_ALGMAP_HPP
#define MONGRAPH_ALGMAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "coset.hpp"
#include "multigraph.hpp"

namespace mongraph {

// The map M(G; U, rho, tau) on the dart set [G : U]. Vertices, edges and
// faces are the cycles of rho, tau and rho*tau acting by right
// multiplication on cosets.
struct AlgebraicMap
{
  GroupPtr group;
  Subgroup stabilizer;
  ElementId rho = 0;
  ElementId tau = 0;
  CosetSpace darts;
  Permutation rho_action;
  Permutation tau_action;
};

// Throws Precondition: NotInvolution, NotGenerating, CoreNotTrivial.
AlgebraicMap build_map(const Subgroup &stabilizer, ElementId rho, ElementId tau);

// rho then tau on darts.
Permutation face_permutation(const AlgebraicMap &m);

struct MapCounts
{
  std::size_t darts = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;  // tau-cycles, free edges included
  std::size_t faces = 0;
  std::size_t free_edges = 0;
  long euler = 0;                // V - E + F
  std::optional<long> genus;     // only without free edges
  std::string genus_note;        // why genus is absent
  // Capping every free edge with a valency-1 end point gives a closed map
  // with V + free_edges vertices; its genus is always defined.
  long closed_euler = 0;
  long closed_genus = 0;
};

MapCounts counts(const AlgebraicMap &m);

// Vertices are rho-cycles, labelled like the monodromy graph's double
// cosets (least element of the union of the cycle's cosets).
Multigraph underlying_graph(const AlgebraicMap &m);

struct StructurePredicates
{
  bool has_free_edges = false;
  bool has_loops = false;
  bool has_multiple_edges = false;
  bool is_simple = false;

  friend bool operator==(const StructurePredicates &, const StructurePredicates &) = default;
};

// The group-theoretic criteria, with g over a right transversal of U and
// exponents modulo the order of rho.
StructurePredicates structure_criteria(const AlgebraicMap &m);
// The same flags read off the darts.
StructurePredicates dart_structure(const AlgebraicMap &m);
// Criteria cross-checked against darts; Verification("CriterionMismatch")
// on disagreement.
StructurePredicates structure_predicates(const AlgebraicMap &m);

struct MapIsomorphismWitness
{
  GroupIsomorphism sigma;  // G -> G~ with rho -> rho~, tau -> tau~
  ElementId y = 0;         // U^sigma = y^-1 U~ y
};

// Since rho, tau generate G, sigma is forced by rho -> rho~, tau -> tau~;
// it is built by generator-image extension and y is then searched.
std::optional<MapIsomorphismWitness> maps_isomorphic(const AlgebraicMap &m1,
                                                     const AlgebraicMap &m2);

bool is_regular(const AlgebraicMap &m);

} // namespace mongraph

#endif // MONGRAPH_ALGMAP_HPP
