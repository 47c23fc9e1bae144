#ifndef MONGRAPH_ENUMERATION_HPP
#define MONGRAPH_ENUMERATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "algmap.hpp"
#include "automorphism.hpp"
#include "group.hpp"
#include "multigraph.hpp"

namespace mongraph {

// Conjugacy classes of subgroups with trivial core, in the order of
// all_subgroup_classes.
std::vector<SubgroupClass> corefree_classes(const GroupPtr &group);

// Every conjugate of u, sorted by element list.
std::vector<Subgroup> conjugates(const Subgroup &u);

struct PairClass
{
  GeneratorPair representative;  // lexicographically least pair of the orbit
  std::size_t orbit_size = 0;
};

// Generating pairs (rho, tau) with tau^2 = 1 modulo Aut(G). With
// require_involution the pair must have tau != 1.
std::vector<PairClass> pair_classes(const GroupPtr &group, bool require_involution = false);
std::vector<PairClass> pair_classes(const GroupPtr &group, std::span<const Automorphism> automorphisms,
                                    bool require_involution = false);

// All generating pairs, sorted.
std::vector<GeneratorPair> generating_pairs(const GroupPtr &group, bool require_involution = false);

struct GraphInvariants
{
  std::vector<std::size_t> degrees;         // non-increasing
  std::vector<std::size_t> multiplicities;  // of ordinary edge records, sorted
  std::size_t loops = 0;
  std::size_t free_edges = 0;

  friend bool operator==(const GraphInvariants &, const GraphInvariants &) = default;
};

GraphInvariants graph_invariants(const Multigraph &g);

struct MapCensusEntry
{
  std::size_t subgroup_index = 0;  // 0-based into corefree classes
  std::size_t pair_index = 0;      // 0-based into pair classes
  MapCounts counts;
  StructurePredicates predicates;
  Multigraph graph;  // Mon(G; U, rho, tau)
  GraphInvariants invariants;
  bool graph_planar = false;  // the graph has a plane drawing
  bool spherical = false;     // the map itself lives on the sphere
};

struct Census
{
  GroupSpec spec;
  GroupPtr group;
  std::vector<SubgroupClass> subgroups;
  std::vector<PairClass> pairs;
  std::vector<std::vector<MapCensusEntry>> grid;  // [subgroup][pair]
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t total = 0;
};

struct CensusOptions
{
  bool require_involution = false;
  bool verify_pairwise = true;
  std::size_t bound = default_order_bound;
};

// Throws Verification("VerificationFailed") with the witness if two grid
// cells are isomorphic maps.
Census build_census(const GroupSpec &spec, const CensusOptions &options = {});

// Published subgroup and pair lists for A4, S4 and A5, used to give census
// cells stable (i, j) names.
struct ReferenceCatalogue
{
  std::vector<std::string> subgroups;  // ';'-separated generators
  std::vector<std::pair<std::string, std::string>> pairs;
};

std::optional<ReferenceCatalogue> reference_catalogue(const GroupSpec &spec);

struct ReferenceIndexing
{
  std::vector<std::size_t> subgroup;  // census class -> 1-based catalogue index
  std::vector<std::size_t> pair;      // census pair -> 1-based catalogue index
};

// Matches census classes to catalogue entries by conjugacy and pair classes
// by automorphism. Throws Verification if the match is not a bijection.
ReferenceIndexing index_census(const Census &census, const ReferenceCatalogue &catalogue);

struct AtlasEntry
{
  std::size_t subgroup_index = 0;
  std::size_t pair_index = 0;
  std::optional<std::size_t> reference_subgroup;  // 1-based
  std::optional<std::size_t> reference_pair;      // 1-based
  bool graph_planar = false;
  bool spherical = false;
  // The atlas reading of "planar": the map is a genus-0 embedding of its
  // graph (free edges capped off).
  bool planar = false;
};

std::vector<AtlasEntry> planar_atlas(const Census &census);

// Number of isomorphism classes among M(G; U, rho, tau) for every core-free
// subgroup U (all conjugates) and every generating pair, by direct
// maps_isomorphic comparison.
std::size_t deduplicated_map_count(const GroupPtr &group, bool require_involution = false);

} // namespace mongraph

#endif // MONGRAPH_ENUMERATION_HPP
