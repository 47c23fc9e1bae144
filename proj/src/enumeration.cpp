#include "mongraph/enumeration.hpp"

#include <algorithm>
#include <set>

#include "mongraph/errors.hpp"
#include "mongraph/monodromy.hpp"

namespace mongraph {

std::vector<SubgroupClass> corefree_classes(const GroupPtr &group)
{
  std::vector<SubgroupClass> result;
  for (auto &cls : all_subgroup_classes(group)) {
    if (core(cls.representative).is_trivial())
      result.push_back(std::move(cls));
  }
  return result;
}

std::vector<Subgroup> conjugates(const Subgroup &u)
{
  std::set<std::vector<ElementId>> seen;
  std::vector<Subgroup> result;
  for (ElementId g = 0; g < u.parent()->order(); ++g) {
    Subgroup c = conjugate_subgroup(u, g);
    if (seen.insert(c.elements()).second)
      result.push_back(std::move(c));
  }
  std::sort(result.begin(), result.end(),
            [](const Subgroup &a, const Subgroup &b) { return a.elements() < b.elements(); });
  return result;
}

std::vector<GeneratorPair> generating_pairs(const GroupPtr &group, bool require_involution)
{
  auto const &g = *group;
  std::vector<ElementId> involutions;
  for (ElementId t = 0; t < g.order(); ++t) {
    if (g.mul(t, t) != FiniteGroup::identity())
      continue;
    if (require_involution && t == FiniteGroup::identity())
      continue;
    involutions.push_back(t);
  }

  std::vector<GeneratorPair> pairs;
  for (ElementId r = 0; r < g.order(); ++r) {
    for (ElementId t : involutions) {
      if (g.closure({r, t}).size() == g.order())
        pairs.push_back({r, t});
    }
  }
  return pairs;
}

std::vector<PairClass> pair_classes(const GroupPtr &group, bool require_involution)
{
  auto automorphisms = automorphism_group(*group);
  return pair_classes(group, automorphisms, require_involution);
}

std::vector<PairClass> pair_classes(const GroupPtr &group, std::span<const Automorphism> automorphisms,
                                    bool require_involution)
{
  auto pairs = generating_pairs(group, require_involution);
  std::set<GeneratorPair> claimed;
  std::vector<PairClass> classes;
  for (auto const &p : pairs) {
    if (claimed.count(p))
      continue;
    std::set<GeneratorPair> orbit;
    for (auto const &sigma : automorphisms)
      orbit.insert({sigma(p.rho), sigma(p.tau)});
    claimed.insert(orbit.begin(), orbit.end());
    classes.push_back({p, orbit.size()});
  }

  std::size_t covered = 0;
  for (auto const &c : classes)
    covered += c.orbit_size;
  if (covered != pairs.size())
    throw verification_error("VerificationFailed", "pair orbits do not partition the generating pairs");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (pairs_isomorphic(automorphisms, classes[i].representative, classes[j].representative))
        throw verification_error("VerificationFailed", "two pair classes are isomorphic");
    }
  }
  return classes;
}

GraphInvariants graph_invariants(const Multigraph &g)
{
  GraphInvariants inv;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    inv.degrees.push_back(g.degree(v));
  std::sort(inv.degrees.rbegin(), inv.degrees.rend());
  for (auto const &e : g.edges())
    inv.multiplicities.push_back(e.multiplicity);
  std::sort(inv.multiplicities.begin(), inv.multiplicities.end());
  inv.loops = g.total_loops();
  inv.free_edges = g.total_free_edges();
  return inv;
}

Census build_census(const GroupSpec &spec, const CensusOptions &options)
{
  Census census;
  census.spec = spec;
  census.group = make_group(spec, options.bound);
  census.subgroups = corefree_classes(census.group);
  census.pairs = pair_classes(census.group, options.require_involution);
  census.m = census.subgroups.size();
  census.n = census.pairs.size();
  census.total = census.m * census.n;

  std::vector<AlgebraicMap> maps;
  census.grid.resize(census.m);
  for (std::size_t i = 0; i < census.m; ++i) {
    for (std::size_t j = 0; j < census.n; ++j) {
      auto const &u = census.subgroups[i].representative;
      auto const &p = census.pairs[j].representative;
      AlgebraicMap map = build_map(u, p.rho, p.tau);

      MapCensusEntry entry;
      entry.subgroup_index = i;
      entry.pair_index = j;
      entry.counts = counts(map);
      entry.predicates = structure_predicates(map);
      entry.graph = build_monodromy(u, p.rho, p.tau).graph;
      entry.invariants = graph_invariants(entry.graph);
      entry.graph_planar = is_planar(entry.graph);
      entry.spherical = entry.counts.closed_genus == 0;
      census.grid[i].push_back(std::move(entry));
      maps.push_back(std::move(map));
    }
  }

  if (options.verify_pairwise) {
    for (std::size_t a = 0; a < maps.size(); ++a) {
      for (std::size_t b = a + 1; b < maps.size(); ++b) {
        if (auto w = maps_isomorphic(maps[a], maps[b])) {
          auto const &g = *census.group;
          throw verification_error(
              "VerificationFailed",
              "census cells (" + std::to_string(a / census.n + 1) + "," + std::to_string(a % census.n + 1) +
              ") and (" + std::to_string(b / census.n + 1) + "," + std::to_string(b % census.n + 1) +
              ") are isomorphic maps, y = " + g.element(w->y).to_string());
        }
      }
    }
  }
  return census;
}

std::optional<ReferenceCatalogue> reference_catalogue(const GroupSpec &spec)
{
  using F = GroupSpec::Family;
  if (spec.family == F::Alternating && spec.parameter == 4)
    return ReferenceCatalogue{{"", "(1,3)(2,4)", "(2,3,4)"}, {{"(1,3,2)", "(1,2)(3,4)"}}};
  if (spec.family == F::Symmetric && spec.parameter == 4)
    return ReferenceCatalogue{
        {"", "(1,4)(2,3)", "(3,4)", "(2,3,4)", "(1,4,2,3)", "(3,4);(1,2)(3,4)", "(3,4);(2,3,4)"},
        {{"(1,2,3,4)", "(2,3)"}, {"(1,2,4)", "(2,3)"}}};
  if (spec.family == F::Alternating && spec.parameter == 5)
    return ReferenceCatalogue{{"", "(1,2)(4,5)", "(1,5,4)", "(1,2)(4,5);(1,5)(2,4)", "(1,5,2,4,3)",
                               "(1,5)(3,4);(1,2,5)", "(1,3)(4,5);(1,5,2,4,3)",
                               "(1,5,4);(1,2)(4,5);(1,5)(2,4)"},
                              {{"(1,5,4,3,2)", "(1,2)(3,4)"},
                               {"(1,5,4)", "(1,2)(3,4)"},
                               {"(1,4,2,5,3)", "(1,2)(3,4)"}}};
  return std::nullopt;
}

ReferenceIndexing index_census(const Census &census, const ReferenceCatalogue &catalogue)
{
  auto const &group = census.group;
  ReferenceIndexing idx;

  std::vector<bool> used(catalogue.subgroups.size(), false);
  for (auto const &cls : census.subgroups) {
    std::size_t found = 0;
    for (std::size_t k = 0; k < catalogue.subgroups.size() && !found; ++k) {
      Subgroup ref = parse_subgroup(group, catalogue.subgroups[k]);
      if (!used[k] && conjugating_element(ref, cls.representative)) {
        used[k] = true;
        found = k + 1;
      }
    }
    if (!found)
      throw verification_error("VerificationFailed", "a core-free class matches no catalogue subgroup");
    idx.subgroup.push_back(found);
  }
  if (idx.subgroup.size() != catalogue.subgroups.size())
    throw verification_error("VerificationFailed", "catalogue and census subgroup counts differ");

  auto automorphisms = automorphism_group(*group);
  std::vector<bool> pair_used(catalogue.pairs.size(), false);
  for (auto const &cls : census.pairs) {
    std::size_t found = 0;
    for (std::size_t k = 0; k < catalogue.pairs.size() && !found; ++k) {
      GeneratorPair ref{group->id_of(parse_permutation(catalogue.pairs[k].first, group->degree())),
                        group->id_of(parse_permutation(catalogue.pairs[k].second, group->degree()))};
      if (!pair_used[k] && pairs_isomorphic(automorphisms, ref, cls.representative)) {
        pair_used[k] = true;
        found = k + 1;
      }
    }
    if (!found)
      throw verification_error("VerificationFailed", "a pair class matches no catalogue pair");
    idx.pair.push_back(found);
  }
  if (idx.pair.size() != catalogue.pairs.size())
    throw verification_error("VerificationFailed", "catalogue and census pair counts differ");
  return idx;
}

std::vector<AtlasEntry> planar_atlas(const Census &census)
{
  std::optional<ReferenceIndexing> idx;
  if (auto catalogue = reference_catalogue(census.spec))
    idx = index_census(census, *catalogue);

  std::vector<AtlasEntry> atlas;
  for (auto const &row : census.grid) {
    for (auto const &cell : row) {
      AtlasEntry e;
      e.subgroup_index = cell.subgroup_index;
      e.pair_index = cell.pair_index;
      if (idx) {
        e.reference_subgroup = idx->subgroup[cell.subgroup_index];
        e.reference_pair = idx->pair[cell.pair_index];
      }
      e.graph_planar = cell.graph_planar;
      e.spherical = cell.spherical;
      e.planar = cell.spherical;
      atlas.push_back(e);
    }
  }
  return atlas;
}

std::size_t deduplicated_map_count(const GroupPtr &group, bool require_involution)
{
  auto pairs = generating_pairs(group, require_involution);
  std::vector<AlgebraicMap> classes;
  for (auto const &cls : corefree_classes(group)) {
    for (auto const &u : conjugates(cls.representative)) {
      for (auto const &p : pairs) {
        AlgebraicMap map = build_map(u, p.rho, p.tau);
        bool known = std::any_of(classes.begin(), classes.end(),
                                 [&](const AlgebraicMap &c) { return maps_isomorphic(c, map).has_value(); });
        if (!known)
          classes.push_back(std::move(map));
      }
    }
  }
  return classes.size();
}

} // namespace mongraph
