#include "mongraph/monodromy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mongraph/errors.hpp"

namespace mongraph {

void check_generating_pair(const FiniteGroup &group, ElementId rho, ElementId tau)
{
  if (rho >= group.order() || tau >= group.order())
    throw precondition_error("NotInGroup", "rho and tau must be group elements");
  if (group.mul(tau, tau) != FiniteGroup::identity())
    throw precondition_error("NotInvolution",
                             "tau = " + group.element(tau).to_string() + " does not square to 1");
  if (group.closure({rho, tau}).size() != group.order())
    throw precondition_error("NotGenerating", "<rho, tau> is a proper subgroup of G");
}

MonodromyGraph build_monodromy(const Subgroup &stabilizer, ElementId rho, ElementId tau)
{
  CosetSpace darts(stabilizer.parent(), stabilizer);
  return build_monodromy(stabilizer, rho, tau, darts.representatives());
}

MonodromyGraph build_monodromy(const Subgroup &stabilizer, ElementId rho, ElementId tau,
                               const std::vector<ElementId> &transversal)
{
  const GroupPtr &group = stabilizer.parent();
  check_generating_pair(*group, rho, tau);

  MonodromyGraph mg;
  mg.group = group;
  mg.stabilizer = stabilizer;
  mg.rho = rho;
  mg.tau = tau;
  mg.rotation = Subgroup::generated(group, {rho});
  mg.darts = CosetSpace(group, stabilizer);
  mg.vertex_blocks = DoubleCosetDecomposition(stabilizer, mg.rotation);
  mg.core_free = core(stabilizer).is_trivial();

  if (!is_right_transversal(mg.darts, transversal))
    throw precondition_error("InvalidTransversal",
                             "supplied elements are not a right transversal of U");
  mg.transversal = transversal;

  for (auto const &block : mg.vertex_blocks.blocks())
    mg.graph.add_vertex(group->element(block.representative).to_string());

  auto const &S = mg.transversal;
  auto coset = [&](ElementId g) { return mg.darts.coset_of(g); };
  auto vertex = [&](ElementId g) { return mg.vertex_of(g); };

  std::vector<std::size_t> free_darts(mg.graph.vertex_count(), 0);
  for (ElementId h : S) {
    if (coset(group->mul(h, tau)) == coset(h))
      ++free_darts[vertex(h)];
  }

  // One witness set D per edge {Uh<rho>, Uh tau<rho>}, h in S.
  std::set<std::pair<VertexId, VertexId>> done;
  for (ElementId h : S) {
    VertexId a = vertex(h);
    VertexId b = vertex(group->mul(h, tau));
    if (!done.insert({a, b}).second)
      continue;
    done.insert({b, a});

    auto witnesses = [&](VertexId from, VertexId to) {
      std::size_t count = 0;
      for (ElementId g : S) {
        if (vertex(g) == from && vertex(group->mul(g, tau)) == to)
          ++count;
      }
      return count;
    };

    std::size_t d = witnesses(a, b);
    if (a != b) {
      // Each edge between distinct double cosets has exactly one dart on the
      // a side, so |D| is the edge count; the b side must agree.
      if (witnesses(b, a) != d)
        throw verification_error("VerificationFailed", "asymmetric edge witness count");
      mg.graph.add_edges(a, b, d);
    } else {
      // D holds both darts of every loop plus the single dart of every free
      // edge at this vertex.
      std::size_t loop_darts = d - free_darts[a];
      if (loop_darts % 2 != 0)
        throw verification_error("VerificationFailed", "odd number of loop darts");
      mg.graph.add_loops(a, loop_darts / 2);
    }
  }

  for (VertexId v = 0; v < free_darts.size(); ++v)
    mg.graph.add_free_edges(v, free_darts[v]);

  return mg;
}

std::size_t valency(const MonodromyGraph &mg, ElementId h)
{
  if (h >= mg.group->order())
    throw precondition_error("NotInGroup", "h is not a group element");
  Subgroup meet = intersection(mg.rotation, conjugate_subgroup(mg.stabilizer, h));
  return mg.rotation.order() / meet.order();
}

std::vector<VertexId> neighborhood(const MonodromyGraph &mg, ElementId k)
{
  auto const &group = *mg.group;
  if (k >= group.order())
    throw precondition_error("NotInGroup", "k is not a group element");

  std::set<VertexId> result;
  VertexId home = mg.vertex_of(k);
  for (ElementId g = 0; g < group.order(); ++g) {
    if (mg.vertex_of(g) != home)
      continue;
    ElementId gt = group.mul(g, mg.tau);
    if (mg.darts.coset_of(gt) != mg.darts.coset_of(g))
      result.insert(mg.vertex_of(gt));
  }
  return {result.begin(), result.end()};
}

bool transversal_independence_check(const MonodromyGraph &mg,
                                    const std::vector<ElementId> &alternative)
{
  MonodromyGraph rebuilt = build_monodromy(mg.stabilizer, mg.rho, mg.tau, alternative);
  return rebuilt.graph == mg.graph;
}

VertexPermutation left_action(const MonodromyGraph &mg, ElementId a)
{
  auto const &group = *mg.group;
  VertexPermutation perm(mg.graph.vertex_count());
  for (VertexId v = 0; v < perm.size(); ++v) {
    ElementId rep = mg.vertex_blocks.blocks()[v].representative;
    perm[v] = mg.vertex_of(group.mul(group.inv(a), rep));
  }
  return perm;
}

namespace {

bool preserves_structure(const Multigraph &g, const VertexPermutation &perm)
{
  std::vector<bool> hit(perm.size(), false);
  for (VertexId v : perm) {
    if (v >= perm.size() || hit[v])
      return false;
    hit[v] = true;
  }
  for (VertexId v = 0; v < perm.size(); ++v) {
    if (g.loop_count(v) != g.loop_count(perm[v]) ||
        g.free_edge_count(v) != g.free_edge_count(perm[v]))
      return false;
  }
  for (auto const &e : g.edges()) {
    if (g.multiplicity(perm[e.u], perm[e.v]) != e.multiplicity)
      return false;
  }
  return true;
}

VertexPermutation compose_vertex_perms(const VertexPermutation &first,
                                       const VertexPermutation &second)
{
  VertexPermutation result(first.size());
  for (VertexId v = 0; v < first.size(); ++v)
    result[v] = second[first[v]];
  return result;
}

template <class Item, class Step>
std::size_t count_orbits(const std::vector<Item> &items, Step step,
                         const std::vector<VertexPermutation> &perms)
{
  std::map<Item, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i)
    index.emplace(items[i], i);

  std::vector<bool> seen(items.size(), false);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < items.size(); ++start) {
    if (seen[start])
      continue;
    ++orbits;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (auto const &perm : perms) {
        auto it = index.find(step(items[i], perm));
        if (it == index.end())
          throw verification_error("VerificationFailed", "permutation leaves the item set");
        if (!seen[it->second]) {
          seen[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

} // namespace

LeftAutomorphismGroup left_automorphisms(const MonodromyGraph &mg)
{
  Subgroup n = normalizer(mg.stabilizer);

  std::set<VertexPermutation> distinct;
  for (ElementId a : n.elements()) {
    VertexPermutation perm = left_action(mg, a);
    if (!preserves_structure(mg.graph, perm))
      throw verification_error("VerificationFailed",
                               "a_L for a = " + mg.group->element(a).to_string() +
                               " is not a graph automorphism");
    distinct.insert(std::move(perm));
  }

  for (auto const &p : distinct) {
    for (auto const &q : distinct) {
      if (!distinct.count(compose_vertex_perms(p, q)))
        throw verification_error("VerificationFailed", "the a_L are not closed under composition");
    }
  }

  return {n.order(), {distinct.begin(), distinct.end()}};
}

std::size_t vertex_orbit_count(const Multigraph &g, const std::vector<VertexPermutation> &perms)
{
  std::vector<VertexId> vertices(g.vertex_count());
  for (VertexId v = 0; v < vertices.size(); ++v)
    vertices[v] = v;
  return count_orbits(vertices, [](VertexId v, const VertexPermutation &p) { return p[v]; },
                      perms);
}

std::size_t arc_orbit_count(const Multigraph &g, const std::vector<VertexPermutation> &perms)
{
  using Arc = std::pair<VertexId, VertexId>;
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : g.neighbours(v))
      arcs.emplace_back(v, w);
  }
  return count_orbits(arcs,
                      [](const Arc &a, const VertexPermutation &p) { return Arc{p[a.first], p[a.second]}; },
                      perms);
}

MonodromyGraph arc_transitive_companion(const GroupPtr &group, ElementId rho, ElementId tau)
{ return build_monodromy(Subgroup::trivial(group), rho, tau); }

MonodromyRepresentation monodromy_representation(const Multigraph &sigma,
                                                 const std::optional<RotationSystem> &rotation,
                                                 std::size_t bound)
{
  if (sigma.vertex_count() == 0 || sigma.dart_count() == 0)
    throw precondition_error("EmptyGraph", "the graph has no darts");
  if (!is_connected(sigma))
    throw precondition_error("NotConnected", "the graph is not connected");

  std::size_t n = sigma.dart_count();
  std::vector<std::vector<Point>> darts_at(sigma.vertex_count());
  std::vector<Point> reversal(n);
  Point next = 0;

  // Ordinary edges: the k-th copy's dart at u is reversed to the k-th
  // copy's dart at v.
  auto records = sigma.edges();
  std::vector<std::vector<Point>> u_side(records.size());
  std::vector<std::vector<Point>> v_side(records.size());
  for (VertexId v = 0; v < sigma.vertex_count(); ++v) {
    for (std::size_t r = 0; r < records.size(); ++r) {
      auto const &e = records[r];
      if (e.u != v && e.v != v)
        continue;
      for (std::size_t k = 0; k < e.multiplicity; ++k) {
        darts_at[v].push_back(next);
        (e.u == v ? u_side : v_side)[r].push_back(next);
        ++next;
      }
    }
    for (std::size_t k = 0; k < sigma.loop_count(v); ++k) {
      reversal[next] = next + 1;
      reversal[next + 1] = next;
      darts_at[v].push_back(next);
      darts_at[v].push_back(next + 1);
      next += 2;
    }
    for (std::size_t k = 0; k < sigma.free_edge_count(v); ++k) {
      reversal[next] = next;
      darts_at[v].push_back(next);
      ++next;
    }
  }
  for (std::size_t r = 0; r < records.size(); ++r) {
    for (std::size_t k = 0; k < u_side[r].size(); ++k) {
      reversal[u_side[r][k]] = v_side[r][k];
      reversal[v_side[r][k]] = u_side[r][k];
    }
  }

  std::vector<Point> turn(n);
  for (VertexId v = 0; v < sigma.vertex_count(); ++v) {
    auto const &local = darts_at[v];
    std::vector<std::size_t> order(local.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;

    if (rotation) {
      if (rotation->size() != sigma.vertex_count())
        throw precondition_error("InvalidRotation", "rotation needs one entry per vertex");
      order = (*rotation)[v];
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted.size() != local.size() || sorted[i] != i)
          throw precondition_error("InvalidRotation",
                                   "rotation at vertex " + sigma.label(v) +
                                   " is not a cyclic order of its darts");
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i)
      turn[local[order[i]]] = local[order[(i + 1) % order.size()]];
  }

  MonodromyRepresentation rep;
  rep.rho_darts = Permutation(turn);
  rep.tau_darts = Permutation(reversal);
  rep.group = generate_group({rep.rho_darts, rep.tau_darts}, bound);
  rep.rho = rep.group->id_of(rep.rho_darts);
  rep.tau = rep.group->id_of(rep.tau_darts);

  std::vector<ElementId> fixing;
  for (ElementId g = 0; g < rep.group->order(); ++g) {
    if (rep.group->element(g)[0] == 0)
      fixing.push_back(g);
  }
  rep.stabilizer = Subgroup::from_elements(rep.group, std::move(fixing));
  rep.rebuilt = build_monodromy(rep.stabilizer, rep.rho, rep.tau);

  auto iso = are_isomorphic(sigma, rep.rebuilt.graph);
  if (!iso)
    throw verification_error("VerificationFailed",
                             "rebuilt monodromy graph is not isomorphic to the input");
  rep.certificate = std::move(*iso);
  return rep;
}

} // namespace mongraph
