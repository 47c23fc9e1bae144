#include "mongraph/algmap.hpp"

#include <algorithm>
#include <map>

#include "mongraph/errors.hpp"
#include "mongraph/monodromy.hpp"

namespace mongraph {

namespace {

Permutation dart_action(const CosetSpace &darts, ElementId g)
{
  std::vector<Point> images(darts.size());
  for (CosetId c = 0; c < darts.size(); ++c)
    images[c] = darts.act(c, g);
  return Permutation(std::move(images));
}

bool transitive(const Permutation &a, const Permutation &b)
{
  std::size_t n = a.degree();
  if (n == 0)
    return true;
  std::vector<bool> seen(n, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (Point q : {a[p], b[p]}) {
      if (!seen[q]) {
        seen[q] = true;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  return reached == n;
}

} // namespace

AlgebraicMap build_map(const Subgroup &stabilizer, ElementId rho, ElementId tau)
{
  const GroupPtr &group = stabilizer.parent();
  check_generating_pair(*group, rho, tau);
  if (!core(stabilizer).is_trivial())
    throw precondition_error("CoreNotTrivial", "the dart stabilizer contains a normal subgroup of G");

  AlgebraicMap m;
  m.group = group;
  m.stabilizer = stabilizer;
  m.rho = rho;
  m.tau = tau;
  m.darts = CosetSpace(group, stabilizer);
  m.rho_action = dart_action(m.darts, rho);
  m.tau_action = dart_action(m.darts, tau);

  if (!(m.tau_action * m.tau_action).is_identity())
    throw verification_error("VerificationFailed", "tau does not act as an involution on darts");
  if (!transitive(m.rho_action, m.tau_action))
    throw verification_error("VerificationFailed", "<rho, tau> is not transitive on darts");
  return m;
}

Permutation face_permutation(const AlgebraicMap &m)
{
  Permutation faces = m.rho_action * m.tau_action;
  if (faces.cycle_count() != (m.tau_action * m.rho_action).cycle_count())
    throw verification_error("VerificationFailed", "rho*tau and tau*rho have different cycle counts");
  return faces;
}

MapCounts counts(const AlgebraicMap &m)
{
  MapCounts c;
  c.darts = m.darts.size();
  c.vertices = m.rho_action.cycle_count();
  c.edges = m.tau_action.cycle_count();
  c.faces = face_permutation(m).cycle_count();
  for (Point d = 0; d < c.darts; ++d) {
    if (m.tau_action[d] == d)
      ++c.free_edges;
  }

  c.euler = static_cast<long>(c.vertices) - static_cast<long>(c.edges) + static_cast<long>(c.faces);
  if (c.free_edges != 0)
    c.genus_note = "map has free edges";
  else if (c.euler % 2 != 0)
    c.genus_note = "odd Euler characteristic";
  else
    c.genus = (2 - c.euler) / 2;

  c.closed_euler = c.euler + static_cast<long>(c.free_edges);
  if (c.closed_euler % 2 != 0)
    throw verification_error("VerificationFailed", "closed Euler characteristic is odd");
  c.closed_genus = (2 - c.closed_euler) / 2;
  return c;
}

Multigraph underlying_graph(const AlgebraicMap &m)
{
  auto const &group = *m.group;
  auto cycles = m.rho_action.cycles();

  // Name each rho-cycle by the least group element over its cosets.
  std::vector<std::pair<ElementId, std::size_t>> named;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    ElementId least = static_cast<ElementId>(group.order());
    for (Point d : cycles[i]) {
      for (ElementId g : m.darts.members(d))
        least = std::min(least, g);
    }
    named.emplace_back(least, i);
  }
  std::sort(named.begin(), named.end());

  Multigraph graph;
  std::vector<VertexId> vertex_of_dart(m.darts.size());
  for (auto const &[least, i] : named) {
    VertexId v = graph.add_vertex(group.element(least).to_string());
    for (Point d : cycles[i])
      vertex_of_dart[d] = v;
  }

  for (auto const &edge : m.tau_action.cycles()) {
    VertexId a = vertex_of_dart[edge.front()];
    if (edge.size() == 1)
      graph.add_free_edges(a);
    else
      graph.add_edges(a, vertex_of_dart[edge.back()]);
  }
  return graph;
}

StructurePredicates structure_criteria(const AlgebraicMap &m)
{
  auto const &group = *m.group;
  std::size_t n = group.element_order(m.rho);
  std::vector<ElementId> rho_pow(n);
  for (std::size_t i = 0; i < n; ++i)
    rho_pow[i] = group.power(m.rho, static_cast<long long>(i));

  StructurePredicates p;
  bool simple_i = true;
  bool simple_ii = true;
  for (ElementId g : m.darts.representatives()) {
    Subgroup ug = conjugate_subgroup(m.stabilizer, g);
    auto in = [&](ElementId x) { return ug.contains(x); };

    bool tau_in = in(m.tau);
    if (tau_in)
      p.has_free_edges = true;

    bool some_tau_rho = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (in(group.mul(m.tau, rho_pow[i]))) {
        some_tau_rho = true;
        if (!tau_in)
          p.has_loops = true;
      }
    }
    if (some_tau_rho)
      simple_i = false;

    for (std::size_t i = 0; i < n; ++i) {
      ElementId trt = group.mul(group.mul(m.tau, rho_pow[i]), m.tau);
      for (std::size_t j = 0; j < n; ++j) {
        if (!in(group.mul(trt, rho_pow[j])))
          continue;
        if (!in(trt))
          simple_ii = false;
        if (i != 0 && j != 0 && !in(trt) && !some_tau_rho)
          p.has_multiple_edges = true;
      }
    }
  }
  p.is_simple = simple_i && simple_ii;
  return p;
}

StructurePredicates dart_structure(const AlgebraicMap &m)
{
  Multigraph g = underlying_graph(m);
  StructurePredicates p;
  p.has_free_edges = g.total_free_edges() > 0;
  p.has_loops = g.total_loops() > 0;
  for (auto const &e : g.edges()) {
    if (e.multiplicity > 1)
      p.has_multiple_edges = true;
  }
  p.is_simple = !p.has_free_edges && !p.has_loops && !p.has_multiple_edges;
  return p;
}

StructurePredicates structure_predicates(const AlgebraicMap &m)
{
  StructurePredicates criteria = structure_criteria(m);
  StructurePredicates darts = dart_structure(m);
  auto check = [](bool a, bool b, const char *name) {
    if (a != b)
      throw verification_error("CriterionMismatch",
                               std::string(name) + ": group criterion says " + (a ? "true" : "false") +
                               ", darts say " + (b ? "true" : "false"));
  };
  check(criteria.has_free_edges, darts.has_free_edges, "has_free_edges");
  check(criteria.has_loops, darts.has_loops, "has_loops");
  check(criteria.has_multiple_edges, darts.has_multiple_edges, "has_multiple_edges");
  check(criteria.is_simple, darts.is_simple, "is_simple");
  return criteria;
}

std::optional<MapIsomorphismWitness> maps_isomorphic(const AlgebraicMap &m1, const AlgebraicMap &m2)
{
  if (m1.darts.size() != m2.darts.size())
    return std::nullopt;
  const ElementId src[] = {m1.rho, m1.tau};
  const ElementId dst[] = {m2.rho, m2.tau};
  auto sigma = extend_to_isomorphism(*m1.group, src, *m2.group, dst);
  if (!sigma)
    return std::nullopt;

  std::vector<ElementId> image;
  image.reserve(m1.stabilizer.order());
  for (ElementId u : m1.stabilizer.elements())
    image.push_back((*sigma)(u));
  std::sort(image.begin(), image.end());
  Subgroup moved = Subgroup::from_elements(m2.group, std::move(image));

  auto y = conjugating_element(m2.stabilizer, moved);
  if (!y)
    return std::nullopt;
  return MapIsomorphismWitness{std::move(*sigma), *y};
}

bool is_regular(const AlgebraicMap &m) { return m.stabilizer.is_trivial(); }

} // namespace mongraph
