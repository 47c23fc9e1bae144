#include "mongraph/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "mongraph/errors.hpp"
#include "mongraph/monodromy.hpp"

namespace mongraph {

bool VerificationReport::ok() const
{
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.ok(); });
}

std::string VerificationReport::to_string() const
{
  std::ostringstream out;
  for (auto const &s : suites) {
    out << (s.ok() ? "PASS " : "FAIL ") << group << " " << s.name << " (" << s.checks << " checks)\n";
    for (auto const &f : s.failures)
      out << "  " << f << "\n";
  }
  return out.str();
}

std::vector<ElementId> random_transversal(const CosetSpace &space, std::uint32_t seed)
{
  std::mt19937 rng(seed);
  std::vector<ElementId> result;
  result.reserve(space.size());
  for (CosetId c = 0; c < space.size(); ++c) {
    auto members = space.members(c);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    result.push_back(members[pick(rng)]);
  }
  return result;
}

namespace {

void expect(SuiteResult &suite, bool condition, const std::string &message)
{
  ++suite.checks;
  if (!condition)
    suite.failures.push_back(message);
}

std::string describe(const Subgroup &u, ElementId rho, ElementId tau)
{
  auto const &g = *u.parent();
  std::string gens;
  for (ElementId x : u.generators())
    gens += (gens.empty() ? "" : ";") + g.element(x).to_string();
  return "U=<" + gens + "> rho=" + g.element(rho).to_string() + " tau=" + g.element(tau).to_string();
}

void double_coset_suite(SuiteResult &suite, const std::vector<SubgroupClass> &classes)
{
  for (auto const &a : classes) {
    for (auto const &b : classes) {
      auto const &u = a.representative;
      auto const &v = b.representative;
      auto const &g = *u.parent();
      std::string where = "U order " + std::to_string(u.order()) + ", V order " + std::to_string(v.order());
      try {
        DoubleCosetDecomposition d(u, v);
        std::size_t sum = 0;
        for (auto const &block : d.blocks()) {
          std::size_t meet = intersection(conjugate_subgroup(u, block.representative), v).order();
          expect(suite, block.size * meet == u.order() * v.order(), "block size formula fails for " + where);
          sum += block.size;
        }
        expect(suite, sum == g.order(), "double cosets do not cover G for " + where);
      } catch (const Error &e) {
        expect(suite, false, where + ": " + e.what());
      }
    }
  }
}

struct Suites
{
  SuiteResult valency{"b valency formula", 0, {}};
  SuiteResult transversal{"c transversal independence", 0, {}};
  SuiteResult underlying{"d underlying graph vs monodromy graph", 0, {}};
  SuiteResult criteria{"e structure criteria vs darts", 0, {}};
  SuiteResult automorphisms{"f left automorphisms", 0, {}};
};

void instance_suites(Suites &s, const Subgroup &u, ElementId rho, ElementId tau, const VerifyOptions &options,
                     std::uint32_t seed)
{
  std::string where = describe(u, rho, tau);
  MonodromyGraph mg = build_monodromy(u, rho, tau);
  AlgebraicMap map = build_map(u, rho, tau);

  for (VertexId v = 0; v < mg.graph.vertex_count(); ++v) {
    ElementId rep = mg.vertex_blocks.blocks()[v].representative;
    expect(s.valency, valency(mg, rep) == mg.graph.degree(v),
           where + ": valency differs from degree at " + mg.graph.label(v));
  }

  for (std::size_t k = 0; k < options.random_transversals; ++k) {
    auto t = random_transversal(mg.darts, seed + static_cast<std::uint32_t>(k));
    expect(s.transversal, transversal_independence_check(mg, t),
           where + ": graph changes under random transversal " + std::to_string(k));
  }

  Multigraph ug = underlying_graph(map);
  bool iso = false;
  try {
    iso = are_isomorphic(ug, mg.graph).has_value();
  } catch (const Error &e) {
    expect(s.underlying, false, where + ": " + e.what());
  }
  expect(s.underlying, iso, where + ": underlying graph is not isomorphic to the monodromy graph");

  try {
    structure_predicates(map);
    expect(s.criteria, true, "");
  } catch (const Error &e) {
    expect(s.criteria, false, where + ": " + e.what());
  }

  try {
    auto auts = left_automorphisms(mg);
    expect(s.automorphisms, true, "");
    // A graph made of free edges only has no arcs at all.
    if (u.is_trivial())
      expect(s.automorphisms, arc_orbit_count(mg.graph, auts.permutations) <= 1,
             where + ": arcs are not a single orbit");
  } catch (const Error &e) {
    expect(s.automorphisms, false, where + ": " + e.what());
  }
}

Multigraph path_with_end_loops()
{
  Multigraph g;
  for (const char *name : {"1", "2", "3", "4"})
    g.add_vertex(name);
  g.add_edges(0, 1);
  g.add_edges(1, 2);
  g.add_edges(2, 3);
  g.add_loops(0);
  g.add_loops(3);
  return g;
}

Multigraph complete_graph(std::size_t n)
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

SuiteResult representation_suite(std::size_t bound)
{
  SuiteResult suite{"g representation round trips", 0, {}};
  std::vector<std::pair<std::string, Multigraph>> graphs{
      {"K2", complete_graph(2)}, {"K3", complete_graph(3)}, {"P4+loops", path_with_end_loops()},
      {"K4", complete_graph(4)}};
  for (auto const &[name, g] : graphs) {
    try {
      auto rep = monodromy_representation(g, std::nullopt, bound);
      expect(suite, are_isomorphic(g, rep.rebuilt.graph).has_value(), name + ": round trip lost the graph");
    } catch (const Error &e) {
      expect(suite, false, name + ": " + e.what());
    }
  }
  return suite;
}

} // namespace

VerificationReport verify_group(const GroupSpec &spec, const VerifyOptions &options)
{
  VerificationReport report;
  report.group = spec.to_string();

  GroupPtr group = make_group(spec, options.bound);
  SuiteResult dc{"a double coset sizes", 0, {}};
  double_coset_suite(dc, all_subgroup_classes(group));
  report.suites.push_back(std::move(dc));

  CensusOptions co;
  co.require_involution = options.require_involution;
  co.bound = options.bound;
  Census census = build_census(spec, co);

  Suites s;
  std::uint32_t seed = options.seed;
  for (auto const &cls : census.subgroups) {
    for (auto const &pair : census.pairs) {
      instance_suites(s, cls.representative, pair.representative.rho, pair.representative.tau, options, seed);
      seed += static_cast<std::uint32_t>(options.random_transversals);
    }
  }
  for (auto *suite : {&s.valency, &s.transversal, &s.underlying, &s.criteria, &s.automorphisms})
    report.suites.push_back(std::move(*suite));
  report.suites.push_back(representation_suite(options.bound));
  return report;
}

VerificationReport verify_instance(const Subgroup &stabilizer, ElementId rho, ElementId tau,
                                   const VerifyOptions &options)
{
  VerificationReport report;
  report.group = describe(stabilizer, rho, tau);
  Suites s;
  instance_suites(s, stabilizer, rho, tau, options, options.seed);
  for (auto *suite : {&s.valency, &s.transversal, &s.underlying, &s.criteria, &s.automorphisms})
    report.suites.push_back(std::move(*suite));
  return report;
}

} // namespace mongraph
