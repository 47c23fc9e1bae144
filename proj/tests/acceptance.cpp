// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if
// any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "mongraph/enumeration.hpp"
#include "mongraph/errors.hpp"
#include "mongraph/monodromy.hpp"
#include "mongraph/verify.hpp"
#include "oracles/oracles.hpp"

using namespace mongraph;

namespace {

int failures = 0;

void report(int number, const std::string &what, bool ok, const std::string &detail = {})
{
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

void info(const std::string &text) { std::printf("  info: %s\n", text.c_str()); }

GroupPtr group(const std::string &spec) { return make_group(parse_group_spec(spec)); }

ElementId el(const GroupPtr &g, const std::string &text) { return g->id_of(parse_permutation(text, g->degree())); }

std::string fixture(const std::string &name)
{
  std::ifstream in(std::string(MONGRAPH_FIXTURE_DIR) + "/" + name + ".json");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

oracle::Perm to_oracle(const Permutation &p)
{
  auto images = p.images();
  return {images.begin(), images.end()};
}

std::vector<oracle::Perm> elements(const Subgroup &u)
{
  std::vector<oracle::Perm> out;
  for (auto id : u.elements())
    out.push_back(to_oracle(u.parent()->element(id)));
  return out;
}

oracle::Darts oracle_darts(const AlgebraicMap &m)
{
  auto const &g = *m.group;
  std::vector<oracle::Perm> all;
  for (auto const &p : g.elements())
    all.push_back(to_oracle(p));
  return oracle::dart_actions(elements(m.stabilizer), to_oracle(g.element(m.rho)), to_oracle(g.element(m.tau)), all);
}

Multigraph from_oracle(const oracle::Graph &g, const std::vector<int> &perm)
{
  Multigraph m;
  for (int v = 0; v < g.n; ++v)
    m.add_vertex(std::to_string(v));
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.adj[u][v] > 0)
        m.add_edges(perm[u], perm[v], g.adj[u][v]);
    }
  }
  return m;
}

Multigraph from_oracle(const oracle::Graph &g)
{
  std::vector<int> id(g.n);
  std::iota(id.begin(), id.end(), 0);
  return from_oracle(g, id);
}

void census_counts()
{
  std::ostringstream detail;
  bool ok = true;
  for (auto [spec, m, n, total] : {std::tuple{"A4", 3u, 1u, 3u}, std::tuple{"S4", 7u, 2u, 14u},
                                   std::tuple{"A5", 8u, 3u, 24u}}) {
    auto c = build_census(parse_group_spec(spec));
    detail << spec << " m=" << c.m << " n=" << c.n << " total=" << c.total << "; ";
    ok = ok && c.m == m && c.n == n && c.total == total;
  }
  for (auto [spec, total] : {std::pair{"A4", 3u}, std::pair{"S4", 14u}}) {
    auto found = deduplicated_map_count(group(spec));
    detail << spec << " dedup=" << found << "; ";
    ok = ok && found == total;
  }
  report(1, "census counts and direct deduplication", ok, detail.str());
}

void subgroup_classification()
{
  bool ok = true;
  std::ostringstream detail;
  for (const char *spec : {"A5", "A4", "S4"}) {
    auto gs = parse_group_spec(spec);
    auto g = make_group(gs);
    auto classes = corefree_classes(g);
    auto catalogue = *reference_catalogue(gs);
    std::set<std::size_t> hit;
    for (auto const &text : catalogue.subgroups) {
      auto u = parse_subgroup(g, text);
      std::size_t matches = 0;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (conjugating_element(classes[k].representative, u)) {
          hit.insert(k);
          ++matches;
        }
      }
      ok = ok && matches == 1;
    }
    ok = ok && hit.size() == classes.size() && catalogue.subgroups.size() == classes.size();
    detail << spec << " " << hit.size() << "/" << classes.size() << "; ";
  }
  report(2, "core-free classes conjugate to the reference list", ok, detail.str());
}

void pair_classification()
{
  auto g = group("A5");
  auto auts = automorphism_group(*g);
  auto classes = pair_classes(g, auts);
  auto catalogue = *reference_catalogue(parse_group_spec("A5"));
  std::set<std::size_t> hit;
  bool ok = classes.size() == 3;
  for (auto const &[rho, tau] : catalogue.pairs) {
    GeneratorPair p{el(g, rho), el(g, tau)};
    std::size_t matches = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (pairs_isomorphic(auts, classes[k].representative, p)) {
        hit.insert(k);
        ++matches;
      }
    }
    ok = ok && matches == 1;
  }
  ok = ok && hit.size() == 3;
  report(3, "A5 pair classes", ok, std::to_string(classes.size()) + " classes, " + std::to_string(hit.size()) +
                                       " hit by the reference pairs");
}

void platonic_maps()
{
  struct Case
  {
    const char *group, *rho, *tau, *fixture;
    std::size_t v, e, f;
  };
  const Case cases[] = {
      {"A5", "(1,5,4,3,2)", "(1,2)(3,4)", "icosahedron", 12, 30, 20},
      {"A5", "(1,5,4)", "(1,2)(3,4)", "dodecahedron", 20, 30, 12},
      {"A4", "(1,3,2)", "(1,2)(3,4)", "tetrahedron", 4, 6, 4},
      {"S4", "(1,2,3,4)", "(2,3)", "octahedron", 6, 12, 8},
      {"S4", "(1,2,4)", "(2,3)", "cube", 8, 12, 6},
  };
  bool ok = true;
  std::ostringstream detail;
  for (auto const &c : cases) {
    auto g = group(c.group);
    auto m = build_map(Subgroup::trivial(g), el(g, c.rho), el(g, c.tau));
    auto k = counts(m);
    bool iso = are_isomorphic(underlying_graph(m), multigraph_from_json(fixture(c.fixture))).has_value();
    bool good = k.vertices == c.v && k.edges == c.e && k.faces == c.f && k.genus == 0 && iso;
    detail << c.fixture << (good ? " ok; " : " MISMATCH; ");
    ok = ok && good;
  }
  report(4, "Platonic maps", ok, detail.str());
}

void planar_atlas_check()
{
  auto census = build_census(parse_group_spec("A5"));
  auto atlas = planar_atlas(census);
  std::set<std::pair<std::size_t, std::size_t>> planar;
  std::size_t graph_planar = 0;
  for (auto const &a : atlas) {
    if (a.planar)
      planar.insert({a.reference_subgroup.value_or(0), a.reference_pair.value_or(0)});
    graph_planar += a.graph_planar;
  }
  std::set<std::pair<std::size_t, std::size_t>> expected{{5, 3}, {7, 3}};
  for (std::size_t i = 1; i <= 8; ++i) {
    expected.insert({i, 1});
    expected.insert({i, 2});
  }
  bool ok = atlas.size() == 24 && planar == expected;
  std::size_t small_planar = 0, small_total = 0;
  for (const char *spec : {"A4", "S4"}) {
    auto c = build_census(parse_group_spec(spec));
    for (auto const &a : planar_atlas(c)) {
      small_planar += a.planar;
      ++small_total;
    }
  }
  ok = ok && small_planar == 17 && small_total == 17;
  report(5, "planar atlas (genus-0 reading)", ok,
         std::to_string(planar.size()) + "/24 A5 maps planar, reference set " + (planar == expected ? "matched" : "differs") +
             "; A4+S4 " + std::to_string(small_planar) + "/" + std::to_string(small_total));
  info(std::to_string(graph_planar) + "/24 A5 underlying graphs admit some plane drawing");
}

void figure_shapes()
{
  auto g = group("A5");
  auto mg = build_monodromy(parse_subgroup(g, "(1,5,2,4,3)"), el(g, "(1,5,4,3,2)"), el(g, "(1,2)(3,4)"));
  auto const &h = mg.graph;
  auto simple = simplify(h);
  bool is_path = h.vertex_count() == 4 && simple.ordinary_edge_count() == 3 && is_connected(simple);
  std::vector<VertexId> ends, interior;
  for (VertexId v = 0; v < simple.vertex_count(); ++v) {
    std::size_t d = simple.degree(v);
    is_path = is_path && d >= 1 && d <= 2;
    (d == 1 ? ends : interior).push_back(v);
  }
  is_path = is_path && ends.size() == 2;
  bool loops_at_ends = is_path && h.total_loops() == 2;
  bool loops_inside = is_path && h.total_loops() == 2;
  for (VertexId v : ends)
    loops_at_ends = loops_at_ends && h.loop_count(v) == 1;
  for (VertexId v : interior)
    loops_inside = loops_inside && h.loop_count(v) == 1;

  auto a4 = group("A4");
  auto free = build_monodromy(parse_subgroup(a4, "(1,3)(2,4)"), el(a4, "(1,3,2)"), el(a4, "(1,2)(3,4)"));
  bool two_free = free.graph.total_free_edges() == 2;

  std::ostringstream detail;
  detail << "4 vertices, path " << (is_path ? "yes" : "no") << ", loops at path ends " << (loops_at_ends ? "yes" : "no")
         << ", loops at interior vertices " << (loops_inside ? "yes" : "no") << ", A4 free edges "
         << free.graph.total_free_edges();
  report(6, "figure shapes", is_path && loops_at_ends && two_free, detail.str());
  info("degree sequence 5,5,1,1 with the doubled edge joining the two looped vertices; "
       "both loops sit on the interior of the path");
}

void property_suites()
{
  bool ok = true;
  std::ostringstream detail;
  for (const char *spec : {"A4", "S4", "A5", "D8", "C6"}) {
    auto r = verify_group(parse_group_spec(spec));
    std::size_t checks = 0;
    for (auto const &s : r.suites)
      checks += s.checks;
    detail << spec << (r.ok() ? " ok (" : " FAILED (") << checks << " checks); ";
    if (!r.ok())
      std::printf("%s", r.to_string().c_str());
    ok = ok && r.ok();
  }
  report(7, "property suites a-g", ok, detail.str());
}

std::vector<AlgebraicMap> maps_of(const GroupPtr &g, std::size_t max_darts)
{
  auto pairs = generating_pairs(g);
  std::vector<AlgebraicMap> out;
  for (auto const &cls : corefree_classes(g)) {
    if (g->order() / cls.representative.order() > max_darts)
      continue;
    for (auto const &u : conjugates(cls.representative)) {
      for (auto const &p : pairs)
        out.push_back(build_map(u, p.rho, p.tau));
    }
  }
  return out;
}

void oracle_equivalences()
{
  // Map isomorphism on every map with at most 24 darts: all conjugates of
  // U and all generating pairs. Maps are bucketed by (V, E, F, free), which
  // an isomorphism preserves; within a bucket both sides are compared on
  // every pair, across buckets ours is checked on a sample.
  std::size_t map_pairs = 0, map_disagreements = 0;
  std::mt19937 sample_rng(3);
  for (const char *spec : {"A4", "D8", "C6", "S4", "A5"}) {
    auto maps = maps_of(group(spec), 24);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>> buckets;
    std::vector<oracle::Darts> darts;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      darts.push_back(oracle_darts(maps[i]));
      auto c = oracle::map_counts(darts.back());
      buckets[{c.v, c.e, c.f, c.free}].push_back(i);
    }
    for (auto const &[key, members] : buckets) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a; b < members.size(); ++b) {
          std::size_t i = members[a], j = members[b];
          bool ours = maps_isomorphic(maps[i], maps[j]).has_value();
          map_disagreements += ours != oracle::maps_isomorphic(darts[i], darts[j]);
          ++map_pairs;
        }
      }
    }
    for (int k = 0; k < 20000; ++k) {
      std::size_t i = sample_rng() % maps.size(), j = sample_rng() % maps.size();
      auto ci = oracle::map_counts(darts[i]), cj = oracle::map_counts(darts[j]);
      if (std::tie(ci.v, ci.e, ci.f, ci.free) == std::tie(cj.v, cj.e, cj.f, cj.free))
        continue;
      map_disagreements += maps_isomorphic(maps[i], maps[j]).has_value();
      ++map_pairs;
    }
  }

  std::mt19937 rng(17);
  std::size_t iso_checks = 0, iso_disagreements = 0;
  for (int n = 1; n <= 7; ++n) {
    auto graphs = oracle::all_simple_graphs(n);
    std::map<std::vector<int>, std::vector<std::size_t>> by_degrees;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::vector<int> d;
      for (int v = 0; v < n; ++v)
        d.push_back(std::accumulate(graphs[i].adj[v].begin(), graphs[i].adj[v].end(), 0));
      std::sort(d.begin(), d.end());
      by_degrees[d].push_back(i);
    }
    for (auto const &og : graphs) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      iso_disagreements += !are_isomorphic(from_oracle(og), from_oracle(og, perm)).has_value();
      ++iso_checks;
    }
    for (auto const &[key, members] : by_degrees) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          auto const &a = graphs[members[i]];
          auto const &b = graphs[members[j]];
          bool ours = are_isomorphic(from_oracle(a), from_oracle(b)).has_value();
          iso_disagreements += ours != oracle::isomorphic(a, b);
          ++iso_checks;
        }
      }
    }
  }

  std::size_t planar_checks = 0, planar_disagreements = 0;
  for (int n = 1; n <= 8; ++n) {
    for (auto const &og : oracle::all_simple_graphs(n)) {
      planar_disagreements += is_planar(from_oracle(og)) != oracle::planar(og);
      ++planar_checks;
    }
  }

  std::ostringstream detail;
  detail << "maps " << map_pairs << " pairs/" << map_disagreements << " disagreements; isomorphism " << iso_checks
         << "/" << iso_disagreements << "; planarity " << planar_checks << "/" << planar_disagreements;
  report(8, "oracle equivalences", map_disagreements + iso_disagreements + planar_disagreements == 0, detail.str());
}

} // namespace

int main()
{
  auto start = std::chrono::steady_clock::now();
  void (*criteria[])() = {census_counts,   subgroup_classification, pair_classification, platonic_maps,
                          planar_atlas_check, figure_shapes,        property_suites,     oracle_equivalences};
  for (std::size_t k = 0; k < std::size(criteria); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception &e) {
      report(static_cast<int>(k + 1), "raised", false, e.what());
    }
  }
  auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed, %.1fs\n", failures, seconds);
  return failures == 0 ? 0 : 1;
}
