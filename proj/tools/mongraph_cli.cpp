#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "mongraph/algmap.hpp"
#include "mongraph/enumeration.hpp"
#include "mongraph/errors.hpp"
#include "mongraph/monodromy.hpp"
#include "mongraph/serialize.hpp"
#include "mongraph/verify.hpp"

using namespace mongraph;
namespace fs = std::filesystem;

namespace {

struct Instance
{
  std::string group;
  std::string subgroup;
  std::string rho;
  std::string tau;
};

struct Resolved
{
  GroupSpec spec;
  GroupPtr group;
  Subgroup u;
  ElementId rho = 0;
  ElementId tau = 0;
};

ElementId element(const GroupPtr &g, const std::string &text)
{
  return g->id_of(parse_permutation(text, g->degree()));
}

Resolved resolve(const Instance &in, std::size_t bound)
{
  Resolved r;
  r.spec = parse_group_spec(in.group);
  r.group = make_group(r.spec, bound);
  r.u = parse_subgroup(r.group, in.subgroup);
  r.rho = element(r.group, in.rho);
  r.tau = element(r.group, in.tau);
  return r;
}

void write_file(const fs::path &path, const std::string &text)
{
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw precondition_error("OutputError", "cannot write " + path.string());
  out << text;
}

std::string read_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw parse_error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int cmd_mon(const Instance &in, const std::string &format, const std::string &out, std::size_t bound)
{
  Resolved r = resolve(in, bound);
  MonodromyGraph mg = build_monodromy(r.u, r.rho, r.tau);
  std::string summary = monodromy_summary(mg);

  std::string artifact;
  if (format == "dot")
    artifact = to_dot(mg.graph, "Mon");
  else if (format == "json")
    artifact = monodromy_json(mg, r.spec.to_string());

  if (!out.empty()) {
    write_file(out, artifact.empty() ? to_dot(mg.graph, "Mon") : artifact);
    std::cout << summary;
  } else if (!artifact.empty()) {
    std::cerr << summary;
    std::cout << artifact;
  } else {
    std::cout << summary;
  }
  return 0;
}

int cmd_map(const Instance &in, bool json, std::size_t bound)
{
  Resolved r = resolve(in, bound);
  AlgebraicMap m = build_map(r.u, r.rho, r.tau);
  MapCounts c = counts(m);
  StructurePredicates p = structure_predicates(m);
  std::cout << (json ? map_json(m, c, p) : map_summary(m, c, p));
  return 0;
}

int cmd_census(const std::string &group, bool atlas, const std::string &out, bool json,
               bool require_involution, std::size_t bound)
{
  CensusOptions options;
  options.bound = bound;
  options.require_involution = require_involution;
  Census census = build_census(parse_group_spec(group), options);

  std::vector<AtlasEntry> entries;
  if (atlas)
    entries = planar_atlas(census);
  const std::vector<AtlasEntry> *atlas_ptr = atlas ? &entries : nullptr;

  if (json) {
    std::cout << census_json(census, atlas_ptr);
  } else {
    std::cout << census_table(census);
    if (atlas)
      std::cout << atlas_table(census, entries);
  }

  if (!out.empty()) {
    std::string name = census.spec.to_string();
    fs::path dir = fs::path(out) / "census" / name;
    for (auto const &row : census.grid) {
      for (auto const &cell : row) {
        std::string stem = "U" + std::to_string(cell.subgroup_index + 1) + "_pair" +
                           std::to_string(cell.pair_index + 1);
        write_file(dir / (stem + ".dot"), to_dot(cell.graph, stem));
        write_file(dir / (stem + ".json"), to_json(cell.graph));
      }
    }
    write_file(dir / "census.json", census_json(census, atlas_ptr));
  }
  return 0;
}

int cmd_verify(const Instance &in, std::size_t transversals, std::uint32_t seed, bool require_involution,
               std::size_t bound)
{
  VerifyOptions options;
  options.bound = bound;
  options.random_transversals = transversals;
  options.seed = seed;
  options.require_involution = require_involution;

  VerificationReport report;
  if (!in.rho.empty() || !in.tau.empty()) {
    if (in.rho.empty() || in.tau.empty())
      throw parse_error("--rho and --tau must be given together");
    Resolved r = resolve(in, bound);
    report = verify_instance(r.u, r.rho, r.tau, options);
  } else {
    report = verify_group(parse_group_spec(in.group), options);
  }
  std::cout << report.to_string();
  if (!report.ok())
    throw verification_error("VerificationFailed", "property suites failed");
  return 0;
}

int cmd_represent(const std::string &path, bool companion, const std::string &format, std::size_t bound)
{
  Multigraph sigma = multigraph_from_json(read_file(path));
  MonodromyRepresentation rep = monodromy_representation(sigma, std::nullopt, bound);
  std::cout << representation_json(sigma, rep);
  std::cerr << "certificate OK: rebuilt graph is isomorphic to the input (|G| = " << rep.group->order()
            << ")\n";
  if (companion) {
    MonodromyGraph c = arc_transitive_companion(rep.group, rep.rho, rep.tau);
    auto autos = left_automorphisms(c);
    std::cerr << "companion Mon(G;1,rho,tau): " << c.graph.vertex_count() << " vertices, arc orbits "
              << arc_orbit_count(c.graph, autos.permutations) << "\n";
    std::cout << (format == "json" ? to_json(c.graph) : to_dot(c.graph, "Companion"));
  }
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Monodromy graphs and algebraic maps of finite permutation groups"};
  app.require_subcommand(1);

  std::size_t bound = order_bound_from_env();
  app.add_option("--bound", bound, "Largest group order to enumerate (default: MONGRAPH_BOUND or 10000)");

  Instance inst;
  std::string format;
  std::string out;

  auto add_instance = [&](CLI::App *sub) {
    sub->add_option("group", inst.group, "S<n>, A<n>, C<n>, D<2n> or explicit generators")->required();
    sub->add_option("subgroup", inst.subgroup, "Generators of U separated by ';' (\"\" = trivial)")
        ->required();
    sub->add_option("rho", inst.rho, "Rotation, cycle notation")->required();
    sub->add_option("tau", inst.tau, "Dart reversal, cycle notation")->required();
  };

  auto *mon = app.add_subcommand("mon", "Build Mon(G;U,rho,tau)");
  add_instance(mon);
  mon->add_option("--format", format, "Emit the graph as dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  mon->add_option("--out", out, "Write the graph to a file");

  bool json = false;
  auto *map = app.add_subcommand("map", "Counts and structure of M(G;U,rho,tau)");
  add_instance(map);
  map->add_flag("--json", json, "JSON output");

  bool atlas = false;
  bool require_involution = false;
  std::string census_group;
  auto *census = app.add_subcommand("census", "All non-isomorphic maps of G");
  census->add_option("group", census_group, "Group spec")->required();
  census->add_flag("--planar-atlas", atlas, "Report planarity of every census graph");
  census->add_option("--out", out, "Directory for census/<group>/U<i>_pair<j>.{dot,json}");
  census->add_flag("--json", json, "JSON output");
  census->add_flag("--require-involution", require_involution, "Exclude tau = 1");

  std::size_t transversals = 20;
  std::uint32_t seed = 20240611;
  auto *verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("group", inst.group, "Group spec")->required();
  verify->add_option("--subgroup", inst.subgroup, "Check one instance: generators of U");
  verify->add_option("--rho", inst.rho, "Check one instance: rho");
  verify->add_option("--tau", inst.tau, "Check one instance: tau");
  verify->add_option("--transversals", transversals, "Random transversals per instance");
  verify->add_option("--seed", seed, "Seed for the random transversals");
  verify->add_flag("--require-involution", require_involution, "Exclude tau = 1");

  std::string graph_file;
  bool companion = false;
  auto *represent = app.add_subcommand("represent", "Realize a graph as a monodromy graph");
  represent->add_option("graph", graph_file, "Graph JSON file")->required();
  represent->add_flag("--companion", companion, "Also emit Mon(G;1,rho,tau)");
  represent->add_option("--format", format, "Companion format, dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_code(ErrorKind::Parse);
  }

  try {
    if (*mon)
      return cmd_mon(inst, format, out, bound);
    if (*map)
      return cmd_map(inst, json, bound);
    if (*census)
      return cmd_census(census_group, atlas, out, json, require_involution, bound);
    if (*verify)
      return cmd_verify(inst, transversals, seed, require_involution, bound);
    if (*represent)
      return cmd_represent(graph_file, companion, format, bound);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code(ErrorKind::Verification);
  }
  return 0;
}
