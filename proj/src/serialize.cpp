#include "mongraph/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace mongraph {

using ojson = nlohmann::ordered_json;

namespace {

std::string cycle(const FiniteGroup &g, ElementId x) { return g.element(x).to_string(); }

ojson subgroup_generators(const Subgroup &u)
{
  auto gens = ojson::array();
  for (ElementId x : u.generators())
    gens.push_back(cycle(*u.parent(), x));
  return gens;
}

ojson predicates_json(const StructurePredicates &p)
{
  return {{"has_free_edges", p.has_free_edges},
          {"has_loops", p.has_loops},
          {"has_multiple_edges", p.has_multiple_edges},
          {"is_simple", p.is_simple}};
}

ojson counts_json(const MapCounts &c)
{
  ojson j{{"darts", c.darts},  {"V", c.vertices},        {"E", c.edges},
          {"F", c.faces},      {"free_edges", c.free_edges}, {"euler", c.euler}};
  if (c.genus)
    j["genus"] = *c.genus;
  else
    j["genus"] = nullptr;
  if (!c.genus_note.empty())
    j["genus_note"] = c.genus_note;
  j["closed_euler"] = c.closed_euler;
  j["closed_genus"] = c.closed_genus;
  return j;
}

std::string join(const std::vector<std::size_t> &xs)
{
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

} // namespace

std::string monodromy_json(const MonodromyGraph &mg, const std::string &group_spec)
{
  ojson doc;
  doc["group"] = group_spec;
  doc["subgroup"] = subgroup_generators(mg.stabilizer);
  doc["rho"] = cycle(*mg.group, mg.rho);
  doc["tau"] = cycle(*mg.group, mg.tau);
  doc["core_free"] = mg.core_free;
  auto graph = ojson::parse(to_json(mg.graph));
  for (auto &[key, value] : graph.items())
    doc[key] = value;
  return doc.dump(2) + "\n";
}

std::string monodromy_summary(const MonodromyGraph &mg)
{
  auto const &g = mg.graph;
  std::ostringstream out;
  out << "vertices=" << g.vertex_count() << " edges=" << g.ordinary_edge_count()
      << " loops=" << g.total_loops() << " free=" << g.total_free_edges() << "\n";
  if (!mg.core_free)
    out << "warning: U has a non-trivial core\n";
  out << "valency table:\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ElementId rep = mg.vertex_blocks.blocks()[v].representative;
    out << "  " << std::left << std::setw(20) << g.label(v) << " degree=" << g.degree(v)
        << " valency=" << valency(mg, rep) << "\n";
  }
  return out.str();
}

std::string map_json(const AlgebraicMap &m, const MapCounts &c, const StructurePredicates &p)
{
  ojson doc;
  doc["subgroup"] = subgroup_generators(m.stabilizer);
  doc["rho"] = cycle(*m.group, m.rho);
  doc["tau"] = cycle(*m.group, m.tau);
  doc["regular"] = is_regular(m);
  doc["counts"] = counts_json(c);
  doc["predicates"] = predicates_json(p);
  return doc.dump(2) + "\n";
}

std::string map_summary(const AlgebraicMap &m, const MapCounts &c, const StructurePredicates &p)
{
  std::ostringstream out;
  out << "V=" << c.vertices << " E=" << c.edges << " F=" << c.faces << " chi=" << c.euler;
  if (c.genus)
    out << " genus=" << *c.genus;
  else
    out << " genus=n/a (" << c.genus_note << ")";
  out << "\n";
  out << "darts=" << c.darts << " free_edges=" << c.free_edges << " closed_genus=" << c.closed_genus
      << " regular=" << (is_regular(m) ? "yes" : "no") << "\n";
  out << "free_edges=" << p.has_free_edges << " loops=" << p.has_loops
      << " multiple_edges=" << p.has_multiple_edges << " simple=" << p.is_simple << "\n";
  return out.str();
}

std::string census_json(const Census &census, const std::vector<AtlasEntry> *atlas)
{
  auto const &g = *census.group;
  ojson doc;
  doc["group"] = census.spec.to_string();
  doc["order"] = g.order();
  doc["m"] = census.m;
  doc["n"] = census.n;
  doc["total"] = census.total;

  auto subgroups = ojson::array();
  for (std::size_t i = 0; i < census.subgroups.size(); ++i) {
    auto const &cls = census.subgroups[i];
    subgroups.push_back({{"index", i + 1},
                         {"order", cls.representative.order()},
                         {"class_size", cls.class_size},
                         {"generators", subgroup_generators(cls.representative)}});
  }
  doc["subgroups"] = std::move(subgroups);

  auto pairs = ojson::array();
  for (std::size_t j = 0; j < census.pairs.size(); ++j) {
    auto const &p = census.pairs[j];
    pairs.push_back({{"index", j + 1},
                     {"rho", cycle(g, p.representative.rho)},
                     {"tau", cycle(g, p.representative.tau)},
                     {"orbit_size", p.orbit_size}});
  }
  doc["pairs"] = std::move(pairs);

  auto cells = ojson::array();
  for (auto const &row : census.grid) {
    for (auto const &cell : row) {
      ojson c{{"subgroup", cell.subgroup_index + 1}, {"pair", cell.pair_index + 1}};
      c["counts"] = counts_json(cell.counts);
      c["predicates"] = predicates_json(cell.predicates);
      c["degrees"] = cell.invariants.degrees;
      c["multiplicities"] = cell.invariants.multiplicities;
      c["loops"] = cell.invariants.loops;
      c["free"] = cell.invariants.free_edges;
      c["graph_planar"] = cell.graph_planar;
      c["spherical"] = cell.spherical;
      cells.push_back(std::move(c));
    }
  }
  doc["cells"] = std::move(cells);

  if (atlas) {
    auto entries = ojson::array();
    std::size_t planar = 0;
    for (auto const &e : *atlas) {
      ojson a{{"subgroup", e.subgroup_index + 1}, {"pair", e.pair_index + 1}};
      if (e.reference_subgroup)
        a["reference"] = {*e.reference_subgroup, *e.reference_pair};
      a["planar"] = e.planar;
      a["graph_planar"] = e.graph_planar;
      entries.push_back(std::move(a));
      planar += e.planar;
    }
    doc["atlas"] = {{"planar", planar}, {"cells", std::move(entries)}};
  }
  return doc.dump(2) + "\n";
}

std::string census_table(const Census &census)
{
  auto const &g = *census.group;
  std::ostringstream out;
  out << census.spec.to_string() << ": m=" << census.m << " n=" << census.n << " total=" << census.total
      << "\n";
  for (std::size_t j = 0; j < census.pairs.size(); ++j) {
    auto const &p = census.pairs[j].representative;
    out << "  pair " << j + 1 << ": rho=" << cycle(g, p.rho) << " tau=" << cycle(g, p.tau) << "\n";
  }

  out << std::left << std::setw(6) << "U" << std::setw(7) << "|U|";
  for (std::size_t j = 0; j < census.n; ++j)
    out << std::setw(26) << ("pair " + std::to_string(j + 1));
  out << "\n";
  for (std::size_t i = 0; i < census.m; ++i) {
    out << std::setw(6) << ("U" + std::to_string(i + 1)) << std::setw(7)
        << census.subgroups[i].representative.order();
    for (auto const &cell : census.grid[i]) {
      auto const &c = cell.counts;
      std::string text = std::to_string(c.vertices) + "/" + std::to_string(c.edges) + "/" +
                         std::to_string(c.faces) + " g=" +
                         (c.genus ? std::to_string(*c.genus) : "-") + " deg=" +
                         join(cell.invariants.degrees);
      if (text.size() > 24)
        text = text.substr(0, 22) + "..";
      out << std::setw(26) << text;
    }
    out << "\n";
  }
  return out.str();
}

std::string atlas_table(const Census &census, const std::vector<AtlasEntry> &atlas)
{
  std::ostringstream out;
  std::size_t planar = 0;
  std::size_t graph_planar = 0;
  for (auto const &e : atlas) {
    planar += e.planar;
    graph_planar += e.graph_planar;
  }
  out << "planar atlas: " << planar << "/" << atlas.size() << " planar (genus-0 maps), " << graph_planar
      << "/" << atlas.size() << " graphs with a plane drawing\n";
  for (auto const &e : atlas) {
    out << "  U" << e.subgroup_index + 1 << " pair" << e.pair_index + 1;
    if (e.reference_subgroup)
      out << " ref=(" << *e.reference_subgroup << "," << *e.reference_pair << ")";
    auto const &cell = census.grid[e.subgroup_index][e.pair_index];
    out << " closed_genus=" << cell.counts.closed_genus << " planar=" << (e.planar ? "yes" : "no")
        << " graph_planar=" << (e.graph_planar ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string representation_json(const Multigraph &input, const MonodromyRepresentation &rep)
{
  auto const &g = *rep.group;
  ojson doc;
  doc["degree"] = g.degree();
  doc["order"] = g.order();
  doc["rho"] = cycle(g, rep.rho);
  doc["tau"] = cycle(g, rep.tau);
  doc["subgroup"] = subgroup_generators(rep.stabilizer);
  auto cert = ojson::object();
  for (std::size_t v = 0; v < rep.certificate.size(); ++v)
    cert[input.label(v)] = rep.rebuilt.graph.label(rep.certificate[v]);
  doc["certificate"] = std::move(cert);
  return doc.dump(2) + "\n";
}

} // namespace mongraph
