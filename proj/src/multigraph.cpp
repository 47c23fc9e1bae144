#include "mongraph/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "json.hpp"
#include "mongraph/errors.hpp"

namespace mongraph {

VertexId Multigraph::add_vertex(std::string label)
{
  if (find_vertex(label))
    throw precondition_error("DuplicateVertex", "vertex label '" + label + "' already used");
  labels_.push_back(std::move(label));
  loops_.push_back(0);
  free_.push_back(0);
  return labels_.size() - 1;
}

void Multigraph::check_vertex(VertexId v) const
{
  if (v >= labels_.size())
    throw precondition_error("UnknownVertex", "vertex " + std::to_string(v) + " does not exist");
}

void Multigraph::add_edges(VertexId u, VertexId v, std::size_t count)
{
  check_vertex(u);
  check_vertex(v);
  if (count == 0)
    return;
  if (u == v) {
    loops_[u] += count;
    return;
  }
  multiplicity_[std::minmax(u, v)] += count;
}

void Multigraph::add_loops(VertexId v, std::size_t count)
{
  check_vertex(v);
  loops_[v] += count;
}

void Multigraph::add_free_edges(VertexId v, std::size_t count)
{
  check_vertex(v);
  free_[v] += count;
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view label) const
{
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::size_t Multigraph::multiplicity(VertexId u, VertexId v) const
{
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    return loops_[u];
  auto it = multiplicity_.find(std::minmax(u, v));
  return it == multiplicity_.end() ? 0 : it->second;
}

std::size_t Multigraph::loop_count(VertexId v) const
{
  check_vertex(v);
  return loops_[v];
}

std::size_t Multigraph::free_edge_count(VertexId v) const
{
  check_vertex(v);
  return free_[v];
}

std::size_t Multigraph::degree(VertexId v) const
{
  check_vertex(v);
  std::size_t d = 2 * loops_[v] + free_[v];
  for (auto const &[key, m] : multiplicity_) {
    if (key.first == v || key.second == v)
      d += m;
  }
  return d;
}

std::vector<Multigraph::EdgeRecord> Multigraph::edges() const
{
  std::vector<EdgeRecord> result;
  for (auto const &[key, m] : multiplicity_) {
    if (m > 0)
      result.push_back({key.first, key.second, m});
  }
  return result;
}

std::vector<VertexId> Multigraph::neighbours(VertexId v) const
{
  check_vertex(v);
  std::vector<VertexId> result;
  if (loops_[v] > 0)
    result.push_back(v);
  for (auto const &[key, m] : multiplicity_) {
    if (m == 0)
      continue;
    if (key.first == v)
      result.push_back(key.second);
    else if (key.second == v)
      result.push_back(key.first);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t Multigraph::ordinary_edge_count() const
{
  std::size_t total = 0;
  for (auto const &entry : multiplicity_)
    total += entry.second;
  return total;
}

std::size_t Multigraph::total_loops() const
{ return std::accumulate(loops_.begin(), loops_.end(), std::size_t{0}); }

std::size_t Multigraph::total_free_edges() const
{ return std::accumulate(free_.begin(), free_.end(), std::size_t{0}); }

std::size_t Multigraph::dart_count() const
{ return 2 * ordinary_edge_count() + 2 * total_loops() + total_free_edges(); }

bool is_connected(const Multigraph &g)
{
  std::size_t n = g.vertex_count();
  if (n <= 1)
    return true;

  std::vector<std::vector<VertexId>> adjacency(n);
  for (auto const &e : g.edges()) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }

  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Multigraph simplify(const Multigraph &g)
{
  Multigraph result;
  for (auto const &label : g.labels())
    result.add_vertex(label);
  for (auto const &e : g.edges())
    result.add_edges(e.u, e.v, 1);
  return result;
}

namespace {

class IsomorphismSearch
{
public:
  IsomorphismSearch(const Multigraph &g1, const Multigraph &g2, std::size_t budget)
  : g1_(g1), g2_(g2), n_(g1.vertex_count()), budget_(budget)
  {
    adj1_ = matrix(g1_);
    adj2_ = matrix(g2_);
  }

  std::optional<std::vector<VertexId>> run()
  {
    if (g2_.vertex_count() != n_ ||
        g1_.ordinary_edge_count() != g2_.ordinary_edge_count() ||
        g1_.total_loops() != g2_.total_loops() ||
        g1_.total_free_edges() != g2_.total_free_edges())
      return std::nullopt;
    if (n_ == 0)
      return std::vector<VertexId>{};

    if (!refine_colours())
      return std::nullopt;

    choose_order();
    mapping_.assign(n_, none);
    used_.assign(n_, false);
    if (!extend(0))
      return std::nullopt;
    return mapping_;
  }

private:
  static constexpr VertexId none = static_cast<VertexId>(-1);

  std::vector<std::size_t> matrix(const Multigraph &g) const
  {
    std::vector<std::size_t> m(n_ * n_, 0);
    if (g.vertex_count() != n_)
      return m;
    for (auto const &e : g.edges()) {
      m[e.u * n_ + e.v] = e.multiplicity;
      m[e.v * n_ + e.u] = e.multiplicity;
    }
    for (VertexId v = 0; v < n_; ++v)
      m[v * n_ + v] = g.loop_count(v);
    return m;
  }

  std::size_t adj(int side, VertexId a, VertexId b) const
  { return (side == 0 ? adj1_ : adj2_)[a * n_ + b]; }

  // Joint colour refinement over both graphs so colour ids are comparable.
  bool refine_colours()
  {
    using Signature = std::vector<std::size_t>;
    colour_.assign(2 * n_, 0);

    {
      std::map<Signature, std::size_t> names;
      for (int side = 0; side < 2; ++side) {
        const Multigraph &g = side == 0 ? g1_ : g2_;
        for (VertexId v = 0; v < n_; ++v) {
          Signature sig{g.degree(v), g.loop_count(v), g.free_edge_count(v)};
          colour_[side * n_ + v] = names.emplace(sig, names.size()).first->second;
        }
      }
      if (!balanced(names.size()))
        return false;
    }

    std::size_t classes = 0;
    for (;;) {
      std::map<Signature, std::size_t> names;
      std::vector<std::size_t> next(2 * n_);
      for (int side = 0; side < 2; ++side) {
        for (VertexId v = 0; v < n_; ++v) {
          std::vector<std::pair<std::size_t, std::size_t>> around;
          for (VertexId w = 0; w < n_; ++w) {
            if (w != v && adj(side, v, w) > 0)
              around.emplace_back(colour_[side * n_ + w], adj(side, v, w));
          }
          std::sort(around.begin(), around.end());
          Signature sig{colour_[side * n_ + v]};
          for (auto const &[c, m] : around) {
            sig.push_back(c);
            sig.push_back(m);
          }
          next[side * n_ + v] = names.emplace(sig, names.size()).first->second;
        }
      }
      colour_ = std::move(next);
      if (!balanced(names.size()))
        return false;
      if (names.size() == classes)
        return true;
      classes = names.size();
    }
  }

  bool balanced(std::size_t colours) const
  {
    std::vector<long> count(colours, 0);
    for (VertexId v = 0; v < n_; ++v) {
      ++count[colour_[v]];
      --count[colour_[n_ + v]];
    }
    return std::all_of(count.begin(), count.end(), [](long c) { return c == 0; });
  }

  void choose_order()
  {
    std::vector<std::size_t> class_size(2 * n_, 0);
    for (VertexId v = 0; v < n_; ++v)
      ++class_size[colour_[v]];

    std::vector<bool> placed(n_, false);
    std::vector<std::size_t> placed_neighbours(n_, 0);
    order_.clear();
    while (order_.size() < n_) {
      VertexId best = none;
      for (VertexId v = 0; v < n_; ++v) {
        if (placed[v])
          continue;
        if (best == none ||
            std::make_tuple(-static_cast<long>(placed_neighbours[v]), class_size[colour_[v]], v) <
            std::make_tuple(-static_cast<long>(placed_neighbours[best]), class_size[colour_[best]], best))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (VertexId w = 0; w < n_; ++w) {
        if (w != best && adj(0, best, w) > 0)
          ++placed_neighbours[w];
      }
    }
  }

  bool consistent(VertexId v, VertexId w, std::size_t depth) const
  {
    if (colour_[v] != colour_[n_ + w] || adj(0, v, v) != adj(1, w, w))
      return false;
    for (std::size_t i = 0; i < depth; ++i) {
      VertexId u = order_[i];
      if (adj(0, u, v) != adj(1, mapping_[u], w))
        return false;
    }
    return true;
  }

  bool extend(std::size_t depth)
  {
    if (depth == n_)
      return true;
    if (++nodes_ > budget_)
      throw bound_error("BudgetExceeded", "graph isomorphism search exceeded its node budget");

    VertexId v = order_[depth];

    // An already-mapped neighbour narrows the candidates to its image's
    // neighbourhood.
    VertexId anchor = none;
    for (std::size_t i = 0; i < depth && anchor == none; ++i) {
      if (adj(0, order_[i], v) > 0)
        anchor = order_[i];
    }

    for (VertexId w = 0; w < n_; ++w) {
      if (used_[w])
        continue;
      if (anchor != none && adj(1, mapping_[anchor], w) == 0)
        continue;
      if (!consistent(v, w, depth))
        continue;

      mapping_[v] = w;
      used_[w] = true;
      if (extend(depth + 1))
        return true;
      used_[w] = false;
      mapping_[v] = none;
    }
    return false;
  }

  const Multigraph &g1_;
  const Multigraph &g2_;
  std::size_t n_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> adj1_;
  std::vector<std::size_t> adj2_;
  std::vector<std::size_t> colour_;
  std::vector<VertexId> order_;
  std::vector<VertexId> mapping_;
  std::vector<bool> used_;
};

std::string dot_escape(const std::string &text)
{
  std::string out;
  for (char ch : text) {
    if (ch == '"' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out;
}

} // namespace

std::optional<std::vector<VertexId>> are_isomorphic(const Multigraph &g1, const Multigraph &g2,
                                                    std::size_t budget)
{
  IsomorphismSearch search(g1, g2, budget);
  return search.run();
}

bool is_planar(const Multigraph &g)
{
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;

  Graph graph(g.vertex_count());
  for (auto const &e : g.edges())
    boost::add_edge(e.u, e.v, graph);

  return boost::boyer_myrvold_planarity_test(graph);
}

std::string to_dot(const Multigraph &g, std::string_view name)
{
  std::ostringstream out;
  out << "graph \"" << dot_escape(std::string(name)) << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << "  n" << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";

  for (auto const &e : g.edges()) {
    for (std::size_t k = 0; k < e.multiplicity; ++k)
      out << "  n" << e.u << " -- n" << e.v << ";\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t k = 0; k < g.loop_count(v); ++k)
      out << "  n" << v << " -- n" << v << ";\n";
  }

  std::size_t free_id = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t k = 0; k < g.free_edge_count(v); ++k, ++free_id) {
      out << "  f" << free_id << " [shape=point, kind=\"free_end\"];\n";
      out << "  n" << v << " -- f" << free_id << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const Multigraph &g)
{
  nlohmann::ordered_json doc;
  doc["vertices"] = g.labels();

  auto edges = nlohmann::ordered_json::array();
  for (auto const &e : g.edges())
    edges.push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"mult", e.multiplicity}});
  doc["edges"] = std::move(edges);

  auto loops = nlohmann::ordered_json::object();
  auto free = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.loop_count(v) > 0)
      loops[g.label(v)] = g.loop_count(v);
    if (g.free_edge_count(v) > 0)
      free[g.label(v)] = g.free_edge_count(v);
  }
  doc["loops"] = std::move(loops);
  doc["free"] = std::move(free);
  return doc.dump(2) + "\n";
}

std::string export_graph(const Multigraph &g, ExportFormat format)
{ return format == ExportFormat::Dot ? to_dot(g) : to_json(g); }

Multigraph multigraph_from_json(std::string_view text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }

  Multigraph g;
  try {
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
      throw parse_error("graph JSON needs a \"vertices\" array");

    for (auto const &label : doc["vertices"]) {
      if (!label.is_string())
        throw parse_error("vertex labels must be strings");
      if (g.find_vertex(label.get<std::string>()))
        throw parse_error("duplicate vertex label " + label.get<std::string>());
      g.add_vertex(label.get<std::string>());
    }

    auto vertex = [&](const nlohmann::json &label) {
      if (!label.is_string())
        throw parse_error("edge endpoints must be vertex labels");
      auto v = g.find_vertex(label.get<std::string>());
      if (!v)
        throw parse_error("unknown vertex " + label.get<std::string>());
      return *v;
    };
    auto count = [](const nlohmann::json &value) {
      if (!value.is_number_integer() || value.get<long long>() < 0)
        throw parse_error("counts must be nonnegative integers");
      return static_cast<std::size_t>(value.get<long long>());
    };

    if (doc.contains("edges")) {
      for (auto const &e : doc["edges"]) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v"))
          throw parse_error("edge records need \"u\" and \"v\"");
        VertexId u = vertex(e["u"]);
        VertexId v = vertex(e["v"]);
        std::size_t m = e.contains("mult") ? count(e["mult"]) : 1;
        g.add_edges(u, v, m);
      }
    }
    if (doc.contains("loops")) {
      for (auto const &[label, value] : doc["loops"].items())
        g.add_loops(vertex(label), count(value));
    }
    if (doc.contains("free")) {
      for (auto const &[label, value] : doc["free"].items())
        g.add_free_edges(vertex(label), count(value));
    }
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("malformed graph JSON: ") + e.what());
  }
  return g;
}

} // namespace mongraph
