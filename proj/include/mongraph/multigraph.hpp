#ifndef MONGRAPH_MULTIGRAPH_HPP
#define MONGRAPH_MULTIGRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mongraph {

using VertexId = std::size_t;

// Undirected graph with parallel edges, loops and free edges.
//
// Free edges have a single endpoint and a single dart; they are kept as a
// per-vertex counter and their far end is never a vertex. Loops contribute
// two darts to the degree of their vertex, free edges one.
class Multigraph
{
public:
  struct EdgeRecord
  {
    VertexId u = 0;  // u < v
    VertexId v = 0;
    std::size_t multiplicity = 0;

    friend bool operator==(const EdgeRecord &, const EdgeRecord &) = default;
  };

  Multigraph() = default;

  // Labels must be unique.
  VertexId add_vertex(std::string label);
  void add_edges(VertexId u, VertexId v, std::size_t count = 1);  // u == v adds loops
  void add_loops(VertexId v, std::size_t count = 1);
  void add_free_edges(VertexId v, std::size_t count = 1);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  const std::string &label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view label) const;

  // Parallel ordinary edges between u and v; for u == v the loop count.
  std::size_t multiplicity(VertexId u, VertexId v) const;
  std::size_t loop_count(VertexId v) const;
  std::size_t free_edge_count(VertexId v) const;
  std::size_t degree(VertexId v) const;

  // Ordinary edges with positive multiplicity, sorted by (u, v).
  std::vector<EdgeRecord> edges() const;
  // Distinct vertices joined to v by an edge or loop (free edges excluded).
  std::vector<VertexId> neighbours(VertexId v) const;

  std::size_t ordinary_edge_count() const;
  std::size_t total_loops() const;
  std::size_t total_free_edges() const;
  std::size_t dart_count() const;

  friend bool operator==(const Multigraph &, const Multigraph &) = default;

private:
  void check_vertex(VertexId v) const;

  std::vector<std::string> labels_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> multiplicity_;
  std::vector<std::size_t> loops_;
  std::vector<std::size_t> free_;
};

bool is_connected(const Multigraph &g);

// Same vertex labels; multiplicities clamped to 1, loops and free edges gone.
Multigraph simplify(const Multigraph &g);

inline constexpr std::size_t default_isomorphism_budget = 5'000'000;

// A vertex bijection (index in g1 -> index in g2) preserving multiplicities,
// loop counts and free-edge counts. Throws Bound("BudgetExceeded") if the
// search visits more than `budget` nodes; that means undecided, not "no".
std::optional<std::vector<VertexId>> are_isomorphic(
    const Multigraph &g1, const Multigraph &g2,
    std::size_t budget = default_isomorphism_budget);

// Planarity of the simplified graph (loops, parallel and free edges never
// obstruct a planar drawing).
bool is_planar(const Multigraph &g);

enum class ExportFormat { Dot, Json };

std::string to_dot(const Multigraph &g, std::string_view name = "G");
std::string to_json(const Multigraph &g);
std::string export_graph(const Multigraph &g, ExportFormat format);
// Inverse of to_json; throws Parse on malformed documents.
Multigraph multigraph_from_json(std::string_view text);

} // namespace mongraph

#endif // MONGRAPH_MULTIGRAPH_HPP
