#ifndef MONGRAPH_SERIALIZE_HPP
#define MONGRAPH_SERIALIZE_HPP

#include <string>

#include "algmap.hpp"
#include "enumeration.hpp"
#include "monodromy.hpp"

namespace mongraph {

// Graph JSON extended with the data that produced it.
std::string monodromy_json(const MonodromyGraph &mg, const std::string &group_spec);

// Vertex / edge / loop / free summary and the valency table.
std::string monodromy_summary(const MonodromyGraph &mg);

std::string map_json(const AlgebraicMap &m, const MapCounts &c, const StructurePredicates &p);
std::string map_summary(const AlgebraicMap &m, const MapCounts &c, const StructurePredicates &p);

std::string census_json(const Census &census, const std::vector<AtlasEntry> *atlas = nullptr);
// Subgroup classes as rows, pair classes as columns.
std::string census_table(const Census &census);
std::string atlas_table(const Census &census, const std::vector<AtlasEntry> &atlas);

// Certificate maps input vertex labels to rebuilt vertex labels.
std::string representation_json(const Multigraph &input, const MonodromyRepresentation &rep);

} // namespace mongraph

#endif // MONGRAPH_SERIALIZE_HPP
