#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mongraph/enumeration.hpp"
#include "mongraph/errors.hpp"
#include "mongraph/serialize.hpp"
#include "mongraph/verify.hpp"

namespace py = pybind11;
using namespace mongraph;

namespace {

struct Instance
{
  GroupSpec spec;
  Subgroup stabilizer;
  ElementId rho;
  ElementId tau;
};

Instance instance(const std::string &group, const std::string &subgroup, const std::string &rho,
                  const std::string &tau, std::size_t bound)
{
  auto spec = parse_group_spec(group);
  auto g = make_group(spec, bound);
  return {spec, parse_subgroup(g, subgroup), g->id_of(parse_permutation(rho, g->degree())),
          g->id_of(parse_permutation(tau, g->degree()))};
}

} // namespace

PYBIND11_MODULE(_mongraph, m)
{
  m.doc() = "Monodromy graphs and algebraic maps (JSON-returning core bindings)";

  py::register_exception<Error>(m, "MongraphError");

  m.attr("default_bound") = default_order_bound;

  m.def(
      "mon_json",
      [](const std::string &group, const std::string &subgroup, const std::string &rho, const std::string &tau,
         std::size_t bound) {
        auto in = instance(group, subgroup, rho, tau, bound);
        return monodromy_json(build_monodromy(in.stabilizer, in.rho, in.tau), in.spec.to_string());
      },
      py::arg("group"), py::arg("subgroup"), py::arg("rho"), py::arg("tau"), py::arg("bound") = default_order_bound);

  m.def(
      "map_json",
      [](const std::string &group, const std::string &subgroup, const std::string &rho, const std::string &tau,
         std::size_t bound) {
        auto in = instance(group, subgroup, rho, tau, bound);
        auto map = build_map(in.stabilizer, in.rho, in.tau);
        return mongraph::map_json(map, counts(map), structure_predicates(map));
      },
      py::arg("group"), py::arg("subgroup"), py::arg("rho"), py::arg("tau"), py::arg("bound") = default_order_bound);

  m.def(
      "census_json",
      [](const std::string &group, bool planar_atlas_too, bool require_involution, std::size_t bound) {
        CensusOptions options;
        options.require_involution = require_involution;
        options.bound = bound;
        auto census = build_census(parse_group_spec(group), options);
        if (!planar_atlas_too)
          return mongraph::census_json(census);
        auto atlas = planar_atlas(census);
        return mongraph::census_json(census, &atlas);
      },
      py::arg("group"), py::arg("planar_atlas") = false, py::arg("require_involution") = false,
      py::arg("bound") = default_order_bound);

  m.def(
      "verify",
      [](const std::string &group, std::size_t transversals, std::uint32_t seed) {
        VerifyOptions options;
        options.random_transversals = transversals;
        options.seed = seed;
        auto report = verify_group(parse_group_spec(group), options);
        return py::make_tuple(report.ok(), report.to_string());
      },
      py::arg("group"), py::arg("transversals") = 20, py::arg("seed") = 20240611u);

  m.def(
      "represent_json",
      [](const std::string &graph_json, std::size_t bound) {
        auto g = multigraph_from_json(graph_json);
        return representation_json(g, monodromy_representation(g, std::nullopt, bound));
      },
      py::arg("graph_json"), py::arg("bound") = default_order_bound);

  m.def(
      "are_isomorphic",
      [](const std::string &a, const std::string &b) {
        return are_isomorphic(multigraph_from_json(a), multigraph_from_json(b)).has_value();
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "is_planar", [](const std::string &graph_json) { return is_planar(multigraph_from_json(graph_json)); },
      py::arg("graph_json"));
}
