#ifndef MONGRAPH_VERIFY_HPP
#define MONGRAPH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enumeration.hpp"

namespace mongraph {

struct SuiteResult
{
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

struct VerificationReport
{
  std::string group;
  std::vector<SuiteResult> suites;

  bool ok() const;
  std::string to_string() const;
};

struct VerifyOptions
{
  std::size_t random_transversals = 20;
  std::uint32_t seed = 20240611;
  std::size_t bound = default_order_bound;
  bool require_involution = false;
};

// Runs every property suite over the census of `spec`:
//   a  double coset sizes for all pairs of subgroup class representatives
//   b  valency formula against vertex degrees
//   c  rebuilds over random right transversals
//   d  underlying graph of the map against the monodromy graph
//   e  group criteria against dart structure
//   f  a_L automorphisms, arc transitivity for U = 1
//   g  representation round trips of K2, K3, P4 with end loops, K4
VerificationReport verify_group(const GroupSpec &spec, const VerifyOptions &options = {});

// Suites b to f on one instance; preconditions throw as in build_map.
VerificationReport verify_instance(const Subgroup &stabilizer, ElementId rho, ElementId tau,
                                   const VerifyOptions &options = {});

// A right transversal with a uniformly random member of every coset.
std::vector<ElementId> random_transversal(const CosetSpace &space, std::uint32_t seed);

} // namespace mongraph

#endif // MONGRAPH_VERIFY_HPP
