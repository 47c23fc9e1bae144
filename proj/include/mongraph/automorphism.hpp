#ifndef MONGRAPH_AUTOMORPHISM_HPP
#define MONGRAPH_AUTOMORPHISM_HPP

#include <optional>
#include <span>
#include <vector>

#include "group.hpp"

namespace mongraph {

// A bijective element map between two groups, element ids to element ids.
class GroupIsomorphism
{
public:
  GroupIsomorphism() = default;
  explicit GroupIsomorphism(std::vector<ElementId> images)
  : images_(std::move(images))
  {}

  ElementId operator()(ElementId x) const { return images_[x]; }
  const std::vector<ElementId> &images() const noexcept { return images_; }
  bool is_identity() const;

  friend auto operator<=>(const GroupIsomorphism &, const GroupIsomorphism &) = default;

private:
  std::vector<ElementId> images_;
};

using Automorphism = GroupIsomorphism;

// Composition "apply a, then b" (the same right-action convention).
Automorphism then(const Automorphism &a, const Automorphism &b);
Automorphism inverse(const Automorphism &a);

// Extends source_gens[i] -> target_gens[i] to an isomorphism source -> target
// by walking the Cayley graph of the source generators. Returns nothing
// unless the map is a well-defined bijective homomorphism; source_gens must
// generate the source group.
std::optional<GroupIsomorphism> extend_to_isomorphism(
    const FiniteGroup &source, std::span<const ElementId> source_gens,
    const FiniteGroup &target, std::span<const ElementId> target_gens);

// Shortest generating tuple found by increasing size, lexicographically first.
std::vector<ElementId> small_generating_tuple(const FiniteGroup &group);

// All automorphisms, sorted by image table; the identity comes first.
std::vector<Automorphism> automorphism_group(const FiniteGroup &group);

struct GeneratorPair
{
  ElementId rho = 0;
  ElementId tau = 0;

  friend auto operator<=>(const GeneratorPair &, const GeneratorPair &) = default;
};

// An automorphism sending (rho1, tau1) to (rho2, tau2), if any.
std::optional<Automorphism> pairs_isomorphic(std::span<const Automorphism> automorphisms,
                                             GeneratorPair first, GeneratorPair second);

} // namespace mongraph

#endif // MONGRAPH_AUTOMORPHISM_HPP
