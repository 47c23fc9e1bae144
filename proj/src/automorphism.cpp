#include "mongraph/automorphism.hpp"

#include <algorithm>

namespace mongraph {

bool GroupIsomorphism::is_identity() const
{
  for (ElementId i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Automorphism then(const Automorphism &a, const Automorphism &b)
{
  std::vector<ElementId> images(a.images().size());
  for (ElementId x = 0; x < images.size(); ++x)
    images[x] = b(a(x));
  return Automorphism(std::move(images));
}

Automorphism inverse(const Automorphism &a)
{
  std::vector<ElementId> images(a.images().size());
  for (ElementId x = 0; x < images.size(); ++x)
    images[a(x)] = x;
  return Automorphism(std::move(images));
}

std::optional<GroupIsomorphism> extend_to_isomorphism(
    const FiniteGroup &source, std::span<const ElementId> source_gens,
    const FiniteGroup &target, std::span<const ElementId> target_gens)
{
  if (source.order() != target.order() || source_gens.size() != target_gens.size())
    return std::nullopt;

  constexpr ElementId unset = static_cast<ElementId>(-1);
  std::vector<ElementId> images(source.order(), unset);
  std::vector<bool> hit(target.order(), false);
  std::vector<ElementId> queue{FiniteGroup::identity()};
  images[FiniteGroup::identity()] = FiniteGroup::identity();
  hit[FiniteGroup::identity()] = true;

  // phi(g s) = phi(g) t along every Cayley edge makes phi a homomorphism.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementId g = queue[head];
    for (std::size_t k = 0; k < source_gens.size(); ++k) {
      ElementId next = source.mul(g, source_gens[k]);
      ElementId image = target.mul(images[g], target_gens[k]);
      if (images[next] == unset) {
        if (hit[image])
          return std::nullopt;
        images[next] = image;
        hit[image] = true;
        queue.push_back(next);
      } else if (images[next] != image) {
        return std::nullopt;
      }
    }
  }

  if (queue.size() != source.order())
    return std::nullopt;
  return GroupIsomorphism(std::move(images));
}

std::vector<ElementId> small_generating_tuple(const FiniteGroup &group)
{
  std::size_t n = group.order();
  if (n == 1)
    return {FiniteGroup::identity()};

  for (ElementId a = 0; a < n; ++a) {
    if (group.element_order(a) == n)
      return {a};
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (group.closure({a, b}).size() == n)
        return {a, b};
    }
  }

  // Greedy fallback for groups that need three or more generators.
  std::vector<ElementId> gens;
  std::vector<ElementId> current{FiniteGroup::identity()};
  for (ElementId x = 0; x < n && current.size() < n; ++x) {
    if (std::binary_search(current.begin(), current.end(), x))
      continue;
    gens.push_back(x);
    current = group.closure(gens);
  }
  return gens;
}

std::vector<Automorphism> automorphism_group(const FiniteGroup &group)
{
  std::vector<ElementId> gens = small_generating_tuple(group);

  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (ElementId x = 0; x < group.order(); ++x) {
      if (group.element_order(x) == group.element_order(gens[k]))
        candidates[k].push_back(x);
    }
  }

  std::vector<Automorphism> result;
  std::vector<ElementId> images(gens.size());

  auto search = [&](auto &&self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (auto iso = extend_to_isomorphism(group, gens, group, images))
        result.push_back(std::move(*iso));
      return;
    }
    for (ElementId x : candidates[depth]) {
      images[depth] = x;
      self(self, depth + 1);
    }
  };
  search(search, 0);

  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Automorphism> pairs_isomorphic(std::span<const Automorphism> automorphisms,
                                             GeneratorPair first, GeneratorPair second)
{
  for (auto const &sigma : automorphisms) {
    if (sigma(first.rho) == second.rho && sigma(first.tau) == second.tau)
      return sigma;
  }
  return std::nullopt;
}

} // namespace mongraph
