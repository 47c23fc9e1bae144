#ifndef MONGRAPH_GROUP_HPP
#define MONGRAPH_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permutation.hpp"

namespace mongraph {

inline constexpr std::size_t default_order_bound = 10000;

// Element bound taken from MONGRAPH_BOUND when set, default otherwise.
std::size_t order_bound_from_env();

// Index of an element inside its FiniteGroup. Elements are sorted
// lexicographically by image table, so the identity is always element 0.
using ElementId = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A fully enumerated permutation group.
class FiniteGroup
{
public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }

  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }
  const Permutation &element(ElementId id) const { return elements_[id]; }

  static constexpr ElementId identity() noexcept { return 0; }

  std::optional<ElementId> find(const Permutation &p) const;
  // Throws Precondition("NotInGroup") when p is not an element.
  ElementId id_of(const Permutation &p) const;
  bool contains(const Permutation &p) const { return find(p).has_value(); }

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverses_[a]; }
  ElementId conj(ElementId x, ElementId g) const  // g^-1 x g
  { return mul(mul(inv(g), x), g); }
  ElementId power(ElementId a, long long k) const;
  std::size_t element_order(ElementId a) const { return orders_[a]; }

  // Closure of the given elements inside this group, sorted.
  std::vector<ElementId> closure(const std::vector<ElementId> &gens) const;

  std::vector<ElementId> generator_ids() const;

  friend GroupPtr generate_group(const std::vector<Permutation> &gens,
                                 std::size_t bound);

private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::size_t> orders_;
  std::vector<ElementId> table_;  // Cayley table, empty for large groups
};

// Throws Bound("ClosureExceedsBound") once the closure passes `bound`.
GroupPtr generate_group(const std::vector<Permutation> &gens,
                        std::size_t bound = default_order_bound);

// Parsed group description: a named family or an explicit generator list.
struct GroupSpec
{
  enum class Family { Symmetric, Alternating, Cyclic, Dihedral, Explicit };

  Family family = Family::Explicit;
  std::size_t parameter = 0;             // n of S<n>, A<n>, C<n>; 2n of D<2n>
  std::vector<std::string> generators;   // explicit cycle strings, normalized

  std::string to_string() const;
  std::size_t degree() const;
  std::vector<Permutation> generator_permutations() const;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

// Accepts "S<n>", "A<n>", "C<n>", "D<2n>" or "(1,2,3);(1,2)". Whitespace
// insensitive. Throws Parse on malformed input.
GroupSpec parse_group_spec(std::string_view text);
GroupPtr make_group(const GroupSpec &spec, std::size_t bound = default_order_bound);

class Subgroup
{
public:
  Subgroup() = default;

  // Closure of `gens` in `parent`.
  static Subgroup generated(GroupPtr parent, const std::vector<ElementId> &gens);
  // `elements` must already be closed; checked.
  static Subgroup from_elements(GroupPtr parent, std::vector<ElementId> elements);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr &parent() const noexcept { return parent_; }
  const std::vector<ElementId> &elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(ElementId id) const { return mask_[id]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  // A small generating set (greedy over increasing elements).
  std::vector<ElementId> generators() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b)
  { return a.parent_ == b.parent_ && a.elements_ == b.elements_; }

private:
  GroupPtr parent_;
  std::vector<ElementId> elements_;
  std::vector<bool> mask_;
};

// Subgroup generated by cycle strings separated by ';' ("" is trivial).
Subgroup parse_subgroup(const GroupPtr &group, std::string_view text);

Subgroup intersection(const Subgroup &a, const Subgroup &b);

// {g^-1 u g : u in U}.
Subgroup conjugate_subgroup(const Subgroup &u, ElementId g);
Subgroup conjugate_subgroup(const Subgroup &u, const Permutation &g);

Subgroup core(const Subgroup &u);
Subgroup normalizer(const Subgroup &u);
bool is_normal(const Subgroup &u);

// Some g with a^g = b, if the two subgroups are conjugate.
std::optional<ElementId> conjugating_element(const Subgroup &a, const Subgroup &b);

struct SubgroupClass
{
  Subgroup representative;  // lexicographically least element list in class
  std::size_t class_size = 0;
};

// One entry per conjugacy class, ordered by subgroup order then by
// representative. Found by cyclic extension.
std::vector<SubgroupClass> all_subgroup_classes(const GroupPtr &group);

} // namespace mongraph

#endif // MONGRAPH_GROUP_HPP
