#ifndef MONGRAPH_COSET_HPP
#define MONGRAPH_COSET_HPP

#include <cstddef>
#include <vector>

#include "group.hpp"

namespace mongraph {

using CosetId = std::uint32_t;

// Right cosets Ug of a subgroup, each named by its least element.
class CosetSpace
{
public:
  CosetSpace() = default;
  CosetSpace(const GroupPtr &group, Subgroup subgroup);

  const GroupPtr &group() const noexcept { return group_; }
  const Subgroup &subgroup() const noexcept { return subgroup_; }

  std::size_t size() const noexcept { return representatives_.size(); }
  // Canonical representatives in increasing order.
  const std::vector<ElementId> &representatives() const noexcept { return representatives_; }
  ElementId representative(CosetId c) const { return representatives_[c]; }
  CosetId coset_of(ElementId g) const { return coset_of_[g]; }
  std::vector<ElementId> members(CosetId c) const;

  // (Ux)^g = Uxg.
  CosetId act(CosetId c, ElementId g) const
  { return coset_of_[group_->mul(representatives_[c], g)]; }

private:
  GroupPtr group_;
  Subgroup subgroup_;
  std::vector<ElementId> representatives_;
  std::vector<CosetId> coset_of_;
};

CosetSpace right_cosets(const GroupPtr &group, const Subgroup &subgroup);

// The canonical transversal: least element of every coset.
std::vector<ElementId> right_transversal(const CosetSpace &space);

// True iff `candidate` holds exactly one element of every right coset.
bool is_right_transversal(const CosetSpace &space, const std::vector<ElementId> &candidate);

struct DoubleCosetBlock
{
  ElementId representative = 0;  // least element of the block
  std::size_t size = 0;
  std::size_t right_coset_count = 0;  // right U-cosets inside the block
};

class DoubleCosetDecomposition
{
public:
  DoubleCosetDecomposition() = default;
  DoubleCosetDecomposition(Subgroup left, Subgroup right);

  const Subgroup &left() const noexcept { return left_; }
  const Subgroup &right() const noexcept { return right_; }
  const std::vector<DoubleCosetBlock> &blocks() const noexcept { return blocks_; }
  std::size_t block_of(ElementId g) const { return block_of_[g]; }

private:
  Subgroup left_;
  Subgroup right_;
  std::vector<DoubleCosetBlock> blocks_;
  std::vector<std::size_t> block_of_;
};

// Blocks UgV ordered by least element, so the block of the identity is
// first. Each block is checked against |U||V| / |U^g ∩ V|.
DoubleCosetDecomposition double_cosets(const Subgroup &left, const Subgroup &right);

struct CosetAction
{
  std::vector<Permutation> images;  // indexed by ElementId
  bool faithful = false;
};

CosetAction coset_action(const CosetSpace &space);

// Orbits of H on [G : stabilizer], listed in the order of the double-coset
// blocks of (stabilizer, H). Each orbit is a sorted list of coset ids.
std::vector<std::vector<CosetId>> suborbits(const Subgroup &stabilizer, const Subgroup &h);

// For a transitive group on its points, the bijection point -> coset of the
// stabilizer of `base` given by w^g -> G_base g.
struct PointCosetBijection
{
  Subgroup stabilizer;
  CosetSpace cosets;
  std::vector<CosetId> coset_of_point;
};

PointCosetBijection point_coset_bijection(const GroupPtr &group, Point base);

} // namespace mongraph

#endif // MONGRAPH_COSET_HPP
