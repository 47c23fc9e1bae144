#include "mongraph/coset.hpp"

#include <algorithm>
#include <set>

#include "mongraph/errors.hpp"

namespace mongraph {

namespace {

constexpr CosetId unassigned = static_cast<CosetId>(-1);

void require_same_parent(const GroupPtr &group, const Subgroup &subgroup)
{
  if (subgroup.parent() != group)
    throw precondition_error("NotSubgroup", "subgroup belongs to a different group");
}

} // namespace

CosetSpace::CosetSpace(const GroupPtr &group, Subgroup subgroup)
: group_(group), subgroup_(std::move(subgroup)), coset_of_(group->order(), unassigned)
{
  require_same_parent(group_, subgroup_);

  // Scanning in increasing order meets each coset first at its least element.
  for (ElementId g = 0; g < group_->order(); ++g) {
    if (coset_of_[g] != unassigned)
      continue;
    auto id = static_cast<CosetId>(representatives_.size());
    representatives_.push_back(g);
    for (ElementId u : subgroup_.elements())
      coset_of_[group_->mul(u, g)] = id;
  }
}

std::vector<ElementId> CosetSpace::members(CosetId c) const
{
  std::vector<ElementId> result;
  for (ElementId u : subgroup_.elements())
    result.push_back(group_->mul(u, representatives_[c]));
  std::sort(result.begin(), result.end());
  return result;
}

CosetSpace right_cosets(const GroupPtr &group, const Subgroup &subgroup)
{ return CosetSpace(group, subgroup); }

std::vector<ElementId> right_transversal(const CosetSpace &space)
{ return space.representatives(); }

bool is_right_transversal(const CosetSpace &space, const std::vector<ElementId> &candidate)
{
  if (candidate.size() != space.size())
    return false;
  std::vector<bool> hit(space.size(), false);
  for (ElementId g : candidate) {
    if (g >= space.group()->order())
      return false;
    CosetId c = space.coset_of(g);
    if (hit[c])
      return false;
    hit[c] = true;
  }
  return true;
}

DoubleCosetDecomposition::DoubleCosetDecomposition(Subgroup left, Subgroup right)
: left_(std::move(left)), right_(std::move(right))
{
  if (left_.parent() != right_.parent())
    throw precondition_error("NotSubgroup", "double cosets need subgroups of one group");

  auto const &group = *left_.parent();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  block_of_.assign(group.order(), none);

  for (ElementId g = 0; g < group.order(); ++g) {
    if (block_of_[g] != none)
      continue;

    std::size_t index = blocks_.size();
    std::set<ElementId> block;
    for (ElementId u : left_.elements()) {
      ElementId ug = group.mul(u, g);
      for (ElementId v : right_.elements())
        block.insert(group.mul(ug, v));
    }
    for (ElementId x : block)
      block_of_[x] = index;

    Subgroup meet = intersection(conjugate_subgroup(left_, g), right_);
    DoubleCosetBlock b;
    b.representative = g;
    b.size = block.size();
    b.right_coset_count = right_.order() / meet.order();
    if (b.size != left_.order() * right_.order() / meet.order())
      throw verification_error("DoubleCosetSize", "block size disagrees with |U||V|/|U^g ∩ V|");
    blocks_.push_back(b);
  }
}

DoubleCosetDecomposition double_cosets(const Subgroup &left, const Subgroup &right)
{ return DoubleCosetDecomposition(left, right); }

CosetAction coset_action(const CosetSpace &space)
{
  auto const &group = *space.group();
  CosetAction action;
  action.images.reserve(group.order());

  std::size_t kernel = 0;
  for (ElementId g = 0; g < group.order(); ++g) {
    std::vector<Point> images(space.size());
    for (CosetId c = 0; c < space.size(); ++c)
      images[c] = space.act(c, g);
    action.images.emplace_back(std::move(images));
    if (action.images.back().is_identity())
      ++kernel;
  }
  action.faithful = (kernel == 1);
  return action;
}

std::vector<std::vector<CosetId>> suborbits(const Subgroup &stabilizer, const Subgroup &h)
{
  CosetSpace space(stabilizer.parent(), stabilizer);
  DoubleCosetDecomposition dcd(stabilizer, h);

  std::vector<std::vector<CosetId>> orbits(dcd.blocks().size());
  for (ElementId g = 0; g < stabilizer.parent()->order(); ++g)
    orbits[dcd.block_of(g)].push_back(space.coset_of(g));

  for (std::size_t i = 0; i < orbits.size(); ++i) {
    auto &orbit = orbits[i];
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (orbit.size() != dcd.blocks()[i].right_coset_count)
      throw verification_error("SuborbitSize", "orbit size disagrees with |H|/|U^g ∩ H|");
  }
  return orbits;
}

PointCosetBijection point_coset_bijection(const GroupPtr &group, Point base)
{
  if (base >= group->degree())
    throw precondition_error("BadPoint", "base point outside the group's degree");

  std::vector<ElementId> fixing;
  for (ElementId g = 0; g < group->order(); ++g) {
    if (group->element(g)[base] == base)
      fixing.push_back(g);
  }
  Subgroup stabilizer = Subgroup::from_elements(group, std::move(fixing));
  CosetSpace cosets(group, stabilizer);

  std::vector<CosetId> coset_of_point(group->degree(), unassigned);
  for (ElementId g = 0; g < group->order(); ++g) {
    Point image = group->element(g)[base];
    CosetId c = cosets.coset_of(g);
    if (coset_of_point[image] == unassigned)
      coset_of_point[image] = c;
    else if (coset_of_point[image] != c)
      throw verification_error("PointCosetMap", "point-to-coset map is not well defined");
  }
  if (std::count(coset_of_point.begin(), coset_of_point.end(), unassigned) != 0)
    throw precondition_error("NotTransitive", "group is not transitive on its points");

  return {std::move(stabilizer), std::move(cosets), std::move(coset_of_point)};
}

} // namespace mongraph
