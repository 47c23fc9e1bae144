#include "mongraph/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

#include "mongraph/errors.hpp"

namespace mongraph {

namespace {

constexpr std::size_t cayley_table_limit = 1024;

struct IdVectorHash
{
  std::size_t operator()(const std::vector<ElementId> &v) const noexcept
  {
    std::size_t h = v.size();
    for (ElementId x : v)
      h = h * 1000003u ^ x;
    return h;
  }
};

std::string strip_spaces(std::string_view text)
{
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)))
      out += ch;
  }
  return out;
}

std::vector<std::string> split(const std::string &text, char sep)
{
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

Permutation cycle_of_range(std::size_t degree, Point first, Point last)
{
  std::vector<Point> cycle;
  for (Point p = first; p <= last; ++p)
    cycle.push_back(p);
  return Permutation::from_cycles(degree, {cycle});
}

} // namespace

std::size_t order_bound_from_env()
{
  if (const char *env = std::getenv("MONGRAPH_BOUND")) {
    char *end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return static_cast<std::size_t>(value);
  }
  return default_order_bound;
}

std::optional<ElementId> FiniteGroup::find(const Permutation &p) const
{
  if (p.degree() != degree_)
    return std::nullopt;
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::id_of(const Permutation &p) const
{
  auto id = find(p);
  if (!id)
    throw precondition_error("NotInGroup", p.to_string() + " is not an element of the group");
  return *id;
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const
{
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementId FiniteGroup::power(ElementId a, long long k) const
{
  auto n = static_cast<long long>(orders_[a]);
  k %= n;
  if (k < 0)
    k += n;
  ElementId result = identity();
  for (long long i = 0; i < k; ++i)
    result = mul(result, a);
  return result;
}

std::vector<ElementId> FiniteGroup::closure(const std::vector<ElementId> &gens) const
{
  std::vector<bool> seen(order(), false);
  std::vector<ElementId> result{identity()};
  seen[identity()] = true;

  for (std::size_t i = 0; i < result.size(); ++i) {
    for (ElementId g : gens) {
      ElementId next = mul(result[i], g);
      if (!seen[next]) {
        seen[next] = true;
        result.push_back(next);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<ElementId> FiniteGroup::generator_ids() const
{
  std::vector<ElementId> ids;
  for (auto const &g : generators_)
    ids.push_back(id_of(g));
  return ids;
}

GroupPtr generate_group(const std::vector<Permutation> &gens, std::size_t bound)
{
  if (gens.empty())
    throw precondition_error("NoGenerators", "a group needs at least one generator");

  std::size_t degree = gens.front().degree();
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw precondition_error("DegreeMismatch", "generators differ in degree");
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier.front());

  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > bound)
            throw bound_error("ClosureExceedsBound",
                              "group closure exceeds " + std::to_string(bound) +
                              " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->generators_ = gens;
  group->elements_.assign(seen.begin(), seen.end());
  std::sort(group->elements_.begin(), group->elements_.end());

  std::size_t n = group->elements_.size();
  for (ElementId i = 0; i < n; ++i)
    group->index_.emplace(group->elements_[i], i);

  if (n <= cayley_table_limit) {
    group->table_.resize(n * n);
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b)
        group->table_[a * n + b] = group->index_.at(group->elements_[a] * group->elements_[b]);
    }
  }

  group->inverses_.resize(n);
  group->orders_.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    group->inverses_[a] = group->index_.at(group->elements_[a].inverse());
    group->orders_[a] = group->elements_[a].order();
  }

  return group;
}

std::string GroupSpec::to_string() const
{
  switch (family) {
  case Family::Symmetric:
    return "S" + std::to_string(parameter);
  case Family::Alternating:
    return "A" + std::to_string(parameter);
  case Family::Cyclic:
    return "C" + std::to_string(parameter);
  case Family::Dihedral:
    return "D" + std::to_string(parameter);
  case Family::Explicit:
    break;
  }

  std::string out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0)
      out += ';';
    out += generators[i];
  }
  return out;
}

std::size_t GroupSpec::degree() const
{
  switch (family) {
  case Family::Symmetric:
  case Family::Alternating:
  case Family::Cyclic:
    return parameter;
  case Family::Dihedral:
    return parameter / 2;
  case Family::Explicit:
    break;
  }

  std::size_t result = 1;
  for (auto const &g : generators)
    result = std::max(result, max_point(g));
  return result;
}

std::vector<Permutation> GroupSpec::generator_permutations() const
{
  std::size_t n = degree();
  std::vector<Permutation> gens;

  switch (family) {
  case Family::Symmetric:
    if (n >= 2) {
      gens.push_back(cycle_of_range(n, 0, static_cast<Point>(n - 1)));
      gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    }
    break;
  case Family::Alternating:
    for (Point k = 2; k < n; ++k)
      gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
    break;
  case Family::Cyclic:
    if (n >= 2)
      gens.push_back(cycle_of_range(n, 0, static_cast<Point>(n - 1)));
    break;
  case Family::Dihedral: {
    gens.push_back(cycle_of_range(n, 0, static_cast<Point>(n - 1)));
    std::vector<std::vector<Point>> reflection;
    for (Point i = 0; i < n - 1 - i; ++i)
      reflection.push_back({i, static_cast<Point>(n - 1 - i)});
    gens.push_back(Permutation::from_cycles(n, reflection));
    break;
  }
  case Family::Explicit:
    for (auto const &g : generators)
      gens.push_back(parse_permutation(g, n));
    break;
  }

  if (gens.empty())
    gens.push_back(Permutation::identity(n));
  return gens;
}

GroupSpec parse_group_spec(std::string_view text)
{
  std::string s = strip_spaces(text);
  if (s.empty())
    throw parse_error("empty group specification");

  GroupSpec spec;
  char head = s.front();
  bool named = (head == 'S' || head == 'A' || head == 'C' || head == 'D') &&
               s.size() > 1 &&
               std::all_of(s.begin() + 1, s.end(),
                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });

  if (named) {
    if (s.size() > 6)
      throw parse_error("group parameter too large in '" + s + "'");
    spec.parameter = std::stoul(s.substr(1));
    if (spec.parameter == 0)
      throw parse_error("group parameter must be positive in '" + s + "'");

    switch (head) {
    case 'S': spec.family = GroupSpec::Family::Symmetric; break;
    case 'A': spec.family = GroupSpec::Family::Alternating; break;
    case 'C': spec.family = GroupSpec::Family::Cyclic; break;
    default:
      spec.family = GroupSpec::Family::Dihedral;
      if (spec.parameter % 2 != 0 || spec.parameter < 6)
        throw parse_error("dihedral groups are written D<2n> with n >= 3; got '" + s + "'");
    }
    return spec;
  }

  for (auto &piece : split(s, ';')) {
    if (piece.empty())
      continue;
    (void)max_point(piece);  // validates syntax
    spec.generators.push_back(piece);
  }
  if (spec.generators.empty())
    throw parse_error("no generators in '" + s + "'");
  return spec;
}

GroupPtr make_group(const GroupSpec &spec, std::size_t bound)
{ return generate_group(spec.generator_permutations(), bound); }

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<ElementId> &gens)
{
  Subgroup s;
  s.elements_ = parent->closure(gens);
  s.mask_.assign(parent->order(), false);
  for (ElementId x : s.elements_)
    s.mask_[x] = true;
  s.parent_ = std::move(parent);
  return s;
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<ElementId> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  Subgroup s;
  s.mask_.assign(parent->order(), false);
  for (ElementId x : elements) {
    if (x >= parent->order())
      throw precondition_error("NotInGroup", "element id out of range");
    s.mask_[x] = true;
  }
  if (elements.empty() || !s.mask_[FiniteGroup::identity()])
    throw precondition_error("NotSubgroup", "element set lacks the identity");
  for (ElementId a : elements) {
    for (ElementId b : elements) {
      if (!s.mask_[parent->mul(a, b)])
        throw precondition_error("NotSubgroup", "element set is not closed");
    }
  }
  s.elements_ = std::move(elements);
  s.parent_ = std::move(parent);
  return s;
}

Subgroup Subgroup::trivial(GroupPtr parent)
{ return generated(std::move(parent), {}); }

Subgroup Subgroup::whole(GroupPtr parent)
{
  std::vector<ElementId> all(parent->order());
  for (ElementId i = 0; i < all.size(); ++i)
    all[i] = i;
  Subgroup s;
  s.elements_ = std::move(all);
  s.mask_.assign(parent->order(), true);
  s.parent_ = std::move(parent);
  return s;
}

std::vector<ElementId> Subgroup::generators() const
{
  std::vector<ElementId> gens;
  std::vector<ElementId> current{FiniteGroup::identity()};
  for (ElementId x : elements_) {
    if (current.size() == elements_.size())
      break;
    if (std::binary_search(current.begin(), current.end(), x))
      continue;
    gens.push_back(x);
    current = parent_->closure(gens);
  }
  return gens;
}

Subgroup parse_subgroup(const GroupPtr &group, std::string_view text)
{
  std::vector<ElementId> gens;
  for (auto &piece : split(strip_spaces(text), ';')) {
    if (piece.empty())
      continue;
    gens.push_back(group->id_of(parse_permutation(piece, group->degree())));
  }
  return Subgroup::generated(group, gens);
}

Subgroup intersection(const Subgroup &a, const Subgroup &b)
{
  std::vector<ElementId> common;
  for (ElementId x : a.elements()) {
    if (b.contains(x))
      common.push_back(x);
  }
  return Subgroup::from_elements(a.parent(), std::move(common));
}

Subgroup conjugate_subgroup(const Subgroup &u, ElementId g)
{
  auto const &group = *u.parent();
  std::vector<ElementId> images;
  images.reserve(u.order());
  for (ElementId x : u.elements())
    images.push_back(group.conj(x, g));
  return Subgroup::from_elements(u.parent(), std::move(images));
}

Subgroup conjugate_subgroup(const Subgroup &u, const Permutation &g)
{ return conjugate_subgroup(u, u.parent()->id_of(g)); }

Subgroup core(const Subgroup &u)
{
  auto const &group = *u.parent();
  std::vector<ElementId> kept;
  for (ElementId x : u.elements()) {
    bool everywhere = true;
    for (ElementId g = 0; g < group.order() && everywhere; ++g)
      everywhere = u.contains(group.conj(x, g));
    if (everywhere)
      kept.push_back(x);
  }
  return Subgroup::from_elements(u.parent(), std::move(kept));
}

Subgroup normalizer(const Subgroup &u)
{
  auto const &group = *u.parent();
  std::vector<ElementId> kept;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool normalizes = true;
    for (ElementId x : u.elements()) {
      if (!u.contains(group.conj(x, g))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes)
      kept.push_back(g);
  }
  return Subgroup::from_elements(u.parent(), std::move(kept));
}

bool is_normal(const Subgroup &u)
{ return normalizer(u).order() == u.parent()->order(); }

std::optional<ElementId> conjugating_element(const Subgroup &a, const Subgroup &b)
{
  if (a.parent() != b.parent() || a.order() != b.order())
    return std::nullopt;

  auto const &group = *a.parent();
  for (ElementId g = 0; g < group.order(); ++g) {
    bool match = true;
    for (ElementId x : a.elements()) {
      if (!b.contains(group.conj(x, g))) {
        match = false;
        break;
      }
    }
    if (match)
      return g;
  }
  return std::nullopt;
}

std::vector<SubgroupClass> all_subgroup_classes(const GroupPtr &group)
{
  std::unordered_set<std::vector<ElementId>, IdVectorHash> seen;
  std::vector<SubgroupClass> classes;
  std::deque<std::size_t> pending;

  auto add = [&](const std::vector<ElementId> &elements) {
    if (seen.count(elements))
      return;

    std::set<std::vector<ElementId>> conjugates;
    for (ElementId g = 0; g < group->order(); ++g) {
      std::vector<ElementId> image;
      image.reserve(elements.size());
      for (ElementId x : elements)
        image.push_back(group->conj(x, g));
      std::sort(image.begin(), image.end());
      conjugates.insert(std::move(image));
    }
    for (auto const &c : conjugates)
      seen.insert(c);

    classes.push_back({Subgroup::from_elements(group, *conjugates.begin()),
                       conjugates.size()});
    pending.push_back(classes.size() - 1);
  };

  add({FiniteGroup::identity()});
  for (ElementId g = 0; g < group->order(); ++g)
    add(group->closure({g}));

  // Every subgroup is reached from a conjugate of some representative by
  // adjoining one element, so extending representatives suffices.
  while (!pending.empty()) {
    std::size_t index = pending.front();
    pending.pop_front();

    Subgroup rep = classes[index].representative;
    std::vector<ElementId> gens = rep.generators();
    for (ElementId x = 0; x < group->order(); ++x) {
      if (rep.contains(x))
        continue;
      gens.push_back(x);
      add(group->closure(gens));
      gens.pop_back();
    }
  }

  std::sort(classes.begin(), classes.end(), [](auto const &a, auto const &b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.elements() < b.representative.elements();
  });
  return classes;
}

} // namespace mongraph
