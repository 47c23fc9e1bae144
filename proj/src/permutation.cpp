#include "mongraph/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mongraph/errors.hpp"

namespace mongraph {

Permutation::Permutation(std::size_t degree)
: images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw precondition_error("NotBijection", "image table is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles)
{
  Permutation result(degree);
  for (auto const &cycle : cycles) {
    if (cycle.empty())
      continue;

    Permutation c(degree);
    std::vector<bool> used(degree, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree)
        throw parse_error("point " + std::to_string(from + 1) +
                          " exceeds degree " + std::to_string(degree));
      if (used[from])
        throw parse_error("point " + std::to_string(from + 1) +
                          " repeated within a cycle");
      used[from] = true;
      c.images_[from] = cycle[(i + 1) % cycle.size()];
    }
    result = result * c;
  }
  return result;
}

bool Permutation::is_identity() const noexcept
{
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result(degree());
  for (Point i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = i;
  return result;
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  for (auto const &cycle : cycles())
    result = std::lcm(result, cycle.size());
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);

  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;

    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::size_t Permutation::cycle_count() const
{
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    ++count;
    for (Point x = start; !seen[x]; x = images_[x])
      seen[x] = true;
  }
  return count;
}

std::string Permutation::to_string() const
{
  std::string out;
  for (auto const &cycle : cycles()) {
    if (cycle.size() < 2)
      continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    throw precondition_error("DegreeMismatch",
                             "cannot compose permutations of degree " +
                             std::to_string(p.degree()) + " and " +
                             std::to_string(q.degree()));

  Permutation result(p.degree());
  for (Point i = 0; i < p.degree(); ++i)
    result.images_[i] = q[p[i]];
  return result;
}

std::vector<std::vector<Point>> cycle_decomposition(const Permutation &p)
{ return p.cycles(); }

namespace {

std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text)
{
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> *current = nullptr;
  std::string number;

  auto flush_number = [&]() {
    if (number.empty())
      return;
    if (!current)
      throw parse_error("point outside parentheses in '" + std::string(text) + "'");
    std::size_t value = std::stoul(number);
    if (value == 0)
      throw parse_error("points are 1-based; got 0 in '" + std::string(text) + "'");
    current->push_back(value);
    number.clear();
  };

  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)))
      continue;

    if (std::isdigit(static_cast<unsigned char>(ch))) {
      number += ch;
      if (number.size() > 6)
        throw parse_error("point out of range in '" + std::string(text) + "'");
    } else if (ch == '(') {
      if (current)
        throw parse_error("nested '(' in '" + std::string(text) + "'");
      cycles.emplace_back();
      current = &cycles.back();
    } else if (ch == ',') {
      if (number.empty())
        throw parse_error("empty point in '" + std::string(text) + "'");
      flush_number();
    } else if (ch == ')') {
      if (!current)
        throw parse_error("unbalanced ')' in '" + std::string(text) + "'");
      if (number.empty() && !current->empty())
        throw parse_error("trailing ',' in '" + std::string(text) + "'");
      flush_number();
      current = nullptr;
    } else {
      throw parse_error(std::string("unexpected character '") + ch + "' in '" +
                        std::string(text) + "'");
    }
  }

  if (current || !number.empty())
    throw parse_error("unterminated cycle in '" + std::string(text) + "'");

  return cycles;
}

} // namespace

std::size_t max_point(std::string_view text)
{
  std::size_t result = 0;
  for (auto const &cycle : parse_cycles(text)) {
    for (std::size_t x : cycle)
      result = std::max(result, x);
  }
  return result;
}

Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  for (auto const &cycle : parse_cycles(text)) {
    std::vector<Point> zero_based;
    for (std::size_t x : cycle) {
      if (x > degree)
        throw parse_error("point " + std::to_string(x) + " exceeds degree " +
                          std::to_string(degree));
      zero_based.push_back(static_cast<Point>(x - 1));
    }
    cycles.push_back(std::move(zero_based));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  std::size_t h = p.degree();
  for (Point x : p.images())
    h = h * 1000003u ^ x;
  return h;
}

} // namespace mongraph
