#ifndef MONGRAPH_PERMUTATION_HPP
#define MONGRAPH_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mongraph {

// Points are 0-based internally; text I/O uses 1-based cycle notation.
using Point = std::uint32_t;

// A bijection of {0, ..., degree-1} stored as an image table.
//
// Products follow the right-action convention: the point i is sent by
// p * q to q(p(i)), i.e. "apply p, then q".
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // Each cycle lists 0-based points; a product of non-disjoint cycles is
  // applied left to right.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;

  // Disjoint cycles, each starting at its smallest point, ordered by that
  // point; fixed points appear as length-1 cycles.
  std::vector<std::vector<Point>> cycles() const;
  std::size_t cycle_count() const;

  // 1-based cycle notation without fixed points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &lhs,
                                          const Permutation &rhs) = default;

private:
  friend Permutation compose(const Permutation &p, const Permutation &q);

  std::vector<Point> images_;
};

// Result maps i to q(p(i)). Throws Precondition on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);

inline Permutation operator*(const Permutation &p, const Permutation &q)
{ return compose(p, q); }

std::vector<std::vector<Point>> cycle_decomposition(const Permutation &p);

// Parses "(1,5,4,3,2)(1,2)" style text (whitespace ignored, "" or "()" is
// the identity). Points must lie in 1..degree.
Permutation parse_permutation(std::string_view text, std::size_t degree);

// Largest point mentioned in a cycle string, 0 if none.
std::size_t max_point(std::string_view text);

struct PermutationHash
{
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace mongraph

#endif // MONGRAPH_PERMUTATION_HPP
