#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grouplab {

using Point = std::uint32_t;

// A bijection of {0, ..., n-1}. Products compose left to right:
// (a * b)(i) = b(a(i)), i.e. "apply a, then b". Cycle notation in text is
// 1-based, matching the group file format.
class Permutation {
 public:
  Permutation() = default;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree);

  // Throws PreconditionError unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // Parses "(1,2,3)(4,5)" or "()" with 1-based points. Cycles may also be
  // written with spaces instead of commas, "(1 2 3)". Throws ParseError.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return _images.size(); }
  Point operator[](Point i) const noexcept { return _images[i]; }
  std::span<Point const> images() const noexcept { return _images; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long e) const;

  // Order of the element: lcm of cycle lengths.
  std::uint64_t order() const;

  // Smallest moved point, or degree() when this is the identity.
  Point first_moved() const noexcept;

  // 1-based cycle notation; identity prints as "()".
  std::string to_cycles() const;

  std::size_t hash() const noexcept;

  // Same permutation on {0..degree-1}, fixing the added points.
  Permutation extended(std::size_t degree) const;

  friend Permutation compose(Permutation const &a, Permutation const &b);

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &a, Permutation const &b) {
    return a._images <=> b._images;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : _images(std::move(images)) {}

  std::vector<Point> _images;
};

// i -> b(a(i)). Throws PreconditionError on degree mismatch.
Permutation compose(Permutation const &a, Permutation const &b);
Permutation inverse(Permutation const &a);

Permutation operator*(Permutation const &a, Permutation const &b);
Permutation &operator*=(Permutation &a, Permutation const &b);

// a^b = b^-1 a b.
Permutation conjugate(Permutation const &a, Permutation const &b);
Permutation commutator(Permutation const &a, Permutation const &b);

std::vector<Permutation> parse_generator_list(std::string_view text,
                                              std::size_t degree);
std::string format_generator_list(std::span<Permutation const> gens);

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept { return p.hash(); }
};

} // namespace grouplab

template <>
struct std::hash<grouplab::Permutation> {
  std::size_t operator()(grouplab::Permutation const &p) const noexcept {
    return p.hash();
  }
};
