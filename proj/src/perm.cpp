#include "grouplab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "grouplab/errors.hpp"

namespace grouplab {

Permutation::Permutation(std::size_t degree) : _images(degree) {
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : _images(std::move(images)) {
  std::vector<bool> seen(_images.size(), false);
  for (Point p : _images) {
    if (p >= _images.size() || seen[p])
      throw PreconditionError("permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation::Permutation(std::initializer_list<Point> images)
    : Permutation(std::vector<Point>(images)) {}

namespace {

bool is_sep(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

} // namespace

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_space();
  if (i == text.size())
    throw ParseError("empty permutation", 0);

  while (i < text.size()) {
    skip_space();
    if (i == text.size())
      break;
    if (text[i] != '(')
      throw ParseError("expected '(' in \"" + std::string(text) + "\"", 0);
    ++i;
    std::vector<Point> cycle;
    while (true) {
      while (i < text.size() && is_sep(text[i])) ++i;
      if (i == text.size())
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"", 0);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "' in \"" + std::string(text) + "\"",
                         0);
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree)
          break;
        ++i;
      }
      if (value == 0 || value > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree) +
                             " in \"" + std::string(text) + "\"",
                         0);
      Point p = static_cast<Point>(value - 1);
      if (used[p])
        throw ParseError("point " + std::to_string(value) +
                             " repeated; permutation is not a bijection",
                         0);
      used[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }

  Permutation result;
  result._images = std::move(images);
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (Point i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result._images.resize(_images.size());
  for (Point i = 0; i < _images.size(); ++i)
    result._images[_images[i]] = i;
  return result;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (n > 0) {
    if (n & 1u)
      result *= base;
    n >>= 1u;
    if (n > 0)
      base *= base;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(_images.size(), false);
  std::uint64_t result = 1;
  for (Point i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::first_moved() const noexcept {
  for (Point i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return i;
  return static_cast<Point>(_images.size());
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(_images.size(), false);
  for (Point i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    out += '(';
    bool first = true;
    for (Point j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      if (!first)
        out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : _images) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < _images.size())
    throw PreconditionError("cannot shrink a permutation");
  Permutation result(degree);
  std::copy(_images.begin(), _images.end(), result._images.begin());
  return result;
}

Permutation compose(Permutation const &a, Permutation const &b) {
  if (a.degree() != b.degree())
    throw PreconditionError("degree mismatch in compose: " + std::to_string(a.degree()) +
                            " vs " + std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[i] = b._images[a._images[i]];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation inverse(Permutation const &a) { return a.inverse(); }

Permutation operator*(Permutation const &a, Permutation const &b) { return compose(a, b); }

Permutation &operator*=(Permutation &a, Permutation const &b) {
  a = compose(a, b);
  return a;
}

Permutation conjugate(Permutation const &a, Permutation const &b) {
  return b.inverse() * a * b;
}

Permutation commutator(Permutation const &a, Permutation const &b) {
  return a.inverse() * b.inverse() * a * b;
}

std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> gens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (is_sep(text[i]) || text[i] == ';')) ++i;
    if (i == text.size())
      break;
    if (text[i] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(i) + " in \"" +
                           std::string(text) + "\"",
                       0);
    std::size_t start = i;
    // A generator is a maximal run of adjacent cycles "(..)(..)".
    while (i < text.size() && text[i] == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos)
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"", 0);
      i = close + 1;
    }
    gens.push_back(Permutation::from_cycles(text.substr(start, i - start), degree));
  }
  return gens;
}

std::string format_generator_list(std::span<Permutation const> gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += gens[i].to_cycles();
  }
  return out;
}

} // namespace grouplab
