#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "grouplab/bounds.hpp"
#include "grouplab/perm_group.hpp"
#include "grouplab/subgroup.hpp"

namespace grouplab {

using ElementIndex = std::uint32_t;

// Bitset over the element indices of one GroupTable.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : _universe(universe), _words((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return _universe; }

  void insert(ElementIndex i) { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(ElementIndex i) const {
    return (_words[i >> 6] >> (i & 63)) & std::uint64_t{1};
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : _words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(ElementSet const &other) const noexcept {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i] & ~other._words[i])
        return false;
    return true;
  }

  ElementSet operator&(ElementSet const &other) const {
    ElementSet out(_universe);
    for (std::size_t i = 0; i < _words.size(); ++i) out._words[i] = _words[i] & other._words[i];
    return out;
  }

  std::size_t intersection_count(ElementSet const &other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < _words.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(_words[i] & other._words[i]));
    return c;
  }

  // Indices in increasing order.
  std::vector<ElementIndex> indices() const;

  std::size_t hash() const noexcept;

  friend bool operator==(ElementSet const &, ElementSet const &) = default;
  // Lexicographic on the sorted index sequence.
  friend bool lex_less(ElementSet const &a, ElementSet const &b);

 private:
  std::size_t _universe = 0;
  std::vector<std::uint64_t> _words;
};

// All elements of a group of order at most the element cap, sorted
// lexicographically by image list (so the identity is element 0), with an
// index, inverses, element orders and, for small groups, a full
// multiplication table.
class GroupTable {
 public:
  explicit GroupTable(PermGroup g, Bounds const &bounds = {});

  PermGroup const &group() const noexcept { return _group; }
  std::size_t size() const noexcept { return _elements.size(); }

  Permutation const &element(ElementIndex i) const { return _elements[i]; }
  // Throws PreconditionError for non-members.
  ElementIndex index_of(Permutation const &x) const;

  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const { return _inverse[a]; }
  // g^-1 x g
  ElementIndex conj(ElementIndex x, ElementIndex g) const { return mul(mul(_inverse[g], x), g); }
  std::uint64_t element_order(ElementIndex a) const { return _orders[a]; }
  std::span<ElementIndex const> generator_indices() const noexcept { return _gens; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet whole() const;
  ElementSet identity_set() const;

  ElementSet closure(std::span<ElementIndex const> gens) const;
  // <s, extra> where s is a subgroup.
  ElementSet closure_with(ElementSet const &s, std::span<ElementIndex const> s_gens,
                          ElementIndex extra) const;
  ElementSet join(ElementSet const &a, ElementSet const &b) const;
  ElementSet cyclic(ElementIndex x) const;

  ElementSet from_group(PermGroup const &h) const;
  ElementSet from_subgroup(Subgroup const &h) const { return from_group(h.group()); }
  // Greedy generating set in index order.
  std::vector<ElementIndex> generators_of(ElementSet const &s) const;
  Subgroup to_subgroup(ElementSet const &s) const;

  ElementSet conjugate(ElementSet const &s, ElementIndex g) const;
  bool is_normal(ElementSet const &s) const;
  // Largest normal subgroup inside s (conjugation fixpoint).
  ElementSet core(ElementSet const &s) const;
  ElementSet normal_closure(ElementSet const &s) const;

  // Order of x modulo a normal subgroup n: least k >= 1 with x^k in n.
  std::uint64_t order_modulo(ElementIndex x, ElementSet const &n) const;

 private:
  PermGroup _group;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, ElementIndex> _index;
  std::vector<ElementIndex> _inverse;
  std::vector<std::uint64_t> _orders;
  std::vector<ElementIndex> _gens;
  std::vector<ElementIndex> _table;  // row-major, empty when the group is large

  // Elements are determined by their base images, so products are located
  // through the images of the base points alone.
  std::vector<Point> _base;
  std::unordered_map<std::uint64_t, ElementIndex> _by_base_image;

  std::uint64_t base_key(ElementIndex a, ElementIndex b) const;
  ElementIndex product_index(ElementIndex a, ElementIndex b) const;
};

} // namespace grouplab
