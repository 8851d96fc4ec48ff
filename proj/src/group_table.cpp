#include "grouplab/group_table.hpp"

#include <algorithm>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {
constexpr std::size_t kTableLimit = 2048;
}

std::vector<ElementIndex> ElementSet::indices() const {
  std::vector<ElementIndex> out;
  for (std::size_t w = 0; w < _words.size(); ++w) {
    std::uint64_t bits = _words[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : _words) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

bool lex_less(ElementSet const &a, ElementSet const &b) {
  // The first index where the sets differ decides: the set containing it has
  // the smaller sequence at that position.
  for (std::size_t w = 0; w < a._words.size(); ++w) {
    std::uint64_t diff = a._words[w] ^ b._words[w];
    if (diff) {
      int bit = std::countr_zero(diff);
      return (a._words[w] >> bit) & 1u;
    }
  }
  return false;
}

GroupTable::GroupTable(PermGroup g, Bounds const &bounds) : _group(std::move(g)) {
  _elements = _group.elements(bounds.element_cap);
  std::sort(_elements.begin(), _elements.end());
  std::size_t n = _elements.size();
  _index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) _index.emplace(_elements[i], static_cast<ElementIndex>(i));

  _inverse.resize(n);
  _orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    _inverse[i] = _index.at(_elements[i].inverse());
    _orders[i] = _elements[i].order();
  }
  for (auto const &s : _group.generators())
    if (!s.is_identity())
      _gens.push_back(_index.at(s));

  _base = _group.base();
  _by_base_image.reserve(n * 2);
  ElementIndex identity = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // base_key(i, identity) is the key of element i itself.
    bool fresh = _by_base_image.emplace(base_key(static_cast<ElementIndex>(i), identity),
                                        static_cast<ElementIndex>(i)).second;
    if (!fresh) {
      _by_base_image.clear();  // hash collision: fall back to full lookups
      break;
    }
  }

  if (n <= kTableLimit) {
    _table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        _table[a * n + b] =
            product_index(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
  }
}

std::uint64_t GroupTable::base_key(ElementIndex a, ElementIndex b) const {
  std::uint64_t h = 1469598103934665603ull;
  Permutation const &x = _elements[a];
  Permutation const &y = _elements[b];
  for (Point p : _base) {
    h ^= y[x[p]];
    h *= 1099511628211ull;
  }
  return h;
}

ElementIndex GroupTable::product_index(ElementIndex a, ElementIndex b) const {
  if (!_by_base_image.empty()) {
    auto it = _by_base_image.find(base_key(a, b));
    if (it != _by_base_image.end())
      return it->second;
  }
  return _index.at(_elements[a] * _elements[b]);
}

ElementIndex GroupTable::index_of(Permutation const &x) const {
  auto it = _index.find(x);
  if (it == _index.end())
    throw PreconditionError("element " + x.to_cycles() + " is not in the group");
  return it->second;
}

ElementIndex GroupTable::mul(ElementIndex a, ElementIndex b) const {
  if (!_table.empty())
    return _table[static_cast<std::size_t>(a) * _elements.size() + b];
  return product_index(a, b);
}

ElementSet GroupTable::whole() const {
  ElementSet s(size());
  for (ElementIndex i = 0; i < size(); ++i) s.insert(i);
  return s;
}

ElementSet GroupTable::identity_set() const {
  ElementSet s(size());
  s.insert(0);
  return s;
}

ElementSet GroupTable::closure(std::span<ElementIndex const> gens) const {
  ElementSet s(size());
  s.insert(0);
  std::vector<ElementIndex> list{0};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (ElementIndex g : gens) {
      ElementIndex y = mul(list[i], g);
      if (!s.contains(y)) {
        s.insert(y);
        list.push_back(y);
      }
    }
  return s;
}

ElementSet GroupTable::closure_with(ElementSet const &s, std::span<ElementIndex const> s_gens,
                                    ElementIndex extra) const {
  if (s.contains(extra))
    return s;
  ElementSet out = s;
  std::vector<ElementIndex> list = s.indices();
  std::size_t old = list.size();
  for (std::size_t i = 0; i < list.size(); ++i) {
    ElementIndex y = mul(list[i], extra);
    if (!out.contains(y)) {
      out.insert(y);
      list.push_back(y);
    }
    if (i < old)
      continue;
    for (ElementIndex g : s_gens) {
      y = mul(list[i], g);
      if (!out.contains(y)) {
        out.insert(y);
        list.push_back(y);
      }
    }
  }
  return out;
}

ElementSet GroupTable::join(ElementSet const &a, ElementSet const &b) const {
  if (b.is_subset_of(a))
    return a;
  if (a.is_subset_of(b))
    return b;
  auto gens = generators_of(a);
  for (ElementIndex x : generators_of(b)) gens.push_back(x);
  return closure(gens);
}

ElementSet GroupTable::cyclic(ElementIndex x) const {
  ElementSet s(size());
  ElementIndex y = 0;
  do {
    s.insert(y);
    y = mul(y, x);
  } while (y != 0);
  return s;
}

ElementSet GroupTable::from_group(PermGroup const &h) const {
  if (h.order() > size())
    throw PreconditionError("from_group: not a subgroup");
  ElementSet s(size());
  std::vector<ElementIndex> gens;
  for (auto const &x : h.generators()) gens.push_back(index_of(x));
  return closure(gens);
}

std::vector<ElementIndex> GroupTable::generators_of(ElementSet const &s) const {
  std::vector<ElementIndex> gens;
  ElementSet current = identity_set();
  std::size_t target = s.count();
  for (ElementIndex x : s.indices()) {
    if (current.count() == target)
      break;
    if (current.contains(x))
      continue;
    current = closure_with(current, gens, x);
    gens.push_back(x);
  }
  return gens;
}

Subgroup GroupTable::to_subgroup(ElementSet const &s) const {
  std::vector<Permutation> gens;
  for (ElementIndex x : generators_of(s)) gens.push_back(_elements[x]);
  return Subgroup(_group, PermGroup(_group.degree(), std::move(gens),
                                    PermGroup::Options{.known_order = Order(s.count())}));
}

ElementSet GroupTable::conjugate(ElementSet const &s, ElementIndex g) const {
  ElementSet out(size());
  for (ElementIndex x : s.indices()) out.insert(conj(x, g));
  return out;
}

bool GroupTable::is_normal(ElementSet const &s) const {
  for (ElementIndex x : generators_of(s))
    for (ElementIndex g : _gens)
      if (!s.contains(conj(x, g)))
        return false;
  return true;
}

ElementSet GroupTable::core(ElementSet const &s) const {
  ElementSet current = s;
  while (true) {
    ElementSet next = current;
    for (ElementIndex g : _gens) next = next & conjugate(current, _inverse[g]);
    if (next == current)
      return current;
    current = std::move(next);
  }
}

ElementSet GroupTable::normal_closure(ElementSet const &s) const {
  ElementSet current = s;
  while (true) {
    auto gens = generators_of(current);
    std::vector<ElementIndex> extended = gens;
    for (ElementIndex x : gens)
      for (ElementIndex g : _gens) {
        ElementIndex y = conj(x, g);
        if (!current.contains(y))
          extended.push_back(y);
      }
    if (extended.size() == gens.size())
      return current;
    current = closure(extended);
  }
}

std::uint64_t GroupTable::order_modulo(ElementIndex x, ElementSet const &n) const {
  std::uint64_t k = 1;
  ElementIndex y = x;
  while (!n.contains(y)) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

} // namespace grouplab
