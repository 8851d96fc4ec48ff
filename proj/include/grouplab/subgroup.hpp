#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouplab/bounds.hpp"
#include "grouplab/perm_group.hpp"

namespace grouplab {

// A subgroup tagged with the group it lives in. Generators are checked for
// membership in the parent at construction.
class Subgroup {
 public:
  Subgroup(PermGroup parent, std::vector<Permutation> gens);
  Subgroup(PermGroup parent, PermGroup group);

  static Subgroup whole(PermGroup const &g) { return Subgroup(g, g); }
  static Subgroup trivial(PermGroup const &g) { return Subgroup(g, PermGroup::trivial(g.degree())); }

  PermGroup const &parent() const noexcept { return _parent; }
  PermGroup const &group() const noexcept { return _group; }
  std::vector<Permutation> const &generators() const noexcept { return _group.generators(); }
  Order const &order() const noexcept { return _group.order(); }
  std::size_t degree() const noexcept { return _group.degree(); }
  Order index() const { return _parent.order() / _group.order(); }

  bool contains(Permutation const &x) const { return _group.contains(x); }
  bool contains(Subgroup const &k) const { return _group.contains_group(k.group()); }
  bool is_trivial() const noexcept { return _group.is_trivial(); }
  bool is_whole() const { return _group.order() == _parent.order(); }

  // The same subgroup viewed inside another group that contains it.
  Subgroup within(PermGroup const &other) const { return Subgroup(other, _group); }

  std::string to_string() const;

  // Element-set equality; parents must have the same degree.
  friend bool operator==(Subgroup const &a, Subgroup const &b) {
    return a._group.same_group(b._group);
  }

 private:
  PermGroup _parent;
  PermGroup _group;
};

// Builds a subgroup from an explicit element list, choosing generators
// greedily in list order.
Subgroup subgroup_from_elements(PermGroup const &parent, std::span<Permutation const> elements);

// h^g = h for every generator pair.
bool is_normal(Subgroup const &h);

// Largest normal subgroup of the parent inside h. Uses the kernel of the coset
// action when the index is within bounds, otherwise the element-filter
// fixpoint; ResourceExceeded when neither is feasible.
Subgroup core(Subgroup const &h, Bounds const &bounds = {});
// The two routes separately, for cross-checking.
Subgroup core_by_coset_action(Subgroup const &h, Bounds const &bounds = {});
Subgroup core_by_element_filter(Subgroup const &h, Bounds const &bounds = {});

struct ProductInfo {
  Order set_size;  // |HK| = |H||K|/|H n K|
  bool is_subgroup = false;
  std::optional<Subgroup> subgroup;  // HK when it is a subgroup
};

ProductInfo product(Subgroup const &h, Subgroup const &k, Bounds const &bounds = {});

// Element filter over the smaller factor; coprime orders short-circuit to the
// trivial group. ResourceExceeded when both exceed the element cap.
Subgroup intersect(Subgroup const &h, Subgroup const &k, Bounds const &bounds = {});

Subgroup join(Subgroup const &h, Subgroup const &k);
Subgroup conjugate(Subgroup const &h, Permutation const &g);
Subgroup normal_closure(Subgroup const &h);

// Element filters over the parent; ResourceExceeded above the element cap.
Subgroup normalizer(Subgroup const &h, Bounds const &bounds = {});
Subgroup centralizer(Subgroup const &h, Bounds const &bounds = {});

// Image of h under a homomorphism defined on h's parent, as a subgroup of the
// image group.
Subgroup image_subgroup(GroupHom const &hom, Subgroup const &h);

} // namespace grouplab
