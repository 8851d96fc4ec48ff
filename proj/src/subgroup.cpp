#include "grouplab/subgroup.hpp"

#include <boost/multiprecision/integer.hpp>
#include <unordered_set>

#include "grouplab/errors.hpp"

namespace grouplab {

Subgroup::Subgroup(PermGroup parent, std::vector<Permutation> gens)
    : _parent(std::move(parent)), _group(_parent.degree(), std::move(gens)) {
  for (auto const &x : _group.generators())
    if (!_parent.contains(x))
      throw PreconditionError("generator " + x.to_cycles() + " is not in the parent group");
}

Subgroup::Subgroup(PermGroup parent, PermGroup group)
    : _parent(std::move(parent)), _group(std::move(group)) {
  if (!_parent.contains_group(_group))
    throw PreconditionError("not a subgroup of the parent group");
}

std::string Subgroup::to_string() const {
  return "<" + format_generator_list(_group.generators()) + "> (order " + order().str() + ")";
}

Subgroup subgroup_from_elements(PermGroup const &parent, std::span<Permutation const> elements) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(parent.degree());
  for (auto const &x : elements) {
    if (current.contains(x))
      continue;
    gens.push_back(x);
    current = PermGroup(parent.degree(), gens);
  }
  return Subgroup(parent, current);
}

bool is_normal(Subgroup const &h) {
  for (auto const &x : h.generators())
    for (auto const &g : h.parent().generators())
      if (!h.contains(conjugate(x, g)))
        return false;
  return true;
}

Subgroup core_by_coset_action(Subgroup const &h, Bounds const &bounds) {
  auto hom = coset_action(h.parent(), h.group(), bounds);
  return Subgroup(h.parent(), hom.kernel());
}

Subgroup core_by_element_filter(Subgroup const &h, Bounds const &bounds) {
  if (h.order() > bounds.element_cap)
    throw ResourceExceeded("core: |H| = " + h.order().str() + " exceeds the element cap");
  std::vector<Permutation> current = h.group().elements(bounds.element_cap);
  std::unordered_set<Permutation> members(current.begin(), current.end());
  while (true) {
    std::vector<Permutation> keep;
    for (auto const &x : current) {
      bool stays = true;
      for (auto const &g : h.parent().generators())
        if (!members.count(conjugate(x, g))) {
          stays = false;
          break;
        }
      if (stays)
        keep.push_back(x);
    }
    if (keep.size() == current.size())
      break;
    current = std::move(keep);
    members = std::unordered_set<Permutation>(current.begin(), current.end());
  }
  std::sort(current.begin(), current.end());
  return subgroup_from_elements(h.parent(), current);
}

Subgroup core(Subgroup const &h, Bounds const &bounds) {
  if (is_normal(h))
    return h;
  if (h.index() <= bounds.index_cap)
    return core_by_coset_action(h, bounds);
  if (h.order() <= bounds.element_cap)
    return core_by_element_filter(h, bounds);
  throw ResourceExceeded("core: index " + h.index().str() + " and order " + h.order().str() +
                         " both exceed the configured caps");
}

namespace {

void require_same_parent(Subgroup const &h, Subgroup const &k, char const *what) {
  if (h.parent().degree() != k.parent().degree() ||
      h.parent().order() != k.parent().order() || !h.parent().contains_group(k.parent()))
    throw PreconditionError(std::string(what) + ": subgroups of different groups");
}

} // namespace

Subgroup intersect(Subgroup const &h, Subgroup const &k, Bounds const &bounds) {
  require_same_parent(h, k, "intersect");
  if (h.contains(k))
    return k;
  if (k.contains(h))
    return h;
  if (boost::multiprecision::gcd(h.order(), k.order()) == 1)
    return Subgroup::trivial(h.parent());
  Subgroup const &small = h.order() <= k.order() ? h : k;
  Subgroup const &large = h.order() <= k.order() ? k : h;
  if (small.order() > bounds.element_cap)
    throw ResourceExceeded("intersect: both subgroups exceed the element cap");
  std::vector<Permutation> common;
  small.group().for_each_element(bounds.element_cap, [&](Permutation const &x) {
    if (large.contains(x))
      common.push_back(x);
  });
  std::sort(common.begin(), common.end());
  return subgroup_from_elements(h.parent(), common);
}

ProductInfo product(Subgroup const &h, Subgroup const &k, Bounds const &bounds) {
  require_same_parent(h, k, "product");
  Subgroup meet = intersect(h, k, bounds);
  ProductInfo info;
  info.set_size = h.order() * k.order() / meet.order();
  Subgroup j = join(h, k);
  if (j.order() == info.set_size) {
    info.is_subgroup = true;
    info.subgroup = std::move(j);
  }
  return info;
}

Subgroup join(Subgroup const &h, Subgroup const &k) {
  require_same_parent(h, k, "join");
  return Subgroup(h.parent(), join(h.group(), k.group()));
}

Subgroup conjugate(Subgroup const &h, Permutation const &g) {
  if (!h.parent().contains(g))
    throw PreconditionError("conjugate: element is not in the parent group");
  std::vector<Permutation> gens;
  for (auto const &x : h.generators()) gens.push_back(conjugate(x, g));
  return Subgroup(h.parent(), std::move(gens));
}

Subgroup normal_closure(Subgroup const &h) {
  return Subgroup(h.parent(), normal_closure(h.parent(), h.generators()));
}

namespace {

template <typename Pred>
Subgroup filter_subgroup(Subgroup const &h, Bounds const &bounds, char const *what, Pred keep,
                         PermGroup start) {
  PermGroup const &g = h.parent();
  if (g.order() > bounds.element_cap)
    throw ResourceExceeded(std::string(what) + ": |G| = " + g.order().str() +
                           " exceeds the element cap");
  std::vector<Permutation> gens = start.generators();
  PermGroup current = start;
  for (auto const &x : g.elements(bounds.element_cap)) {
    if (current.contains(x) || !keep(x))
      continue;
    gens.push_back(x);
    current = PermGroup(g.degree(), gens);
    if (current.order() == g.order())
      break;
  }
  return Subgroup(g, current);
}

} // namespace

Subgroup normalizer(Subgroup const &h, Bounds const &bounds) {
  auto keep = [&](Permutation const &x) {
    for (auto const &y : h.generators())
      if (!h.contains(conjugate(y, x)))
        return false;
    return true;
  };
  return filter_subgroup(h, bounds, "normalizer", keep, h.group());
}

Subgroup centralizer(Subgroup const &h, Bounds const &bounds) {
  auto keep = [&](Permutation const &x) {
    for (auto const &y : h.generators())
      if (y * x != x * y)
        return false;
    return true;
  };
  return filter_subgroup(h, bounds, "centralizer", keep, PermGroup::trivial(h.degree()));
}

Subgroup image_subgroup(GroupHom const &hom, Subgroup const &h) {
  if (!hom.source().contains_group(h.group()))
    throw PreconditionError("image_subgroup: not a subgroup of the source");
  return Subgroup(hom.image(), hom.image_of(h.generators()));
}

} // namespace grouplab
