#include "grouplab/sylow_hall.hpp"

#include <algorithm>

#include "grouplab/errors.hpp"

namespace grouplab {

Order pi_part(Order const &n, PiSet const &pi) {
  Order out = 1;
  for (auto p : pi) out *= p_part(n, p);
  return out;
}

PiSet complement_primes(PermGroup const &g, PiSet const &pi) {
  PiSet out;
  for (auto p : prime_divisors(g.order(), g.degree()))
    if (std::find(pi.begin(), pi.end(), p) == pi.end())
      out.push_back(p);
  return out;
}

namespace {

ElementIndex power(GroupTable const &t, ElementIndex x, std::uint64_t e) {
  ElementIndex y = 0;
  for (std::uint64_t i = 0; i < e; ++i) y = t.mul(y, x);
  return y;
}

ElementSet sylow_by_ascent(GroupTable const &t, std::uint64_t p) {
  std::size_t target = to_u64(p_part(Order(t.size()), p));
  ElementSet current = t.identity_set();
  std::vector<ElementIndex> gens;
  while (current.count() < target) {
    std::optional<ElementIndex> found;
    for (ElementIndex x = 1; x < t.size() && !found; ++x) {
      if (current.contains(x) || !current.contains(power(t, x, p)))
        continue;
      bool normalizes = true;
      for (ElementIndex g : gens)
        if (!current.contains(t.conj(g, x))) {
          normalizes = false;
          break;
        }
      if (normalizes)
        found = x;
    }
    if (!found)
      throw std::logic_error("sylow: ascent found no extending element");
    current = t.closure_with(current, gens, *found);
    gens.push_back(*found);
  }
  return current;
}

std::vector<Point> moved_support(std::vector<std::vector<Point>> const &orbits) {
  std::vector<Point> out;
  for (auto const &o : orbits)
    if (o.size() > 1)
      out.insert(out.end(), o.begin(), o.end());
  return out;
}

PermGroup sylow_group(PermGroup const &g, std::uint64_t p, Bounds const &bounds);

// Preimage of a Sylow subgroup of the image, or nullopt when the image is
// itself a p-group.
std::optional<PermGroup> reduce_through(GroupHom const &hom, std::uint64_t p,
                                        Bounds const &bounds) {
  PermGroup const &image = hom.image();
  PermGroup q = sylow_group(image, p, bounds);
  if (q.order() == image.order())
    return std::nullopt;
  return hom.preimage(q.generators());
}

PermGroup sylow_group(PermGroup const &g, std::uint64_t p, Bounds const &bounds) {
  Order target = p_part(g.order(), p);
  if (target == 1)
    return PermGroup::trivial(g.degree());
  if (target == g.order())
    return g;
  if (g.order() <= bounds.element_cap) {
    GroupTable t(g, bounds);
    return t.to_subgroup(sylow_by_ascent(t, p)).group();
  }

  auto orbits = g.orbits();
  std::vector<std::vector<Point>> moved;
  for (auto const &o : orbits)
    if (o.size() > 1)
      moved.push_back(o);

  if (moved.size() > 1) {
    std::vector<std::vector<Point>> rest(moved.begin() + 1, moved.end());
    for (auto const &part : {moved.front(), moved_support(rest)}) {
      GroupHom hom = restriction_action(g, part);
      if (auto h = reduce_through(hom, p, bounds))
        return sylow_group(*h, p, bounds);
    }
    throw std::logic_error("sylow: both orbit images are p-groups but G is not");
  }

  if (moved.front().size() != g.degree()) {
    GroupHom hom = restriction_action(g, moved.front());
    PermGroup s = sylow_group(hom.image(), p, bounds);
    return hom.preimage(s.generators());
  }

  auto blocks = nontrivial_blocks(g);
  if (!blocks)
    throw ResourceExceeded("sylow: |G| = " + g.order().str() +
                           " exceeds the element cap and G is primitive");
  GroupHom hom = block_action(g, *blocks);
  if (auto h = reduce_through(hom, p, bounds))
    return sylow_group(*h, p, bounds);
  throw ResourceExceeded("sylow: |G| = " + g.order().str() +
                         " exceeds the element cap and its block image is a p-group");
}

} // namespace

Subgroup sylow(PermGroup const &g, std::uint64_t p, Bounds const &bounds) {
  if (!is_prime(p) || g.order() % p != 0)
    throw PreconditionError("sylow: " + std::to_string(p) + " is not a prime divisor of |G| = " +
                            g.order().str());
  return Subgroup(g, sylow_group(g, p, bounds));
}

std::vector<Subgroup> all_sylow(PermGroup const &g, std::uint64_t p, Bounds const &bounds) {
  Subgroup s = sylow(g, p, bounds);
  GroupTable t(g, bounds);
  std::vector<ElementSet> orbit{t.from_subgroup(s)};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (ElementIndex x : t.generator_indices()) {
      ElementSet c = t.conjugate(orbit[i], x);
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) {
        if (orbit.size() >= bounds.element_cap)
          throw ResourceExceeded("all_sylow: more conjugates than the element cap");
        orbit.push_back(std::move(c));
      }
    }
  std::sort(orbit.begin(), orbit.end(), [](ElementSet const &a, ElementSet const &b) {
    return lex_less(a, b);
  });
  std::vector<Subgroup> out;
  for (auto const &o : orbit) out.push_back(t.to_subgroup(o));
  return out;
}

std::optional<Subgroup> hall(SubgroupLattice const &lattice, PiSet const &pi) {
  std::size_t target = to_u64(pi_part(lattice.group().order(), pi));
  auto const &candidates = lattice.of_order(target);
  if (candidates.empty())
    return std::nullopt;
  return lattice.subgroup(candidates.front());
}

std::optional<Subgroup> hall(PermGroup const &g, PiSet const &pi, Bounds const &bounds) {
  if (g.order() <= bounds.lattice_order)
    return hall(enumerate_subgroups(g, bounds), pi);
  PiSet relevant;
  for (auto p : prime_divisors(g.order(), g.degree()))
    if (std::find(pi.begin(), pi.end(), p) != pi.end())
      relevant.push_back(p);
  if (relevant.empty())
    return Subgroup::trivial(g);
  if (pi_part(g.order(), relevant) == g.order())
    return Subgroup::whole(g);
  if (relevant.size() == 1)
    return sylow(g, relevant.front(), bounds);
  throw ResourceExceeded("hall: |G| = " + g.order().str() + " exceeds the lattice bound");
}

HallClassification classify_hall(SubgroupLattice const &lattice, PiSet const &pi) {
  HallClassification out;
  out.pi = pi;
  std::size_t target = to_u64(pi_part(lattice.group().order(), pi));
  auto const &candidates = lattice.of_order(target);
  for (std::size_t i : candidates) out.witnesses.push_back(lattice.subgroup(i));
  if (candidates.empty()) {
    out.e_pi = out.c_pi = out.d_pi = Tri::no;
    return out;
  }
  out.e_pi = Tri::yes;

  auto const &t = lattice.table();
  std::vector<ElementSet> orbit{lattice[candidates.front()].elements};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (ElementIndex x : t.generator_indices()) {
      ElementSet c = t.conjugate(orbit[i], x);
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end())
        orbit.push_back(std::move(c));
    }
  out.c_pi = tri(orbit.size() == candidates.size());
  if (out.c_pi == Tri::no) {
    out.d_pi = Tri::no;
    return out;
  }

  bool dominated = true;
  for (std::size_t i = 0; i < lattice.size() && dominated; ++i) {
    if (target % lattice[i].order != 0)
      continue;
    bool inside = false;
    for (std::size_t h : candidates)
      if (lattice[i].elements.is_subset_of(lattice[h].elements)) {
        inside = true;
        break;
      }
    dominated = inside;
  }
  out.d_pi = tri(dominated);
  return out;
}

HallClassification classify_hall(PermGroup const &g, PiSet const &pi, Bounds const &bounds) {
  if (g.order() <= bounds.lattice_order)
    return classify_hall(enumerate_subgroups(g, bounds), pi);
  HallClassification out;
  out.pi = pi;
  auto h = hall(g, pi, bounds);
  out.witnesses.push_back(*h);
  out.e_pi = Tri::yes;
  if (h->is_trivial() || h->is_whole())
    out.c_pi = out.d_pi = Tri::yes;
  return out;
}

std::optional<Subgroup> p_complement(PermGroup const &g, std::uint64_t p, Bounds const &bounds) {
  return hall(g, complement_primes(g, {p}), bounds);
}

} // namespace grouplab
