#include "grouplab/structure.hpp"

#include <mutex>

#include "grouplab/constructions.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/sylow_hall.hpp"

namespace grouplab {

Spectrum spectrum(PermGroup const &g, Bounds const &bounds) {
  Spectrum out;
  g.for_each_element(bounds.element_cap, [&](Permutation const &x) { ++out[x.order()]; });
  return out;
}

std::string format_spectrum(Spectrum const &s) {
  std::string out = "{";
  for (auto const &[order, count] : s) {
    if (out.size() > 1)
      out += ", ";
    out += std::to_string(order) + ":" + std::to_string(count);
  }
  return out + "}";
}

std::vector<Subgroup> derived_series(PermGroup const &g) {
  std::vector<Subgroup> out{Subgroup::whole(g)};
  PermGroup current = g;
  while (!current.is_trivial()) {
    std::vector<Permutation> comms;
    auto const &gens = current.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        auto c = commutator(gens[i], gens[j]);
        if (!c.is_identity())
          comms.push_back(c);
      }
    PermGroup next = normal_closure(current, comms);
    if (next.order() == current.order())
      break;
    out.push_back(Subgroup(g, next));
    current = next;
  }
  return out;
}

bool is_solvable(PermGroup const &g) { return derived_series(g).back().is_trivial(); }

bool is_abelian(PermGroup const &g) {
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool is_cyclic(PermGroup const &g, Bounds const &bounds) {
  if (g.is_trivial())
    return true;
  if (!is_abelian(g))
    return false;
  std::uint64_t n = to_u64(g.order());
  bool found = false;
  g.for_each_element(bounds.element_cap, [&](Permutation const &x) {
    if (x.order() == n)
      found = true;
  });
  return found;
}

bool is_nilpotent(PermGroup const &g, Bounds const &bounds) {
  for (auto p : prime_divisors(g.order(), g.degree()))
    if (!is_normal(sylow(g, p, bounds)))
      return false;
  return true;
}

bool is_p_nilpotent(PermGroup const &g, std::uint64_t p, Bounds const &bounds) {
  if (g.order() % p != 0)
    return true;
  return o_p_prime(g, p, bounds).order() == g.order() / p_part(g.order(), p);
}

PNilpotencyCertificate p_nilpotency_certificate(PermGroup const &g, std::uint64_t p,
                                                Subgroup const &w) {
  if (w.order() != g.order() / p_part(g.order(), p))
    throw PreconditionError("p_nilpotency_certificate: |W| must be |G| / |G|_p");
  Order closure = normal_closure(w).order();
  return {w, closure, closure == w.order()};
}

bool is_simple(PermGroup const &g, Bounds const &bounds) {
  if (g.is_trivial())
    return false;
  if (is_abelian(g))
    return is_prime(to_u64(g.order()));
  if (!derived_series(g).back().is_whole())
    return false;
  GroupTable t(g, bounds);
  return normal_subgroup_sets(t).size() == 2;
}

namespace {

struct PinnedSimple {
  std::string name;
  Order order;
  Spectrum spectrum;
  std::optional<std::uint64_t> psl2_q;
};

std::vector<PinnedSimple> const &pinned_simple_groups() {
  static std::vector<PinnedSimple> table;
  static std::once_flag once;
  std::call_once(once, [] {
    auto add = [](std::string name, PermGroup const &g, std::optional<std::uint64_t> q) {
      table.push_back({std::move(name), g.order(), spectrum(g), q});
    };
    add("A5 = L2(5) = L2(4)", alternating(5), 5);
    add("A6 = L2(9)", alternating(6), 9);
    add("A7", alternating(7), std::nullopt);
    add("L2(7)", psl2(7), 7);
    add("L2(11)", psl2(11), 11);
    add("L2(13)", psl2(13), 13);
  });
  return table;
}

} // namespace

SimpleId identify_by_invariants(Order const &order, Spectrum const &s) {
  SimpleId id;
  id.order = order;
  if (order > 1 && order < (Order(1) << 63) && is_prime(to_u64(order))) {
    id.name = "C" + order.str();
    id.spectrum_match = s.size() == 2;
    if (!id.spectrum_match)
      id.name = "unknown";
    return id;
  }
  for (auto const &entry : pinned_simple_groups())
    if (entry.order == order && entry.spectrum == s) {
      id.name = entry.name;
      id.spectrum_match = true;
      id.psl2_q = entry.psl2_q;
      return id;
    }
  return id;
}

SimpleId identify_simple(PermGroup const &g, Bounds const &bounds) {
  if (!is_simple(g, bounds))
    throw PreconditionError("identify_simple: the group is not simple");
  return identify_by_invariants(g.order(), spectrum(g, bounds));
}

std::vector<CompositionFactor> composition_factors(PermGroup const &g, Bounds const &bounds) {
  std::vector<CompositionFactor> out;
  PermGroup current = g;
  while (!current.is_trivial()) {
    GroupTable t(current, bounds);
    auto normals = normal_subgroup_sets(t);
    // normals is sorted by order; the whole group is last.
    std::size_t best = normals.size() - 2;
    std::size_t best_order = normals[best].count();
    while (best > 0 && normals[best - 1].count() == best_order) --best;
    Subgroup next = t.to_subgroup(normals[best]);
    Order factor_order = current.order() / next.order();

    CompositionFactor f;
    f.order = factor_order;
    if (is_prime(to_u64(factor_order))) {
      f.id.name = "C" + factor_order.str();
      f.id.order = factor_order;
      f.id.spectrum_match = true;
    } else {
      auto [q, hom] = quotient(current, next.group(), bounds);
      f.id = identify_simple(q, bounds);
    }
    out.push_back(std::move(f));
    current = next.group();
  }
  return out;
}

bool sylow2_klein_check(PermGroup const &g, Bounds const &bounds) {
  if (p_part(g.order(), 2) != 4)
    return false;
  auto p = sylow(g, 2, bounds);
  for (auto const &x : p.generators())
    if (x.order() != 2)
      return false;
  return is_abelian(p.group());
}

SectionTarget a4_target() {
  auto g = alternating(4);
  return {"A4", g.order(), spectrum(g)};
}

SectionTarget psl2_target(std::uint64_t q) {
  auto g = psl2(q);
  return {"L2(" + std::to_string(q) + ")", g.order(), spectrum(g)};
}

std::optional<Section> find_section(SubgroupLattice const &lattice, SectionTarget const &target) {
  auto const &t = lattice.table();
  if (target.order > lattice.group().order())
    return std::nullopt;
  std::size_t k = to_u64(target.order);
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    auto const &am = lattice[a];
    if (am.order % k != 0)
      continue;
    auto a_gens = am.gens;
    for (std::size_t b : lattice.of_order(am.order / k)) {
      auto const &bm = lattice[b];
      if (!bm.elements.is_subset_of(am.elements))
        continue;
      bool normal = true;
      for (ElementIndex x : bm.gens)
        for (ElementIndex y : a_gens)
          if (!bm.elements.contains(t.conj(x, y)))
            normal = false;
      if (!normal)
        continue;
      Spectrum s;
      for (ElementIndex x : am.elements.indices()) ++s[t.order_modulo(x, bm.elements)];
      for (auto &[order, count] : s) count /= bm.order;
      if (s == target.spectrum)
        return Section{lattice.subgroup(a), lattice.subgroup(b)};
    }
  }
  return std::nullopt;
}

std::optional<Section> find_section(PermGroup const &g, SectionTarget const &target,
                                    Bounds const &bounds) {
  if (g.order() % target.order != 0)
    return std::nullopt;
  return find_section(enumerate_subgroups(g, bounds), target);
}

bool is_section_free(PermGroup const &g, SectionTarget const &target, Bounds const &bounds) {
  return !find_section(g, target, bounds).has_value();
}

} // namespace grouplab
