#include "grouplab/supplementation.hpp"

#include <numeric>

#include "grouplab/errors.hpp"
#include "grouplab/sylow_hall.hpp"

namespace grouplab {

std::string to_string(SupplementKind kind) { return kind == SupplementKind::c ? "c" : "nc"; }

bool SupplementWitness::valid() const {
  if (!intersection_in_core)
    return false;
  if (kind == SupplementKind::c)
    return hk_order == group().order();
  return hk_normal;
}

SupplementWitness verify_witness(Subgroup const &h, Subgroup const &k, SupplementKind kind,
                                 Bounds const &bounds) {
  ProductInfo info = product(h, k, bounds);
  Subgroup meet = intersect(h, k, bounds);
  Subgroup hg = core(h, bounds);
  SupplementWitness w{h, k, kind, info.set_size, info.is_subgroup, false, hg, meet.order(), false};
  w.hk_normal = info.is_subgroup && is_normal(*info.subgroup);
  w.intersection_in_core = hg.contains(meet);
  return w;
}

namespace {

std::string exhaustive_tag(SubgroupLattice const &lattice) {
  return "exhaustive(" + std::to_string(lattice.size()) + ")";
}

} // namespace

std::optional<std::size_t> first_supplement(SubgroupLattice const &lattice, std::size_t h,
                                            SupplementKind kind) {
  auto const &t = lattice.table();
  auto const &hm = lattice[h];
  ElementSet hg = t.core(hm.elements);

  // HK is normal iff it equals some normal member N containing H: then
  // H, K <= N and |HK| = |N| force HK = N.
  std::vector<std::size_t> targets;
  if (kind == SupplementKind::c) {
    targets.push_back(lattice.whole_index());
  } else {
    for (std::size_t n = 0; n < lattice.size(); ++n)
      if (lattice[n].normal && hm.elements.is_subset_of(lattice[n].elements))
        targets.push_back(n);
  }

  for (std::size_t k = 0; k < lattice.size(); ++k) {
    auto const &km = lattice[k];
    ElementSet meet = hm.elements & km.elements;
    if (!meet.is_subset_of(hg))
      continue;
    std::size_t hk = hm.order * km.order / meet.count();
    for (std::size_t n : targets)
      if (lattice[n].order == hk && km.elements.is_subset_of(lattice[n].elements))
        return k;
  }
  return std::nullopt;
}

SupplementResult find_supplement(SubgroupLattice const &lattice, Subgroup const &h,
                                 SupplementKind kind, Bounds const &bounds) {
  SupplementResult out;
  out.proof = exhaustive_tag(lattice);
  auto k = first_supplement(lattice, lattice.index_of(h), kind);
  if (!k) {
    out.answer = Tri::no;
    return out;
  }
  out.witness = verify_witness(h, lattice.subgroup(*k).within(h.parent()), kind, bounds);
  if (!out.witness->valid())
    throw std::logic_error("find_supplement: lattice scan and verify_witness disagree");
  out.answer = Tri::yes;
  return out;
}

SupplementResult find_supplement(Subgroup const &h, SupplementKind kind, Bounds const &bounds,
                                 std::vector<Subgroup> const &extra) {
  PermGroup const &g = h.parent();
  if (g.order() <= bounds.lattice_order)
    return find_supplement(enumerate_subgroups(g, bounds), h, kind, bounds);

  std::vector<Subgroup> candidates{Subgroup::trivial(g), Subgroup::whole(g)};
  try {
    for (auto const &n : normal_subgroups(g, bounds)) candidates.push_back(n);
  } catch (ResourceExceeded const &) {
  }
  try {
    PiSet pi;
    for (auto p : prime_divisors(g.order(), g.degree()))
      if (h.order() % p != 0)
        pi.push_back(p);
    if (auto hall_k = hall(g, pi, bounds))
      candidates.push_back(*hall_k);
  } catch (ResourceExceeded const &) {
  }
  candidates.insert(candidates.end(), extra.begin(), extra.end());

  SupplementResult out;
  std::size_t tried = 0;
  for (auto const &k : candidates) {
    ++tried;
    try {
      auto w = verify_witness(h, k, kind, bounds);
      if (w.valid()) {
        out.answer = Tri::yes;
        out.witness = std::move(w);
        break;
      }
    } catch (ResourceExceeded const &) {
    }
  }
  out.proof = "heuristic(" + std::to_string(tried) + ")";
  return out;
}

SupplementStatus supplement_status(SubgroupLattice const &lattice, Subgroup const &h,
                                   Bounds const &bounds) {
  return {find_supplement(lattice, h, SupplementKind::c, bounds),
          find_supplement(lattice, h, SupplementKind::nc, bounds)};
}

SupplementWitness normalize_supplement(SupplementWitness const &w, Bounds const &bounds) {
  if (w.kind != SupplementKind::nc || !w.valid())
    throw PreconditionError("normalize_supplement: input is not a valid nc witness");
  Subgroup c = join(w.k, w.core_h);
  if (c.order() * intersect(w.k, w.core_h, bounds).order() != w.k.order() * w.core_h.order())
    throw std::logic_error("normalize_supplement: K H_G is not a subgroup");
  return verify_witness(w.h, c, SupplementKind::nc, bounds);
}

SupplementWitness restrict_to_intermediate(SupplementWitness const &w, Subgroup const &m,
                                           Bounds const &bounds) {
  if (!w.valid())
    throw PreconditionError("restrict_to_intermediate: input witness is not valid");
  if (!w.group().contains_group(m.group()) || !m.contains(w.h))
    throw PreconditionError("restrict_to_intermediate: need H <= M <= G");
  PermGroup const &mg = m.group();
  Subgroup k = intersect(w.k, m.within(w.group()), bounds);
  return verify_witness(w.h.within(mg), k.within(mg), SupplementKind::nc, bounds);
}

namespace {

void require_normal_in(SupplementWitness const &w, Subgroup const &n, char const *what) {
  if (!w.valid())
    throw PreconditionError(std::string(what) + ": input witness is not valid");
  if (!w.group().contains_group(n.group()) || !is_normal(n.within(w.group())))
    throw PreconditionError(std::string(what) + ": N must be normal in G");
}

SupplementWitness push(SupplementWitness const &w, Subgroup const &n, Bounds const &bounds) {
  auto [q, hom] = quotient(w.group(), n.group(), bounds);
  return verify_witness(image_subgroup(hom, w.h), image_subgroup(hom, w.k), SupplementKind::nc,
                        bounds);
}

} // namespace

SupplementWitness push_to_quotient_contained(SupplementWitness const &w, Subgroup const &n,
                                             Bounds const &bounds) {
  require_normal_in(w, n, "push_to_quotient_contained");
  if (!w.h.contains(n))
    throw PreconditionError("push_to_quotient_contained: N must lie in H");
  return push(w, n, bounds);
}

SupplementWitness push_to_quotient_coprime(SupplementWitness const &w, Subgroup const &n,
                                           Bounds const &bounds) {
  require_normal_in(w, n, "push_to_quotient_coprime");
  if (boost::multiprecision::gcd(n.order(), w.h.order()) != 1)
    throw PreconditionError("push_to_quotient_coprime: gcd(|N|, |H|) must be 1");
  return push(w, n, bounds);
}

nlohmann::json order_json(Order const &n) {
  if (n < (Order(1) << 53))
    return to_u64(n);
  return n.str();
}

nlohmann::json witness_json(SupplementWitness const &w, std::string const &group_name) {
  return {
      {"group", group_name},
      {"H-gens", format_generator_list(w.h.generators())},
      {"K-gens", format_generator_list(w.k.generators())},
      {"kind", to_string(w.kind)},
      {"valid", w.valid()},
      {"checks",
       {{"hk_order", order_json(w.hk_order)},
        {"hk_normal", w.hk_normal},
        {"core_order", order_json(w.core_h.order())},
        {"intersection_in_core", w.intersection_in_core}}},
  };
}

} // namespace grouplab
