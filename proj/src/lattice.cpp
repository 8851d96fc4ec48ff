#include "grouplab/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "grouplab/errors.hpp"
#include "grouplab/sylow_hall.hpp"

namespace grouplab {

namespace {

bool lattice_less(ElementSet const &a, std::size_t a_count, ElementSet const &b,
                  std::size_t b_count) {
  if (a_count != b_count)
    return a_count < b_count;
  return lex_less(a, b);
}

void sort_sets(std::vector<ElementSet> &sets) {
  std::vector<std::pair<std::size_t, ElementSet>> keyed;
  for (auto &s : sets) keyed.emplace_back(s.count(), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](auto const &x, auto const &y) {
    return lattice_less(x.second, x.first, y.second, y.first);
  });
  sets.clear();
  for (auto &k : keyed) sets.push_back(std::move(k.second));
}

// Deduplicating store for element sets.
class SetStore {
 public:
  // Index of s, inserting it if new.
  std::pair<std::size_t, bool> insert(ElementSet const &s) {
    std::size_t h = s.hash();
    auto [lo, hi] = _index.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (_sets[it->second] == s)
        return {it->second, false};
    _sets.push_back(s);
    _index.emplace(h, _sets.size() - 1);
    return {_sets.size() - 1, true};
  }

  std::vector<ElementSet> &sets() { return _sets; }

 private:
  std::vector<ElementSet> _sets;
  std::unordered_multimap<std::size_t, std::size_t> _index;
};

} // namespace

SubgroupLattice::SubgroupLattice(std::shared_ptr<GroupTable const> table,
                                 std::vector<LatticeMember> members)
    : _table(std::move(table)), _members(std::move(members)) {
  std::size_t n = _members.size();
  _lower.resize(n);
  _above.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    _by_order[_members[i].order].push_back(i);
    _by_hash.emplace(_members[i].elements.hash(), i);
  }
  // Proper subgroups of j, then the maximal ones among them.
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (_members[i].order < _members[j].order && _members[j].order % _members[i].order == 0 &&
          _members[i].elements.is_subset_of(_members[j].elements)) {
        below[j].push_back(i);
        _above[i].push_back(j);
      }
  for (std::size_t j = 0; j < n; ++j) {
    auto const &b = below[j];
    // b is in lattice order, so anything containing b[x] comes later in b.
    for (std::size_t x = 0; x < b.size(); ++x) {
      bool maximal = true;
      for (std::size_t y = b.size(); y-- > x + 1;) {
        auto const &big = _members[b[y]];
        auto const &small = _members[b[x]];
        if (big.order > small.order && big.order % small.order == 0 &&
            small.elements.is_subset_of(big.elements)) {
          maximal = false;
          break;
        }
      }
      if (maximal)
        _lower[j].push_back(b[x]);
    }
  }
}

Subgroup SubgroupLattice::subgroup(std::size_t i) const {
  return _table->to_subgroup(_members.at(i).elements);
}

std::optional<std::size_t> SubgroupLattice::find(ElementSet const &s) const {
  auto [lo, hi] = _by_hash.equal_range(s.hash());
  for (auto it = lo; it != hi; ++it)
    if (_members[it->second].elements == s)
      return it->second;
  return std::nullopt;
}

std::size_t SubgroupLattice::index_of(Subgroup const &h) const {
  if (!group().contains_group(h.group()))
    throw PreconditionError("index_of: not a subgroup of the lattice's group");
  return *find(_table->from_subgroup(h));
}

std::vector<std::size_t> const &SubgroupLattice::of_order(std::size_t order) const {
  static std::vector<std::size_t> const none;
  auto it = _by_order.find(order);
  return it == _by_order.end() ? none : it->second;
}

std::size_t SubgroupLattice::join(std::size_t a, std::size_t b) const {
  if (a == b)
    return a;
  auto const &x = _members[a].elements;
  auto const &y = _members[b].elements;
  for (std::size_t j = std::max(a, b); j < _members.size(); ++j)
    if (x.is_subset_of(_members[j].elements) && y.is_subset_of(_members[j].elements))
      return j;
  return whole_index();
}

SubgroupLattice enumerate_subgroups(PermGroup const &g, Bounds const &bounds) {
  if (g.order() > bounds.lattice_order)
    throw ResourceExceeded("subgroup lattice: |G| = " + g.order().str() +
                           " exceeds the lattice bound " + std::to_string(bounds.lattice_order));
  return enumerate_subgroups(std::make_shared<GroupTable const>(g, bounds), bounds);
}

SubgroupLattice enumerate_subgroups(std::shared_ptr<GroupTable const> table,
                                    Bounds const &bounds) {
  GroupTable const &t = *table;
  if (t.size() > bounds.lattice_order)
    throw ResourceExceeded("subgroup lattice: |G| = " + std::to_string(t.size()) +
                           " exceeds the lattice bound " + std::to_string(bounds.lattice_order));

  // Subgroups are added with their whole conjugacy class; only the first
  // member of each class is extended by cyclic subgroups, since
  // <S^g, x> = <S, x^(g^-1)>^g.
  SetStore store;
  std::vector<std::vector<ElementIndex>> gens;
  std::vector<bool> representative;
  auto add_class = [&](ElementSet const &s, std::vector<ElementIndex> const &s_gens) {
    auto [first, fresh] = store.insert(s);
    if (!fresh)
      return;
    gens.push_back(s_gens);
    representative.push_back(true);
    for (std::size_t i = first; i < store.sets().size(); ++i)
      for (ElementIndex g : t.generator_indices()) {
        ElementSet c = t.conjugate(store.sets()[i], g);
        auto [j, is_new] = store.insert(c);
        if (is_new) {
          std::vector<ElementIndex> c_gens;
          for (ElementIndex x : gens[i]) c_gens.push_back(t.conj(x, g));
          gens.push_back(std::move(c_gens));
          representative.push_back(false);
        }
      }
  };

  add_class(t.identity_set(), {});
  std::vector<ElementIndex> cyclic_gens;
  {
    SetStore cyclics;
    for (ElementIndex x = 1; x < t.size(); ++x)
      if (cyclics.insert(t.cyclic(x)).second)
        cyclic_gens.push_back(x);
  }

  for (std::size_t i = 0; i < store.sets().size(); ++i) {
    if (!representative[i])
      continue;
    ElementSet const s = store.sets()[i];
    std::vector<ElementIndex> const s_gens = gens[i];
    std::size_t s_order = s.count();
    // Overgroups of prime index over S: every y in them gives the same join.
    std::vector<ElementSet> prime_covers;
    for (ElementIndex x : cyclic_gens) {
      if (s.contains(x))
        continue;
      bool covered = false;
      for (auto const &c : prime_covers)
        if (c.contains(x)) {
          covered = true;
          break;
        }
      if (covered)
        continue;
      ElementSet bigger = t.closure_with(s, s_gens, x);
      if (is_prime(bigger.count() / s_order))
        prime_covers.push_back(bigger);
      std::vector<ElementIndex> b_gens = s_gens;
      b_gens.push_back(x);
      add_class(bigger, b_gens);
    }
  }

  std::vector<std::size_t> order(store.sets().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto &sets = store.sets();
  std::vector<std::size_t> counts(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) counts[i] = sets[i].count();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice_less(sets[a], counts[a], sets[b], counts[b]);
  });

  std::vector<LatticeMember> members;
  members.reserve(order.size());
  for (std::size_t i : order) {
    LatticeMember m;
    m.elements = sets[i];
    m.gens = t.generators_of(sets[i]);
    m.order = counts[i];
    m.normal = t.is_normal(sets[i]);
    members.push_back(std::move(m));
  }
  return SubgroupLattice(std::move(table), std::move(members));
}

std::vector<std::size_t> maximal_members(SubgroupLattice const &lattice, std::size_t i) {
  return lattice.lower_covers(i);
}

std::vector<std::size_t> two_maximal_members(SubgroupLattice const &lattice, std::size_t i) {
  std::set<std::size_t> out;
  for (std::size_t m : lattice.lower_covers(i))
    for (std::size_t l : lattice.lower_covers(m)) out.insert(l);
  return {out.begin(), out.end()};
}

std::vector<Subgroup> maximal_subgroups(SubgroupLattice const &lattice) {
  std::vector<Subgroup> out;
  for (std::size_t i : maximal_members(lattice, lattice.whole_index()))
    out.push_back(lattice.subgroup(i));
  return out;
}

std::vector<Subgroup> two_maximal_subgroups(SubgroupLattice const &lattice) {
  std::vector<Subgroup> out;
  for (std::size_t i : two_maximal_members(lattice, lattice.whole_index()))
    out.push_back(lattice.subgroup(i));
  return out;
}

std::vector<Permutation> elementary_abelian_basis(Subgroup const &p) {
  auto const &gens = p.generators();
  if (p.is_trivial())
    return {};
  auto primes = prime_divisors(p.order(), p.degree());
  if (primes.size() != 1)
    throw PreconditionError("elementary_abelian_basis: not a p-group");
  std::uint64_t prime = primes.front();
  for (auto const &x : gens) {
    if (!x.pow(static_cast<long long>(prime)).is_identity())
      throw PreconditionError("elementary_abelian_basis: exponent is not prime");
    for (auto const &y : gens)
      if (x * y != y * x)
        throw PreconditionError("elementary_abelian_basis: not abelian");
  }
  std::vector<Permutation> basis;
  PermGroup span = PermGroup::trivial(p.degree());
  for (auto const &x : gens) {
    if (span.contains(x))
      continue;
    basis.push_back(x);
    span = PermGroup(p.degree(), basis, {.known_order = span.order() * prime});
  }
  return basis;
}

Hyperplane hyperplane(Subgroup const &p, std::vector<Permutation> const &basis,
                      std::vector<std::uint64_t> const &functional) {
  std::uint64_t prime = prime_divisors(p.order(), p.degree()).front();
  std::size_t k = basis.size();
  std::size_t lead = 0;
  while (lead < k && functional[lead] % prime == 0) ++lead;
  if (lead == k || functional.size() != k)
    throw PreconditionError("hyperplane: functional must be nonzero of length " +
                            std::to_string(k));
  std::uint64_t inv = 1;
  while (inv * functional[lead] % prime != 1) ++inv;

  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == lead)
      continue;
    // e_i - (f_i / f_lead) e_lead
    std::uint64_t c = (prime - functional[i] % prime * inv % prime) % prime;
    gens.push_back(basis[i] * basis[lead].pow(static_cast<long long>(c)));
  }
  Order sub_order = p.order() / prime;
  Subgroup h(p.parent(), PermGroup(p.degree(), gens, {.known_order = sub_order}));
  Subgroup c(p.parent(), std::vector<Permutation>{basis[lead]});
  return {h, c, functional};
}

std::uint64_t hyperplane_count(Subgroup const &p) {
  if (p.is_trivial())
    return 0;
  std::uint64_t prime = prime_divisors(p.order(), p.degree()).front();
  return to_u64((p.order() - 1) / (prime - 1));
}

std::vector<std::vector<std::uint64_t>> normalized_functionals(std::uint64_t prime, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> out;
  // Zeros, a leading 1, then anything.
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<std::uint64_t> f(k, 0);
    f[lead] = 1;
    std::size_t tail = k - lead - 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < tail; ++i) combos *= prime;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t v = c;
      for (std::size_t i = k; i-- > lead + 1;) {
        f[i] = v % prime;
        v /= prime;
      }
      out.push_back(f);
    }
  }
  return out;
}

std::vector<Hyperplane> hyperplanes(Subgroup const &p) {
  auto basis = elementary_abelian_basis(p);
  std::vector<Hyperplane> out;
  if (basis.empty())
    return out;
  std::uint64_t prime = prime_divisors(p.order(), p.degree()).front();
  for (auto const &f : normalized_functionals(prime, basis.size()))
    out.push_back(hyperplane(p, basis, f));
  return out;
}

namespace {

std::vector<std::vector<ElementIndex>> conjugacy_classes(GroupTable const &t) {
  std::vector<bool> seen(t.size(), false);
  std::vector<std::vector<ElementIndex>> classes;
  for (ElementIndex x = 0; x < t.size(); ++x) {
    if (seen[x])
      continue;
    std::vector<ElementIndex> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (ElementIndex g : t.generator_indices()) {
        ElementIndex y = t.conj(cls[i], g);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

} // namespace

std::size_t conjugacy_class_count(GroupTable const &table) {
  return conjugacy_classes(table).size();
}

std::vector<ElementSet> normal_subgroup_sets(GroupTable const &t) {
  SetStore store;
  store.insert(t.identity_set());
  for (auto const &cls : conjugacy_classes(t)) {
    if (cls.front() == 0)
      continue;
    store.insert(t.normal_closure(t.cyclic(cls.front())));
  }
  for (std::size_t i = 0; i < store.sets().size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet a = store.sets()[i];
      ElementSet b = store.sets()[j];
      store.insert(t.join(a, b));
    }
  auto sets = std::move(store.sets());
  sort_sets(sets);
  return sets;
}

std::vector<Subgroup> normal_subgroups(PermGroup const &g, Bounds const &bounds) {
  GroupTable t(g, bounds);
  std::vector<Subgroup> out;
  for (auto const &s : normal_subgroup_sets(t)) out.push_back(t.to_subgroup(s));
  return out;
}

std::vector<Subgroup> normal_subgroups(SubgroupLattice const &lattice) {
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i].normal)
      out.push_back(lattice.subgroup(i));
  return out;
}

Subgroup o_p(PermGroup const &g, std::uint64_t p, Bounds const &bounds) {
  if (g.order() % p != 0)
    return Subgroup::trivial(g);
  return core(sylow(g, p, bounds), bounds);
}

Subgroup o_p_prime(PermGroup const &g, std::uint64_t p, Bounds const &bounds) {
  GroupTable t(g, bounds);
  auto sets = normal_subgroup_sets(t);
  std::optional<std::size_t> best;
  bool tie = false;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::size_t n = sets[i].count();
    if (n % p == 0)
      continue;
    if (!best || n > sets[*best].count()) {
      best = i;
      tie = false;
    } else if (n == sets[*best].count()) {
      tie = true;
    }
  }
  if (tie)
    throw std::logic_error("o_p_prime: two normal p'-subgroups of maximal order");
  return t.to_subgroup(sets[*best]);
}

Subgroup frattini(SubgroupLattice const &lattice) {
  auto const &maxes = lattice.lower_covers(lattice.whole_index());
  if (maxes.empty())
    return lattice.subgroup(0);
  ElementSet meet = lattice[maxes.front()].elements;
  for (std::size_t i : maxes) meet = meet & lattice[i].elements;
  return lattice.table().to_subgroup(meet);
}

Subgroup frattini(PermGroup const &g, Bounds const &bounds) {
  return frattini(enumerate_subgroups(g, bounds));
}

Subgroup fitting(PermGroup const &g, Bounds const &bounds) {
  PermGroup f = PermGroup::trivial(g.degree());
  for (auto p : prime_divisors(g.order(), g.degree()))
    f = join(f, o_p(g, p, bounds).group());
  return Subgroup(g, f);
}

std::vector<Subgroup> minimal_normal_subgroups(PermGroup const &g, Bounds const &bounds) {
  GroupTable t(g, bounds);
  auto sets = normal_subgroup_sets(t);
  std::vector<Subgroup> out;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (sets[j].count() < sets[i].count() && sets[j].is_subset_of(sets[i]))
        minimal = false;
    if (minimal)
      out.push_back(t.to_subgroup(sets[i]));
  }
  return out;
}

std::string export_lattice(SubgroupLattice const &lattice) {
  std::string out;
  auto const &t = lattice.table();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::vector<Permutation> gens;
    for (ElementIndex x : lattice[i].gens) gens.push_back(t.element(x));
    out += std::to_string(lattice[i].order) + "\t" +
           (gens.empty() ? std::string("()") : format_generator_list(gens)) + "\n";
  }
  for (std::size_t j = 0; j < lattice.size(); ++j)
    for (std::size_t i : lattice.lower_covers(j))
      out += "edge\t" + std::to_string(i) + "\t" + std::to_string(j) + "\n";
  return out;
}

} // namespace grouplab
