#include "grouplab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "grouplab/errors.hpp"
#include "grouplab/sylow_hall.hpp"

namespace grouplab {

using nlohmann::json;

char const *to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::holds: return "holds";
    case Hypothesis::fails: return "fails";
    default: return "unknown";
  }
}

char const *to_string(Conclusion c) {
  switch (c) {
    case Conclusion::holds: return "holds";
    case Conclusion::fails: return "fails";
    case Conclusion::not_evaluated: return "not-evaluated";
    default: return "unknown";
  }
}

char const *to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::violation: return "VIOLATION";
    default: return "inconclusive";
  }
}

Verdict verdict_for(Hypothesis h, Conclusion c) {
  if (h == Hypothesis::holds && c == Conclusion::fails)
    return Verdict::violation;
  if (h == Hypothesis::unknown || (h == Hypothesis::holds && c == Conclusion::unknown))
    return Verdict::inconclusive;
  return Verdict::consistent;
}

// ---------------------------------------------------------------------------
// GroupContext

GroupContext::GroupContext(std::string name, PermGroup g, Bounds bounds)
    : _name(std::move(name)), _group(std::move(g)), _bounds(bounds) {}

SubgroupLattice const &GroupContext::lattice() {
  if (!_lattice)
    _lattice = std::make_unique<SubgroupLattice>(enumerate_subgroups(_group, _bounds));
  return *_lattice;
}

std::size_t GroupContext::sylow_member(std::uint64_t p) {
  auto it = _sylow.find(p);
  if (it != _sylow.end())
    return it->second;
  std::size_t i = lattice().index_of(sylow(_group, p, _bounds));
  _sylow.emplace(p, i);
  return i;
}

std::optional<std::size_t> GroupContext::supplement(std::size_t member, SupplementKind kind) {
  auto key = std::make_pair(member, static_cast<int>(kind));
  auto it = _supplements.find(key);
  if (it != _supplements.end())
    return it->second;
  auto k = first_supplement(lattice(), member, kind);
  _supplements.emplace(key, k);
  return k;
}

bool GroupContext::solvable() {
  if (!_solvable)
    _solvable = is_solvable(_group);
  return *_solvable;
}

bool GroupContext::nonabelian_simple() {
  if (!_simple)
    _simple = !is_abelian(_group) && is_simple(_group, _bounds);
  return *_simple;
}

bool GroupContext::a4_free() {
  if (!_a4_free) {
    auto target = a4_target();
    _a4_free = _group.order() % target.order != 0 || !find_section(lattice(), target);
  }
  return *_a4_free;
}

std::vector<std::string> const &check_ids() {
  static std::vector<std::string> const ids{"T1a", "T1b", "T2_fwd", "T2_rev", "T3", "T4",
                                            "T5",  "L1",  "L2",     "L3",     "L4", "LA_counter",
                                            "EX_A4", "R2", "R3",    "R4"};
  return ids;
}

namespace {

Hypothesis hyp(bool b) { return b ? Hypothesis::holds : Hypothesis::fails; }
Conclusion concl(bool b) { return b ? Conclusion::holds : Conclusion::fails; }

Conclusion concl(Tri t) {
  return t == Tri::yes ? Conclusion::holds : t == Tri::no ? Conclusion::fails : Conclusion::unknown;
}

void finish(TheoremCheck &c) {
  if (c.hypothesis == Hypothesis::fails)
    c.conclusion = Conclusion::not_evaluated;
  c.verdict = verdict_for(c.hypothesis, c.conclusion);
}

TheoremCheck make(std::string id, std::string group) {
  TheoremCheck c;
  c.id = std::move(id);
  c.group = std::move(group);
  return c;
}

std::string gens_of(Subgroup const &h) { return format_generator_list(h.generators()); }

std::string exhaustive_tag(SubgroupLattice const &lattice) {
  return "exhaustive(" + std::to_string(lattice.size()) + ")";
}

// Witness evidence for lattice member h, or the refutation tag.
json supplement_evidence(GroupContext &ctx, std::size_t h, SupplementKind kind) {
  auto const &lattice = ctx.lattice();
  auto k = ctx.supplement(h, kind);
  if (!k)
    return {{"H-gens", gens_of(lattice.subgroup(h))},
            {"kind", to_string(kind)},
            {"answer", "no"},
            {"proof", exhaustive_tag(lattice)}};
  auto w = verify_witness(lattice.subgroup(h), lattice.subgroup(*k), kind, ctx.bounds());
  json j = witness_json(w, ctx.name());
  j.erase("group");
  j["answer"] = "yes";
  return j;
}

bool is_mersenne_prime(std::uint64_t r) {
  return is_prime(r) && ((r + 1) & r) == 0;
}

std::vector<std::size_t> two_maximal(SubgroupLattice const &lattice, std::size_t p) {
  std::set<std::size_t> out;
  for (std::size_t m : lattice.lower_covers(p))
    for (std::size_t mm : lattice.lower_covers(m)) out.insert(mm);
  return {out.begin(), out.end()};
}

} // namespace

// ---------------------------------------------------------------------------
// Theorem 1

TheoremCheck check_T1a(GroupContext &ctx, std::uint64_t p) {
  auto c = make("T1a", ctx.name());
  auto const &lattice = ctx.lattice();
  std::size_t s = ctx.sylow_member(p);
  json maximal = json::array();
  bool some = false;
  for (std::size_t m : lattice.lower_covers(s)) {
    if (lattice[m].order == 1)
      continue;
    json e = supplement_evidence(ctx, m, SupplementKind::nc);
    some = some || e["answer"] == "yes";
    maximal.push_back(std::move(e));
  }
  c.evidence = {{"p", p},
                {"sylow_order", lattice[s].order},
                {"sylow_gens", gens_of(lattice.subgroup(s))},
                {"nontrivial_maximal", maximal}};
  c.hypothesis = hyp(some);
  if (some) {
    bool simple = ctx.nonabelian_simple();
    c.evidence["nonabelian_simple"] = simple;
    c.conclusion = concl(!simple);
  }
  finish(c);
  return c;
}

TheoremCheck check_T1b(GroupContext &ctx) {
  auto c = make("T1b", ctx.name());
  auto const &lattice = ctx.lattice();
  std::size_t s = ctx.sylow_member(2);
  json maximal = json::array();
  bool some = false;
  for (std::size_t m : lattice.lower_covers(s)) {
    json e = supplement_evidence(ctx, m, SupplementKind::nc);
    some = some || e["answer"] == "yes";
    maximal.push_back(std::move(e));
  }
  c.evidence = {{"p", 2}, {"sylow_order", lattice[s].order}, {"maximal", maximal}};
  c.hypothesis = hyp(some);
  if (some) {
    PiSet odd = complement_primes(ctx.group(), {2});
    auto h = hall(lattice, odd);
    c.evidence["odd_primes"] = odd;
    c.evidence["hall_2prime"] = h ? json(gens_of(*h)) : json(nullptr);
    json factors = json::array();
    Tri all_ok = Tri::yes;
    for (auto const &f : composition_factors(ctx.group(), ctx.bounds())) {
      factors.push_back(f.id.name);
      std::uint64_t n = to_u64(f.order);
      if (is_prime(n))
        continue;
      if (f.id.name == "unknown")
        all_ok = all_ok == Tri::no ? Tri::no : Tri::unknown;
      else if (!f.id.psl2_q || !is_mersenne_prime(*f.id.psl2_q))
        all_ok = Tri::no;
    }
    c.evidence["composition_factors"] = factors;
    c.conclusion = !h ? Conclusion::fails : concl(all_ok);
  }
  finish(c);
  return c;
}

// ---------------------------------------------------------------------------
// Theorem 2

namespace {

struct SylowScan {
  json evidence = json::array();
  bool all = true;
};

SylowScan scan_sylows(GroupContext &ctx) {
  SylowScan out;
  for (auto p : prime_divisors(ctx.group().order(), ctx.group().degree())) {
    std::size_t s = ctx.sylow_member(p);
    json e = supplement_evidence(ctx, s, SupplementKind::nc);
    e["p"] = p;
    out.all = out.all && e["answer"] == "yes";
    out.evidence.push_back(std::move(e));
  }
  return out;
}

} // namespace

TheoremCheck check_T2_fwd(GroupContext &ctx) {
  auto c = make("T2_fwd", ctx.name());
  c.hypothesis = hyp(ctx.solvable());
  c.evidence["solvable"] = ctx.solvable();
  if (c.hypothesis == Hypothesis::holds) {
    auto scan = scan_sylows(ctx);
    c.evidence["sylow"] = scan.evidence;
    c.conclusion = concl(scan.all);
  }
  finish(c);
  return c;
}

TheoremCheck check_T2_rev(GroupContext &ctx) {
  auto c = make("T2_rev", ctx.name());
  auto scan = scan_sylows(ctx);
  c.evidence["sylow"] = scan.evidence;
  c.hypothesis = hyp(scan.all);
  if (scan.all) {
    c.evidence["solvable"] = ctx.solvable();
    c.conclusion = concl(ctx.solvable());
  }
  finish(c);
  return c;
}

// ---------------------------------------------------------------------------
// Theorems 3 and 4

namespace {

std::pair<bool, json> all_supplemented(GroupContext &ctx, std::vector<std::size_t> const &members) {
  bool all = true;
  json list = json::array();
  for (std::size_t m : members) {
    json e = supplement_evidence(ctx, m, SupplementKind::nc);
    all = all && e["answer"] == "yes";
    list.push_back(std::move(e));
    if (!all)
      break;  // the refutation is enough
  }
  return {all, list};
}

std::size_t sylow2_or_trivial(GroupContext &ctx) {
  return ctx.group().order() % 2 == 0 ? ctx.sylow_member(2) : 0;
}

} // namespace

TheoremCheck check_T3(GroupContext &ctx) {
  auto c = make("T3", ctx.name());
  auto const &lattice = ctx.lattice();
  std::size_t s = sylow2_or_trivial(ctx);
  auto [all, list] = all_supplemented(ctx, lattice.lower_covers(s));
  c.evidence = {{"sylow_order", lattice[s].order}, {"maximal", list}};
  c.hypothesis = hyp(all);
  if (all) {
    c.evidence["solvable"] = ctx.solvable();
    c.conclusion = concl(ctx.solvable());
  }
  finish(c);
  return c;
}

TheoremCheck check_T4(GroupContext &ctx, std::vector<std::uint64_t> const &qs) {
  auto c = make("T4", ctx.name());
  auto const &lattice = ctx.lattice();
  std::size_t s = sylow2_or_trivial(ctx);
  auto [all, list] = all_supplemented(ctx, two_maximal(lattice, s));
  c.evidence = {{"sylow_order", lattice[s].order}, {"two_maximal", list}};
  json sections = json::object();
  bool free = true;
  for (auto q : qs) {
    if (q % 8 != 3 && q % 8 != 5)
      continue;
    auto target = psl2_target(q);
    bool f = ctx.group().order() % target.order != 0 || !find_section(lattice, target);
    sections[target.name] = f ? "free" : "section found";
    free = free && f;
  }
  c.evidence["l2q_free"] = sections;
  c.hypothesis = hyp(all && free);
  if (all && free) {
    c.evidence["solvable"] = ctx.solvable();
    c.conclusion = concl(ctx.solvable());
  }
  finish(c);
  return c;
}

// ---------------------------------------------------------------------------
// Theorem 5

namespace {

struct Theorem5 {
  bool gcd_ok = false, cube_free = false, a4_free = false;
  bool p_nilpotent = false;
  Tri second_branch = Tri::unknown;
  std::uint64_t complement_order = 0;
  json evidence;

  bool hypothesis() const { return gcd_ok && cube_free && a4_free; }
};

Theorem5 theorem5(GroupContext &ctx, std::uint64_t p) {
  Theorem5 t;
  Order n = ctx.group().order();
  t.gcd_ok = boost::multiprecision::gcd(n, Order(p - 1)) == 1;
  t.cube_free = n % (Order(p) * p * p) != 0;
  t.a4_free = ctx.a4_free();
  t.evidence = {{"p", p},
                {"order", order_json(n)},
                {"gcd_order_p_minus_1", order_json(boost::multiprecision::gcd(n, Order(p - 1)))},
                {"p_cube_divides", !t.cube_free},
                {"a4_free", t.a4_free}};
  if (!t.hypothesis())
    return t;
  t.p_nilpotent = is_p_nilpotent(ctx.group(), p, ctx.bounds());
  t.evidence["p_nilpotent"] = t.p_nilpotent;
  if (t.p_nilpotent)
    return t;

  Subgroup opp = o_p_prime(ctx.group(), p, ctx.bounds());
  PermGroup q = opp.is_trivial() ? ctx.group() : quotient(ctx.group(), opp.group(), ctx.bounds()).first;
  json b;
  b["o_p_prime_order"] = order_json(opp.order());
  b["quotient_order"] = order_json(q.order());
  Order pp = p_part(q.order(), p);
  Order m = q.order() / pp;
  bool ok = pp == Order(p) * p;
  Subgroup op = o_p(q, p, ctx.bounds());
  bool elementary = op.order() == Order(p) * p && is_abelian(op.group());
  for (auto const &x : op.generators()) elementary = elementary && x.order() == p;
  b["o_p_order"] = order_json(op.order());
  b["o_p_elementary_abelian"] = elementary;
  ok = ok && elementary;
  std::optional<Subgroup> h;
  if (ok) {
    auto lattice = enumerate_subgroups(q, ctx.bounds());
    h = hall(lattice, complement_primes(q, {p}));
  }
  b["complement"] = h ? json(gens_of(*h)) : json(nullptr);
  if (h) {
    t.complement_order = to_u64(h->order());
    bool cyclic = is_cyclic(h->group(), ctx.bounds());
    bool odd = m % 2 == 1;
    bool divides = ((p + 1) / 2) % t.complement_order == 0;
    b["complement_order"] = t.complement_order;
    b["complement_cyclic"] = cyclic;
    b["complement_order_odd"] = odd;
    b["divides_half_p_plus_1"] = divides;
    ok = ok && cyclic && odd && divides;
  } else {
    ok = false;
  }
  t.second_branch = tri(ok);
  t.evidence["second_branch"] = b;
  return t;
}

} // namespace

TheoremCheck check_T5(GroupContext &ctx, std::uint64_t p) {
  auto c = make("T5", ctx.name());
  auto t = theorem5(ctx, p);
  c.evidence = t.evidence;
  c.hypothesis = hyp(t.hypothesis());
  if (t.hypothesis())
    c.conclusion = t.p_nilpotent ? Conclusion::holds : concl(t.second_branch);
  finish(c);
  return c;
}

// ---------------------------------------------------------------------------
// Lemmas

namespace {

template <class F>
void each_nc_witness(GroupContext &ctx, F &&f) {
  auto const &lattice = ctx.lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto k = ctx.supplement(i, SupplementKind::nc);
    if (!k)
      continue;
    auto w = verify_witness(lattice.subgroup(i), lattice.subgroup(*k), SupplementKind::nc,
                            ctx.bounds());
    f(i, w);
  }
}

} // namespace

TheoremCheck check_L1(GroupContext &ctx) {
  auto c = make("L1", ctx.name());
  std::size_t witnesses = 0;
  json failures = json::array();
  each_nc_witness(ctx, [&](std::size_t, SupplementWitness const &w) {
    ++witnesses;
    auto n = normalize_supplement(w, ctx.bounds());
    if (!n.valid() || !n.intersection_is_core())
      failures.push_back(witness_json(n, ctx.name()));
  });
  c.evidence = {{"witnesses", witnesses}, {"failures", failures}};
  c.hypothesis = hyp(witnesses > 0);
  c.conclusion = concl(failures.empty());
  finish(c);
  return c;
}

TheoremCheck check_L2(GroupContext &ctx) {
  auto c = make("L2", ctx.name());
  auto const &lattice = ctx.lattice();
  std::vector<std::size_t> normals;
  for (std::size_t n = 0; n < lattice.size(); ++n)
    if (lattice[n].normal)
      normals.push_back(n);

  std::size_t witnesses = 0, restrict = 0, contained = 0, coprime = 0;
  json failures = json::array();
  auto record = [&](char const *what, SupplementWitness const &w) {
    if (!w.valid())
      failures.push_back({{"transform", what}, {"witness", witness_json(w, ctx.name())}});
  };
  each_nc_witness(ctx, [&](std::size_t i, SupplementWitness const &w) {
    ++witnesses;
    std::vector<std::size_t> ms = lattice.supergroups(i);
    ms.push_back(i);
    for (std::size_t m : ms) {
      record("restrict", restrict_to_intermediate(w, lattice.subgroup(m), ctx.bounds()));
      ++restrict;
    }
    for (std::size_t n : normals) {
      if (lattice[n].elements.is_subset_of(lattice[i].elements)) {
        record("quotient_contained", push_to_quotient_contained(w, lattice.subgroup(n), ctx.bounds()));
        ++contained;
      }
      if (std::gcd(lattice[n].order, lattice[i].order) == 1) {
        record("quotient_coprime", push_to_quotient_coprime(w, lattice.subgroup(n), ctx.bounds()));
        ++coprime;
      }
    }
  });
  c.evidence = {{"witnesses", witnesses},
                {"restrict", restrict},
                {"quotient_contained", contained},
                {"quotient_coprime", coprime},
                {"reading", "Lemma 2(1) hypothesis read as H <= M <= G"},
                {"failures", failures}};
  c.hypothesis = hyp(witnesses > 0);
  c.conclusion = concl(failures.empty());
  finish(c);
  return c;
}

TheoremCheck check_L3(GroupContext &ctx) {
  auto c = make("L3", ctx.name());
  auto const &lattice = ctx.lattice();
  auto primes = prime_divisors(ctx.group().order(), ctx.group().degree());
  std::size_t instances = 0;
  json failures = json::array();
  json used = json::array();
  for (std::size_t n = 1; n + 1 < lattice.size(); ++n) {
    if (!lattice[n].normal)
      continue;
    Subgroup k = lattice.subgroup(n);
    auto k_lattice = enumerate_subgroups(k.group(), ctx.bounds());
    auto q = quotient(ctx.group(), k.group(), ctx.bounds()).first;
    auto q_lattice = enumerate_subgroups(q, ctx.bounds());
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << primes.size()); ++mask) {
      PiSet pi;
      for (std::size_t b = 0; b < primes.size(); ++b)
        if (mask >> b & 1)
          pi.push_back(primes[b]);
      if (classify_hall(k_lattice, pi).c_pi != Tri::yes || !hall(q_lattice, pi))
        continue;
      ++instances;
      bool e = hall(lattice, pi).has_value();
      json inst = {{"K-gens", gens_of(k)}, {"pi", pi}, {"G_in_E_pi", e}};
      if (!e)
        failures.push_back(inst);
      else if (used.size() < 8)
        used.push_back(std::move(inst));
    }
  }
  c.evidence = {{"instances", instances}, {"sample", used}, {"failures", failures}};
  c.hypothesis = hyp(instances > 0);
  c.conclusion = concl(failures.empty());
  finish(c);
  return c;
}

TheoremCheck check_L4(GroupContext &ctx) {
  auto c = make("L4", ctx.name());
  bool klein = sylow2_klein_check(ctx.group(), ctx.bounds());
  c.evidence["klein_sylow2"] = klein;
  c.hypothesis = hyp(ctx.nonabelian_simple() && klein);
  if (c.hypothesis == Hypothesis::holds) {
    auto id = identify_simple(ctx.group(), ctx.bounds());
    c.evidence["identified"] = id.name;
    c.evidence["psl2_q"] = id.psl2_q ? json(*id.psl2_q) : json(nullptr);
    if (id.name == "unknown")
      c.conclusion = Conclusion::unknown;
    else
      c.conclusion = concl(id.psl2_q && (*id.psl2_q % 8 == 3 || *id.psl2_q % 8 == 5));
  }
  finish(c);
  return c;
}

// ---------------------------------------------------------------------------
// Pinned instances

TheoremCheck check_EX_A4(Bounds const &bounds) {
  auto entry = fixture("A4", bounds);
  auto c = make("EX_A4", entry.name);
  Subgroup C = entry.subgroup("C");
  auto lattice = enumerate_subgroups(entry.group, bounds);
  auto st = supplement_status(lattice, C, bounds);
  c.evidence["H-gens"] = gens_of(C);
  c.evidence["lattice_size"] = lattice.size();
  c.evidence["nc"] = st.nc.witness ? witness_json(*st.nc.witness, entry.name) : json(nullptr);
  c.evidence["c"] = {{"answer", to_string(st.c.answer)}, {"proof", st.c.proof}};
  c.hypothesis = hyp(st.nc.answer == Tri::yes && st.nc.witness->valid());
  c.conclusion = st.c.answer == Tri::no    ? Conclusion::holds
                 : st.c.answer == Tri::yes ? Conclusion::fails
                                           : Conclusion::unknown;
  finish(c);
  return c;
}

TheoremCheck check_R2(Bounds const &bounds) {
  auto entry = fixture("L2(7)", bounds);
  auto c = make("R2", entry.name);
  GroupContext ctx(entry.name, entry.group, bounds);
  std::size_t s = ctx.sylow_member(7);
  auto const &lattice = ctx.lattice();
  auto covers = lattice.lower_covers(s);
  bool p1_trivial = covers.size() == 1 && lattice[covers.front()].order == 1;
  c.evidence["p"] = 7;
  c.evidence["sylow_order"] = lattice[s].order;
  c.evidence["p1_trivial"] = p1_trivial;
  if (p1_trivial)
    c.evidence["p1_supplement"] = supplement_evidence(ctx, covers.front(), SupplementKind::nc);
  bool supplemented = p1_trivial && ctx.supplement(covers.front(), SupplementKind::nc);
  c.hypothesis = hyp(supplemented);
  // With P1 = 1 allowed, Theorem 1(a) would exclude this group.
  c.evidence["nonabelian_simple"] = ctx.nonabelian_simple();
  c.conclusion = concl(ctx.nonabelian_simple());
  finish(c);
  return c;
}

TheoremCheck check_R3(Bounds const &bounds, std::uint64_t seed) {
  auto entry = fixture("remark3", bounds);
  auto c = make("R3", entry.name);
  PermGroup const &g = entry.group;
  Subgroup P = entry.subgroup("P");
  Subgroup F = entry.subgroup("F");

  bool sylow_ok = P.order() == p_part(g.order(), 3);
  auto basis = elementary_abelian_basis(P);
  c.evidence["order"] = order_json(g.order());
  c.evidence["degree"] = g.degree();
  c.evidence["sylow_order"] = order_json(P.order());
  c.evidence["sylow_rank"] = basis.size();
  c.evidence["seed"] = seed;
  c.hypothesis = hyp(sylow_ok && basis.size() == 7);

  std::mt19937_64 rng(seed);
  auto functionals = normalized_functionals(3, basis.size());
  std::set<std::size_t> picks;
  while (picks.size() < 3) picks.insert(rng() % functionals.size());

  json samples = json::array();
  bool all_valid = true;
  auto try_sample = [&](Subgroup const &p1, Subgroup const &comp, json tag) {
    Subgroup fc = join(F, comp);
    auto w = verify_witness(p1, fc, SupplementKind::nc, bounds);
    json j = witness_json(w, entry.name);
    j.erase("group");
    j["sample"] = std::move(tag);
    all_valid = all_valid && w.valid();
    samples.push_back(std::move(j));
  };
  for (std::size_t i : picks) {
    auto hp = hyperplane(P, basis, functionals[i]);
    try_sample(hp.subgroup, hp.complement, {{"hyperplane", i}, {"functional", functionals[i]}});
  }
  // Non-maximal: spans of basis subsets of size 1..k-2, complement spanned by the rest.
  std::set<std::uint64_t> masks;
  std::uint64_t full = (std::uint64_t(1) << basis.size()) - 1;
  while (masks.size() < 3) {
    std::uint64_t m = rng() & full;
    int bits = std::popcount(m);
    if (bits >= 1 && bits + 2 <= static_cast<int>(basis.size()))
      masks.insert(m);
  }
  for (std::uint64_t m : masks) {
    std::vector<Permutation> in, out;
    for (std::size_t b = 0; b < basis.size(); ++b) (m >> b & 1 ? in : out).push_back(basis[b]);
    try_sample(Subgroup(g, in), Subgroup(g, out), {{"basis_subset", m}});
  }
  c.evidence["samples"] = samples;

  Subgroup core_p = core_by_element_filter(P, bounds);
  c.evidence["o_3_order"] = order_json(core_p.order());
  auto cert = p_nilpotency_certificate(g, 3, entry.subgroup("W"));
  c.evidence["certificate"] = {{"W-order", order_json(cert.complement.order())},
                               {"normal_closure_order", order_json(cert.closure_order)},
                               {"p_nilpotent", cert.p_nilpotent}};
  c.conclusion = concl(all_valid && core_p.is_trivial() && !cert.p_nilpotent);
  finish(c);
  return c;
}

namespace {

TheoremCheck remark4_check(std::string id, Bounds const &bounds, bool require_branch) {
  auto entry = fixture("remark4", bounds);
  auto c = make(std::move(id), entry.name);
  GroupContext ctx(entry.name, entry.group, bounds);
  auto t = theorem5(ctx, 19);
  c.evidence = t.evidence;
  c.hypothesis = hyp(t.hypothesis());
  if (!t.hypothesis()) {
    finish(c);
    return c;
  }
  if (!require_branch) {
    c.conclusion = concl(!t.p_nilpotent);
  } else if (t.p_nilpotent) {
    c.conclusion = Conclusion::fails;
  } else {
    Conclusion b = concl(t.second_branch);
    c.conclusion = b == Conclusion::holds && t.complement_order != 5 ? Conclusion::fails : b;
  }
  finish(c);
  return c;
}

} // namespace

// Remark 4 shows Lemma A is false: its hypotheses hold and G is not p-nilpotent.
TheoremCheck check_LA_counterexample(Bounds const &bounds) {
  return remark4_check("LA_counter", bounds, false);
}

TheoremCheck check_R4(Bounds const &bounds) { return remark4_check("R4", bounds, true); }

// ---------------------------------------------------------------------------
// Suite

ReportCounts VerificationReport::counts() const {
  ReportCounts n;
  for (auto const &c : checks) {
    ++n.checks;
    n.consistent += c.verdict == Verdict::consistent;
    n.violations += c.verdict == Verdict::violation;
    n.inconclusive += c.verdict == Verdict::inconclusive;
    n.hypothesis_unknown += c.hypothesis == Hypothesis::unknown;
    n.conclusion_unknown += c.conclusion == Conclusion::unknown;
    n.errors += c.error;
  }
  return n;
}

bool VerificationReport::clean() const {
  auto n = counts();
  return n.violations == 0 && n.errors == 0;
}

namespace {

TheoremCheck guarded(std::string const &id, std::string const &group, bool timing,
                     std::function<TheoremCheck()> const &f) {
  auto start = std::chrono::steady_clock::now();
  TheoremCheck c;
  try {
    c = f();
  } catch (ResourceExceeded const &e) {
    c = make(id, group);
    c.evidence = {{"resource_exceeded", e.what()}};
    finish(c);
  } catch (std::exception const &e) {
    c = make(id, group);
    c.error = true;
    c.evidence = {{"error", e.what()}};
    finish(c);
  }
  if (timing)
    c.millis = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count());
  return c;
}

} // namespace

VerificationReport run_suite(std::vector<CatalogEntry> const &catalog, SuiteOptions const &options) {
  VerificationReport report;
  report.options = options;
  if (report.options.catalog_id.empty())
    report.options.catalog_id = catalog_id(catalog);
  report.notes = {
      "Lemma 2(1) is checked for intermediate subgroups H <= M <= G.",
      "Theorem 4: the L2(q)-free clause is read as a condition on G, checked for q in the "
      "configured list with q = 3 or 5 mod 8.",
      "LA_counter encodes Remark 4: a consistent verdict means Lemma A's hypotheses hold and G "
      "is not p-nilpotent.",
  };
  auto wanted = [&](std::string const &id) {
    return options.ids.empty() ||
           std::find(options.ids.begin(), options.ids.end(), id) != options.ids.end();
  };
  Bounds const &bounds = options.bounds;
  bool timing = options.timing;
  auto &out = report.checks;

  for (auto const &entry : catalog) {
    auto const &name = entry.name;
    if (entry.scale == Scale::exhaustive) {
      GroupContext ctx(name, entry.group, bounds);
      auto primes = prime_divisors(entry.group.order(), entry.group.degree());
      auto add = [&](std::string const &id, std::function<TheoremCheck()> const &f) {
        if (wanted(id))
          out.push_back(guarded(id, name, timing, f));
      };
      for (auto p : primes) add("T1a", [&] { return check_T1a(ctx, p); });
      if (entry.group.order() % 2 == 0)
        add("T1b", [&] { return check_T1b(ctx); });
      add("T2_fwd", [&] { return check_T2_fwd(ctx); });
      add("T2_rev", [&] { return check_T2_rev(ctx); });
      add("T3", [&] { return check_T3(ctx); });
      add("T4", [&] { return check_T4(ctx, options.t4_q); });
      for (auto p : primes) add("T5", [&] { return check_T5(ctx, p); });
      if (entry.group.order() <= options.property_order) {
        add("L1", [&] { return check_L1(ctx); });
        add("L2", [&] { return check_L2(ctx); });
      }
      add("L3", [&] { return check_L3(ctx); });
      add("L4", [&] { return check_L4(ctx); });
    }
    auto pinned = [&](std::string const &id, std::function<TheoremCheck()> const &f) {
      if (wanted(id))
        out.push_back(guarded(id, name, timing, f));
    };
    if (name == "A4")
      pinned("EX_A4", [&] { return check_EX_A4(bounds); });
    if (name == "L2(7)")
      pinned("R2", [&] { return check_R2(bounds); });
    if (name == "remark3")
      pinned("R3", [&] { return check_R3(bounds, options.seed); });
    if (name == "remark4") {
      pinned("LA_counter", [&] { return check_LA_counterexample(bounds); });
      pinned("R4", [&] { return check_R4(bounds); });
    }
  }
  return report;
}

std::string catalog_id(std::vector<CatalogEntry> const &catalog) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](std::string const &s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  };
  for (auto const &e : catalog) {
    feed(e.name);
    feed(std::to_string(e.group.degree()));
    feed(format_generator_list(e.group.generators()));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "fnv1a64:" + std::string(buf);
}

json check_json(TheoremCheck const &c) {
  json j = {{"id", c.id},
            {"group", c.group},
            {"hypothesis", to_string(c.hypothesis)},
            {"conclusion", to_string(c.conclusion)},
            {"verdict", to_string(c.verdict)},
            {"evidence", c.evidence},
            {"millis", c.millis ? json(*c.millis) : json(nullptr)}};
  if (c.error)
    j["error"] = true;
  return j;
}

json report_json(VerificationReport const &r) {
  auto n = r.counts();
  auto const &o = r.options;
  json checks = json::array();
  for (auto const &c : r.checks) checks.push_back(check_json(c));
  return {{"suite", o.suite},
          {"catalog_id", o.catalog_id},
          {"bounds",
           {{"max_order", o.bounds.lattice_order},
            {"element_cap", o.bounds.element_cap},
            {"index_cap", o.bounds.index_cap},
            {"seed", o.seed},
            {"property_order", o.property_order}}},
          {"notes", r.notes},
          {"summary",
           {{"checks", n.checks},
            {"consistent", n.consistent},
            {"violations", n.violations},
            {"inconclusive", n.inconclusive},
            {"hypothesis_unknown", n.hypothesis_unknown},
            {"conclusion_unknown", n.conclusion_unknown},
            {"errors", n.errors}}},
          {"checks", checks}};
}

std::string report_text(VerificationReport const &r) {
  auto const &o = r.options;
  std::string out = "suite " + o.suite + "  catalog " + o.catalog_id + "\n";
  out += "bounds: max-order " + std::to_string(o.bounds.lattice_order) + ", element-cap " +
         std::to_string(o.bounds.element_cap) + ", index-cap " +
         std::to_string(o.bounds.index_cap) + ", seed " + std::to_string(o.seed) + "\n";
  for (auto const &note : r.notes) out += "note: " + note + "\n";
  out += "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-11s %-16s %-8s %-14s %-12s%s\n", "id", "group",
                "hyp", "concl", "verdict", o.timing ? " ms" : "");
  out += line;
  for (auto const &c : r.checks) {
    std::string ms = c.millis ? " " + std::to_string(*c.millis) : "";
    std::snprintf(line, sizeof line, "%-11s %-16s %-8s %-14s %-12s%s\n", c.id.c_str(),
                  c.group.c_str(), to_string(c.hypothesis), to_string(c.conclusion),
                  to_string(c.verdict), ms.c_str());
    out += line;
  }
  auto n = r.counts();
  out += "\n" + std::to_string(n.checks) + " checks: " + std::to_string(n.consistent) +
         " consistent, " + std::to_string(n.violations) + " violations, " +
         std::to_string(n.inconclusive) + " inconclusive, " + std::to_string(n.errors) +
         " errors\n";
  out += "unknown: hypothesis " + std::to_string(n.hypothesis_unknown) + ", conclusion " +
         std::to_string(n.conclusion_unknown) + "\n";
  return out;
}

std::vector<Finding> mine_nc_not_c(GroupContext &ctx) {
  std::vector<Finding> out;
  auto const &lattice = ctx.lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto k = ctx.supplement(i, SupplementKind::nc);
    if (!k || ctx.supplement(i, SupplementKind::c))
      continue;
    out.push_back({ctx.name(), i,
                   verify_witness(lattice.subgroup(i), lattice.subgroup(*k), SupplementKind::nc,
                                  ctx.bounds())});
  }
  return out;
}

} // namespace grouplab
