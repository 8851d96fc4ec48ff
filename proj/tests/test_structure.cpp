#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "grouplab/catalog.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/sylow_hall.hpp"
#include "oracles.hpp"

using namespace grouplab;

namespace {

std::vector<std::size_t> series_orders(PermGroup const &g) {
  std::vector<std::size_t> out;
  for (auto const &s : derived_series(g)) out.push_back(to_u64(s.order()));
  return out;
}

std::multiset<std::string> factor_names(PermGroup const &g) {
  std::multiset<std::string> out;
  for (auto const &f : composition_factors(g)) out.insert(f.id.name);
  return out;
}

// Exhaustive isomorphism test for 2-generated groups: try every image pair of
// the right orders and extend along a breadth-first word traversal.
bool isomorphic(PermGroup const &g, PermGroup const &h) {
  if (g.order() != h.order())
    return false;
  auto ge = oracle::closure(g.generators(), g.degree());
  auto he = oracle::closure(h.generators(), h.degree());
  auto const &gens = g.generators();
  REQUIRE(gens.size() == 2);
  for (auto const &a : he) {
    if (a.order() != gens[0].order())
      continue;
    for (auto const &b : he) {
      if (b.order() != gens[1].order())
        continue;
      std::unordered_map<Permutation, Permutation> phi{{Permutation(g.degree()),
                                                        Permutation(h.degree())}};
      std::vector<Permutation> queue{Permutation(g.degree())};
      bool ok = true;
      for (std::size_t i = 0; i < queue.size() && ok; ++i)
        for (int k = 0; k < 2 && ok; ++k) {
          Permutation x = queue[i] * gens[k];
          Permutation y = phi.at(queue[i]) * (k == 0 ? a : b);
          auto it = phi.find(x);
          if (it == phi.end()) {
            phi.emplace(x, y);
            queue.push_back(x);
          } else if (it->second != y) {
            ok = false;
          }
        }
      if (!ok || phi.size() != ge.size())
        continue;
      std::set<Permutation> image;
      for (auto const &[x, y] : phi) image.insert(y);
      if (image.size() == he.size())
        return true;
    }
  }
  return false;
}

} // namespace

TEST_CASE("derived series and solvability") {
  CHECK(series_orders(symmetric(4)) == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(is_solvable(symmetric(4)));
  CHECK_FALSE(is_solvable(alternating(5)));
  CHECK(series_orders(alternating(5)) == std::vector<std::size_t>{60});
  CHECK(is_solvable(cyclic(1)));
  CHECK(is_solvable(fixture("remark3").group));
  CHECK(is_solvable(fixture("remark4").group));
}

TEST_CASE("p-nilpotency") {
  CHECK(is_p_nilpotent(symmetric(3), 2));
  CHECK_FALSE(is_p_nilpotent(symmetric(3), 3));
  CHECK_FALSE(is_p_nilpotent(fixture("remark4").group, 19));
  CHECK(is_p_nilpotent(fixture("remark4").group, 5));
  CHECK(is_p_nilpotent(alternating(4), 3));
  CHECK_FALSE(is_p_nilpotent(alternating(4), 2));

  auto r3 = fixture("remark3");
  auto cert = p_nilpotency_certificate(r3.group, 3, r3.subgroup("W"));
  CHECK_FALSE(cert.p_nilpotent);
  CHECK(cert.closure_order > cert.complement.order());

  // The certificate route agrees with the general route at desk scale.
  auto s3 = symmetric(3);
  CHECK(p_nilpotency_certificate(s3, 2, *p_complement(s3, 2)).p_nilpotent);
  auto r4 = fixture("remark4");
  CHECK_FALSE(p_nilpotency_certificate(r4.group, 19, r4.subgroup("Z5")).p_nilpotent);
}

TEST_CASE("p-nilpotent implies O_p' has index |G|_p") {
  for (auto const &e : default_catalog()) {
    if (e.scale != Scale::exhaustive)
      continue;
    for (auto p : prime_divisors(e.group.order(), e.group.degree()))
      if (is_p_nilpotent(e.group, p))
        CHECK(e.group.order() / o_p_prime(e.group, p).order() == p_part(e.group.order(), p));
  }
}

TEST_CASE("simplicity and composition factors") {
  CHECK(is_simple(alternating(5)));
  CHECK_FALSE(is_simple(alternating(4)));
  CHECK(is_simple(cyclic(7)));
  CHECK_FALSE(is_simple(cyclic(1)));
  CHECK_FALSE(is_simple(psl2(3)));
  for (std::uint64_t q : {5u, 7u, 11u, 13u}) CHECK(is_simple(psl2(q)));

  CHECK(factor_names(symmetric(4)) == std::multiset<std::string>{"C2", "C2", "C2", "C3"});
  CHECK(factor_names(construct("prod(L2(7),C2)").group) ==
        std::multiset<std::string>{"C2", "L2(7)"});
  CHECK(factor_names(symmetric(5)) == std::multiset<std::string>{"C2", "A5 = L2(5) = L2(4)"});
}

TEST_CASE("identify_simple") {
  auto a5 = identify_simple(alternating(5));
  CHECK(a5.name == "A5 = L2(5) = L2(4)");
  CHECK(a5.psl2_q == 5u);
  CHECK(identify_simple(psl2(5)).name == a5.name);
  CHECK(identify_simple(psl2(7)).name == "L2(7)");
  CHECK(identify_simple(psl2(11)).name == "L2(11)");
  CHECK(identify_simple(cyclic(5)).name == "C5");
  CHECK_THROWS_AS(identify_simple(alternating(4)), PreconditionError);
}

TEST_CASE("identify_simple agrees with exhaustive isomorphism search") {
  std::vector<std::pair<PermGroup, PermGroup>> pairs{
      {psl2(5), alternating(5)}, {alternating(5), alternating(5)}, {psl2(7), psl2(7)}};
  for (auto const &[g, h] : pairs) {
    CHECK(identify_simple(g).name == identify_simple(h).name);
    CHECK(isomorphic(g, h));
  }
  CHECK_FALSE(isomorphic(alternating(4), construct("C3:C4").group));
}

TEST_CASE("A4 and L2(q) are separated by spectrum among constructible groups") {
  auto a4 = a4_target();
  for (auto spec : {"C12", "prod(C2,C6)", "D12", "C3:C4"})
    CHECK(spectrum(construct(spec).group) != a4.spectrum);
  CHECK(a4.spectrum == Spectrum{{1, 1}, {2, 3}, {3, 8}});
  CHECK(spectrum(symmetric(5)) != psl2_target(5).spectrum);
  CHECK(spectrum(construct("prod(A4,C5)").group) != psl2_target(5).spectrum);
}

TEST_CASE("Klein Sylow-2 check") {
  CHECK(sylow2_klein_check(psl2(5)));
  CHECK(sylow2_klein_check(psl2(11)));
  CHECK_FALSE(sylow2_klein_check(psl2(7)));
  CHECK(sylow2_klein_check(alternating(4)));
  CHECK_FALSE(sylow2_klein_check(cyclic(4)));
}

TEST_CASE("section freeness") {
  auto a4 = a4_target();
  CHECK(is_section_free(fixture("remark4").group, a4));
  CHECK_FALSE(is_section_free(symmetric(4), a4));
  CHECK(is_section_free(construct("prod(C2,C6)").group, a4));
  CHECK_FALSE(is_section_free(construct("prod(A4,C2)").group, a4));
  CHECK_FALSE(is_section_free(symmetric(5), psl2_target(5)));
  CHECK(is_section_free(symmetric(4), psl2_target(5)));
  // SL(2,3)/Z is A4 although SL(2,3) has no A4 subgroup.
  auto sec = find_section(sl2_3(), a4);
  REQUIRE(sec.has_value());
  CHECK(sec->b.order() == 2);
}

TEST_CASE("cyclicity, spectrum and nilpotency") {
  CHECK(is_cyclic(fixture("remark4").subgroup("Z5").group()));
  CHECK_FALSE(is_cyclic(dihedral(2)));
  CHECK(is_cyclic(cyclic(12)));
  CHECK_FALSE(is_nilpotent(alternating(4)));
  CHECK(is_nilpotent(dihedral(4)));
  CHECK(is_nilpotent(quaternion()));
  auto s = spectrum(alternating(4));
  std::uint64_t total = 0;
  for (auto [o, c] : s) total += c;
  CHECK(total == 12);
  CHECK(s[1] == 1);
}

TEST_CASE("solvability agrees with composition factors") {
  for (auto const &e : default_catalog()) {
    if (e.scale != Scale::exhaustive)
      continue;
    INFO(e.name);
    bool cyclic_factors = true;
    for (auto const &f : composition_factors(e.group))
      cyclic_factors = cyclic_factors && is_prime(to_u64(f.order));
    CHECK(is_solvable(e.group) == cyclic_factors);
    if (is_solvable(e.group)) {
      std::size_t bound = 0;
      for (Order n = e.group.order(); n > 1; n /= 2) ++bound;
      CHECK(derived_series(e.group).size() - 1 <= bound);
    }
    if (e.has_tag("simple-expected"))
      CHECK(is_simple(e.group));
  }
}

TEST_CASE("composition factor orders do not depend on the series") {
  // Alternative series: smallest maximal normal subgroup at each step.
  for (auto spec : {"S4", "D12", "prod(S3,S3)", "C12", "prod(A4,C2)", "SL(2,3)", "S5"}) {
    auto g = construct(spec).group;
    std::multiset<std::string> alt;
    PermGroup current = g;
    while (!current.is_trivial()) {
      GroupTable t(current);
      auto normals = normal_subgroup_sets(t);
      std::optional<ElementSet> pick;
      for (std::size_t i = 0; i + 1 < normals.size() && !pick; ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j + 1 < normals.size(); ++j)
          if (normals[i].is_subset_of(normals[j]) && normals[j].count() > normals[i].count())
            maximal = false;
        if (maximal)
          pick = normals[i];
      }
      auto next = t.to_subgroup(*pick);
      auto factor = current.order() / next.order();
      alt.insert(is_prime(to_u64(factor)) ? "C" + Order(factor).str()
                                          : identify_by_invariants(
                                                factor, spectrum(quotient(current, next.group()).first))
                                                .name);
      current = next.group();
    }
    CHECK(alt == factor_names(g));
  }
}
