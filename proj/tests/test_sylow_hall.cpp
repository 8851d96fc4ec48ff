#include <doctest.h>

#include "grouplab/catalog.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/sylow_hall.hpp"

using namespace grouplab;

TEST_CASE("pi_part") {
  CHECK(pi_part(168, {2}) == 8);
  CHECK(pi_part(168, {2, 3, 7}) == 168);
  CHECK(pi_part(1805, {19}) == 361);
  CHECK(pi_part(1805, {2}) == 1);
}

TEST_CASE("sylow subgroups at desk scale") {
  auto a4 = fixture("A4");
  CHECK(sylow(a4.group, 2) == a4.subgroup("B"));
  CHECK(sylow(cyclic(8), 2).is_whole());
  CHECK_THROWS_AS(sylow(a4.group, 5), PreconditionError);
  CHECK(all_sylow(a4.group, 3).size() == 4);
  CHECK(all_sylow(a4.group, 2).size() == 1);
}

TEST_CASE("sylow counts over the catalog") {
  for (auto const &e : default_catalog()) {
    if (e.scale != Scale::exhaustive)
      continue;
    INFO(e.name);
    for (auto p : prime_divisors(e.group.order(), e.group.degree())) {
      auto s = sylow(e.group, p);
      CHECK(s.order() == pi_part(e.group.order(), {p}));
      for (auto const &x : s.generators()) CHECK(p_part(Order(x.order()), p) == x.order());
      auto n = all_sylow(e.group, p).size();
      CHECK(n % p == 1);
      CHECK((e.group.order() / s.order()) % n == 0);
    }
  }
}

TEST_CASE("sylow-3 of the wreath fixture") {
  auto r3 = fixture("remark3");
  auto p = sylow(r3.group, 3);
  CHECK(p.order() == 2187);
  for (auto const &x : p.generators()) {
    CHECK(x.order() == 3);
    for (auto const &y : p.generators()) CHECK(x * y == y * x);
  }
}

TEST_CASE("Hall subgroups") {
  auto a5 = alternating(5);
  CHECK_FALSE(hall(a5, {2, 5}).has_value());
  CHECK(hall(a5, {2, 3, 5})->is_whole());
  auto h = hall(psl2(7), {3, 7});
  REQUIRE(h.has_value());
  CHECK(h->order() == 21);
  CHECK(p_complement(symmetric(4), 2)->order() == 3);
  CHECK(p_complement(cyclic(8), 2)->is_trivial());
  CHECK(p_complement(a5, 5)->order() == 12);
}

TEST_CASE("Hall classification flags are monotone") {
  for (auto const &e : default_catalog()) {
    if (e.group.order() > 500)
      continue;
    auto primes = prime_divisors(e.group.order(), e.group.degree());
    auto l = enumerate_subgroups(e.group);
    for (std::size_t mask = 1; mask < (1u << primes.size()); ++mask) {
      PiSet pi;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1)
          pi.push_back(primes[i]);
      auto c = classify_hall(l, pi);
      if (c.d_pi == Tri::yes)
        CHECK(c.c_pi == Tri::yes);
      if (c.c_pi == Tri::yes)
        CHECK(c.e_pi == Tri::yes);
      if (pi.size() == 1) {
        CHECK(c.e_pi == Tri::yes);
        CHECK(c.c_pi == Tri::yes);
        CHECK(c.d_pi == Tri::yes);
      }
    }
  }
  // A5 has two classes of Hall {2,3}-subgroups? No: A4 is the unique class of
  // order 12, but {2,5} has none.
  auto a5 = classify_hall(enumerate_subgroups(alternating(5)), {2, 5});
  CHECK(a5.e_pi == Tri::no);
  auto l27 = classify_hall(enumerate_subgroups(psl2(7)), {2, 3});
  CHECK(l27.e_pi == Tri::yes);
  CHECK(l27.c_pi == Tri::no);  // two classes of S4
}
