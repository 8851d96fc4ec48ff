#include "doctest.h"
#include "grouplab/errors.hpp"
#include "grouplab/group_io.hpp"
#include "grouplab/perm_group.hpp"
#include "oracles.hpp"

using namespace grouplab;

namespace {

Permutation cyc(char const *s, std::size_t n) { return Permutation::from_cycles(s, n); }

PermGroup a4() { return PermGroup(4, {cyc("(1,2,3)", 4), cyc("(1,2)(3,4)", 4)}); }
PermGroup s4() { return PermGroup(4, {cyc("(1,2,3,4)", 4), cyc("(1,2)", 4)}); }

} // namespace

TEST_CASE("group_from_generators: orders") {
  CHECK(a4().order() == 12);
  CHECK(PermGroup(4, {Permutation(4)}).order() == 1);
  CHECK(PermGroup(8, oracle::psl2_generators(7)).order() == 168);
  CHECK(PermGroup(10, {cyc("(1,2,3,4,5,6,7,8,9,10)", 10), cyc("(1,2)", 10)}).order() ==
        3628800);
  CHECK_THROWS_AS(PermGroup(4, {Permutation(5)}), PreconditionError);
}

TEST_CASE("BSGS order and elements agree with brute-force closure") {
  std::vector<std::pair<std::size_t, std::vector<Permutation>>> cases = {
      {4, a4().generators()},
      {8, oracle::psl2_generators(7)},
      {6, {cyc("(1,2,3,4,5,6)", 6), cyc("(1,2)", 6)}},
      {7, {cyc("(1,2,3,4,5,6,7)", 7), cyc("(2,3,5)(4,7,6)", 7)}},
      {12, oracle::psl2_generators(11)},
      {9, {cyc("(1,2,3)", 9), cyc("(4,5,6)", 9), cyc("(1,4,7)(2,5,8)(3,6,9)", 9)}},
  };
  for (auto const &[n, gens] : cases) {
    PermGroup g(n, gens);
    auto brute = oracle::closure(gens, n);
    CHECK(g.order() == brute.size());
    auto elems = g.elements(100000);
    std::sort(elems.begin(), elems.end());
    CHECK(elems == brute);
  }
}

TEST_CASE("membership") {
  auto g = a4();
  CHECK(g.contains(cyc("(1,2,3)", 4)));
  CHECK_FALSE(g.contains(cyc("(1,2)", 4)));
  CHECK(g.contains(Permutation(4)));
  CHECK_THROWS_AS(g.contains(Permutation(5)), PreconditionError);
  // Sampled closure.
  auto elems = g.elements(100);
  for (auto const &x : elems)
    for (auto const &y : elems) CHECK(g.contains(x * y));
}

TEST_CASE("elements respects the cap") {
  CHECK(a4().elements(1000000).size() == 12);
  CHECK(PermGroup::trivial(3).elements(1).size() == 1);
  CHECK_THROWS_AS(PermGroup(8, oracle::psl2_generators(7)).elements(100), OrderExceedsCap);
}

TEST_CASE("coset action") {
  auto g = a4();
  PermGroup c(4, {cyc("(1,2)(3,4)", 4)});
  auto hom = coset_action(g, c);
  CHECK(hom.image().degree() == 6);
  CHECK(hom.image().order() == 12);
  CHECK(hom.kernel().is_trivial());

  auto whole = coset_action(g, g);
  CHECK(whole.image().degree() == 1);
  CHECK(whole.image().is_trivial());
  CHECK(whole.kernel().same_group(g));

  PermGroup v4(4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
  auto onto3 = coset_action(g, v4);
  CHECK(onto3.image().degree() == 3);
  CHECK(onto3.kernel().same_group(v4));

  CHECK_THROWS_AS(coset_action(g, PermGroup::trivial(4), Bounds{.index_cap = 5}),
                  IndexExceedsCap);
  CHECK_THROWS_AS(coset_action(g, PermGroup(4, {cyc("(1,2)", 4)})), PreconditionError);
}

TEST_CASE("coset action kernel equals the brute-force core on S4 and PSL(2,7)") {
  for (auto const &g : {s4(), PermGroup(8, oracle::psl2_generators(7))}) {
    auto elems = g.elements(1000);
    for (auto const &sub : oracle::two_generated_subgroups(elems)) {
      PermGroup h(g.degree(), sub);
      auto kernel = coset_action(g, h).kernel();
      auto expected = oracle::core(elems, sub);
      CHECK(kernel.order() == expected.size());
      for (auto const &x : expected) CHECK(kernel.contains(x));
    }
  }
}

TEST_CASE("quotient") {
  PermGroup v4(4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
  auto [q, proj] = quotient(a4(), v4);
  CHECK(q.order() == 3);
  CHECK(proj.kernel().same_group(v4));

  auto [q1, p1] = quotient(a4(), PermGroup::trivial(4));
  CHECK(q1.order() == 12);
  CHECK(q1.degree() == 12);

  auto [q2, p2] = quotient(s4(), a4());
  CHECK(q2.order() == 2);
  CHECK(p2(cyc("(1,2)", 4)) == Permutation({1, 0}));

  CHECK_THROWS_AS(quotient(a4(), PermGroup(4, {cyc("(1,2)(3,4)", 4)})), NotNormal);
}

TEST_CASE("lift and preimage") {
  auto g = s4();
  PermGroup v4(4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)});
  auto [q, proj] = quotient(g, v4);
  CHECK(q.order() == 6);
  for (auto const &t : q.elements(10)) {
    auto x = proj.lift(t);
    CHECK(g.contains(x));
    CHECK(proj(x) == t);
  }
  // Preimage of a subgroup of order 2 in S3 has order 8.
  Permutation inv;
  for (auto const &t : q.elements(10))
    if (t.order() == 2)
      inv = t;
  CHECK(proj.preimage(std::vector<Permutation>{inv}).order() == 8);
  CHECK(proj.preimage(std::vector<Permutation>{}).same_group(v4));
}

TEST_CASE("restriction and block actions") {
  // C3 wr C2 on 6 points: blocks {1,2,3}, {4,5,6}.
  PermGroup w(6, {cyc("(1,2,3)", 6), cyc("(1,4)(2,5)(3,6)", 6)});
  CHECK(w.order() == 18);
  auto blocks = nontrivial_blocks(w);
  REQUIRE(blocks.has_value());
  auto act = block_action(w, *blocks);
  CHECK(act.image().order() * act.kernel().order() == 18);

  PermGroup base(6, {cyc("(1,2,3)", 6), cyc("(4,5,6)", 6)});
  std::vector<Point> first{0, 1, 2};
  auto res = restriction_action(base, first);
  CHECK(res.image().order() == 3);
  CHECK(res.kernel().order() == 3);
  CHECK_FALSE(nontrivial_blocks(PermGroup(5, {cyc("(1,2,3,4,5)", 5)})).has_value());
  CHECK_FALSE(nontrivial_blocks(s4()).has_value());
}

TEST_CASE("normal closure") {
  auto g = a4();
  auto n = normal_closure(g, std::vector<Permutation>{cyc("(1,2)(3,4)", 4)});
  CHECK(n.order() == 4);
}

TEST_CASE("group file round trip") {
  std::string text = "# S3\ndegree 3\n\nname S3\ngen (1,2,3)\ngen (1,2)\n";
  auto f = parse_group_file(text);
  CHECK(f.name == "S3");
  CHECK(f.group().order() == 6);
  auto again = parse_group_file(format_group_file(f.name, f.group()));
  CHECK(again.generators == f.generators);

  CHECK_THROWS_AS(parse_group_file("degree 3\nname X\n"), ParseError);
  try {
    parse_group_file("degree 3\nname X\ngen (1,2)\ngen (1,1)\n");
    FAIL("expected ParseError");
  } catch (ParseError const &e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_group_file("name X\ndegree 3\ngen (1,2)\n"), ParseError);
}
