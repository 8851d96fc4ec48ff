#include <doctest.h>

#include "grouplab/catalog.hpp"
#include "grouplab/verify.hpp"
#include "oracles.hpp"

using namespace grouplab;

namespace {

GroupContext context(char const *spec) {
  auto e = construct(spec);
  return GroupContext(e.name, e.group);
}

bool no_nc_among(TheoremCheck const &c, char const *key) {
  for (auto const &e : c.evidence[key])
    if (e["answer"] != "no")
      return false;
  return true;
}

} // namespace

TEST_CASE("verdict table") {
  CHECK(verdict_for(Hypothesis::holds, Conclusion::fails) == Verdict::violation);
  CHECK(verdict_for(Hypothesis::holds, Conclusion::holds) == Verdict::consistent);
  CHECK(verdict_for(Hypothesis::fails, Conclusion::not_evaluated) == Verdict::consistent);
  CHECK(verdict_for(Hypothesis::unknown, Conclusion::unknown) == Verdict::inconclusive);
  CHECK(verdict_for(Hypothesis::holds, Conclusion::unknown) == Verdict::inconclusive);
}

TEST_CASE("Theorem 2") {
  auto s4 = context("S4");
  auto f = check_T2_fwd(s4);
  CHECK(f.hypothesis == Hypothesis::holds);
  CHECK(f.conclusion == Conclusion::holds);
  CHECK(f.evidence["sylow"].size() == 2);
  for (auto const &w : f.evidence["sylow"]) CHECK(w["valid"] == true);

  for (auto spec : {"A5", "S5", "L2(7)"}) {
    INFO(spec);
    auto ctx = context(spec);
    auto fwd = check_T2_fwd(ctx);
    CHECK(fwd.hypothesis == Hypothesis::fails);
    auto rev = check_T2_rev(ctx);
    CHECK(rev.hypothesis == Hypothesis::fails);
    CHECK(rev.conclusion == Conclusion::not_evaluated);
    CHECK(rev.verdict == Verdict::consistent);
    bool refuted = false;
    for (auto const &e : rev.evidence["sylow"])
      if (e["answer"] == "no" && std::string(e["proof"]).starts_with("exhaustive("))
        refuted = true;
    CHECK(refuted);
  }

  auto c1 = context("C1");
  CHECK(check_T2_fwd(c1).verdict == Verdict::consistent);
  CHECK(check_T2_rev(c1).conclusion == Conclusion::holds);
}

TEST_CASE("Theorem 1(a) on simple groups") {
  auto a5 = context("A5");
  for (std::uint64_t p : {2, 3, 5}) {
    auto c = check_T1a(a5, p);
    CHECK(c.verdict == Verdict::consistent);
    CHECK(no_nc_among(c, "nontrivial_maximal"));
  }
  auto l27 = context("L2(7)");
  for (std::uint64_t p : {2, 3}) {
    auto c = check_T1a(l27, p);
    CHECK(c.hypothesis == Hypothesis::fails);
    CHECK(no_nc_among(c, "nontrivial_maximal"));
  }
  auto seven = check_T1a(l27, 7);
  CHECK(seven.hypothesis == Hypothesis::fails);
  CHECK(seven.conclusion == Conclusion::not_evaluated);
  CHECK(seven.evidence["nontrivial_maximal"].empty());

  auto r2 = check_R2();
  CHECK(r2.hypothesis == Hypothesis::holds);
  CHECK(r2.conclusion == Conclusion::holds);
  CHECK(r2.evidence["p1_trivial"] == true);
}

TEST_CASE("Theorem 1(b)") {
  auto ctx = context("prod(S3,C2)");
  auto c = check_T1b(ctx);
  CHECK(c.hypothesis == Hypothesis::holds);
  CHECK(c.conclusion == Conclusion::holds);

  auto l = context("prod(L2(7),C2)");
  auto b = check_T1b(l);
  CHECK(b.verdict == Verdict::consistent);
}

TEST_CASE("Theorems 3 and 4") {
  auto s4 = context("S4");
  // <(1,2),(3,4)> is maximal in D8 with trivial core, and every S3 it could
  // be supplemented by contains one of its transpositions.
  auto t3 = check_T3(s4);
  CHECK(t3.hypothesis == Hypothesis::fails);
  CHECK(t3.verdict == Verdict::consistent);
  CHECK(t3.evidence["maximal"].back()["answer"] == "no");
  for (auto spec : {"D8", "S3", "prod(S3,C2)", "C3:C4"}) {
    auto ctx = context(spec);
    auto c = check_T3(ctx);
    CHECK(c.hypothesis == Hypothesis::holds);
    CHECK(c.conclusion == Conclusion::holds);
  }
  auto t4 = check_T4(s4, {5, 11});
  CHECK(t4.hypothesis == Hypothesis::holds);
  CHECK(t4.verdict == Verdict::consistent);
  CHECK(t4.evidence["sylow_order"] == 8);

  auto a5 = context("A5");
  auto a = check_T3(a5);
  CHECK(a.hypothesis == Hypothesis::fails);
  CHECK(a.conclusion == Conclusion::not_evaluated);
  auto a4 = check_T4(a5);
  CHECK(a4.hypothesis == Hypothesis::fails);
  CHECK(a4.evidence["l2q_free"]["L2(5)"] == "section found");
}

TEST_CASE("Theorem 5 and the Lemma A counterexample") {
  auto r4 = fixture("remark4");
  GroupContext ctx(r4.name, r4.group);
  auto c = check_T5(ctx, 19);
  CHECK(c.hypothesis == Hypothesis::holds);
  CHECK(c.conclusion == Conclusion::holds);
  CHECK(c.evidence["p_nilpotent"] == false);
  CHECK(c.evidence["second_branch"]["complement_order"] == 5);
  CHECK(c.evidence["gcd_order_p_minus_1"] == 1);

  auto c2 = context("C2");
  auto t = check_T5(c2, 2);
  CHECK(t.hypothesis == Hypothesis::holds);
  CHECK(t.evidence["p_nilpotent"] == true);
  auto s3 = context("S3");
  CHECK(check_T5(s3, 3).hypothesis == Hypothesis::fails);

  auto la = check_LA_counterexample();
  CHECK(la.hypothesis == Hypothesis::holds);
  CHECK(la.conclusion == Conclusion::holds);
  CHECK(la.evidence["a4_free"] == true);
  CHECK(la.evidence["p_cube_divides"] == false);
  CHECK(check_R4().verdict == Verdict::consistent);
}

TEST_CASE("Lemmas") {
  auto s4 = context("S4");
  auto l1 = check_L1(s4);
  CHECK(l1.conclusion == Conclusion::holds);
  CHECK(l1.evidence["failures"].empty());
  auto l2 = check_L2(s4);
  CHECK(l2.conclusion == Conclusion::holds);
  CHECK(l2.evidence["restrict"] > 0);
  auto l3 = check_L3(s4);
  CHECK(l3.hypothesis == Hypothesis::holds);
  CHECK(l3.conclusion == Conclusion::holds);

  for (std::uint64_t q : {5u, 11u}) {
    GroupContext ctx("L2(" + std::to_string(q) + ")", psl2(q));
    auto l4 = check_L4(ctx);
    CHECK(l4.hypothesis == Hypothesis::holds);
    CHECK(l4.conclusion == Conclusion::holds);
    CHECK(l4.evidence["psl2_q"] == q);
  }
  auto l27 = context("L2(7)");
  auto l4 = check_L4(l27);
  CHECK(l4.hypothesis == Hypothesis::fails);
  CHECK(l4.evidence["klein_sylow2"] == false);
}

TEST_CASE("Example and Remark 3") {
  auto ex = check_EX_A4();
  CHECK(ex.verdict == Verdict::consistent);
  CHECK(ex.hypothesis == Hypothesis::holds);
  CHECK(ex.conclusion == Conclusion::holds);
  CHECK(ex.evidence["c"]["proof"] == "exhaustive(10)");

  auto r3 = check_R3();
  CHECK(r3.hypothesis == Hypothesis::holds);
  CHECK(r3.conclusion == Conclusion::holds);
  CHECK(r3.evidence["samples"].size() >= 6);
  CHECK(r3.evidence["o_3_order"] == 1);
  CHECK(r3.evidence["certificate"]["p_nilpotent"] == false);
  for (auto const &s : r3.evidence["samples"]) CHECK(s["valid"] == true);
  // A different seed picks different samples with the same outcome.
  auto other = check_R3({}, 7);
  CHECK(other.verdict == Verdict::consistent);
  CHECK(other.evidence["samples"] != r3.evidence["samples"]);
}

TEST_CASE("run_suite") {
  SuiteOptions opts;
  auto empty = run_suite({}, opts);
  CHECK(empty.checks.empty());
  CHECK(empty.clean());

  std::vector<CatalogEntry> cat{construct("S4"), fixture("A4"), construct("A5")};
  auto a = report_json(run_suite(cat, opts)).dump();
  auto b = report_json(run_suite(cat, opts)).dump();
  CHECK(a == b);

  opts.ids = {"T2_fwd", "EX_A4"};
  auto some = run_suite(cat, opts);
  CHECK(some.checks.size() == 4);
  CHECK(some.counts().violations == 0);

  SuiteOptions tight;
  tight.bounds.lattice_order = 10;
  tight.ids = {"T2_rev"};
  auto r = run_suite({construct("S4")}, tight);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].verdict == Verdict::inconclusive);
  CHECK(r.counts().hypothesis_unknown == 1);
  CHECK(r.clean());

  auto j = report_json(r);
  for (auto key : {"suite", "catalog_id", "bounds", "checks"}) CHECK(j.contains(key));
  CHECK(j["checks"][0]["millis"].is_null());
  CHECK(report_text(r).find("T2_rev") != std::string::npos);
}

TEST_CASE("mining nc-not-c pairs matches brute force on A4") {
  auto a4 = fixture("A4");
  GroupContext ctx(a4.name, a4.group);
  auto found = mine_nc_not_c(ctx);
  CHECK(found.size() == 3);

  auto elements = oracle::closure(a4.group.generators(), 4);
  auto subs = oracle::two_generated_subgroups(elements);
  std::set<std::vector<Permutation>> expected;
  for (auto const &h : subs) {
    auto s = oracle::supplemented(elements, subs, h);
    if (s.nc && !s.c)
      expected.insert(h);
  }
  std::set<std::vector<Permutation>> got;
  for (auto const &f : found) {
    CHECK(f.witness.valid());
    got.insert(oracle::closure(f.witness.h.generators(), 4));
  }
  CHECK(got == expected);
}
