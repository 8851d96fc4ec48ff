// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the CLI binary.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <json.hpp>

#include "grouplab/catalog.hpp"
#include "grouplab/constructions.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/subgroup.hpp"
#include "grouplab/verify.hpp"
#include "oracles.hpp"

using namespace grouplab;
using nlohmann::json;

namespace {

std::string cli;

struct Run {
  int status = -1;
  std::string out;
};

Run shell(std::string const &args) {
  Run r;
  std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE *f = popen(cmd.c_str(), "r");
  if (!f)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  r.status = pclose(f);
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool consistent(TheoremCheck const &c) { return c.verdict == Verdict::consistent && !c.error; }

// Example of Definition 1 on A4 through the CLI.
bool criterion1(std::string &detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto nc = shell("check A4 nc-supp --h '(1,2)(3,4)'");
  auto c = shell("check A4 c-supp --h '(1,2)(3,4)'");
  double t = seconds_since(t0);
  if (nc.status != 0 || c.status != 0)
    return false;
  auto jn = json::parse(nc.out)["nc-supp"];
  auto jc = json::parse(c.out)["c-supp"];
  detail = "nc " + jn["answer"].get<std::string>() + ", c " + jc["answer"].get<std::string>() +
           " by " + jc["proof"].get<std::string>() + ", " + std::to_string(t) + " s";
  return jn["answer"] == "yes" && jn["witness"]["valid"] == true && jc["answer"] == "no" &&
         jc["proof"] == "exhaustive(10)" && t < 1.0;
}

bool criterion2(std::string &detail) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteOptions opt;
  opt.ids = {"T2_fwd", "T2_rev"};
  auto report = run_suite(default_catalog(), opt);
  double t = seconds_since(t0);
  auto counts = report.counts();
  bool refuted = true;
  for (std::string name : {"A5", "S5", "L2(7)"}) {
    bool found = false;
    for (auto const &c : report.checks)
      if (c.id == "T2_rev" && c.group == name)
        for (auto const &e : c.evidence["sylow"])
          if (e["answer"] == "no" && std::string(e["proof"]).starts_with("exhaustive("))
            found = true;
    refuted = refuted && found;
  }
  detail = std::to_string(counts.checks) + " checks, " + std::to_string(counts.violations) +
           " violations, " + std::to_string(t) + " s";
  return counts.violations == 0 && counts.errors == 0 && refuted && t < 300;
}

bool criterion3(std::string &detail) {
  bool ok = true;
  GroupContext a5("A5", alternating(5));
  for (std::uint64_t p : {2, 3, 5}) {
    auto c = check_T1a(a5, p);
    ok = ok && consistent(c) && c.hypothesis == Hypothesis::fails;
  }
  GroupContext l27("L2(7)", psl2(7));
  for (std::uint64_t p : {2, 3}) {
    auto c = check_T1a(l27, p);
    ok = ok && consistent(c) && c.hypothesis == Hypothesis::fails &&
         (p != 2 || !c.evidence["nontrivial_maximal"].empty());
  }
  // P1 = 1 for p = 7: clause (a) does not apply.
  auto seven = check_T1a(l27, 7);
  ok = ok && consistent(seven) && seven.hypothesis == Hypothesis::fails &&
       seven.conclusion == Conclusion::not_evaluated;
  auto r2 = check_R2();
  ok = ok && consistent(r2) && r2.evidence["p1_trivial"] == true;
  detail = "L2(7), p = 7: " + std::string(to_string(seven.conclusion));
  return ok;
}

bool criterion4(std::string &detail) {
  std::size_t witnesses = 0, groups = 0;
  bool ok = true;
  for (auto const &e : default_catalog()) {
    if (e.scale != Scale::exhaustive || e.group.order() > 200)
      continue;
    ++groups;
    GroupContext ctx(e.name, e.group);
    auto l1 = check_L1(ctx);
    auto l2 = check_L2(ctx);
    witnesses += l1.evidence["witnesses"].get<std::size_t>();
    ok = ok && l1.evidence["failures"].empty() && l2.evidence["failures"].empty() &&
         l1.verdict != Verdict::violation && l2.verdict != Verdict::violation && !l1.error &&
         !l2.error;
  }
  detail = std::to_string(groups) + " groups, " + std::to_string(witnesses) + " witnesses";
  return ok && witnesses > 0;
}

bool criterion5(std::string &detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto la = check_LA_counterexample();
  auto r4 = check_R4();
  double t = seconds_since(t0);
  detail = std::to_string(t) + " s";
  return consistent(la) && consistent(r4) && la.evidence["p_nilpotent"] == false &&
         la.evidence["a4_free"] == true && t < 30;
}

bool criterion6(std::string &detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto r3 = check_R3();
  double t = seconds_since(t0);
  bool samples = !r3.evidence["samples"].empty();
  for (auto const &s : r3.evidence["samples"]) samples = samples && s["valid"] == true;
  detail = std::to_string(r3.evidence["samples"].size()) + " samples, " + std::to_string(t) + " s";
  return consistent(r3) && samples && r3.evidence["o_3_order"] == 1 && t < 120;
}

bool criterion7(std::string &detail) {
  bool ok = true;
  for (std::uint64_t q : {5, 11}) {
    GroupContext ctx("L2(" + std::to_string(q) + ")", psl2(q));
    auto c = check_L4(ctx);
    ok = ok && consistent(c) && c.hypothesis == Hypothesis::holds && c.evidence["psl2_q"] == q;
  }
  bool l27 = sylow2_klein_check(psl2(7));
  detail = std::string("L2(7) Klein check ") + (l27 ? "true" : "false");
  return ok && !l27;
}

bool criterion8(std::string &detail) {
  std::size_t cores = 0, orders = 0;
  bool ok = true;
  for (auto const &e : default_catalog()) {
    if (e.group.order() <= 10000) {
      ++orders;
      auto elements = oracle::closure(e.group.generators(), e.group.degree());
      ok = ok && Order(elements.size()) == e.group.order();
    }
    if (e.group.order() > 500)
      continue;
    auto lattice = enumerate_subgroups(e.group);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      auto h = lattice.subgroup(i);
      ok = ok && core_by_coset_action(h) == core_by_element_filter(h);
      ++cores;
    }
  }
  for (auto [name, g, expected] : {std::tuple{"A4", alternating(4), 10u},
                                   std::tuple{"S4", symmetric(4), 30u},
                                   std::tuple{"A5", alternating(5), 59u}}) {
    auto elements = oracle::closure(g.generators(), g.degree());
    std::size_t brute = oracle::two_generated_subgroups(elements).size();
    std::size_t fast = enumerate_subgroups(g).size();
    ok = ok && brute == expected && fast == expected;
  }
  detail = std::to_string(cores) + " cores, " + std::to_string(orders) + " orders";
  return ok;
}

bool criterion9(std::string &detail) {
  auto a = shell("suite all");
  auto b = shell("suite all");
  detail = std::to_string(a.out.size()) + " bytes";
  return a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
}

} // namespace

int main(int argc, char **argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <grouplab binary>\n";
    return 3;
  }
  cli = argv[1];
  std::vector<std::pair<std::string, std::function<bool(std::string &)>>> criteria{
      {"A4 example via the CLI", criterion1},
      {"Theorem 2 over the catalog", criterion2},
      {"Theorem 1a on A5 and L2(7), Remark 2", criterion3},
      {"Lemma 1 and Lemma 2 up to order 200", criterion4},
      {"Theorem 5 counterexample and Remark 4", criterion5},
      {"Remark 3 sampling", criterion6},
      {"Lemma 4 identification", criterion7},
      {"oracle agreement", criterion8},
      {"deterministic suite output", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (std::exception const &e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << detail << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
