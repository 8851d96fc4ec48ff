#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouplab/bounds.hpp"
#include "grouplab/catalog.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/supplementation.hpp"

namespace grouplab {

enum class Hypothesis { holds, fails, unknown };
enum class Conclusion { holds, fails, unknown, not_evaluated };
enum class Verdict { consistent, violation, inconclusive };

char const *to_string(Hypothesis h);
char const *to_string(Conclusion c);
char const *to_string(Verdict v);

// VIOLATION iff the hypothesis holds and the conclusion fails.
Verdict verdict_for(Hypothesis h, Conclusion c);

struct TheoremCheck {
  std::string id;
  std::string group;
  Hypothesis hypothesis = Hypothesis::unknown;
  Conclusion conclusion = Conclusion::unknown;
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json evidence = nlohmann::json::object();
  std::optional<std::uint64_t> millis;
  bool error = false;  // an unexpected exception, recorded in evidence
};

// One group under test. The lattice, solvability and section answers are
// computed on first use and shared by every check on the group.
class GroupContext {
 public:
  GroupContext(std::string name, PermGroup g, Bounds bounds = {});

  std::string const &name() const noexcept { return _name; }
  PermGroup const &group() const noexcept { return _group; }
  Bounds const &bounds() const noexcept { return _bounds; }

  // ResourceExceeded when |G| exceeds bounds.lattice_order.
  SubgroupLattice const &lattice();
  std::size_t sylow_member(std::uint64_t p);
  // Member index of a first nc (or c) supplement, nullopt for a definitive no.
  std::optional<std::size_t> supplement(std::size_t member, SupplementKind kind);
  bool solvable();
  bool nonabelian_simple();
  bool a4_free();

 private:
  std::string _name;
  PermGroup _group;
  Bounds _bounds;
  std::unique_ptr<SubgroupLattice> _lattice;
  std::map<std::uint64_t, std::size_t> _sylow;
  std::map<std::pair<std::size_t, int>, std::optional<std::size_t>> _supplements;
  std::optional<bool> _solvable;
  std::optional<bool> _simple;
  std::optional<bool> _a4_free;
};

// Check ids in report order.
std::vector<std::string> const &check_ids();

TheoremCheck check_T1a(GroupContext &ctx, std::uint64_t p);
TheoremCheck check_T1b(GroupContext &ctx);
TheoremCheck check_T2_fwd(GroupContext &ctx);
TheoremCheck check_T2_rev(GroupContext &ctx);
TheoremCheck check_T3(GroupContext &ctx);
TheoremCheck check_T4(GroupContext &ctx, std::vector<std::uint64_t> const &qs = {5, 11, 13});
TheoremCheck check_T5(GroupContext &ctx, std::uint64_t p);
TheoremCheck check_L1(GroupContext &ctx);
TheoremCheck check_L2(GroupContext &ctx);
TheoremCheck check_L3(GroupContext &ctx);
TheoremCheck check_L4(GroupContext &ctx);

// Pinned instances. Each builds its own fixture.
TheoremCheck check_EX_A4(Bounds const &bounds = {});
TheoremCheck check_R2(Bounds const &bounds = {});
TheoremCheck check_R3(Bounds const &bounds = {}, std::uint64_t seed = 0xA4);
TheoremCheck check_R4(Bounds const &bounds = {});
TheoremCheck check_LA_counterexample(Bounds const &bounds = {});

struct SuiteOptions {
  Bounds bounds;
  std::uint64_t seed = 0xA4;
  bool timing = false;
  // Check ids to run; empty runs all.
  std::vector<std::string> ids;
  // L1 and L2 walk every witness of every subgroup; they run up to this order.
  std::uint64_t property_order = 200;
  std::vector<std::uint64_t> t4_q{5, 11, 13};
  std::string suite = "all";
  std::string catalog_id;
};

struct ReportCounts {
  std::size_t checks = 0, consistent = 0, violations = 0, inconclusive = 0;
  std::size_t hypothesis_unknown = 0, conclusion_unknown = 0, errors = 0;
};

struct VerificationReport {
  SuiteOptions options;
  std::vector<std::string> notes;
  std::vector<TheoremCheck> checks;

  ReportCounts counts() const;
  bool clean() const;  // no VIOLATION and no error
};

// Exhaustive-scale entries get every per-group check; the pinned checks run
// for entries named A4, L2(7), remark3 and remark4.
VerificationReport run_suite(std::vector<CatalogEntry> const &catalog, SuiteOptions const &options);

// Digest of entry names and generators.
std::string catalog_id(std::vector<CatalogEntry> const &catalog);

nlohmann::json check_json(TheoremCheck const &c);
nlohmann::json report_json(VerificationReport const &r);
std::string report_text(VerificationReport const &r);

// Subgroups with an nc supplement but no c supplement, in lattice order.
struct Finding {
  std::string group;
  std::size_t member;
  SupplementWitness witness;
};
std::vector<Finding> mine_nc_not_c(GroupContext &ctx);

} // namespace grouplab
