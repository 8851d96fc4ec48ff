// grouplab command line: construct, check, suite, mine, inspect, catalog.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouplab/catalog.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/supplementation.hpp"
#include "grouplab/sylow_hall.hpp"
#include "grouplab/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace grouplab;

namespace {

enum Exit { clean = 0, violation = 1, resource = 2, usage = 3 };

struct Config {
  Bounds bounds;
  std::uint64_t seed = 0xA4;
  std::string format = "json";
  std::string catalog;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(Config const &cfg, json const &j) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (auto const &[key, value] : j.items()) {
    if (value.is_string())
      std::cout << key << ": " << value.get<std::string>() << "\n";
    else
      std::cout << key << ": " << value.dump() << "\n";
  }
}

std::vector<CatalogEntry> load_configured_catalog(Config const &cfg) {
  if (cfg.catalog.empty() || cfg.catalog == "default")
    return default_catalog(cfg.bounds);
  if (cfg.catalog == "empty")
    return {};
  return load_catalog(cfg.catalog, cfg.bounds);
}

// A group argument is a group file, a catalog entry name, or a spec string.
CatalogEntry resolve_group(Config const &cfg, std::string const &arg) {
  if (fs::is_regular_file(arg))
    return load_group(arg, cfg.bounds);
  if (!cfg.catalog.empty() && cfg.catalog != "default" && cfg.catalog != "empty")
    for (auto &e : load_catalog(cfg.catalog, cfg.bounds))
      if (e.name == arg)
        return std::move(e);
  return construct(arg, cfg.bounds);
}

json order_of(PermGroup const &g) { return order_json(g.order()); }

json subgroup_json(Subgroup const &h) {
  return {{"gens", format_generator_list(h.generators())}, {"order", order_json(h.order())}};
}

json status_json(SupplementResult const &r, std::string const &group) {
  json j = {{"answer", to_string(r.answer)}, {"proof", r.proof}};
  j["witness"] = r.witness ? witness_json(*r.witness, group) : json(nullptr);
  return j;
}

std::uint64_t require_prime(std::optional<std::uint64_t> const &p, PermGroup const &g) {
  if (!p)
    throw UsageError("this predicate needs --p");
  if (!is_prime(*p) || g.order() % *p != 0)
    throw UsageError("--p must be a prime dividing |G| = " + g.order().str());
  return *p;
}

struct CheckArgs {
  std::string group;
  std::string predicate;
  std::string h;
  std::optional<std::uint64_t> p;
  std::vector<std::uint64_t> pi;
  std::string target = "A4";
};

json run_check(Config const &cfg, CheckArgs const &a) {
  auto entry = resolve_group(cfg, a.group);
  PermGroup const &g = entry.group;
  json out = {{"group", entry.name}, {"degree", g.degree()}, {"order", order_of(g)},
              {"predicate", a.predicate}};
  auto subgroup_arg = [&] {
    if (a.h.empty())
      throw UsageError("this predicate needs --h");
    return Subgroup(g, parse_generator_list(a.h, g.degree()));
  };

  auto const &p = a.predicate;
  if (p == "solvable") {
    json orders = json::array();
    for (auto const &s : derived_series(g)) orders.push_back(order_json(s.order()));
    out["solvable"] = is_solvable(g);
    out["derived_series"] = orders;
  } else if (p == "simple") {
    bool simple = is_simple(g, cfg.bounds);
    out["simple"] = simple;
    if (simple)
      out["identified"] = identify_simple(g, cfg.bounds).name;
  } else if (p == "p-nilpotent") {
    auto prime = require_prime(a.p, g);
    out["p"] = prime;
    out["p_nilpotent"] = is_p_nilpotent(g, prime, cfg.bounds);
  } else if (p == "core") {
    auto h = subgroup_arg();
    out["H"] = subgroup_json(h);
    out["core"] = subgroup_json(core(h, cfg.bounds));
  } else if (p == "sylow") {
    auto prime = require_prime(a.p, g);
    out["p"] = prime;
    out["sylow"] = subgroup_json(sylow(g, prime, cfg.bounds));
  } else if (p == "hall") {
    if (a.pi.empty())
      throw UsageError("hall needs --pi");
    auto cls = classify_hall(g, a.pi, cfg.bounds);
    json w = json::array();
    for (auto const &h : cls.witnesses) w.push_back(subgroup_json(h));
    out["pi"] = a.pi;
    out["E_pi"] = to_string(cls.e_pi);
    out["C_pi"] = to_string(cls.c_pi);
    out["D_pi"] = to_string(cls.d_pi);
    out["hall_subgroups"] = w;
  } else if (p == "nc-supp" || p == "c-supp") {
    auto h = subgroup_arg();
    auto kind = p == "c-supp" ? SupplementKind::c : SupplementKind::nc;
    out["H"] = subgroup_json(h);
    out[p] = status_json(find_supplement(h, kind, cfg.bounds), entry.name);
  } else if (p == "sections") {
    SectionTarget target;
    if (a.target == "A4") {
      target = a4_target();
    } else if (a.target.starts_with("L2(") && a.target.ends_with(")")) {
      target = psl2_target(std::stoull(a.target.substr(3, a.target.size() - 4)));
    } else {
      throw UsageError("--target must be A4 or L2(q)");
    }
    auto sec = find_section(g, target, cfg.bounds);
    out["target"] = target.name;
    out["free"] = !sec.has_value();
    if (sec)
      out["section"] = {{"A", subgroup_json(sec->a)}, {"B", subgroup_json(sec->b)}};
  } else if (p == "spectrum") {
    json s = json::object();
    for (auto [order, count] : spectrum(g, cfg.bounds)) s[std::to_string(order)] = count;
    out["spectrum"] = s;
  } else {
    throw UsageError("unknown predicate '" + p + "'");
  }
  return out;
}

int run_suite_cmd(Config const &cfg, std::vector<std::string> names, bool timing) {
  auto catalog = load_configured_catalog(cfg);
  SuiteOptions opts;
  opts.bounds = cfg.bounds;
  opts.seed = cfg.seed;
  opts.timing = timing;
  std::string suite;
  for (auto const &n : names) suite += (suite.empty() ? "" : ",") + n;
  opts.suite = suite.empty() ? "all" : suite;
  if (!(names.empty() || (names.size() == 1 && names[0] == "all"))) {
    auto const &ids = check_ids();
    for (auto const &n : names) {
      bool known = std::find(ids.begin(), ids.end(), n) != ids.end();
      if (n == "T2") {
        opts.ids.push_back("T2_fwd");
        opts.ids.push_back("T2_rev");
      } else if (n == "T1") {
        opts.ids.push_back("T1a");
        opts.ids.push_back("T1b");
      } else if (known) {
        opts.ids.push_back(n);
      } else {
        throw UsageError("unknown check id '" + n + "'");
      }
    }
  }
  auto report = run_suite(catalog, opts);
  if (cfg.format == "json")
    std::cout << report_json(report).dump(2) << "\n";
  else
    std::cout << report_text(report);
  return report.clean() ? clean : violation;
}

int run_mine(Config const &cfg) {
  json findings = json::array();
  std::size_t groups = 0, skipped = 0;
  for (auto const &entry : load_configured_catalog(cfg)) {
    if (entry.group.order() > cfg.bounds.lattice_order) {
      ++skipped;
      continue;
    }
    ++groups;
    GroupContext ctx(entry.name, entry.group, cfg.bounds);
    for (auto const &f : mine_nc_not_c(ctx)) {
      json w = witness_json(f.witness, entry.name);
      w["c_proof"] = "exhaustive(" + std::to_string(ctx.lattice().size()) + ")";
      findings.push_back(std::move(w));
    }
  }
  if (cfg.format == "json") {
    std::cout << json{{"groups", groups}, {"skipped", skipped}, {"findings", findings}}.dump(2)
              << "\n";
  } else {
    for (auto const &f : findings)
      std::cout << f["group"].get<std::string>() << "\tH = <" << f["H-gens"].get<std::string>()
                << ">\tK = <" << f["K-gens"].get<std::string>() << ">\n";
    std::cout << findings.size() << " findings over " << groups << " groups (" << skipped
              << " above --max-order)\n";
  }
  return clean;
}

int run_inspect(Config const &cfg, std::string const &arg, bool lattice) {
  auto entry = resolve_group(cfg, arg);
  PermGroup const &g = entry.group;
  if (lattice) {
    std::cout << export_lattice(enumerate_subgroups(g, cfg.bounds));
    return clean;
  }
  json out = {{"group", entry.name},
              {"degree", g.degree()},
              {"order", order_of(g)},
              {"generators", format_generator_list(g.generators())},
              {"solvable", is_solvable(g)}};
  if (g.order() <= cfg.bounds.lattice_order) {
    auto l = enumerate_subgroups(g, cfg.bounds);
    std::size_t normals = 0;
    for (auto const &m : l.members()) normals += m.normal;
    out["subgroups"] = l.size();
    out["normal_subgroups"] = normals;
    json factors = json::array();
    for (auto const &f : composition_factors(g, cfg.bounds)) factors.push_back(f.id.name);
    out["composition_factors"] = factors;
  }
  emit(cfg, out);
  return clean;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"grouplab: permutation groups and nc-supplementation"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  if (char const *env = std::getenv("GROUPLAB_CATALOG"))
    cfg.catalog = env;
  app.add_option("--max-order", cfg.bounds.lattice_order, "largest order for lattice enumeration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--element-cap", cfg.bounds.element_cap, "largest materialized element set")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--index-cap", cfg.bounds.index_cap, "largest coset action degree")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "sample seed for Remark 3")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--catalog", cfg.catalog,
                 "catalog directory, 'default' or 'empty' (env GROUPLAB_CATALOG)");

  std::string spec, output;
  auto *construct_cmd = app.add_subcommand("construct", "build a group and write its file");
  construct_cmd->add_option("spec", spec, "group spec")->required();
  construct_cmd->add_option("-o,--output", output, "group file (default <name>.group)");

  CheckArgs check;
  auto *check_cmd = app.add_subcommand("check", "evaluate one predicate on a group");
  check_cmd->add_option("group", check.group, "group file, catalog name or spec")->required();
  check_cmd->add_option("predicate", check.predicate,
                        "solvable|simple|p-nilpotent|core|sylow|hall|nc-supp|c-supp|sections|spectrum")
      ->required();
  check_cmd->add_option("--h", check.h, "subgroup generators in cycle notation");
  check_cmd->add_option("--p", check.p, "prime");
  check_cmd->add_option("--pi", check.pi, "prime set, comma separated")->delimiter(',');
  check_cmd->add_option("--target", check.target, "A4 or L2(q) for sections")->capture_default_str();

  std::vector<std::string> suite_names;
  bool timing = false;
  auto *suite_cmd = app.add_subcommand("suite", "run theorem checks over a catalog");
  suite_cmd->add_option("names", suite_names, "check ids or 'all'");
  suite_cmd->add_flag("--timing", timing, "record per-check milliseconds");

  auto *mine_cmd = app.add_subcommand("mine", "list nc-supplemented subgroups that are not c-supplemented");

  std::string inspect_arg;
  bool lattice = false;
  auto *inspect_cmd = app.add_subcommand("inspect", "summarize a group");
  inspect_cmd->add_option("group", inspect_arg, "group file, catalog name or spec")->required();
  inspect_cmd->add_flag("--lattice", lattice, "export the subgroup lattice");

  std::string catalog_dir;
  auto *catalog_cmd = app.add_subcommand("catalog", "catalog operations");
  auto *export_cmd = catalog_cmd->add_subcommand("export", "write the default catalog");
  export_cmd->add_option("dir", catalog_dir, "target directory")->required();
  auto *list_cmd = catalog_cmd->add_subcommand("list", "list the configured catalog");
  catalog_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*construct_cmd) {
      auto entry = construct(spec, cfg.bounds);
      fs::path path = output.empty() ? fs::path(file_stem(entry.name) + ".group") : fs::path(output);
      save_group(entry, path);
      emit(cfg, {{"group", entry.name},
                 {"degree", entry.group.degree()},
                 {"order", order_of(entry.group)},
                 {"file", path.string()}});
      return clean;
    }
    if (*check_cmd) {
      emit(cfg, run_check(cfg, check));
      return clean;
    }
    if (*suite_cmd)
      return run_suite_cmd(cfg, suite_names, timing);
    if (*mine_cmd)
      return run_mine(cfg);
    if (*inspect_cmd)
      return run_inspect(cfg, inspect_arg, lattice);
    if (*export_cmd) {
      save_catalog(default_catalog(cfg.bounds), catalog_dir);
      std::cout << catalog_dir << "\n";
      return clean;
    }
    if (*list_cmd) {
      for (auto const &e : load_configured_catalog(cfg))
        std::cout << e.name << "\t" << to_string(e.scale) << "\t" << e.group.order() << "\n";
      return clean;
    }
  } catch (ResourceExceeded const &e) {
    std::cerr << "resource exceeded: " << e.what() << "\n";
    return resource;
  } catch (UsageError const &e) {
    std::cerr << "usage: " << e.what() << "\n";
    return usage;
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (PreconditionError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return violation;
  }
  return usage;
}
