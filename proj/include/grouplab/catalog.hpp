#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/bounds.hpp"
#include "grouplab/constructions.hpp"

namespace grouplab {

enum class Scale { exhaustive, targeted };

char const *to_string(Scale s);

struct NamedSubgroup {
  std::string name;
  Subgroup subgroup;
};

struct CatalogEntry {
  std::string name;
  PermGroup group;
  std::vector<std::string> tags;
  Scale scale = Scale::exhaustive;
  std::vector<NamedSubgroup> subgroups;

  bool has_tag(std::string_view tag) const;
  // Throws PreconditionError when no subgroup has that name.
  Subgroup const &subgroup(std::string_view name) const;
};

// Scale is exhaustive iff |G| <= bounds.lattice_order.
CatalogEntry make_entry(std::string name, PermGroup group, std::vector<std::string> tags,
                        Bounds const &bounds = {});

// A4 (with B, C, D), L2(7), remark3 (the wreath group (7:3) wr C7 with P, F,
// W and the base group) and remark4 ((C19 x C19):C5 with T and Z5), in that
// order.
std::vector<CatalogEntry> paper_fixtures(Bounds const &bounds = {});
CatalogEntry fixture(std::string_view name, Bounds const &bounds = {});

// The test population for the theorem suites.
std::vector<CatalogEntry> default_catalog(Bounds const &bounds = {});

// The order-5 element of GL(2,19) used for remark4: the companion matrix of
// x^2 - 4x + 1, a factor of x^4 + x^3 + x^2 + x + 1 over F_19.
Matrix remark4_matrix();

// Group spec strings:
//   A<n>  S<n>  C<n>  D<m> (dihedral of order m)  Q8  SL(2,3)  EA(p,k)
//   PSL2(q)  L2(q)  fixture:<name>  wr(<spec>,m)  sd(p,k,[[row],...])
//   prod(<spec>,<spec>)
// Throws ParseError (line 0) for malformed text and PreconditionError for
// invalid parameters.
CatalogEntry construct(std::string_view spec, Bounds const &bounds = {});

CatalogEntry load_group(std::filesystem::path const &path, Bounds const &bounds = {});
void save_group(CatalogEntry const &entry, std::filesystem::path const &path);

// A catalog directory holds one group file per entry plus `manifest.tsv`
// with lines `name<TAB>scale<TAB>tag,tag`. Files are named after the entry
// with characters outside [A-Za-z0-9._-] replaced by '_'. An "exhaustive" entry
// above bounds.lattice_order is loaded as targeted.
std::vector<CatalogEntry> load_catalog(std::filesystem::path const &dir,
                                       Bounds const &bounds = {});
void save_catalog(std::vector<CatalogEntry> const &entries, std::filesystem::path const &dir);

std::string file_stem(std::string_view name);

} // namespace grouplab
