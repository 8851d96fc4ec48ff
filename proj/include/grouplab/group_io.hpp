#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/perm.hpp"
#include "grouplab/perm_group.hpp"

namespace grouplab {

// Text group file:
//
//   degree <n>
//   name <string>
//   gen <cycle notation, 1-based>      (one or more)
//
// Blank lines and lines starting with '#' are ignored.
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  PermGroup group() const { return PermGroup(degree, generators); }
};

// Throws ParseError carrying the 1-based line number.
GroupFile parse_group_file(std::string_view text);
GroupFile read_group_file(std::filesystem::path const &path);

std::string format_group_file(std::string const &name, PermGroup const &g);
void write_group_file(std::filesystem::path const &path, std::string const &name,
                      PermGroup const &g);

} // namespace grouplab
