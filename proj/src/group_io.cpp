#include "grouplab/group_io.hpp"

#include <fstream>
#include <sstream>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

GroupFile parse_group_file(std::string_view text) {
  GroupFile out;
  bool have_degree = false;
  bool have_name = false;
  std::size_t lineno = 0;
  std::size_t content_lines = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (line.empty() || line.front() == '#')
      continue;
    ++content_lines;

    std::size_t space = line.find_first_of(" \t");
    std::string_view key = line.substr(0, space);
    std::string_view value = space == std::string_view::npos ? "" : trim(line.substr(space));

    if (content_lines == 1) {
      if (key != "degree")
        throw ParseError("expected 'degree <n>'", lineno);
      try {
        std::size_t used = 0;
        std::string v(value);
        long long n = std::stoll(v, &used);
        if (used != v.size() || n < 1)
          throw std::invalid_argument("bad degree");
        out.degree = static_cast<std::size_t>(n);
      } catch (std::exception const &) {
        throw ParseError("invalid degree '" + std::string(value) + "'", lineno);
      }
      have_degree = true;
    } else if (content_lines == 2) {
      if (key != "name" || value.empty())
        throw ParseError("expected 'name <string>'", lineno);
      out.name = std::string(value);
      have_name = true;
    } else {
      if (key != "gen")
        throw ParseError("expected 'gen <cycles>', got '" + std::string(key) + "'", lineno);
      try {
        out.generators.push_back(Permutation::from_cycles(value, out.degree));
      } catch (ParseError const &e) {
        throw ParseError(e.what(), lineno);
      }
    }
  }
  if (!have_degree)
    throw ParseError("missing 'degree' line", lineno);
  if (!have_name)
    throw ParseError("missing 'name' line", lineno);
  if (out.generators.empty())
    throw ParseError("no generators", lineno);
  return out;
}

GroupFile read_group_file(std::filesystem::path const &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string(), 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string format_group_file(std::string const &name, PermGroup const &g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\nname " + name + "\n";
  if (g.generators().empty())
    out += "gen ()\n";
  for (auto const &x : g.generators()) out += "gen " + x.to_cycles() + "\n";
  return out;
}

void write_group_file(std::filesystem::path const &path, std::string const &name,
                      PermGroup const &g) {
  std::ofstream out(path);
  if (!out)
    throw GroupError("cannot write " + path.string());
  out << format_group_file(name, g);
}

} // namespace grouplab
