#include "grouplab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "grouplab/errors.hpp"
#include "grouplab/group_io.hpp"

namespace grouplab {

char const *to_string(Scale s) { return s == Scale::exhaustive ? "exhaustive" : "targeted"; }

bool CatalogEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Subgroup const &CatalogEntry::subgroup(std::string_view wanted) const {
  for (auto const &s : subgroups)
    if (s.name == wanted)
      return s.subgroup;
  throw PreconditionError(name + " has no subgroup named " + std::string(wanted));
}

CatalogEntry make_entry(std::string name, PermGroup group, std::vector<std::string> tags,
                        Bounds const &bounds) {
  Scale scale = group.order() <= bounds.lattice_order ? Scale::exhaustive : Scale::targeted;
  return CatalogEntry{std::move(name), std::move(group), std::move(tags), scale, {}};
}

Matrix remark4_matrix() { return {{0, 18}, {1, 4}}; }

namespace {

CatalogEntry a4_fixture(Bounds const &bounds) {
  PermGroup g(4, parse_generator_list("(1,2,3), (1,2)(3,4)", 4), {.known_order = 12});
  auto e = make_entry("A4", g, {"paper-fixture", "solvable-expected"}, bounds);
  e.subgroups.push_back({"B", Subgroup(g, parse_generator_list("(1,2)(3,4), (1,3)(2,4)", 4))});
  e.subgroups.push_back({"C", Subgroup(g, parse_generator_list("(1,2)(3,4)", 4))});
  e.subgroups.push_back({"D", Subgroup(g, parse_generator_list("(1,3)(2,4)", 4))});
  return e;
}

CatalogEntry l27_fixture(Bounds const &bounds) {
  return make_entry("L2(7)", psl2(7), {"paper-fixture", "simple-expected"}, bounds);
}

CatalogEntry remark3_fixture(Bounds const &bounds) {
  // H = 7:3 on 7 points: x -> x+1 and x -> 2x.
  auto h = semidirect_product_matrix(7, 1, {{2}});
  auto w = wreath_product_cyclic_top(h.group, 7);
  PermGroup const &g = w.group;
  auto e = make_entry("remark3", g, {"paper-fixture", "solvable-expected"}, bounds);
  e.scale = Scale::targeted;

  PermGroup seven(7, {h.translations.generators().front()});
  PermGroup three(7, {h.linear});
  std::vector<Permutation> f_gens, p_gens;
  for (std::size_t b = 0; b < 7; ++b) {
    auto f = on_block(seven, b, 7);
    auto p = on_block(three, b, 7);
    f_gens.insert(f_gens.end(), f.begin(), f.end());
    p_gens.insert(p_gens.end(), p.begin(), p.end());
  }
  PermGroup f(49, f_gens, {.known_order = Order(823543)});
  PermGroup p(49, p_gens, {.known_order = Order(2187)});
  std::vector<Permutation> w_gens = f_gens;
  w_gens.push_back(w.top);
  PermGroup top_over_f(49, w_gens, {.known_order = Order(823543) * 7});

  e.subgroups.push_back({"P", Subgroup(g, p)});
  e.subgroups.push_back({"F", Subgroup(g, f)});
  e.subgroups.push_back({"W", Subgroup(g, top_over_f)});
  e.subgroups.push_back({"base", w.base});
  return e;
}

CatalogEntry remark4_fixture(Bounds const &bounds) {
  auto sd = semidirect_product_matrix(19, 2, remark4_matrix());
  auto e = make_entry("remark4", sd.group, {"paper-fixture", "solvable-expected", "odd-order"},
                      bounds);
  e.subgroups.push_back({"T", sd.translations});
  e.subgroups.push_back({"Z5", Subgroup(sd.group, std::vector<Permutation>{sd.linear})});
  return e;
}

} // namespace

std::vector<CatalogEntry> paper_fixtures(Bounds const &bounds) {
  return {a4_fixture(bounds), l27_fixture(bounds), remark3_fixture(bounds),
          remark4_fixture(bounds)};
}

CatalogEntry fixture(std::string_view name, Bounds const &bounds) {
  if (name == "A4")
    return a4_fixture(bounds);
  if (name == "L2(7)" || name == "L2_7" || name == "PSL2(7)")
    return l27_fixture(bounds);
  if (name == "remark3")
    return remark3_fixture(bounds);
  if (name == "remark4")
    return remark4_fixture(bounds);
  throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

std::vector<CatalogEntry> default_catalog(Bounds const &bounds) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string spec, std::vector<std::string> tags, std::string name = {}) {
    auto e = construct(spec, bounds);
    e.tags = std::move(tags);
    if (!name.empty())
      e.name = std::move(name);
    out.push_back(std::move(e));
  };
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::string> tags{"solvable-expected", "abelian"};
    if (n % 2)
      tags.push_back("odd-order");
    add("C" + std::to_string(n), tags);
  }
  add("S3", {"solvable-expected"});
  add("S4", {"solvable-expected"});
  add("D8", {"solvable-expected"});
  add("D10", {"solvable-expected"});
  add("D12", {"solvable-expected"});
  add("Q8", {"solvable-expected"});
  add("prod(C2,C2)", {"solvable-expected", "abelian"}, "V4");
  add("EA(2,3)", {"solvable-expected", "abelian"}, "C2^3");
  add("prod(C4,C2)", {"solvable-expected", "abelian"}, "C4xC2");
  add("prod(C2,C6)", {"solvable-expected", "abelian"}, "C2xC6");
  add("prod(S3,C2)", {"solvable-expected"}, "S3xC2");
  add("prod(D8,C2)", {"solvable-expected"}, "D8xC2");
  add("prod(S3,S3)", {"solvable-expected"}, "S3xS3");
  add("sd(5,1,[[2]])", {"solvable-expected"}, "F20");
  add("sd(7,1,[[2]])", {"solvable-expected", "odd-order"}, "F21");
  add("sd(7,1,[[3]])", {"solvable-expected"}, "F42");
  add("sd(11,1,[[3]])", {"solvable-expected", "odd-order"}, "F55");
  add("sd(13,1,[[3]])", {"solvable-expected", "odd-order"}, "F39");
  add("EA(3,2)", {"solvable-expected", "abelian", "odd-order"}, "C3^2");
  add("sd(3,2,[[0,2],[1,2]])", {"solvable-expected", "odd-order"}, "He27");
  add("C3:C4", {"solvable-expected"});
  add("SL(2,3)", {"solvable-expected"});
  out.push_back(a4_fixture(bounds));
  add("prod(A4,C2)", {"solvable-expected"}, "A4xC2");
  add("A5", {"simple-expected"});
  add("S5", {});
  add("PSL2(5)", {"simple-expected"});
  out.push_back(l27_fixture(bounds));
  add("prod(L2(7),C2)", {}, "L2(7)xC2");
  add("PSL2(11)", {"simple-expected"});
  add("PSL2(13)", {"simple-expected"});
  out.push_back(remark4_fixture(bounds));
  out.push_back(remark3_fixture(bounds));
  return out;
}

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, Bounds const &bounds) : _text(text), _bounds(bounds) {}

  CatalogEntry parse() {
    auto e = entry();
    skip_space();
    if (_pos != _text.size())
      fail("unexpected trailing text");
    return e;
  }

 private:
  [[noreturn]] void fail(std::string const &what) const {
    throw ParseError("group spec '" + std::string(_text) + "' at offset " +
                         std::to_string(_pos) + ": " + what,
                     0);
  }

  void skip_space() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) ++_pos;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (_text.substr(_pos, token.size()) == token) {
      _pos += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token))
      fail("expected '" + std::string(token) + "'");
  }

  std::uint64_t number() {
    skip_space();
    std::size_t start = _pos;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) ++_pos;
    if (start == _pos)
      fail("expected a number");
    if (_pos - start > 9)
      fail("number too large");
    return std::stoull(std::string(_text.substr(start, _pos - start)));
  }

  std::string consumed(std::size_t start) const {
    std::string s(_text.substr(start, _pos - start));
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    return s;
  }

  CatalogEntry plain(std::size_t start, PermGroup g) {
    return make_entry(consumed(start), std::move(g), {}, _bounds);
  }

  Matrix matrix() {
    Matrix m;
    expect("[");
    if (accept("[")) {
      while (true) {
        std::vector<std::uint64_t> row{number()};
        while (accept(",")) row.push_back(number());
        expect("]");
        m.push_back(std::move(row));
        if (!accept(","))
          break;
        expect("[");
      }
    } else {
      m.push_back({number()});
    }
    expect("]");
    return m;
  }

  CatalogEntry entry() {
    skip_space();
    std::size_t start = _pos;
    if (accept("fixture:")) {
      std::size_t name_start = _pos;
      while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) ||
                                     _text[_pos] == '(' || _text[_pos] == ')' ||
                                     _text[_pos] == '_'))
        ++_pos;
      return fixture(_text.substr(name_start, _pos - name_start), _bounds);
    }
    if (accept("prod(")) {
      auto a = entry();
      expect(",");
      auto b = entry();
      expect(")");
      return plain(start, direct_product(a.group, b.group).group);
    }
    if (accept("wr(")) {
      auto h = entry();
      expect(",");
      auto m = number();
      expect(")");
      return plain(start, wreath_product_cyclic_top(h.group, m).group);
    }
    if (accept("sd(")) {
      auto p = number();
      expect(",");
      auto k = number();
      expect(",");
      auto m = matrix();
      expect(")");
      return plain(start, semidirect_product_matrix(p, k, m).group);
    }
    if (accept("EA(")) {
      auto p = number();
      expect(",");
      auto k = number();
      expect(")");
      return plain(start, elementary_abelian(p, k));
    }
    if (accept("PSL2(") || accept("L2(")) {
      auto q = number();
      expect(")");
      std::string name = "L2(" + std::to_string(q) + ")";
      return make_entry(name, psl2(q), {}, _bounds);
    }
    if (accept("SL(2,3)"))
      return plain(start, sl2_3());
    if (accept("Q8"))
      return plain(start, quaternion());
    if (accept("C3:C4"))
      return plain(start, PermGroup(7, parse_generator_list("(1,2,3), (2,3)(4,5,6,7)", 7),
                                    {.known_order = 12}));
    if (accept("A"))
      return plain(start, alternating(number()));
    if (accept("S"))
      return plain(start, symmetric(number()));
    if (accept("C"))
      return plain(start, cyclic(number()));
    if (accept("D")) {
      auto m = number();
      if (m == 0 || m % 2)
        fail("dihedral order must be even");
      return plain(start, dihedral(m / 2));
    }
    fail("unknown group constructor");
  }

  std::string_view _text;
  std::size_t _pos = 0;
  Bounds _bounds;
};

} // namespace

CatalogEntry construct(std::string_view spec, Bounds const &bounds) {
  return SpecParser(spec, bounds).parse();
}

CatalogEntry load_group(std::filesystem::path const &path, Bounds const &bounds) {
  auto file = read_group_file(path);
  return make_entry(file.name, file.group(), {}, bounds);
}

void save_group(CatalogEntry const &entry, std::filesystem::path const &path) {
  write_group_file(path, entry.name, entry.group);
}

std::string file_stem(std::string_view name) {
  std::string out(name);
  for (auto &c : out)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' && c != '-')
      c = '_';
  return out;
}

std::vector<CatalogEntry> load_catalog(std::filesystem::path const &dir, Bounds const &bounds) {
  std::ifstream in(dir / "manifest.tsv");
  if (!in)
    throw ParseError("cannot open " + (dir / "manifest.tsv").string(), 0);
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#')
      continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError("manifest: expected name<TAB>scale<TAB>tags", lineno);
    auto e = load_group(dir / (file_stem(fields[0]) + ".group"), bounds);
    e.name = fields[0];
    if (fields[1] == "targeted")
      e.scale = Scale::targeted;
    else if (fields[1] != "exhaustive")
      throw ParseError("manifest: unknown scale '" + fields[1] + "'", lineno);
    if (fields.size() == 3) {
      std::stringstream tags(fields[2]);
      std::string tag;
      while (std::getline(tags, tag, ','))
        if (!tag.empty())
          e.tags.push_back(tag);
    }
    out.push_back(std::move(e));
  }
  return out;
}

void save_catalog(std::vector<CatalogEntry> const &entries, std::filesystem::path const &dir) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.tsv");
  if (!manifest)
    throw GroupError("cannot write " + (dir / "manifest.tsv").string());
  for (auto const &e : entries) {
    save_group(e, dir / (file_stem(e.name) + ".group"));
    manifest << e.name << '\t' << to_string(e.scale) << '\t';
    for (std::size_t i = 0; i < e.tags.size(); ++i) manifest << (i ? "," : "") << e.tags[i];
    manifest << '\n';
  }
}

} // namespace grouplab
