#include "grouplab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace detail {

// Explicit coset representatives are kept while orbit * degree stays below this.
constexpr std::size_t kExplicitTransversalLimit = std::size_t{1} << 23;

struct Level {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> gens_inv;
  std::vector<Point> orbit;
  // Per point: -1 outside the orbit, -2 for the base point, otherwise the index
  // of the generator that first reached it.
  std::vector<std::int32_t> label;
  std::vector<std::uint32_t> position;
  bool explicit_reps = true;
  std::vector<Permutation> reps;
  std::vector<Permutation> reps_inv;
  // Per orbit position: number of generators whose Schreier generator at this
  // point is already known to sift.
  std::vector<std::uint32_t> checked;
};

struct StabilizerChain {
  std::size_t degree = 0;
  Point base_limit = std::numeric_limits<Point>::max();
  std::vector<Permutation> generators;
  std::vector<Permutation> strong;
  std::vector<Level> levels;
  std::vector<Point> base;
  std::vector<Permutation> tails;
  Order order = 1;

  bool in_orbit(std::size_t l, Point p) const { return levels[l].label[p] != -1; }

  Permutation rep(std::size_t l, Point p) const {
    Level const &L = levels[l];
    if (L.explicit_reps)
      return L.reps[L.position[p]];
    std::vector<std::int32_t> path;
    while (L.label[p] != -2) {
      auto s = L.label[p];
      path.push_back(s);
      p = L.gens_inv[static_cast<std::size_t>(s)][p];
    }
    Permutation u(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      u *= L.gens[static_cast<std::size_t>(*it)];
    return u;
  }

  // g * rep(l, p)^-1
  void strip_level(Permutation &g, std::size_t l, Point p) const {
    Level const &L = levels[l];
    if (L.explicit_reps) {
      g *= L.reps_inv[L.position[p]];
      return;
    }
    while (L.label[p] != -2) {
      auto s = static_cast<std::size_t>(L.label[p]);
      g *= L.gens_inv[s];
      p = L.gens_inv[s][p];
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const {
    for (std::size_t l = start; l < levels.size(); ++l) {
      Point beta = g[levels[l].base];
      if (!in_orbit(l, beta))
        return {std::move(g), l};
      strip_level(g, l, beta);
    }
    return {std::move(g), levels.size()};
  }

  void add_point(Level &L, Point p, std::int32_t label, Permutation const *rep) {
    L.label[p] = label;
    L.position[p] = static_cast<std::uint32_t>(L.orbit.size());
    L.orbit.push_back(p);
    L.checked.push_back(0);
    if (L.explicit_reps) {
      if (L.orbit.size() * degree > kExplicitTransversalLimit) {
        L.explicit_reps = false;
        L.reps.clear();
        L.reps.shrink_to_fit();
        L.reps_inv.clear();
        L.reps_inv.shrink_to_fit();
      } else {
        L.reps.push_back(*rep);
        L.reps_inv.push_back(rep->inverse());
      }
    }
  }

  void new_level(Point b) {
    Level L;
    L.base = b;
    L.label.assign(degree, -1);
    L.position.assign(degree, 0);
    Permutation id(degree);
    levels.push_back(std::move(L));
    add_point(levels.back(), b, -2, &id);
    base.push_back(b);
  }

  // Adds a generator to level l and extends its orbit breadth-first. Existing
  // orbit points keep their representatives.
  void add_level_generator(std::size_t l, Permutation const &s) {
    Level &L = levels[l];
    L.gens.push_back(s);
    L.gens_inv.push_back(s.inverse());
    std::size_t gi = L.gens.size() - 1;

    std::size_t old_size = L.orbit.size();
    std::deque<Point> frontier;
    for (std::size_t i = 0; i < old_size; ++i) {
      Point beta = L.orbit[i];
      Point gamma = s[beta];
      if (L.label[gamma] == -1) {
        Permutation r = L.explicit_reps ? L.reps[i] * s : Permutation();
        add_point(L, gamma, static_cast<std::int32_t>(gi), &r);
        frontier.push_back(gamma);
      }
    }
    while (!frontier.empty()) {
      Point beta = frontier.front();
      frontier.pop_front();
      for (std::size_t k = 0; k < L.gens.size(); ++k) {
        Point gamma = L.gens[k][beta];
        if (L.label[gamma] != -1)
          continue;
        Permutation r =
            L.explicit_reps ? L.reps[L.position[beta]] * L.gens[k] : Permutation();
        add_point(L, gamma, static_cast<std::int32_t>(k), &r);
        frontier.push_back(gamma);
      }
    }
  }

  // First moved point below the base limit.
  std::optional<Point> eligible_moved(Permutation const &g) const {
    for (Point i = 0; i < degree && i < base_limit; ++i)
      if (g[i] != i)
        return i;
    return std::nullopt;
  }

  Order orbit_product() const {
    Order o = 1;
    for (auto const &L : levels) o *= L.orbit.size();
    return o;
  }

  void add_tail(Permutation const &t, std::unordered_set<Permutation> &seen) {
    if (seen.insert(t).second)
      tails.push_back(t);
  }

  void build(std::optional<Order> const &known_order) {
    std::unordered_set<Permutation> seen_tails;

    std::unordered_set<Permutation> seen;
    for (auto const &g : generators) {
      if (g.is_identity() || !seen.insert(g).second)
        continue;
      // Levels whose base points g fixes, then the first it moves.
      std::size_t l = 0;
      while (l < levels.size() && g[levels[l].base] == levels[l].base) ++l;
      if (l == levels.size()) {
        auto p = eligible_moved(g);
        if (!p) {
          add_tail(g, seen_tails);
          continue;
        }
        new_level(*p);
      }
      strong.push_back(g);
      for (std::size_t k = 0; k <= l; ++k) add_level_generator(k, g);
    }

    auto done = [&] { return known_order && orbit_product() == *known_order; };

    long i = static_cast<long>(levels.size()) - 1;
    while (i >= 0 && !done()) {
      auto li = static_cast<std::size_t>(i);
      bool extended = false;
      for (std::size_t pos = 0; pos < levels[li].orbit.size() && !extended; ++pos) {
        while (levels[li].checked[pos] < levels[li].gens.size()) {
          Level const &L = levels[li];
          std::size_t k = L.checked[pos];
          Point beta = L.orbit[pos];
          Permutation const &s = L.gens[k];
          Point gamma = s[beta];
          Permutation h = rep(li, beta) * s;
          strip_level(h, li, gamma);
          levels[li].checked[pos] = static_cast<std::uint32_t>(k + 1);
          if (h.is_identity())
            continue;
          auto [r, j] = sift(std::move(h), li + 1);
          if (r.is_identity())
            continue;
          if (j == levels.size()) {
            auto p = eligible_moved(r);
            if (!p) {
              add_tail(r, seen_tails);
              continue;
            }
            new_level(*p);
          }
          strong.push_back(r);
          for (std::size_t l = li + 1; l <= j; ++l) add_level_generator(l, r);
          i = static_cast<long>(j);
          extended = true;
          break;
        }
      }
      if (!extended)
        --i;
    }
    order = orbit_product();
  }
};

} // namespace detail

namespace {

std::shared_ptr<detail::StabilizerChain const>
make_chain(std::size_t degree, std::vector<Permutation> gens, Point base_limit,
           std::optional<Order> const &known_order) {
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw PreconditionError("generator " + g.to_cycles() + " has degree " +
                              std::to_string(g.degree()) + ", expected " +
                              std::to_string(degree));
  auto chain = std::make_shared<detail::StabilizerChain>();
  chain->degree = degree;
  chain->base_limit = base_limit;
  chain->generators = std::move(gens);
  chain->build(known_order);
  return chain;
}

} // namespace

PermGroup::PermGroup() : PermGroup(0, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     Options const &options)
    : _chain(make_chain(degree, std::move(generators), std::numeric_limits<Point>::max(),
                        options.known_order)) {
  if (options.known_order && _chain->order != *options.known_order)
    throw PreconditionError("group order " + _chain->order.str() +
                            " differs from the stated order " + options.known_order->str());
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), Options{}) {}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const noexcept { return _chain->degree; }
std::vector<Permutation> const &PermGroup::generators() const noexcept {
  return _chain->generators;
}
Order const &PermGroup::order() const noexcept { return _chain->order; }
std::vector<Point> const &PermGroup::base() const noexcept { return _chain->base; }
std::vector<Permutation> const &PermGroup::strong_generators() const noexcept {
  return _chain->strong;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (auto const &L : _chain->levels) out.push_back(L.orbit.size());
  return out;
}

std::vector<Point> const &PermGroup::basic_orbit(std::size_t level) const {
  return _chain->levels.at(level).orbit;
}

bool PermGroup::in_basic_orbit(std::size_t level, Point p) const {
  return _chain->in_orbit(level, p);
}

Permutation PermGroup::transversal(std::size_t level, Point p) const {
  if (!_chain->in_orbit(level, p))
    throw PreconditionError("point not in basic orbit");
  return _chain->rep(level, p);
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation const &g) const {
  if (g.degree() != degree())
    throw PreconditionError("degree mismatch in sift");
  return _chain->sift(g, 0);
}

bool PermGroup::contains(Permutation const &g) const {
  if (g.degree() != degree())
    throw PreconditionError("degree mismatch in membership test: " +
                            std::to_string(g.degree()) + " vs " + std::to_string(degree()));
  auto [r, level] = _chain->sift(g, 0);
  return level == _chain->levels.size() && r.is_identity();
}

bool PermGroup::contains_all(std::span<Permutation const> gs) const {
  return std::all_of(gs.begin(), gs.end(), [&](auto const &g) { return contains(g); });
}

void PermGroup::for_each_element(std::uint64_t cap,
                                 std::function<void(Permutation const &)> const &fn) const {
  if (order() > cap)
    throw OrderExceedsCap("group order " + order().str() + " exceeds element cap " +
                          std::to_string(cap));
  auto const &levels = _chain->levels;
  std::vector<std::vector<Permutation>> reps(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l)
    for (Point p : levels[l].orbit) reps[l].push_back(_chain->rep(l, p));

  // g = u_{k-1} * ... * u_0, deepest level first.
  std::function<void(std::size_t, Permutation const &)> walk =
      [&](std::size_t l, Permutation const &prefix) {
        if (l == 0) {
          for (auto const &u : reps[0]) fn(prefix * u);
          return;
        }
        for (auto const &u : reps[l]) walk(l - 1, prefix * u);
      };
  if (levels.empty())
    fn(Permutation(degree()));
  else
    walk(levels.size() - 1, Permutation(degree()));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  for_each_element(cap, [&](Permutation const &g) { out.push_back(g); });
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point p = 0; p < degree(); ++p) {
    if (seen[p])
      continue;
    std::vector<Point> orbit{p};
    seen[p] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto const &g : generators()) {
        Point q = g[orbit[i]];
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree() <= 1 || orbits().size() == 1; }

bool PermGroup::contains_group(PermGroup const &h) const {
  return h.degree() == degree() && contains_all(h.generators());
}

bool PermGroup::same_group(PermGroup const &h) const {
  return h.degree() == degree() && h.order() == order() && contains_group(h);
}

// --- homomorphisms ---------------------------------------------------------

namespace {

Permutation combine(Permutation const &target, Permutation const &source) {
  std::size_t m = target.degree();
  std::vector<Point> images(m + source.degree());
  for (Point i = 0; i < m; ++i) images[i] = target[i];
  for (Point i = 0; i < source.degree(); ++i)
    images[m + i] = static_cast<Point>(m + source[i]);
  return Permutation(std::move(images));
}

Permutation target_part(Permutation const &c, std::size_t m) {
  std::vector<Point> images(c.images().begin(), c.images().begin() + static_cast<long>(m));
  return Permutation(std::move(images));
}

Permutation source_part(Permutation const &c, std::size_t m) {
  std::vector<Point> images(c.degree() - m);
  for (Point i = 0; i < images.size(); ++i)
    images[i] = c[static_cast<Point>(m + i)] - static_cast<Point>(m);
  return Permutation(std::move(images));
}

} // namespace

GroupHom::GroupHom(PermGroup source, std::size_t target_degree, Action action)
    : _source(std::move(source)), _action(std::move(action)) {
  std::vector<Permutation> combined;
  for (auto const &g : _source.generators()) {
    Permutation t = _action(g);
    if (t.degree() != target_degree)
      throw PreconditionError("action produced an image of the wrong degree");
    _gen_images.push_back(t);
    combined.push_back(combine(t, g));
  }
  _diagonal = make_chain(target_degree + _source.degree(), std::move(combined),
                         static_cast<Point>(target_degree), std::nullopt);

  _image = PermGroup(target_degree, _gen_images,
                     PermGroup::Options{.known_order = _diagonal->order});

  std::vector<Permutation> kernel_gens;
  for (auto const &t : _diagonal->tails) kernel_gens.push_back(source_part(t, target_degree));
  _kernel = normal_closure(_source, kernel_gens);

  if (_kernel.order() * _image.order() != _source.order())
    throw std::logic_error("homomorphism kernel/image orders do not multiply to |source|");
}

Permutation GroupHom::lift(Permutation const &t) const {
  std::size_t m = _image.degree();
  if (t.degree() != m)
    throw PreconditionError("degree mismatch in lift");
  auto [r, level] = _diagonal->sift(combine(t, Permutation(_source.degree())), 0);
  if (level != _diagonal->levels.size() || !target_part(r, m).is_identity())
    throw PreconditionError("element " + t.to_cycles() + " is not in the image");
  return source_part(r, m).inverse();
}

PermGroup GroupHom::preimage(std::span<Permutation const> gens) const {
  std::vector<Permutation> out = _kernel.generators();
  for (auto const &t : gens) out.push_back(lift(t));
  return PermGroup(_source.degree(), std::move(out));
}

PermGroup GroupHom::image_of(std::span<Permutation const> gens) const {
  std::vector<Permutation> out;
  for (auto const &g : gens) out.push_back(_action(g));
  return PermGroup(_image.degree(), std::move(out));
}

PermGroup normal_closure(PermGroup const &g, std::span<Permutation const> gens) {
  std::vector<Permutation> current;
  for (auto const &x : gens)
    if (!x.is_identity())
      current.push_back(x);
  PermGroup n(g.degree(), current);
  while (true) {
    std::vector<Permutation> fresh;
    PermGroup probe = n;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (auto const &s : g.generators()) {
        Permutation y = conjugate(current[i], s);
        if (!probe.contains(y)) {
          fresh.push_back(y);
          std::vector<Permutation> extended = probe.generators();
          extended.push_back(y);
          probe = PermGroup(g.degree(), std::move(extended));
        }
      }
    if (fresh.empty())
      return n;
    for (auto &y : fresh) current.push_back(std::move(y));
    n = probe;
  }
}

PermGroup join(PermGroup const &g, PermGroup const &h) {
  if (g.degree() != h.degree())
    throw PreconditionError("degree mismatch in join");
  if (g.contains_group(h))
    return g;
  if (h.contains_group(g))
    return h;
  std::vector<Permutation> gens = g.generators();
  for (auto const &x : h.generators()) gens.push_back(x);
  return PermGroup(g.degree(), std::move(gens));
}

namespace {

// Lexicographically least element of the right coset H x, comparing images of
// H's base points.
Permutation canonical_coset_rep(PermGroup const &h, Permutation x) {
  for (std::size_t l = 0; l < h.base().size(); ++l) {
    auto const &orbit = h.basic_orbit(l);
    Point best = orbit[0];
    for (Point d : orbit)
      if (x[d] < x[best])
        best = d;
    x = h.transversal(l, best) * x;
  }
  return x;
}

struct CosetTable {
  PermGroup subgroup;
  std::vector<Permutation> reps;
  std::unordered_map<Permutation, std::uint32_t> index;

  std::uint32_t find(Permutation const &x) const {
    return index.at(canonical_coset_rep(subgroup, x));
  }
};

} // namespace

GroupHom coset_action(PermGroup const &g, PermGroup const &h, Bounds const &bounds) {
  if (!g.contains_group(h))
    throw PreconditionError("coset action: H is not a subgroup of G");
  Order index = g.order() / h.order();
  if (index > bounds.index_cap)
    throw IndexExceedsCap("index " + index.str() + " exceeds index cap " +
                          std::to_string(bounds.index_cap));

  auto table = std::make_shared<CosetTable>();
  table->subgroup = h;
  Permutation first = canonical_coset_rep(h, Permutation(g.degree()));
  table->index.emplace(first, 0);
  table->reps.push_back(first);
  for (std::size_t i = 0; i < table->reps.size(); ++i)
    for (auto const &s : g.generators()) {
      Permutation c = canonical_coset_rep(h, table->reps[i] * s);
      if (table->index.emplace(c, static_cast<std::uint32_t>(table->reps.size())).second)
        table->reps.push_back(std::move(c));
    }

  std::size_t m = table->reps.size();
  auto action = [table, m](Permutation const &x) {
    std::vector<Point> images(m);
    for (std::size_t i = 0; i < m; ++i) images[i] = table->find(table->reps[i] * x);
    return Permutation(std::move(images));
  };
  return GroupHom(g, m, action);
}

std::pair<PermGroup, GroupHom> quotient(PermGroup const &g, PermGroup const &n,
                                        Bounds const &bounds) {
  if (!g.contains_group(n))
    throw PreconditionError("quotient: N is not a subgroup of G");
  for (auto const &x : n.generators())
    for (auto const &s : g.generators())
      if (!n.contains(conjugate(x, s)))
        throw NotNormal("quotient: N is not normal in G");
  GroupHom hom = coset_action(g, n, bounds);
  PermGroup image = hom.image();
  return {std::move(image), std::move(hom)};
}

GroupHom restriction_action(PermGroup const &g, std::span<Point const> points) {
  auto local = std::make_shared<std::vector<std::int64_t>>(g.degree(), -1);
  auto pts = std::make_shared<std::vector<Point>>(points.begin(), points.end());
  for (std::size_t i = 0; i < pts->size(); ++i) (*local)[(*pts)[i]] = static_cast<std::int64_t>(i);
  for (auto const &s : g.generators())
    for (Point p : *pts)
      if ((*local)[s[p]] < 0)
        throw PreconditionError("restriction_action: point set is not invariant");
  auto action = [local, pts](Permutation const &x) {
    std::vector<Point> images(pts->size());
    for (std::size_t i = 0; i < pts->size(); ++i)
      images[i] = static_cast<Point>((*local)[x[(*pts)[i]]]);
    return Permutation(std::move(images));
  };
  return GroupHom(g, pts->size(), action);
}

GroupHom block_action(PermGroup const &g, std::vector<std::vector<Point>> const &blocks) {
  auto block_of = std::make_shared<std::vector<std::uint32_t>>(g.degree(), 0);
  auto firsts = std::make_shared<std::vector<Point>>();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Point p : blocks[b]) (*block_of)[p] = static_cast<std::uint32_t>(b);
    firsts->push_back(blocks[b].front());
  }
  auto action = [block_of, firsts](Permutation const &x) {
    std::vector<Point> images(firsts->size());
    for (std::size_t b = 0; b < firsts->size(); ++b) images[b] = (*block_of)[x[(*firsts)[b]]];
    return Permutation(std::move(images));
  };
  return GroupHom(g, blocks.size(), action);
}

std::vector<std::vector<Point>> minimal_blocks(PermGroup const &g, Point alpha, Point beta) {
  std::vector<Point> parent(g.degree());
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    queue.emplace_back(a, b);
  };
  unite(alpha, beta);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (auto const &s : g.generators()) unite(s[x], s[y]);
  }
  std::vector<std::vector<Point>> blocks;
  std::unordered_map<Point, std::size_t> slot;
  for (Point p = 0; p < g.degree(); ++p) {
    Point r = find(p);
    auto [it, fresh] = slot.emplace(r, blocks.size());
    if (fresh)
      blocks.emplace_back();
    blocks[it->second].push_back(p);
  }
  return blocks;
}

std::optional<std::vector<std::vector<Point>>> nontrivial_blocks(PermGroup const &g) {
  std::size_t n = g.degree();
  if (n < 4 || is_prime(n))
    return std::nullopt;
  for (Point beta = 1; beta < n; ++beta) {
    auto blocks = minimal_blocks(g, 0, beta);
    if (blocks.size() > 1)
      return blocks;
  }
  return std::nullopt;
}

} // namespace grouplab
