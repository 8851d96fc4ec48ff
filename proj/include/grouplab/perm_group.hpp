#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grouplab/bounds.hpp"
#include "grouplab/order.hpp"
#include "grouplab/perm.hpp"

namespace grouplab {

namespace detail {
struct StabilizerChain;
}

// A permutation group given by generators, with a base and strong generating
// set built eagerly by deterministic Schreier-Sims (each new base point is the
// smallest point moved by the element that forces it). Immutable; copies share
// the chain.
class PermGroup {
 public:
  struct Options {
    // When the order is known in advance, Schreier-Sims stops as soon as the
    // orbit-length product reaches it.
    std::optional<Order> known_order;
  };

  // Trivial group of degree 0.
  PermGroup();

  // The identity-only generator set (or an empty one) gives the trivial group.
  // Throws PreconditionError if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            Options const &options);
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  std::vector<Permutation> const &generators() const noexcept;
  Order const &order() const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }

  std::vector<Point> const &base() const noexcept;
  std::vector<Permutation> const &strong_generators() const noexcept;
  std::vector<std::size_t> orbit_lengths() const;

  // Fundamental orbit of level i (orbit of base()[i] under the stabilizer of
  // the earlier base points), in discovery order.
  std::vector<Point> const &basic_orbit(std::size_t level) const;
  bool in_basic_orbit(std::size_t level, Point p) const;
  // u with base()[level]^u = p.
  Permutation transversal(std::size_t level, Point p) const;

  // Sifts g through the chain. Returns the residue and the level at which
  // sifting stopped (base().size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation const &g) const;

  // Throws PreconditionError on degree mismatch.
  bool contains(Permutation const &g) const;
  bool contains_all(std::span<Permutation const> gs) const;

  // All elements, each exactly once. Throws OrderExceedsCap if |G| > cap.
  std::vector<Permutation> elements(std::uint64_t cap) const;
  void for_each_element(std::uint64_t cap,
                        std::function<void(Permutation const &)> const &fn) const;

  // Point orbits of the whole group, each sorted, ordered by least point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  // Subgroup test by generators.
  bool contains_group(PermGroup const &h) const;
  // Equality as sets: same degree, same order, mutual containment.
  bool same_group(PermGroup const &h) const;

 private:
  std::shared_ptr<detail::StabilizerChain const> _chain;
};

// A homomorphism realized by an action. The image of an arbitrary element is
// computed by the action itself; the kernel and lifts come from a stabilizer
// chain of the diagonal action whose base uses target points only. The kernel
// satisfies |source| = |kernel| * |image| by construction and is verified.
class GroupHom {
 public:
  using Action = std::function<Permutation(Permutation const &)>;

  GroupHom(PermGroup source, std::size_t target_degree, Action action);

  PermGroup const &source() const noexcept { return _source; }
  PermGroup const &image() const noexcept { return _image; }
  PermGroup const &kernel() const noexcept { return _kernel; }
  std::vector<Permutation> const &generator_images() const noexcept { return _gen_images; }

  Permutation operator()(Permutation const &g) const { return _action(g); }

  // Some preimage of an element of the image. Throws PreconditionError when t
  // is not in the image.
  Permutation lift(Permutation const &t) const;

  // Full preimage of the subgroup generated by `gens` (elements of the image).
  PermGroup preimage(std::span<Permutation const> gens) const;
  PermGroup image_of(std::span<Permutation const> gens) const;

 private:
  PermGroup _source;
  PermGroup _image;
  PermGroup _kernel;
  std::vector<Permutation> _gen_images;
  Action _action;
  std::shared_ptr<detail::StabilizerChain const> _diagonal;
};

// Smallest normal subgroup of `g` containing the given elements.
PermGroup normal_closure(PermGroup const &g, std::span<Permutation const> gens);

// Group generated by g's and h's generators.
PermGroup join(PermGroup const &g, PermGroup const &h);

// Action on the right cosets H x of h in g, cosets numbered in breadth-first
// order from H itself (coset 0). Throws IndexExceedsCap when |G:H| exceeds
// bounds.index_cap and PreconditionError unless h <= g.
GroupHom coset_action(PermGroup const &g, PermGroup const &h, Bounds const &bounds = {});

// G/N as the image of the coset action on N (degree |G:N|) together with the
// projection. Throws NotNormal or IndexExceedsCap.
std::pair<PermGroup, GroupHom> quotient(PermGroup const &g, PermGroup const &n,
                                        Bounds const &bounds = {});

// Action on a union of orbits, points relabelled 0..k-1 in the order given.
GroupHom restriction_action(PermGroup const &g, std::span<Point const> points);

// Action on a block system given as a partition of the points.
GroupHom block_action(PermGroup const &g, std::vector<std::vector<Point>> const &blocks);

// Minimal block system of a transitive group in which alpha and beta share a
// block. Blocks are sorted; the block of the least point comes first.
std::vector<std::vector<Point>> minimal_blocks(PermGroup const &g, Point alpha, Point beta);

// Some nontrivial block system of a transitive group, or nullopt if it is
// primitive.
std::optional<std::vector<std::vector<Point>>> nontrivial_blocks(PermGroup const &g);

} // namespace grouplab
