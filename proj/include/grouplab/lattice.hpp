#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouplab/bounds.hpp"
#include "grouplab/group_table.hpp"
#include "grouplab/subgroup.hpp"

namespace grouplab {

struct LatticeMember {
  ElementSet elements;
  std::vector<ElementIndex> gens;
  std::size_t order = 0;
  bool normal = false;
};

// Every subgroup of a group, deduplicated as element sets and sorted by order,
// then by the sorted element-index sequence. Member 0 is the trivial group and
// the last member is the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice(std::shared_ptr<GroupTable const> table, std::vector<LatticeMember> members);

  GroupTable const &table() const noexcept { return *_table; }
  std::shared_ptr<GroupTable const> const &table_ptr() const noexcept { return _table; }
  PermGroup const &group() const noexcept { return _table->group(); }

  std::size_t size() const noexcept { return _members.size(); }
  bool complete() const noexcept { return true; }
  LatticeMember const &operator[](std::size_t i) const { return _members[i]; }
  std::vector<LatticeMember> const &members() const noexcept { return _members; }
  std::size_t whole_index() const noexcept { return _members.size() - 1; }

  Subgroup subgroup(std::size_t i) const;
  std::optional<std::size_t> find(ElementSet const &s) const;
  // Throws PreconditionError when h is not a subgroup of this group.
  std::size_t index_of(Subgroup const &h) const;

  // Maximal proper subgroups of member i, as member indices in lattice order.
  std::vector<std::size_t> const &lower_covers(std::size_t i) const { return _lower[i]; }
  // Members properly containing member i.
  std::vector<std::size_t> const &supergroups(std::size_t i) const { return _above[i]; }
  // Indices of all members of a given order.
  std::vector<std::size_t> const &of_order(std::size_t order) const;

  // Smallest member containing both, which is their join.
  std::size_t join(std::size_t a, std::size_t b) const;

 private:
  std::shared_ptr<GroupTable const> _table;
  std::vector<LatticeMember> _members;
  std::vector<std::vector<std::size_t>> _lower;
  std::vector<std::vector<std::size_t>> _above;
  std::unordered_map<std::size_t, std::vector<std::size_t>> _by_order;
  std::unordered_multimap<std::size_t, std::size_t> _by_hash;
};

// Cyclic subgroups joined with cyclic subgroups to a fixpoint. Throws
// ResourceExceeded when |G| exceeds bounds.lattice_order.
SubgroupLattice enumerate_subgroups(PermGroup const &g, Bounds const &bounds = {});
SubgroupLattice enumerate_subgroups(std::shared_ptr<GroupTable const> table,
                                    Bounds const &bounds = {});

std::vector<Subgroup> maximal_subgroups(SubgroupLattice const &lattice);
std::vector<Subgroup> two_maximal_subgroups(SubgroupLattice const &lattice);
// Member indices, for callers working inside the lattice.
std::vector<std::size_t> maximal_members(SubgroupLattice const &lattice, std::size_t i);
std::vector<std::size_t> two_maximal_members(SubgroupLattice const &lattice, std::size_t i);

// Linear algebra over F_p for an elementary abelian p-group P of order p^k.
struct Hyperplane {
  Subgroup subgroup;    // index p in P
  Subgroup complement;  // order p, complement * subgroup = P
  std::vector<std::uint64_t> functional;  // kernel of this functional, first nonzero entry 1
};

// A basis of P (greedy, in generator then product order). Throws
// PreconditionError unless P is elementary abelian.
std::vector<Permutation> elementary_abelian_basis(Subgroup const &p);
// Nonzero vectors of F_p^k whose first nonzero entry is 1, in lexicographic
// order; one per hyperplane.
std::vector<std::vector<std::uint64_t>> normalized_functionals(std::uint64_t prime, std::size_t k);
// All (p^k - 1)/(p - 1) hyperplanes in lexicographic order of functionals.
std::vector<Hyperplane> hyperplanes(Subgroup const &p);
std::uint64_t hyperplane_count(Subgroup const &p);
// The hyperplane for one functional (coordinates w.r.t. elementary_abelian_basis).
Hyperplane hyperplane(Subgroup const &p, std::vector<Permutation> const &basis,
                      std::vector<std::uint64_t> const &functional);

// Normal subgroups of the table's group as element sets, sorted like the
// lattice. Computed as joins of normal closures of conjugacy classes.
std::vector<ElementSet> normal_subgroup_sets(GroupTable const &table);
std::size_t conjugacy_class_count(GroupTable const &table);

std::vector<Subgroup> normal_subgroups(PermGroup const &g, Bounds const &bounds = {});
// Filter of a complete lattice; used as a cross-check.
std::vector<Subgroup> normal_subgroups(SubgroupLattice const &lattice);

// Largest normal p-subgroup: the core of a Sylow p-subgroup.
Subgroup o_p(PermGroup const &g, std::uint64_t p, Bounds const &bounds = {});
// Largest normal subgroup of order prime to p. Throws std::logic_error if the
// maximum is not unique.
Subgroup o_p_prime(PermGroup const &g, std::uint64_t p, Bounds const &bounds = {});
Subgroup frattini(SubgroupLattice const &lattice);
Subgroup frattini(PermGroup const &g, Bounds const &bounds = {});
Subgroup fitting(PermGroup const &g, Bounds const &bounds = {});
std::vector<Subgroup> minimal_normal_subgroups(PermGroup const &g, Bounds const &bounds = {});

// `order<TAB>generators` per member, then `edge<TAB>i<TAB>j` for each cover
// (member i maximal in member j).
std::string export_lattice(SubgroupLattice const &lattice);

} // namespace grouplab
