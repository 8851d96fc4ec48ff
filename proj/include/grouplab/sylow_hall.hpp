#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grouplab/bounds.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/subgroup.hpp"
#include "grouplab/tri.hpp"

namespace grouplab {

using PiSet = std::vector<std::uint64_t>;

// Product of the p-parts of n over p in pi.
Order pi_part(Order const &n, PiSet const &pi);

// Primes dividing |G| that are not in pi.
PiSet complement_primes(PermGroup const &g, PiSet const &pi);

// A Sylow p-subgroup. Groups within the element cap use normalizer ascent:
// starting from 1, repeatedly adjoin an element of N_G(P) lying outside P
// whose p-th power lies in P, scanning elements in sorted order. Larger groups
// are reduced through orbit restrictions and block actions (preimage of a
// Sylow subgroup of the image); ResourceExceeded when neither applies.
// PreconditionError when p does not divide |G|.
Subgroup sylow(PermGroup const &g, std::uint64_t p, Bounds const &bounds = {});

// The conjugacy class of sylow(g, p), sorted like lattice members.
std::vector<Subgroup> all_sylow(PermGroup const &g, std::uint64_t p, Bounds const &bounds = {});

// First lattice member of order |G|_pi, or nullopt. With a complete lattice
// nullopt is a proof that G is not in E_pi.
std::optional<Subgroup> hall(SubgroupLattice const &lattice, PiSet const &pi);
// Lattice route when |G| is within the lattice bound. Above it only the cases
// decidable without a lattice (pi covering no prime, one prime, or every
// prime of |G|) are answered; otherwise ResourceExceeded.
std::optional<Subgroup> hall(PermGroup const &g, PiSet const &pi, Bounds const &bounds = {});

struct HallClassification {
  PiSet pi;
  Tri e_pi = Tri::unknown;
  Tri c_pi = Tri::unknown;
  Tri d_pi = Tri::unknown;
  std::vector<Subgroup> witnesses;  // every Hall pi-subgroup found
};

HallClassification classify_hall(SubgroupLattice const &lattice, PiSet const &pi);
HallClassification classify_hall(PermGroup const &g, PiSet const &pi, Bounds const &bounds = {});

// hall(g, primes of |G| other than p).
std::optional<Subgroup> p_complement(PermGroup const &g, std::uint64_t p,
                                     Bounds const &bounds = {});

} // namespace grouplab
