#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/bounds.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/subgroup.hpp"

namespace grouplab {

// Element order -> number of elements of that order.
using Spectrum = std::map<std::uint64_t, std::uint64_t>;

Spectrum spectrum(PermGroup const &g, Bounds const &bounds = {});
std::string format_spectrum(Spectrum const &s);

// G = G^(0) > G^(1) > ... until the series stabilizes. The first entry is G.
std::vector<Subgroup> derived_series(PermGroup const &g);
bool is_solvable(PermGroup const &g);

bool is_abelian(PermGroup const &g);
// Some element has order |G|. Element enumeration, so within the element cap.
bool is_cyclic(PermGroup const &g, Bounds const &bounds = {});
// Every Sylow subgroup is normal.
bool is_nilpotent(PermGroup const &g, Bounds const &bounds = {});

// |O_p'(G)| = |G| / |G|_p. Needs normal subgroups, so |G| within the element cap.
bool is_p_nilpotent(PermGroup const &g, std::uint64_t p, Bounds const &bounds = {});

// Targeted route for groups too large for normal subgroup enumeration: W is a
// subgroup of order |G|/|G|_p. A normal W is a normal p-complement. When W is
// not normal (its normal closure is larger) the answer "not p-nilpotent"
// relies on conjugacy of p-complements in p-nilpotent groups.
struct PNilpotencyCertificate {
  Subgroup complement;
  Order closure_order;
  bool p_nilpotent = false;
};
PNilpotencyCertificate p_nilpotency_certificate(PermGroup const &g, std::uint64_t p,
                                                Subgroup const &w);

// Normal subgroups are exactly 1 and G, and |G| > 1.
bool is_simple(PermGroup const &g, Bounds const &bounds = {});

struct SimpleId {
  std::string name = "unknown";
  Order order;
  bool spectrum_match = false;
  std::optional<std::uint64_t> psl2_q;  // G = L2(q) for this q
};

// Pinned (order, spectrum) table: C_p for prime order, A5 = L2(5) = L2(4),
// A6 = L2(9), A7, L2(7), L2(11), L2(13). PreconditionError unless G is simple.
SimpleId identify_simple(PermGroup const &g, Bounds const &bounds = {});
// Lookup without the simplicity precondition.
SimpleId identify_by_invariants(Order const &order, Spectrum const &s);

struct CompositionFactor {
  SimpleId id;
  Order order;
};

// Top down: each step passes to the largest proper normal subgroup of the
// current term, the first in lattice order on ties.
std::vector<CompositionFactor> composition_factors(PermGroup const &g, Bounds const &bounds = {});

// |P| = 4 and P has exponent 2 for a Sylow 2-subgroup P.
bool sylow2_klein_check(PermGroup const &g, Bounds const &bounds = {});

struct SectionTarget {
  std::string name;
  Order order;
  Spectrum spectrum;
};

SectionTarget a4_target();
SectionTarget psl2_target(std::uint64_t q);

struct Section {
  Subgroup a;
  Subgroup b;  // normal in a, a/b matches the target
};

// Some section A/B of G with the target's order and spectrum, or nullopt.
// Skips the lattice when the target order does not divide |G|.
std::optional<Section> find_section(PermGroup const &g, SectionTarget const &target,
                                    Bounds const &bounds = {});
std::optional<Section> find_section(SubgroupLattice const &lattice, SectionTarget const &target);
bool is_section_free(PermGroup const &g, SectionTarget const &target, Bounds const &bounds = {});

} // namespace grouplab
