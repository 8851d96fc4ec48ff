#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouplab/bounds.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/subgroup.hpp"
#include "grouplab/tri.hpp"

namespace grouplab {

// c: HK = G. nc: HK is a normal subgroup of G. Both need H n K <= H_G.
enum class SupplementKind { c, nc };
std::string to_string(SupplementKind kind);

struct SupplementWitness {
  Subgroup h;
  Subgroup k;
  SupplementKind kind = SupplementKind::nc;
  Order hk_order;            // |H||K| / |H n K|
  bool hk_subgroup = false;  // HK = <H, K>
  bool hk_normal = false;    // HK is a normal subgroup of G
  Subgroup core_h;
  Order intersection_order;
  bool intersection_in_core = false;

  PermGroup const &group() const { return h.parent(); }
  bool valid() const;
  // H n K = H_G, the normalized form of Lemma 1.
  bool intersection_is_core() const {
    return intersection_in_core && intersection_order == core_h.order();
  }
};

// Pure check of Definition 1 for a given K. PreconditionError when H and K do
// not have the same parent; a wrong witness only clears flags.
SupplementWitness verify_witness(Subgroup const &h, Subgroup const &k, SupplementKind kind,
                                 Bounds const &bounds = {});

struct SupplementResult {
  Tri answer = Tri::unknown;
  std::optional<SupplementWitness> witness;
  // "exhaustive(<lattice size>)" or "heuristic(<candidates tried>)".
  std::string proof;
};

struct SupplementStatus {
  SupplementResult c;
  SupplementResult nc;
};

// Lattice scan in lattice order; the first member passing the set checks is
// re-verified through verify_witness. Returns the member index.
std::optional<std::size_t> first_supplement(SubgroupLattice const &lattice, std::size_t h,
                                            SupplementKind kind);

SupplementResult find_supplement(SubgroupLattice const &lattice, Subgroup const &h,
                                 SupplementKind kind, Bounds const &bounds = {});
// Exhaustive when |G| is within bounds.lattice_order, heuristic otherwise.
// Heuristic candidates: trivial, G, the normal subgroups (when enumerable),
// a Hall subgroup for the primes not dividing |H| (when computable), then
// `extra`.
SupplementResult find_supplement(Subgroup const &h, SupplementKind kind, Bounds const &bounds = {},
                                 std::vector<Subgroup> const &extra = {});

inline SupplementResult find_nc_supplement(Subgroup const &h, Bounds const &bounds = {},
                                           std::vector<Subgroup> const &extra = {}) {
  return find_supplement(h, SupplementKind::nc, bounds, extra);
}
inline SupplementResult find_c_supplement(Subgroup const &h, Bounds const &bounds = {},
                                          std::vector<Subgroup> const &extra = {}) {
  return find_supplement(h, SupplementKind::c, bounds, extra);
}

SupplementStatus supplement_status(SubgroupLattice const &lattice, Subgroup const &h,
                                   Bounds const &bounds = {});

// Lemma 1: C = K H_G with H n C = H_G. PreconditionError unless w is a valid
// nc witness.
SupplementWitness normalize_supplement(SupplementWitness const &w, Bounds const &bounds = {});

// Lemma 2(1), with the hypothesis read as H <= M <= G: K n M supplements H in M.
SupplementWitness restrict_to_intermediate(SupplementWitness const &w, Subgroup const &m,
                                           Bounds const &bounds = {});

// Lemma 2(2): N normal in G, N <= H. The witness lives in G/N.
SupplementWitness push_to_quotient_contained(SupplementWitness const &w, Subgroup const &n,
                                             Bounds const &bounds = {});
// Lemma 2(3): N normal in G, gcd(|N|, |H|) = 1. Witness for HN/N in G/N.
SupplementWitness push_to_quotient_coprime(SupplementWitness const &w, Subgroup const &n,
                                           Bounds const &bounds = {});

// {group, H-gens, K-gens, kind, valid, checks{hk_order, hk_normal, core_order,
// intersection_in_core}}. Orders beyond 2^53 are written as strings.
nlohmann::json witness_json(SupplementWitness const &w, std::string const &group_name);
nlohmann::json order_json(Order const &n);

} // namespace grouplab
