#pragma once

#include <cstdint>
#include <vector>

#include "grouplab/perm_group.hpp"
#include "grouplab/subgroup.hpp"

namespace grouplab {

// Standard generators, 1-based cycle notation:
//   cyclic(n)      (1,...,n) on n points; cyclic(1) is trivial of degree 1
//   dihedral(n)    rotation (1,...,n) and reflection i -> n+1-i, order 2n;
//                  dihedral(1) = C2 on 2 points, dihedral(2) = Klein four on 4
//   symmetric(n)   (1,2) and (1,...,n)
//   alternating(n) (1,2,3) and (1,...,n) for odd n, (2,...,n) for even n
//   elementary_abelian(p, k)  k disjoint p-cycles on p*k points
PermGroup cyclic(std::size_t n);
PermGroup dihedral(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup elementary_abelian(std::uint64_t p, std::size_t k);

// Right regular representation of the quaternion group on 8 points.
PermGroup quaternion();
// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
PermGroup sl2_3();

// PSL(2,q) for an odd prime q on the projective line: points 0..q-1 are the
// field elements, point q is infinity. Generators x -> x+1 and x -> -1/x.
PermGroup psl2(std::uint64_t q);

struct DirectProduct {
  PermGroup group;
  Subgroup left;   // A on points 0..deg A - 1
  Subgroup right;  // B shifted by deg A
};

DirectProduct direct_product(PermGroup const &a, PermGroup const &b);

using Matrix = std::vector<std::vector<std::uint64_t>>;

// Multiplicative order of an invertible matrix over F_p; PreconditionError
// when it is singular.
std::uint64_t matrix_order(Matrix const &m, std::uint64_t p);

struct Semidirect {
  PermGroup group;
  Subgroup translations;  // elementary abelian of order p^k, normal
  Permutation linear;     // v -> M v, fixes the zero vector
  std::uint64_t matrix_order = 1;
};

// F_p^k extended by <M>, acting on the p^k vectors. Vector (v_0..v_{k-1}) is
// point v_0 + v_1 p + ... + v_{k-1} p^{k-1}.
Semidirect semidirect_product_matrix(std::uint64_t p, std::size_t k, Matrix const &m);

struct Wreath {
  PermGroup group;
  Subgroup base;      // m copies of H, one per block
  Permutation top;    // block b -> block b+1 (mod m)
};

// H wr C_m on d*m points; block b holds points b*d .. b*d + d - 1.
Wreath wreath_product_cyclic_top(PermGroup const &h, std::size_t m);

// Generators of H copied onto block b of a wreath or direct power.
std::vector<Permutation> on_block(PermGroup const &h, std::size_t block, std::size_t blocks);

} // namespace grouplab
