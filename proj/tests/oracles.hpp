#pragma once

// Brute-force reference computations used only by tests. Nothing here touches
// stabilizer chains, coset tables or the lattice code under test.

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "grouplab/perm.hpp"

namespace oracle {

using grouplab::Permutation;

// All elements of <gens> by breadth-first closure.
inline std::vector<Permutation> closure(std::vector<Permutation> const &gens,
                                        std::size_t degree) {
  std::vector<Permutation> out{Permutation(degree)};
  std::unordered_set<Permutation> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto const &g : gens) {
      Permutation y = out[i] * g;
      if (seen.insert(y).second)
        out.push_back(y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Permutation> as_set(std::vector<Permutation> const &v) {
  return {v.begin(), v.end()};
}

// Every subgroup generated by at most two elements, as sorted element lists.
inline std::set<std::vector<Permutation>> two_generated_subgroups(
    std::vector<Permutation> const &elements) {
  std::set<std::vector<Permutation>> out;
  std::size_t n = elements.empty() ? 0 : elements.front().degree();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j)
      out.insert(closure({elements[i], elements[j]}, n));
  return out;
}

// Core as the intersection of all conjugates, by element sets.
inline std::vector<Permutation> core(std::vector<Permutation> const &group,
                                     std::vector<Permutation> const &sub) {
  std::set<Permutation> result(sub.begin(), sub.end());
  for (auto const &g : group) {
    std::set<Permutation> conj;
    for (auto const &h : sub) conj.insert(g.inverse() * h * g);
    std::set<Permutation> keep;
    for (auto const &x : result)
      if (conj.count(x))
        keep.insert(x);
    result = std::move(keep);
  }
  return {result.begin(), result.end()};
}

// PSL(2,q) on the projective line, points 0..q-1 and infinity = q.
inline std::vector<Permutation> psl2_generators(unsigned q) {
  std::vector<grouplab::Point> t(q + 1), s(q + 1);
  for (unsigned x = 0; x < q; ++x) t[x] = (x + 1) % q;
  t[q] = q;
  for (unsigned x = 1; x < q; ++x) {
    unsigned inv = 1;
    while ((inv * x) % q != 1) ++inv;
    s[x] = (q - inv) % q;
  }
  s[0] = q;
  s[q] = 0;
  return {Permutation(t), Permutation(s)};
}

// Definition 1 by brute force over an explicit subgroup list.
struct Supplemented {
  bool c = false;
  bool nc = false;
};

inline Supplemented supplemented(std::vector<Permutation> const &group,
                                 std::set<std::vector<Permutation>> const &subgroups,
                                 std::vector<Permutation> const &h) {
  Supplemented out;
  auto hg = as_set(core(group, h));
  for (auto const &k : subgroups) {
    std::set<Permutation> ks(k.begin(), k.end());
    bool in_core = true;
    for (auto const &x : h)
      if (ks.count(x) && !hg.count(x))
        in_core = false;
    if (!in_core)
      continue;
    std::set<Permutation> hk;
    for (auto const &x : h)
      for (auto const &y : k) hk.insert(x * y);
    std::vector<Permutation> hk_list(hk.begin(), hk.end());
    if (!subgroups.count(hk_list))
      continue;
    bool normal = true;
    for (auto const &g : group)
      for (auto const &x : hk_list)
        if (!hk.count(g.inverse() * x * g)) {
          normal = false;
          break;
        }
    if (normal)
      out.nc = true;
    if (hk.size() == group.size())
      out.c = true;
  }
  return out;
}

} // namespace oracle
