#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace exalg {

// Subsets of {1..m} as bitmasks: label i <-> bit (i-1). Basis monomials are
// always stored against their ascending label list, so a mask alone is a
// canonical representation. m is capped well below the mask width.
using Mask = std::uint32_t;

constexpr int kMaxDim = 20;

inline int popcount(Mask s) { return __builtin_popcount(s); }

inline Mask full_mask(int m) { return (Mask{1} << m) - 1; }

inline Mask bit(int label) { return Mask{1} << (label - 1); }

inline std::vector<int> to_list(Mask s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i + 1);
  return out;
}

inline Mask from_list(const std::vector<int>& labels, int m) {
  Mask s = 0;
  int prev = 0;
  for (int l : labels) {
    if (l <= prev) throw std::invalid_argument("labels must be strictly ascending");
    if (l < 1 || l > m) throw std::invalid_argument("label out of range");
    s |= bit(l);
    prev = l;
  }
  return s;
}

// Number of pairs (s,t), s in S, t in T, s > t: the inversions created by
// concatenating the ascending lists of S and T and sorting.
inline int inversions(Mask s, Mask t) {
  int n = 0;
  for (Mask rest = s; rest;) {
    Mask low = rest & (rest - 1);
    Mask b = rest ^ low;  // lowest set bit of rest
    n += popcount(t & (b - 1));
    rest = low;
  }
  return n;
}

// x_S ∧ x_T for degree-(-1) generators: zero on overlap, otherwise the sorted
// union with the sign of the merge (each inversion swaps two odd factors).
inline bool subset_wedge(Mask s, Mask t, Mask* out, int* sign) {
  if (s & t) return false;
  *out = s | t;
  *sign = (inversions(s, t) % 2 == 0) ? 1 : -1;
  return true;
}

// Total order: cardinality first, then lexicographic on ascending lists.
// Returns -1/0/+1.
inline int compare_subsets(Mask s, Mask t) {
  int ps = popcount(s), pt = popcount(t);
  if (ps != pt) return ps < pt ? -1 : 1;
  if (s == t) return 0;
  // Same cardinality: walk labels from small to large; the set owning the
  // first unshared label is lexicographically smaller.
  Mask diff = s ^ t;
  Mask low = diff & (~diff + 1);
  return (s & low) ? -1 : 1;
}

// All subsets of {1..m} sorted by the order above.
inline std::vector<Mask> masks_in_order(int m) {
  std::vector<Mask> v(std::size_t{1} << m);
  for (Mask s = 0; s < v.size(); ++s) v[s] = s;
  std::sort(v.begin(), v.end(),
            [](Mask a, Mask b) { return compare_subsets(a, b) < 0; });
  return v;
}

// Sign for reordering a tensor word of homogeneous factors: the word
// w_0 ⊗ .. ⊗ w_{k-1} is rearranged to w_{perm[0]} ⊗ .. ⊗ w_{perm[k-1]}, and
// every inverted pair contributes (-1)^{deg_i * deg_j}.
inline int koszul_sign(const std::vector<long>& degrees,
                       const std::vector<int>& perm) {
  if (degrees.size() != perm.size())
    throw std::invalid_argument("degrees/permutation length mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[p])
      throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  long parity = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) parity += degrees[perm[a]] * degrees[perm[b]];
  return (parity % 2 == 0) ? 1 : -1;
}

// Plain permutation sign (all factors odd), same orientation as koszul_sign.
inline int perm_sign(const std::vector<int>& perm) {
  long inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace exalg
