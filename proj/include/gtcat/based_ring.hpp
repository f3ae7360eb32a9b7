#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtcat/group.hpp"

namespace gtcat {

// Z+-based ring with involution: dense structure constants N[x][y][z],
// basis element 0 is the unit.  Invariants are machine-checked on demand.
struct BasedRing {
  int rank = 0;
  std::vector<std::string> labels;
  std::vector<int> N;  // rank^3, N[(x*rank + y)*rank + z]
  std::vector<int> star;

  int n(int x, int y, int z) const { return N[(static_cast<size_t>(x) * rank + y) * rank + z]; }
  int& n_ref(int x, int y, int z) { return N[(static_cast<size_t>(x) * rank + y) * rank + z]; }

  // Throws on the first violated axiom.
  void check_invariants() const {
    if (static_cast<int>(star.size()) != rank) throw std::logic_error("star size mismatch");
    if (star[0] != 0) throw std::logic_error("star must fix the unit");
    for (int x = 0; x < rank; ++x)
      if (star[star[x]] != x) throw std::logic_error("star is not an involution");
    for (int x = 0; x < rank; ++x)
      for (int y = 0; y < rank; ++y) {
        if (n(0, x, y) != (x == y ? 1 : 0) || n(x, 0, y) != (x == y ? 1 : 0))
          throw std::logic_error("basis element 0 is not a unit");
      }
    // Frobenius reciprocity: N[x][y][z] = N[z][y*][x] = N[x*][z][y].
    for (int x = 0; x < rank; ++x)
      for (int y = 0; y < rank; ++y)
        for (int z = 0; z < rank; ++z) {
          if (n(x, y, z) != n(z, star[y], x) || n(x, y, z) != n(star[x], z, y))
            throw std::logic_error("Frobenius reciprocity fails");
        }
    // Associativity of the product support: v occurs in (xy)z iff in x(yz).
    // With multiplicity-free (0/1) constants the integer sums themselves can
    // differ (they count intermediate basis elements, e.g. in double coset
    // rings of A4), so the support identity is the correct exact statement.
    for (int x = 0; x < rank; ++x)
      for (int y = 0; y < rank; ++y)
        for (int z = 0; z < rank; ++z)
          for (int v = 0; v < rank; ++v) {
            long long lhs = 0, rhs = 0;
            for (int w = 0; w < rank; ++w) {
              lhs += static_cast<long long>(n(x, y, w)) * n(w, z, v);
              rhs += static_cast<long long>(n(y, z, w)) * n(x, w, v);
            }
            if ((lhs > 0) != (rhs > 0))
              throw std::logic_error("product support is not associative");
          }
  }
};

// Inner product (X, Y) = sum_Z a_Z b_Z on coordinate vectors.
inline long long inner_product(const std::vector<long long>& x, const std::vector<long long>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner_product: length mismatch");
  long long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Product of basis elements as a coordinate vector.
inline std::vector<long long> basis_product(const BasedRing& R, int x, int y) {
  std::vector<long long> v(R.rank, 0);
  for (int z = 0; z < R.rank; ++z) v[z] = R.n(x, y, z);
  return v;
}

struct DoubleCosetRing {
  BasedRing ring;
  DoubleCosetDecomposition cosets;
};

// R(G,H): basis = double cosets, structure constants 0/1 by inclusion of HzH
// in HxHyH, star = inversion, unit = the trivial double coset.
inline DoubleCosetRing double_coset_ring(const FiniteGroup& G, const Subgroup& H) {
  DoubleCosetRing out{{}, double_cosets(G, H)};
  const auto& dc = out.cosets;
  int r = static_cast<int>(dc.representatives.size());
  BasedRing& R = out.ring;
  R.rank = r;
  R.N.assign(static_cast<size_t>(r) * r * r, 0);
  R.star.resize(r);
  R.labels.resize(r);
  for (int i = 0; i < r; ++i) {
    R.star[i] = dc.membership[G.inv(dc.representatives[i])];
    R.labels[i] = "D" + std::to_string(i) + "[" + G.element_name(dc.representatives[i]) + "]";
  }
  // HxHyH = union over h in H of the double cosets of x h y.
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      std::set<int> support;
      for (int h : H.members())
        support.insert(dc.membership[G.mul(G.mul(dc.representatives[x], h), dc.representatives[y])]);
      for (int z : support) R.n_ref(x, y, z) = 1;
    }
  R.check_invariants();
  return out;
}

// Sorted basis subset containing the unit, closed under star and product support.
using BasisSubset = std::vector<int>;

inline bool subset_closed(const BasedRing& R, const BasisSubset& S) {
  std::vector<char> in(R.rank, 0);
  for (int x : S) in[x] = 1;
  if (!in[0]) return false;
  for (int x : S) {
    if (!in[R.star[x]]) return false;
    for (int y : S)
      for (int z = 0; z < R.rank; ++z)
        if (R.n(x, y, z) > 0 && !in[z]) return false;
  }
  return true;
}

inline BasisSubset close_subset(const BasedRing& R, BasisSubset seed) {
  std::vector<char> in(R.rank, 0);
  in[0] = 1;
  for (int x : seed) in[x] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < R.rank; ++x) {
      if (!in[x]) continue;
      if (!in[R.star[x]]) { in[R.star[x]] = 1; changed = true; }
      for (int y = 0; y < R.rank; ++y) {
        if (!in[y]) continue;
        for (int z = 0; z < R.rank; ++z)
          if (R.n(x, y, z) > 0 && !in[z]) { in[z] = 1; changed = true; }
      }
    }
  }
  BasisSubset out;
  for (int x = 0; x < R.rank; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// Smallest based subring containing every basic Z occurring in X X*, X in S.
inline BasisSubset adjoint_subring(const BasedRing& R, const BasisSubset& S) {
  BasisSubset seed{0};
  for (int x : S)
    for (int z = 0; z < R.rank; ++z)
      if (R.n(x, R.star[x], z) > 0) seed.push_back(z);
  return close_subset(R, seed);
}

inline BasisSubset full_basis(const BasedRing& R) {
  BasisSubset all(R.rank);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

struct AdjointSeries {
  std::vector<BasisSubset> series;  // R^(0) >= R^(1) >= ... until stabilization
  bool nilpotent = false;
  std::optional<int> clazz;  // smallest n with R^(n) = Z*1
};

inline AdjointSeries adjoint_series(const BasedRing& R) {
  AdjointSeries out;
  out.series.push_back(full_basis(R));
  while (true) {
    BasisSubset next = adjoint_subring(R, out.series.back());
    if (next == out.series.back()) break;
    out.series.push_back(next);
  }
  if (out.series.back().size() == 1) {
    out.nilpotent = true;
    for (int i = 0; i < static_cast<int>(out.series.size()); ++i)
      if (out.series[i].size() == 1) { out.clazz = i; break; }
  }
  return out;
}

// Gamma_S = union of the double cosets in S; a subgroup of G containing H.
inline Subgroup gamma_of_subring(const FiniteGroup& G, const DoubleCosetDecomposition& cosets,
                                 const BasisSubset& S) {
  std::vector<char> in(static_cast<size_t>(cosets.representatives.size()), 0);
  for (int c : S) in[c] = 1;
  std::vector<int> members;
  for (int x = 0; x < G.order(); ++x)
    if (in[cosets.membership[x]]) members.push_back(x);
  return Subgroup(G, std::move(members));  // constructor verifies closure
}

// Inverse map: the based subring R(K,H) inside R(G,H), for H <= K <= G.
inline BasisSubset subring_of_subgroup(const DoubleCosetDecomposition& cosets, const Subgroup& K) {
  std::set<int> s;
  for (int x : K.members()) s.insert(cosets.membership[x]);
  return BasisSubset(s.begin(), s.end());
}

// All based subrings, by exhaustive subset search.  Test-only; rank <= 8.
inline std::vector<BasisSubset> enumerate_based_subrings(const BasedRing& R) {
  if (R.rank > 8) throw std::invalid_argument("subring enumeration limited to rank <= 8");
  std::vector<BasisSubset> out;
  for (unsigned mask = 0; mask < (1u << (R.rank - 1)); ++mask) {
    BasisSubset s{0};
    for (int i = 1; i < R.rank; ++i)
      if (mask & (1u << (i - 1))) s.push_back(i);
    if (subset_closed(R, s)) out.push_back(std::move(s));
  }
  return out;
}

struct GroupRingQuotient {
  QuotientGroup quotient;        // G/N with N the normal closure of H
  std::vector<int> basis_image;  // double coset index -> quotient element
};

// Z[G/N] as a homomorphic image of R(G,H); verifies the structure-constant
// support condition N[x][y][z] > 0 => image(x) image(y) = image(z).
inline GroupRingQuotient quotient_to_group_ring(const FiniteGroup& G, const Subgroup& H,
                                                const DoubleCosetRing& R) {
  Subgroup N = normal_closure(G, H);
  GroupRingQuotient out{quotient_group(G, N), {}};
  int r = R.ring.rank;
  out.basis_image.resize(r);
  for (int i = 0; i < r; ++i)
    out.basis_image[i] = out.quotient.projection[R.cosets.representatives[i]];
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z)
        if (R.ring.n(x, y, z) > 0 &&
            out.quotient.group.mul(out.basis_image[x], out.basis_image[y]) != out.basis_image[z])
          throw std::logic_error("double coset ring does not map onto Z[G/N]");
  return out;
}

// Gamma of each adjoint-series term equals the corresponding successive normal
// closure.  The deepest cross-check of this module; must hold always.
inline bool adjoint_series_agrees_with_closures(const FiniteGroup& G, const Subgroup& H) {
  DoubleCosetRing R = double_coset_ring(G, H);
  AdjointSeries as = adjoint_series(R.ring);
  SubnormalSeries sn = successive_normal_closures(G, H);
  size_t len = std::max(as.series.size(), sn.terms.size());
  for (size_t i = 0; i < len; ++i) {
    const BasisSubset& s = as.series[std::min(i, as.series.size() - 1)];
    const Subgroup& t = sn.terms[std::min(i, sn.terms.size() - 1)];
    Subgroup gamma = gamma_of_subring(G, R.cosets, s);
    if (!(gamma.members() == t.members())) return false;
  }
  return true;
}

}  // namespace gtcat
