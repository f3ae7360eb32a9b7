#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gtcat/group.hpp"
#include "gtcat/modular.hpp"
#include "gtcat/phase.hpp"

namespace gtcat {

inline constexpr int kDefaultCharacterCap = 2000;

// Character-table data computed in a prime field F_p with p ≡ 1 (mod exp(G))
// and p > 2|G|.  Degrees are exact integers; central characters live mod p.
struct ModularCharacterData {
  i64 p = 0;
  i64 zeta_base = 0;            // fixed primitive root of F_p
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;    // element -> class index
  std::vector<int> inverse_class;
  std::vector<int> degrees;               // one per irreducible, aligned with central_chars
  std::vector<std::vector<i64>> central_chars;  // omega_i values per irreducible

  // Image in F_p of the root of unity with the given phase.
  i64 phase_to_fp(const Phase& q) const {
    if ((p - 1) % q.den() != 0)
      throw std::invalid_argument("phase denominator does not divide p-1");
    return powmod(zeta_base, (p - 1) / q.den() * q.num(), p);
  }
};

// Burnside/Dixon class-sum method: common eigenvectors of the class
// multiplication matrices give central characters; degrees are recovered from
// the second orthogonality relation and lifted uniquely below p.
inline ModularCharacterData modular_character_data(const FiniteGroup& G,
                                                   int cap = kDefaultCharacterCap) {
  if (G.order() > cap) throw std::runtime_error("character computation cap exceeded");
  ModularCharacterData out;
  out.classes = conjugacy_classes(G);
  int r = static_cast<int>(out.classes.size());
  int n = G.order();
  out.class_of.assign(n, -1);
  for (int c = 0; c < r; ++c)
    for (int x : out.classes[c]) out.class_of[x] = c;
  out.inverse_class.assign(r, -1);
  for (int c = 0; c < r; ++c) out.inverse_class[c] = out.class_of[G.inv(out.classes[c][0])];

  i64 L = group_exponent(G);
  out.p = find_splitting_prime(L, 2LL * n + r);
  i64 p = out.p;
  out.zeta_base = primitive_root(p);

  // Class multiplication coefficients a_{ijk}: C_i C_j = sum_k a_{ijk} C_k.
  std::vector<FpMatrix> M(r, FpMatrix(r, r, p));
  for (int i = 0; i < r; ++i)
    for (int x : out.classes[i])
      for (int y = 0; y < n; ++y) {
        int j = out.class_of[y];
        int k = out.class_of[G.mul(x, y)];
        // raw count is a_{ijk} * |C_k|; divide by |C_k| below
        M[i].at(k, j) = (M[i].at(k, j) + 1) % p;
      }
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j)
        M[i].at(k, j) = mulmod(M[i].at(k, j), invmod(static_cast<i64>(out.classes[k].size()), p), p);

  // Split the class algebra into common eigenlines.
  std::vector<std::vector<std::vector<i64>>> spaces;  // each: list of basis vectors
  {
    std::vector<std::vector<i64>> full;
    for (int i = 0; i < r; ++i) {
      std::vector<i64> e(r, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  auto echelonize = [&](std::vector<std::vector<i64>>& basis) -> std::vector<int> {
    std::vector<int> pivots;
    int row = 0;
    int cols = r;
    for (int c = 0; c < cols && row < static_cast<int>(basis.size()); ++c) {
      int pr = -1;
      for (int i = row; i < static_cast<int>(basis.size()); ++i)
        if (basis[i][c] != 0) { pr = i; break; }
      if (pr < 0) continue;
      std::swap(basis[row], basis[pr]);
      i64 inv = invmod(basis[row][c], p);
      for (auto& v : basis[row]) v = mulmod(v, inv, p);
      for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        if (i == row || basis[i][c] == 0) continue;
        i64 f = basis[i][c];
        for (int j = 0; j < cols; ++j)
          basis[i][j] = ((basis[i][j] - f * basis[row][j]) % p + p) % p;
      }
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  };
  for (auto& s : spaces) echelonize(s);

  for (int mi = 1; mi < r; ++mi) {
    bool all_lines = true;
    for (const auto& s : spaces)
      if (s.size() > 1) { all_lines = false; break; }
    if (all_lines) break;
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& W : spaces) {
      int d = static_cast<int>(W.size());
      if (d == 1) { next.push_back(std::move(W)); continue; }
      std::vector<int> pivots = echelonize(W);
      // Action of M[mi] on W in the basis W (coordinates via pivot columns).
      FpMatrix A(d, d, p);
      for (int j = 0; j < d; ++j) {
        std::vector<i64> u = M[mi].apply(W[j]);
        for (int t = 0; t < d; ++t) {
          i64 coeff = u[pivots[t]];
          A.at(t, j) = coeff;
          if (coeff) {
            for (int c = 0; c < r; ++c)
              u[c] = ((u[c] - coeff * W[t][c]) % p + p) % p;
          }
        }
        for (int c = 0; c < r; ++c)
          if (u[c] != 0) throw std::logic_error("class-sum subspace not invariant");
      }
      auto roots = poly_roots_mod_p(charpoly_mod_p(A), p);
      int total = 0;
      for (i64 lambda : roots) {
        FpMatrix B = A;
        for (int t = 0; t < d; ++t) B.at(t, t) = ((B.at(t, t) - lambda) % p + p) % p;
        auto ker = kernel_mod_p(B);
        if (ker.empty()) continue;
        std::vector<std::vector<i64>> sub;
        for (auto& kv : ker) {
          std::vector<i64> ambient(r, 0);
          for (int j = 0; j < d; ++j) {
            if (!kv[j]) continue;
            for (int c = 0; c < r; ++c)
              ambient[c] = (ambient[c] + kv[j] * W[j][c]) % p;
          }
          sub.push_back(std::move(ambient));
        }
        total += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (total != d) throw std::logic_error("class algebra failed to diagonalize");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r)
    throw std::logic_error("wrong number of central characters");

  for (auto& W : spaces) {
    const std::vector<i64>& v = W[0];
    int nz = -1;
    for (int c = 0; c < r; ++c)
      if (v[c] != 0) { nz = c; break; }
    std::vector<i64> omega(r, 0);
    for (int i = 0; i < r; ++i) {
      std::vector<i64> u = M[i].apply(v);
      omega[i] = mulmod(u[nz], invmod(v[nz], p), p);
    }
    // Second orthogonality: d^2 = |G| / sum_i omega_i omega_{i*} / |C_i|.
    i64 s = 0;
    for (int i = 0; i < r; ++i)
      s = (s + mulmod(mulmod(omega[i], omega[out.inverse_class[i]], p),
                      invmod(static_cast<i64>(out.classes[i].size()), p), p)) % p;
    i64 d2 = mulmod(static_cast<i64>(n), invmod(s, p), p);
    int deg = -1;
    for (int d = 1; static_cast<i64>(d) * d <= n; ++d)
      if (static_cast<i64>(d) * d % p == d2) { deg = d; break; }
    if (deg < 0) throw std::logic_error("irreducible degree lift failed");
    out.degrees.push_back(deg);
    out.central_chars.push_back(std::move(omega));
  }
  // Deterministic order: sort irreducibles by (degree, central character values).
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (out.degrees[a] != out.degrees[b]) return out.degrees[a] < out.degrees[b];
    return out.central_chars[a] < out.central_chars[b];
  });
  std::vector<int> degs;
  std::vector<std::vector<i64>> chars;
  for (int i : order) {
    degs.push_back(out.degrees[i]);
    chars.push_back(std::move(out.central_chars[i]));
  }
  out.degrees = std::move(degs);
  out.central_chars = std::move(chars);

  i64 check = 0;
  for (int d : out.degrees) check += static_cast<i64>(d) * d;
  if (check != n) throw std::logic_error("sum of squared degrees mismatch");
  return out;
}

// Multiset of ordinary irreducible representation degrees.
inline std::vector<int> irreducible_degrees(const FiniteGroup& G,
                                            int cap = kDefaultCharacterCap) {
  if (is_abelian(G)) return std::vector<int>(G.order(), 1);
  return modular_character_data(G, cap).degrees;
}

// Linear characters H -> Q/Z of a finite group, computed on the abelianization
// and pulled back.  Each character is a vector of Phases indexed by element.
inline std::vector<std::vector<Phase>> character_group(const FiniteGroup& G) {
  Subgroup derived = derived_subgroup(G);
  if (derived.size() > 1) {
    QuotientGroup q = quotient_group(G, derived);
    auto qchars = character_group(q.group);
    std::vector<std::vector<Phase>> out;
    for (const auto& qc : qchars) {
      std::vector<Phase> c(G.order());
      for (int g = 0; g < G.order(); ++g) c[g] = qc[q.projection[g]];
      out.push_back(std::move(c));
    }
    return out;
  }
  // Abelian: extend characters one generator at a time.
  int n = G.order();
  std::vector<int> sub{0};
  std::vector<char> in_sub(n, 0);
  in_sub[0] = 1;
  std::vector<std::vector<Phase>> chars{std::vector<Phase>(n)};  // trivial on {e}
  while (static_cast<int>(sub.size()) < n) {
    int g = -1;
    for (int x = 0; x < n; ++x)
      if (!in_sub[x]) { g = x; break; }
    int rord = 1;
    int pw = g;
    while (!in_sub[pw]) { pw = G.mul(pw, g); ++rord; }
    // pw = g^rord is in the current subgroup.
    std::vector<int> new_sub;
    std::vector<char> new_in(n, 0);
    for (int s : sub) {
      int x = s;
      for (int j = 0; j < rord; ++j) {
        new_sub.push_back(x);
        new_in[x] = 1;
        x = G.mul(x, g);
      }
    }
    std::vector<std::vector<Phase>> new_chars;
    for (const auto& chi : chars) {
      Phase c = chi[pw];
      // Solve rord * t = c in Q/Z: t = (c.num + i*c.den) / (c.den * rord).
      for (int i = 0; i < rord; ++i) {
        Phase t(c.num() + static_cast<long long>(i) * c.den(), c.den() * rord);
        std::vector<Phase> ext(n);
        for (int s : sub) {
          int x = s;
          Phase val = chi[s];
          for (int j = 0; j < rord; ++j) {
            ext[x] = val;
            x = G.mul(x, g);
            val += t;
          }
        }
        new_chars.push_back(std::move(ext));
      }
    }
    sub = std::move(new_sub);
    in_sub = std::move(new_in);
    chars = std::move(new_chars);
  }
  std::sort(chars.begin(), chars.end());
  return chars;
}

// Characters of a subgroup, indexed by parent element via members().
inline std::vector<std::vector<Phase>> character_group(const Subgroup& H) {
  GroupWithMap hg = subgroup_as_group(H);
  return character_group(hg.group);
}

}  // namespace gtcat
