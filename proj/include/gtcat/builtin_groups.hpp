#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtcat/group.hpp"

namespace gtcat {

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) names[a] = std::to_string(a);
  return FiniteGroup::from_table(table, "Z" + std::to_string(n), std::move(names));
}

// Dihedral group of order 8: elements r^a s^b with r^4 = s^2 = e, s r s = r^-1.
// Index = 2a + ... laid out as a*2 + b is avoided; use a + 4b so e,r,r2,r3,s,rs,r2s,r3s.
inline FiniteGroup dihedral8() {
  auto idx = [](int a, int b) { return ((a % 4 + 4) % 4) + 4 * (b & 1); };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + a2*(-1)^b1) s^(b1+b2)
          int a = a1 + (b1 ? -a2 : a2);
          table[idx(a1, b1)][idx(a2, b2)] = idx(a, b1 ^ b2);
        }
  std::vector<std::string> names = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  return FiniteGroup::from_table(table, "D8", std::move(names));
}

// Quaternion group: 1,-1,i,-i,j,-j,k,-k.
inline FiniteGroup quaternion8() {
  // Encode q = s*u where u in {1,i,j,k} (index 0..3) and s in {+1,-1}.
  auto idx = [](int u, int s) { return 2 * u + (s < 0 ? 1 : 0); };
  // Multiplication on units with sign: i*j=k, j*k=i, k*i=j, x*x=-1 for x in {i,j,k}.
  const int utab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int stab[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int u1 = 0; u1 < 4; ++u1)
    for (int s1 : {1, -1})
      for (int u2 = 0; u2 < 4; ++u2)
        for (int s2 : {1, -1})
          table[idx(u1, s1)][idx(u2, s2)] = idx(utab[u1][u2], s1 * s2 * stab[u1][u2]);
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(table, "Q8", std::move(names));
}

inline FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("symmetric group supported for 1 <= n <= 7");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(n), c(n);
    for (int i = 0; i < n; ++i) { t[i] = i; c[i] = (i + 1) % n; }
    std::swap(t[0], t[1]);
    gens = {t, c};
  }
  return FiniteGroup::from_permutations(n, gens, "S" + std::to_string(n));
}

inline FiniteGroup alternating_group(int n) {
  if (n < 3 || n > 7) throw std::invalid_argument("alternating group supported for 3 <= n <= 7");
  std::vector<std::vector<int>> gens;
  {
    std::vector<int> c3(n);
    for (int i = 0; i < n; ++i) c3[i] = i;
    c3[0] = 1; c3[1] = 2; c3[2] = 0;  // (1 2 3)
    gens.push_back(c3);
    if (n > 3) {
      std::vector<int> g(n);
      for (int i = 0; i < n; ++i) g[i] = i;
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) g[i] = (i + 1) % n;  // n-cycle (odd n => even perm)
      } else {
        for (int i = 1; i < n; ++i) g[i] = i % (n - 1) + 1;  // (2 3 ... n)
        g[0] = 0;
      }
      gens.push_back(g);
    }
  }
  return FiniteGroup::from_permutations(n, gens, "A" + std::to_string(n));
}

inline FiniteGroup klein_four() {
  std::vector<std::vector<int>> table = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return FiniteGroup::from_table(table, "Z2xZ2", {"e", "a", "b", "ab"});
}

// Parses names like "S3", "A4", "D8", "Q8", "Z6", "Z2xZ2", and direct products
// joined with 'x' ("S3xS3", "Z2xZ4", "D8xD8").
inline std::optional<FiniteGroup> builtin_group(const std::string& name) {
  auto digits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  auto atom = [&](const std::string& s) -> std::optional<FiniteGroup> {
    if (s == "Z2xZ2" || s == "V4" || s == "K4") return klein_four();
    if (s == "D8" || s == "D4") return dihedral8();
    if (s == "Q8") return quaternion8();
    if (s.size() >= 2 && s[0] == 'S' && digits(s.substr(1)))
      return symmetric_group(std::stoi(s.substr(1)));
    if (s.size() >= 2 && s[0] == 'A' && digits(s.substr(1)))
      return alternating_group(std::stoi(s.substr(1)));
    if (s.size() >= 2 && s[0] == 'Z' && digits(s.substr(1)))
      return cyclic_group(std::stoi(s.substr(1)));
    return std::nullopt;
  };
  if (auto whole = atom(name)) return whole;  // "Z2xZ2" handled before splitting
  auto split = name.find('x');
  if (split == std::string::npos) return std::nullopt;
  auto lhs = builtin_group(name.substr(0, split));
  auto rhs = builtin_group(name.substr(split + 1));
  if (!lhs || !rhs) return std::nullopt;
  ProductGroup p = direct_product(*lhs, *rhs);
  return p.group;
}

inline std::vector<std::string> builtin_group_catalog() {
  return {"Z2", "Z3", "Z4", "Z6", "Z8", "Zn (any n)", "Z2xZ2", "S3", "S4",
          "A4", "D8", "Q8", "direct products AxB (e.g. S3xS3, Z2xZ4)"};
}

}  // namespace gtcat
