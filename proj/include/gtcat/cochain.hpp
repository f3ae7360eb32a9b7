#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtcat/builtin_groups.hpp"
#include "gtcat/characters.hpp"
#include "gtcat/group.hpp"
#include "gtcat/modular.hpp"
#include "gtcat/phase.hpp"

namespace gtcat {

inline constexpr int kDefaultCochainDomainCap = 100;

// Normalized n-cochain (n <= 3) on a subset-closed domain of a FiniteGroup,
// with values in Q/Z (phases written additively).  Arguments are parent
// element indices; they must lie in the domain.
class Cochain {
 public:
  Cochain(const FiniteGroup& parent, std::vector<int> domain, int degree)
      : parent_(&parent), degree_(degree), domain_(std::move(domain)) {
    if (degree_ < 1 || degree_ > 3) throw std::invalid_argument("cochain degree must be 1..3");
    std::sort(domain_.begin(), domain_.end());
    if (domain_.empty() || domain_[0] != 0)
      throw std::invalid_argument("cochain domain must contain the identity");
    pos_.assign(parent.order(), -1);
    for (int i = 0; i < static_cast<int>(domain_.size()); ++i) pos_[domain_[i]] = i;
    size_t sz = 1;
    for (int i = 0; i < degree_; ++i) sz *= domain_.size();
    values_.assign(sz, Phase());
  }

  static Cochain zero(const FiniteGroup& parent, const std::vector<int>& domain, int degree) {
    return Cochain(parent, domain, degree);
  }
  static Cochain zero(const Subgroup& H, int degree) {
    return Cochain(H.parent(), H.members(), degree);
  }
  static Cochain zero_on_group(const FiniteGroup& G, int degree) {
    std::vector<int> all(G.order());
    std::iota(all.begin(), all.end(), 0);
    return Cochain(G, all, degree);
  }

  const FiniteGroup& parent() const { return *parent_; }
  int degree() const { return degree_; }
  const std::vector<int>& domain() const { return domain_; }
  int domain_size() const { return static_cast<int>(domain_.size()); }
  bool domain_contains(int g) const { return pos_[g] >= 0; }

  Phase operator()(int a) const { return values_[idx1(a)]; }
  Phase operator()(int a, int b) const { return values_[idx2(a, b)]; }
  Phase operator()(int a, int b, int c) const { return values_[idx3(a, b, c)]; }

  void set(int a, const Phase& v) { check_norm(v, a == 0); values_[idx1(a)] = v; }
  void set(int a, int b, const Phase& v) { check_norm(v, a == 0 || b == 0); values_[idx2(a, b)] = v; }
  void set(int a, int b, int c, const Phase& v) {
    check_norm(v, a == 0 || b == 0 || c == 0);
    values_[idx3(a, b, c)] = v;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

  bool same_domain(const Cochain& o) const {
    return parent_ == o.parent_ && domain_ == o.domain_ && degree_ == o.degree_;
  }

  bool operator==(const Cochain& o) const {
    return same_domain(o) && values_ == o.values_;
  }

  Cochain operator+(const Cochain& o) const {
    require_same(o);
    Cochain r = *this;
    for (size_t i = 0; i < values_.size(); ++i) r.values_[i] += o.values_[i];
    return r;
  }
  Cochain operator-(const Cochain& o) const {
    require_same(o);
    Cochain r = *this;
    for (size_t i = 0; i < values_.size(); ++i) r.values_[i] -= o.values_[i];
    return r;
  }
  Cochain operator-() const {
    Cochain r = *this;
    for (auto& v : r.values_) v = -v;
    return r;
  }

  // lcm of the value denominators (1 for the zero cochain).
  long long denominator_lcm() const {
    long long m = 1;
    for (const auto& v : values_) m = std::lcm(m, v.den());
    return m;
  }

  // Visit every argument tuple (parent element indices).
  template <typename F>
  void for_each_tuple(F&& f) const {
    int n = domain_size();
    if (degree_ == 1) {
      for (int a : domain_) f(std::vector<int>{a});
    } else if (degree_ == 2) {
      for (int a : domain_)
        for (int b : domain_) f(std::vector<int>{a, b});
    } else {
      for (int a : domain_)
        for (int b : domain_)
          for (int c : domain_) f(std::vector<int>{a, b, c});
    }
    (void)n;
  }

 private:
  void require_same(const Cochain& o) const {
    if (!same_domain(o)) throw std::invalid_argument("cochain domain mismatch");
  }
  void check_norm(const Phase& v, bool has_identity_arg) const {
    if (has_identity_arg && !v.is_zero())
      throw std::invalid_argument("normalized cochain must vanish on identity arguments");
  }
  int dpos(int a) const {
    int i = pos_[a];
    if (i < 0) throw std::out_of_range("cochain argument outside domain");
    return i;
  }
  size_t idx1(int a) const { return static_cast<size_t>(dpos(a)); }
  size_t idx2(int a, int b) const {
    return static_cast<size_t>(dpos(a)) * domain_.size() + dpos(b);
  }
  size_t idx3(int a, int b, int c) const {
    return (static_cast<size_t>(dpos(a)) * domain_.size() + dpos(b)) * domain_.size() + dpos(c);
  }

  const FiniteGroup* parent_;
  int degree_;
  std::vector<int> domain_;
  std::vector<int> pos_;
  std::vector<Phase> values_;
};

// Coboundary with the convention (phases additively)
//   d eta (h1,h2)    = eta(h1) - eta(h1 h2) + eta(h2)
//   d psi (h1,h2,h3) = psi(h2,h3) - psi(h1 h2,h3) + psi(h1,h2 h3) - psi(h1,h2)
inline Cochain coboundary(const Cochain& f) {
  const FiniteGroup& G = f.parent();
  if (f.degree() == 1) {
    Cochain d(G, f.domain(), 2);
    for (int a : f.domain())
      for (int b : f.domain())
        d.set(a, b, f(a) - f(G.mul(a, b)) + f(b));
    return d;
  }
  if (f.degree() == 2) {
    Cochain d(G, f.domain(), 3);
    for (int a : f.domain())
      for (int b : f.domain())
        for (int c : f.domain())
          d.set(a, b, c, f(b, c) - f(G.mul(a, b), c) + f(a, G.mul(b, c)) - f(a, b));
    return d;
  }
  throw std::invalid_argument("coboundary of a degree-3 cochain is not supported");
}

inline bool is_cocycle(const Cochain& f) {
  const FiniteGroup& G = f.parent();
  if (f.degree() <= 2) return coboundary(f).is_zero();
  // degree 3: d omega (a,b,c,d) = w(b,c,d) - w(ab,c,d) + w(a,bc,d) - w(a,b,cd) + w(a,b,c)
  for (int a : f.domain())
    for (int b : f.domain())
      for (int c : f.domain())
        for (int d : f.domain()) {
          Phase v = f(b, c, d) - f(G.mul(a, b), c, d) + f(a, G.mul(b, c), d) -
                    f(a, b, G.mul(c, d)) + f(a, b, c);
          if (!v.is_zero()) return false;
        }
  return true;
}

inline Cochain restrict_cochain(const Cochain& f, const Subgroup& K) {
  for (int k : K.members())
    if (!f.domain_contains(k))
      throw std::invalid_argument("restriction target not contained in cochain domain");
  Cochain r(f.parent(), K.members(), f.degree());
  if (f.degree() == 1) {
    for (int a : K.members()) r.set(a, f(a));
  } else if (f.degree() == 2) {
    for (int a : K.members())
      for (int b : K.members()) r.set(a, b, f(a, b));
  } else {
    for (int a : K.members())
      for (int b : K.members())
        for (int c : K.members()) r.set(a, b, c, f(a, b, c));
  }
  return r;
}

// (^g f)(h1,...,hn) = f(g^-1 h1 g, ..., g^-1 hn g); g must normalize the domain.
inline Cochain conjugate_cochain(const Cochain& f, int g) {
  const FiniteGroup& G = f.parent();
  auto cj = [&](int h) {
    int x = G.mul(G.mul(G.inv(g), h), g);
    if (!f.domain_contains(x))
      throw std::invalid_argument("conjugating element does not normalize the cochain domain");
    return x;
  };
  Cochain r(G, f.domain(), f.degree());
  if (f.degree() == 1) {
    for (int a : f.domain()) r.set(a, f(cj(a)));
  } else if (f.degree() == 2) {
    for (int a : f.domain())
      for (int b : f.domain()) r.set(a, b, f(cj(a), cj(b)));
  } else {
    for (int a : f.domain())
      for (int b : f.domain())
        for (int c : f.domain()) r.set(a, b, c, f(cj(a), cj(b), cj(c)));
  }
  return r;
}

struct TrivializationResult {
  bool trivial = false;
  std::optional<Cochain> witness;  // 1-cochain eta with d eta = psi, when trivial
};

// Decides whether a normalized 2-cocycle is a coboundary, producing a witness.
// Denominators are cleared to the modulus M = lcm(psi denominators) * |H|; a
// coboundary witness, when one exists, can always be chosen with order
// dividing M, so the mod-M linear system is exact and complete.
inline TrivializationResult trivialize(const Cochain& psi) {
  if (psi.degree() != 2) throw std::invalid_argument("trivialize expects a 2-cochain");
  if (!is_cocycle(psi)) throw std::invalid_argument("trivialize: input is not a cocycle");
  const FiniteGroup& G = psi.parent();
  const auto& dom = psi.domain();
  int h = static_cast<int>(dom.size());
  long long M = psi.denominator_lcm() * h;
  // Unknowns: eta(x) * M for x in dom, x != identity (eta(e) = 0 by normalization).
  std::vector<int> var_of(G.order(), -1);
  int nv = 0;
  for (int x : dom)
    if (x != 0) var_of[x] = nv++;
  std::vector<std::vector<i64>> A;
  std::vector<i64> b;
  for (int a : dom)
    for (int c : dom) {
      std::vector<i64> row(nv, 0);
      auto add = [&](int x, i64 coeff) {
        if (x != 0) row[var_of[x]] += coeff;
      };
      add(a, 1);
      add(G.mul(a, c), -1);
      add(c, 1);
      Phase rhs = psi(a, c);
      A.push_back(std::move(row));
      b.push_back(rhs.num() * (M / rhs.den()) % M);
    }
  auto sol = solve_linear_mod(A, b, M);
  TrivializationResult out;
  if (!sol) return out;
  Cochain eta(G, dom, 1);
  for (int x : dom)
    if (x != 0) eta.set(x, Phase((*sol)[var_of[x]], M));
  if (!(coboundary(eta) == psi)) throw std::logic_error("trivialize: witness verification failed");
  out.trivial = true;
  out.witness = std::move(eta);
  return out;
}

// The 2-cocycle psi^g on H^g = H ∩ gHg^-1 (phases additively):
//   psi^g(h1,h2) = psi(h1,h2) + psi(g^-1 h2^-1 g, g^-1 h1^-1 g)
//                + w(h1,h2,g) + w(h1, h2 g, g^-1 h2^-1 g)
//                - w(h1 h2 g, g^-1 h2^-1 g, g^-1 h1^-1 g).
// Requires d psi = omega restricted to H.
inline Cochain psi_g(const Cochain& omega, const Cochain& psi, const Subgroup& H, int g) {
  const FiniteGroup& G = omega.parent();
  if (omega.degree() != 3 || psi.degree() != 2)
    throw std::invalid_argument("psi_g expects a 3-cocycle and a 2-cochain");
  Subgroup Hg = intersect(H, conjugate_subgroup(H, g));
  Cochain out(G, Hg.members(), 2);
  int gi = G.inv(g);
  auto cj = [&](int x) { return G.mul(G.mul(gi, x), g); };  // g^-1 x g
  for (int h1 : Hg.members())
    for (int h2 : Hg.members()) {
      Phase v = psi(h1, h2) + psi(cj(G.inv(h2)), cj(G.inv(h1))) + omega(h1, h2, g) +
                omega(h1, G.mul(h2, g), cj(G.inv(h2))) -
                omega(G.mul(G.mul(h1, h2), g), cj(G.inv(h2)), cj(G.inv(h1)));
      out.set(h1, h2, v);
    }
  return out;
}

// Validates d psi = omega|_H; throws naming the first failing tuple.
inline void require_psi_condition(const Cochain& omega, const Cochain& psi, const Subgroup& H) {
  Cochain lhs = coboundary(psi);
  Cochain rhs = restrict_cochain(omega, H);
  for (int a : H.members())
    for (int b : H.members())
      for (int c : H.members())
        if (lhs(a, b, c) != rhs(a, b, c)) {
          const FiniteGroup& G = omega.parent();
          throw std::invalid_argument(
              "d psi != omega|_H at (" + G.element_name(a) + ", " + G.element_name(b) + ", " +
              G.element_name(c) + "): " + lhs(a, b, c).str() + " vs " + rhs(a, b, c).str());
        }
}

// The corrective element k in H with g3 = g1 g2 k, where g3 is the stored
// double-coset representative of g1 g2.
inline int coset_correction(const FiniteGroup& G, const Subgroup& H,
                            const DoubleCosetDecomposition& cosets, int g1, int g2) {
  int prod = G.mul(g1, g2);
  int g3 = cosets.representatives[cosets.membership[prod]];
  int k = G.mul(G.inv(prod), g3);
  if (!H.contains(k))
    throw std::logic_error("coset correction element is not in H (representative not in gH?)");
  return k;
}

// beta(g1,g2): H -> Q/Z for g1, g2 normalizing H.  Obtained by composing the
// explicit left/right module structure maps on a tensor product of invertible
// objects with the associator twists of the graded tensor; k is taken from the
// stored representative map so that g3 = g1 g2 k is the coset representative.
// Satisfies psi^{g3} = d(beta(g1,g2)) + psi^{g1} + ^{g1}(psi^{g2}).
inline Cochain beta_cochain(const Cochain& omega, const Cochain& psi, const Subgroup& H,
                            const DoubleCosetDecomposition& cosets, int g1, int g2) {
  const FiniteGroup& G = omega.parent();
  Subgroup N = normalizer(G, H);
  if (!N.contains(g1) || !N.contains(g2))
    throw std::invalid_argument("beta requires elements of the normalizer of H");
  int k = coset_correction(G, H, cosets, g1, g2);
  int g3 = G.mul(G.mul(g1, g2), k);
  int i1 = G.inv(g1), i2 = G.inv(g2), i3 = G.inv(g3);
  Cochain out(G, H.members(), 1);
  for (int h : H.members()) {
    int hi = G.inv(h);
    int c1h = G.mul(G.mul(i1, h), g1);        // g1^-1 h g1
    int c1hi = G.mul(G.mul(i1, hi), g1);      // g1^-1 h^-1 g1
    int c12h = G.mul(G.mul(i2, c1h), g2);     // g2^-1 g1^-1 h g1 g2
    int c12hi = G.mul(G.mul(i2, c1hi), g2);   // g2^-1 g1^-1 h^-1 g1 g2
    int c12hk = G.mul(c12h, k);               // g2^-1 g1^-1 h g1 g2 k
    int c3hi = G.mul(G.mul(i3, hi), g3);      // g3^-1 h^-1 g3
    int g2k = G.mul(g2, k);                   // g2 k
    int hg3c1 = G.mul(G.mul(i1, h), g3);      // g1^-1 h g3 = g2 (g2^-1 g1^-1 h g1 g2 k)
    Phase v = psi(c12hk, c3hi) - psi(c1hi, c1h) - psi(c12hi, c12hk) +
              omega(c1h, c1hi, c1h) + omega(g1, c1h, c1hi) + omega(c1h, g2, k) -
              omega(g2, c12h, k) + omega(c12h, c12hi, c12hk) + omega(g2, c12h, c12hi) -
              omega(g2, c12hk, c3hi) +
              omega(h, g1, g2k) - omega(g1, c1h, g2k) - omega(g1, hg3c1, c3hi);
    out.set(h, v);
  }
  return out;
}

// nu(g1,g2)(h) = eta_{g1}(h) + (^{g1} eta_{g2})(h) - eta_{g1.g2}(h) + beta(g1,g2)(h).
// eta is supplied per representative (keyed by representative element index).
inline Cochain nu_cochain(const Cochain& omega, const Cochain& psi, const Subgroup& H,
                          const DoubleCosetDecomposition& cosets,
                          const std::function<const Cochain&(int)>& eta, int g1, int g2) {
  const FiniteGroup& G = omega.parent();
  int prod = G.mul(g1, g2);
  int g3 = cosets.representatives[cosets.membership[prod]];
  Cochain b = beta_cochain(omega, psi, H, cosets, g1, g2);
  Cochain result = eta(g1) + conjugate_cochain(eta(g2), g1) - eta(g3) + b;
  return result;
}

// Central extension of H by Z_m along a normalized 2-cocycle psi whose value
// denominators divide m: elements (j mod m, h) with
// (j1,h1)(j2,h2) = (j1 + j2 + m*psi(h1,h2), h1 h2).  For m = 1 this is H.
struct CentralExtension {
  FiniteGroup group;
  long long m = 1;
  int central_generator = 0;  // element (1 mod m, e); identity when m = 1
  // element index = j * |H| + (position of h in H.members())
};

inline CentralExtension central_extension(const Subgroup& H, const Cochain& psi,
                                          int cap = kDefaultGroupCap) {
  if (psi.degree() != 2) throw std::invalid_argument("central_extension expects a 2-cochain");
  if (!is_cocycle(psi)) throw std::invalid_argument("central_extension: psi is not a cocycle");
  long long m = psi.denominator_lcm();
  int nh = H.size();
  long long n = m * nh;
  if (n > cap) throw std::runtime_error("central extension exceeds size cap");
  const FiniteGroup& G = H.parent();
  auto idx = [&](long long j, int hpos) { return static_cast<int>(j * nh + hpos); };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (long long j1 = 0; j1 < m; ++j1)
    for (int p1 = 0; p1 < nh; ++p1)
      for (long long j2 = 0; j2 < m; ++j2)
        for (int p2 = 0; p2 < nh; ++p2) {
          int h1 = H.members()[p1], h2 = H.members()[p2];
          Phase ps = psi(h1, h2);
          long long add = ps.num() * (m / ps.den());
          long long j = (j1 + j2 + add) % m;
          table[idx(j1, p1)][idx(j2, p2)] = idx(j, H.index_of(G.mul(h1, h2)));
        }
  CentralExtension out{FiniteGroup::from_table(table), m, 0};
  out.central_generator = m > 1 ? idx(1, 0) : 0;
  return out;
}

// Number of psi-regular conjugacy classes of H: classes whose representative h
// satisfies psi(h,x) = psi(x,h) for every x in the centralizer of h.  Equals
// the number of irreducible psi-projective representations.
inline int regular_class_count(const Subgroup& H, const Cochain& psi) {
  if (psi.degree() != 2) throw std::invalid_argument("regular_class_count expects a 2-cochain");
  GroupWithMap hg = subgroup_as_group(H);
  auto classes = conjugacy_classes(hg.group);
  int count = 0;
  for (const auto& cls : classes) {
    int hlocal = cls.front();
    int h = hg.to_parent[hlocal];
    bool regular = true;
    for (int xl = 0; xl < hg.group.order() && regular; ++xl) {
      if (hg.group.mul(xl, hlocal) != hg.group.mul(hlocal, xl)) continue;
      int x = hg.to_parent[xl];
      if (psi(h, x) != psi(x, h)) regular = false;
    }
    if (regular) ++count;
  }
  return count;
}

// Degrees of the irreducible psi-projective representations of H: irreducibles
// of the central extension on which the central Z_m acts by the tautological
// character, identified via class-sum central characters.
inline std::vector<int> projective_irrep_degrees(const Subgroup& H, const Cochain& psi,
                                                 int cap = kDefaultCharacterCap) {
  CentralExtension ext = central_extension(H, psi, cap);
  if (ext.m == 1) return irreducible_degrees(ext.group, cap);
  ModularCharacterData data = modular_character_data(ext.group, cap);
  int zclass = data.class_of[ext.central_generator];
  if (static_cast<int>(data.classes[zclass].size()) != 1)
    throw std::logic_error("central generator is not central in the extension");
  i64 target = data.phase_to_fp(Phase(1, ext.m));
  std::vector<int> degs;
  for (size_t i = 0; i < data.degrees.size(); ++i)
    if (data.central_chars[i][zclass] == target) degs.push_back(data.degrees[i]);
  std::sort(degs.begin(), degs.end());
  long long check = 0;
  for (int d : degs) check += static_cast<long long>(d) * d;
  if (check != H.size())
    throw std::logic_error("projective degree sector has wrong total dimension");
  return degs;
}

// --- Builtin cochains (test corpus) ---

// Normalized 3-cocycle on Z_n: w_k(a,b,c) = k * a * floor((b+c)/n) / n.
inline Cochain zn_omega(const FiniteGroup& Zn, long long k) {
  int n = Zn.order();
  // Relies on the cyclic-group labeling where element i is the residue i.
  Cochain w = Cochain::zero_on_group(Zn, 3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) w.set(a, b, c, Phase(k * a * ((b + c) / n), n));
  if (!is_cocycle(w)) throw std::logic_error("zn_omega failed the cocycle check");
  return w;
}

// Symplectic 2-cocycle on a Klein four-group with chosen generators a, b:
// psi(a^i b^j, a^k b^l) = i*l / 2.
inline Cochain symplectic_cochain(const Subgroup& V, int a, int b) {
  const FiniteGroup& G = V.parent();
  if (V.size() != 4 || !V.contains(a) || !V.contains(b) || a == b || a == 0 || b == 0 ||
      G.mul(a, a) != 0 || G.mul(b, b) != 0)
    throw std::invalid_argument("symplectic cochain needs a Klein four-group with generators");
  auto coords = [&](int x) -> std::pair<int, int> {
    if (x == 0) return {0, 0};
    if (x == a) return {1, 0};
    if (x == b) return {0, 1};
    if (x == G.mul(a, b)) return {1, 1};
    throw std::logic_error("element outside the Klein four-group");
  };
  Cochain psi(G, V.members(), 2);
  for (int x : V.members())
    for (int y : V.members()) {
      auto [i, j] = coords(x);
      auto [k, l] = coords(y);
      (void)j; (void)k;
      psi.set(x, y, Phase(static_cast<long long>(i) * l, 2));
    }
  if (!is_cocycle(psi)) throw std::logic_error("symplectic cochain failed the cocycle check");
  return psi;
}

// Symplectic cocycle on the builtin Z2xZ2 group (generators a = 1, b = 2).
inline Cochain z2z2_symplectic(const FiniteGroup& V4) {
  return symplectic_cochain(full_subgroup(V4), 1, 2);
}

// Triple cup-product 3-cocycle on Z2xZ2xZ2 = (Z2xZ2)xZ2:
// w(x,y,z) = x1 * y2 * z3 / 2 in coordinates.
inline Cochain z2cube_cup(const FiniteGroup& Z2cube) {
  if (Z2cube.order() != 8) throw std::invalid_argument("z2cube_cup expects a group of order 8");
  // Element index convention of iterated direct products of Z2: i = 4*x1 + 2*x2 + x3.
  auto c1 = [](int x) { return (x >> 2) & 1; };
  auto c2 = [](int x) { return (x >> 1) & 1; };
  auto c3 = [](int x) { return x & 1; };
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int expect = ((c1(x) ^ c1(y)) << 2) | ((c2(x) ^ c2(y)) << 1) | (c3(x) ^ c3(y));
      if (Z2cube.mul(x, y) != expect)
        throw std::invalid_argument("z2cube_cup: group is not the standard Z2xZ2xZ2");
    }
  Cochain w = Cochain::zero_on_group(Z2cube, 3);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z)
        w.set(x, y, z, Phase(static_cast<long long>(c1(x)) * c2(y) * c3(z), 2));
  if (!is_cocycle(w)) throw std::logic_error("z2cube_cup failed the cocycle check");
  return w;
}

}  // namespace gtcat
