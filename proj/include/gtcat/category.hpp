#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtcat/based_ring.hpp"
#include "gtcat/characters.hpp"
#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"

namespace gtcat {

// The data (G, omega, H, psi) of a group-theoretical category together with
// the double coset decomposition and its representative set.  The group is
// held by reference: the caller keeps it alive, as everywhere else.
struct GTCategoryData {
  const FiniteGroup* G = nullptr;
  Cochain omega;  // normalized 3-cocycle on G
  Subgroup H;
  Cochain psi;    // normalized 2-cochain on H with d psi = omega|_H
  DoubleCosetDecomposition cosets;

  const FiniteGroup& group() const { return *G; }
};

struct ValidationResult {
  bool ok = true;
  std::string message;
};

inline ValidationResult validate_category_data(const FiniteGroup& G, const Cochain& omega,
                                               const Subgroup& H, const Cochain& psi) {
  if (&omega.parent() != &G || omega.degree() != 3 || omega.domain_size() != G.order())
    return {false, "omega must be a 3-cochain on all of G"};
  if (&H.parent() != &G) return {false, "H must be a subgroup of G"};
  if (&psi.parent() != &G || psi.degree() != 2 || psi.domain() != H.members())
    return {false, "psi must be a 2-cochain on H"};
  // 3-cocycle check, reporting the first violating 4-tuple.  The zero cochain
  // is a cocycle; skip the quartic scan for it.
  if (!omega.is_zero())
    for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      for (int c = 0; c < G.order(); ++c)
        for (int d = 0; d < G.order(); ++d) {
          Phase v = omega(b, c, d) - omega(G.mul(a, b), c, d) + omega(a, G.mul(b, c), d) -
                    omega(a, b, G.mul(c, d)) + omega(a, b, c);
          if (!v.is_zero())
            return {false, "omega is not a 3-cocycle at (" + G.element_name(a) + ", " +
                               G.element_name(b) + ", " + G.element_name(c) + ", " +
                               G.element_name(d) + ")"};
        }
  Cochain dpsi = coboundary(psi);
  for (int a : H.members())
    for (int b : H.members())
      for (int c : H.members())
        if (dpsi(a, b, c) != omega(a, b, c))
          return {false, "d psi != omega|_H at (" + G.element_name(a) + ", " + G.element_name(b) +
                             ", " + G.element_name(c) + "): " + dpsi(a, b, c).str() + " vs " +
                             omega(a, b, c).str()};
  return {};
}

inline GTCategoryData make_category(const FiniteGroup& G, Cochain omega, const Subgroup& H,
                                    Cochain psi) {
  ValidationResult v = validate_category_data(G, omega, H, psi);
  if (!v.ok) throw std::invalid_argument("invalid category data: " + v.message);
  return GTCategoryData{&G, std::move(omega), H, std::move(psi), double_cosets(G, H)};
}

inline GTCategoryData make_category_trivial(const FiniteGroup& G, const Subgroup& H) {
  return make_category(G, Cochain::zero_on_group(G, 3), H, Cochain::zero(H, 2));
}

// Simple object = pair (g, rho): double-coset representative g and a label of
// an irreducible psi^g-projective representation of H^g.
struct SimpleObjectDescriptor {
  int g = 0;           // representative element
  int coset_index = 0;
  int rep_label = 0;   // index among the psi^g-irreducibles (sorted by degree)
  int dim_rho = 1;
  long long fpdim = 1;  // [H : H^g] * dim_rho
};

inline std::vector<SimpleObjectDescriptor> enumerate_simples(const GTCategoryData& data) {
  std::vector<SimpleObjectDescriptor> out;
  const FiniteGroup& G = data.group();
  long long total = 0;
  for (int c = 0; c < static_cast<int>(data.cosets.representatives.size()); ++c) {
    int g = data.cosets.representatives[c];
    Subgroup Hg = intersect(data.H, conjugate_subgroup(data.H, g));
    Cochain pg = psi_g(data.omega, data.psi, data.H, g);
    if (!is_cocycle(pg)) throw std::logic_error("psi^g failed the cocycle check");
    std::vector<int> degs = projective_irrep_degrees(Hg, pg);
    long long index = data.H.size() / Hg.size();
    long long coset_total = 0;
    for (int i = 0; i < static_cast<int>(degs.size()); ++i) {
      SimpleObjectDescriptor s;
      s.g = g;
      s.coset_index = c;
      s.rep_label = i;
      s.dim_rho = degs[i];
      s.fpdim = index * degs[i];
      coset_total += s.fpdim * s.fpdim;
      out.push_back(s);
    }
    if (coset_total != data.cosets.sizes[c])
      throw std::logic_error("per-coset dimension check failed");
    total += coset_total;
  }
  if (total != G.order()) throw std::logic_error("global dimension check failed");
  return out;
}

struct GradingReport {
  std::vector<int> coset_of_simple;   // parallel to the simples list
  std::vector<int> simples_per_coset;
  int trivial_component_simples = 0;  // must equal the class count of H
  bool trivial_component_is_rep_H = false;
  bool psi_1_trivial = false;         // psi^1 certified a coboundary
  bool faithful_support = false;      // every coset supports >= 1 simple
};

inline GradingReport grading(const GTCategoryData& data,
                             const std::vector<SimpleObjectDescriptor>& simples) {
  GradingReport out;
  int r = static_cast<int>(data.cosets.representatives.size());
  out.simples_per_coset.assign(r, 0);
  for (const auto& s : simples) {
    out.coset_of_simple.push_back(s.coset_index);
    out.simples_per_coset[s.coset_index]++;
  }
  out.trivial_component_simples = out.simples_per_coset[0];
  GroupWithMap hg = subgroup_as_group(data.H);
  int hclasses = static_cast<int>(conjugacy_classes(hg.group).size());
  out.trivial_component_is_rep_H = out.trivial_component_simples == hclasses;
  Cochain p1 = psi_g(data.omega, data.psi, data.H, 0);
  out.psi_1_trivial = trivialize(p1).trivial;
  out.faithful_support = std::all_of(out.simples_per_coset.begin(), out.simples_per_coset.end(),
                                     [](int c) { return c >= 1; });
  return out;
}

struct NilpotencyReport {
  bool nilpotent = false;
  std::optional<int> cl_H;         // nilpotency class of H, when H is nilpotent
  std::optional<int> defect;       // defect of H in G, when subnormal
  std::optional<int> lower_bound;  // cl(H)
  std::optional<int> upper_bound;  // cl(H) + defect
  std::optional<int> ring_class;   // nilpotency class of R(G,H)
  bool routes_agree = false;       // group-theoretic verdict vs based-ring route
};

inline NilpotencyReport nilpotency(const GTCategoryData& data) {
  NilpotencyReport out;
  const FiniteGroup& G = data.group();
  Subgroup N = normal_closure(G, data.H);
  NilpotencyInfo closure_nil = nilpotency_of_subgroup(N);
  out.nilpotent = closure_nil.nilpotent;

  // Independent route: adjoint series of R(G,H) reaches Z*1 and H nilpotent.
  DoubleCosetRing R = double_coset_ring(G, data.H);
  AdjointSeries as = adjoint_series(R.ring);
  NilpotencyInfo h_nil = nilpotency_of_subgroup(data.H);
  bool ring_route = as.nilpotent && h_nil.nilpotent;
  out.routes_agree = ring_route == out.nilpotent;
  if (!out.routes_agree) throw std::logic_error("nilpotency routes disagree");

  if (h_nil.nilpotent) out.cl_H = h_nil.clazz;
  SubnormalSeries sn = successive_normal_closures(G, data.H);
  if (sn.subnormal) out.defect = sn.defect;
  if (as.nilpotent) out.ring_class = as.clazz;
  if (out.nilpotent) {
    out.lower_bound = *out.cl_H;
    out.upper_bound = *out.cl_H + *out.defect;
  }
  return out;
}

// Group of invertible objects, presented as K ⋉_ν H-hat: K is the set of
// double-coset representatives g in N_G(H) with psi^g cohomologically trivial,
// H-hat the character group of H, and nu(g1,g2) the twisting character.
struct InvertibleGroupPresentation {
  std::vector<int> K;
  std::map<int, Cochain> eta;             // per representative, d eta_g = psi^g
  std::vector<std::vector<Phase>> h_hat;  // characters of H (by member position)
  std::map<std::pair<int, int>, int> nu;  // (g1,g2) -> character index
  FiniteGroup group;                      // the full multiplication table
  std::vector<std::pair<int, int>> element_labels;  // element -> (K index, character index)
};

inline InvertibleGroupPresentation invertible_group(const GTCategoryData& data) {
  const FiniteGroup& G = data.group();
  const Subgroup& H = data.H;
  Subgroup N = normalizer(G, H);

  std::vector<int> K;
  std::map<int, Cochain> eta;
  for (int rep : data.cosets.representatives) {
    if (!N.contains(rep)) continue;
    Cochain pg = psi_g(data.omega, data.psi, H, rep);
    TrivializationResult t = trivialize(pg);
    if (!t.trivial) continue;
    K.push_back(rep);
    eta.emplace(rep, std::move(*t.witness));
  }
  // eta_1 := -beta(1,1); a valid witness because of the relation at (1,1).
  {
    Cochain b11 = beta_cochain(data.omega, data.psi, H, data.cosets, 0, 0);
    Cochain eta1 = -b11;
    Cochain p1 = psi_g(data.omega, data.psi, H, 0);
    if (!(coboundary(eta1) == p1))
      throw std::logic_error("d(-beta(1,1)) != psi^1; coboundary convention broken");
    eta.erase(0);
    eta.emplace(0, std::move(eta1));
  }

  InvertibleGroupPresentation out{std::move(K),
                                  std::move(eta),
                                  character_group(H),
                                  {},
                                  FiniteGroup::from_table({{0}}),
                                  {}};

  const auto& hmem = H.members();
  auto char_values = [&](const Cochain& c) {
    std::vector<Phase> v(hmem.size());
    for (size_t i = 0; i < hmem.size(); ++i) v[i] = c(hmem[i]);
    return v;
  };
  auto find_char = [&](const std::vector<Phase>& v) {
    for (int i = 0; i < static_cast<int>(out.h_hat.size()); ++i)
      if (out.h_hat[i] == v) return i;
    throw std::logic_error("value table is not a character of H");
  };
  auto add_chars = [&](int a, int b) {
    std::vector<Phase> v(hmem.size());
    for (size_t i = 0; i < hmem.size(); ++i) v[i] = out.h_hat[a][i] + out.h_hat[b][i];
    return find_char(v);
  };
  auto conj_char = [&](int g, int c) {
    // (^g chi)(h) = chi(g^-1 h g)
    std::vector<Phase> v(hmem.size());
    for (size_t i = 0; i < hmem.size(); ++i) {
      int x = G.mul(G.mul(G.inv(g), hmem[i]), g);
      v[i] = out.h_hat[c][H.index_of(x)];
    }
    return find_char(v);
  };
  auto eta_ref = [&](int g) -> const Cochain& { return out.eta.at(g); };

  std::map<std::pair<int, int>, int> kprod;
  int nk = static_cast<int>(out.K.size());
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) {
      int g1 = out.K[i], g2 = out.K[j];
      int g3 = data.cosets.representatives[data.cosets.membership[G.mul(g1, g2)]];
      auto it = std::find(out.K.begin(), out.K.end(), g3);
      if (it == out.K.end()) throw std::logic_error("K is not closed under the coset product");
      kprod[{i, j}] = static_cast<int>(it - out.K.begin());
      Cochain nuc = nu_cochain(data.omega, data.psi, H, data.cosets, eta_ref, g1, g2);
      if (!coboundary(nuc).is_zero())
        throw std::logic_error("nu(g1,g2) is not a homomorphism");
      out.nu[{g1, g2}] = find_char(char_values(nuc));
    }

  int nh = static_cast<int>(out.h_hat.size());
  int n = nk * nh;
  auto pack = [&](int ki, int ci) { return ki * nh + ci; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int k1 = 0; k1 < nk; ++k1)
    for (int c1 = 0; c1 < nh; ++c1)
      for (int k2 = 0; k2 < nk; ++k2)
        for (int c2 = 0; c2 < nh; ++c2) {
          int k3 = kprod.at({k1, k2});
          int c3 =
              add_chars(out.nu.at({out.K[k1], out.K[k2]}), add_chars(c1, conj_char(out.K[k1], c2)));
          table[pack(k1, c1)][pack(k2, c2)] = pack(k3, c3);
        }
  std::vector<std::string> names(n);
  for (int k = 0; k < nk; ++k)
    for (int c = 0; c < nh; ++c)
      names[pack(k, c)] = "(" + G.element_name(out.K[k]) + ", chi" + std::to_string(c) + ")";
  out.element_labels.resize(n);
  for (int k = 0; k < nk; ++k)
    for (int c = 0; c < nh; ++c) out.element_labels[pack(k, c)] = {k, c};
  // from_table machine-checks the group axioms and moves the identity to
  // index 0; mirror any relabeling in element_labels.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      if (table[i][j] != j || table[j][i] != j) ok = false;
    if (ok) e = i;
  }
  if (e < 0) throw std::logic_error("invertible-object table has no identity");
  out.group = FiniteGroup::from_table(table, "", names);
  if (e != 0) std::swap(out.element_labels[0], out.element_labels[e]);
  return out;
}

struct UniversalGradingPresentation {
  FiniteGroup quotient;     // G/H
  FiniteGroup center_of_H;  // Z(H)
  FiniteGroup group;        // G/H ⋉ Z(H)
  long long order = 0;      // |Z(H)| * |G| / |H|
  int adjoint_component_simples = 0;  // class count of H/Z(H)
};

// Universal grading group for trivial omega and psi and normal H; rejected
// otherwise.
inline UniversalGradingPresentation universal_grading(const GTCategoryData& data) {
  if (!data.omega.is_zero() || !data.psi.is_zero())
    throw std::invalid_argument("universal grading is only available for trivial omega and psi");
  const FiniteGroup& G = data.group();
  if (!is_normal(G, data.H))
    throw std::invalid_argument("universal grading is only available for normal H");
  GroupWithMap hg = subgroup_as_group(data.H);
  Subgroup zH_local = center(hg.group);
  std::vector<int> zmem;
  for (int z : zH_local.members()) zmem.push_back(hg.to_parent[z]);
  Subgroup zH(G, std::move(zmem));
  QuotientGroup q = quotient_group(G, data.H);
  GroupWithMap zg = subgroup_as_group(zH);

  int nq = q.group.order();
  int nz = zg.group.order();
  int n = nq * nz;
  auto pack = [&](int a, int z) { return a * nz + z; };
  // (x1, z1)(x2, z2) = (x1 x2, (r2^-1 z1 r2) z2) with r2 the coset
  // representative of x2; well-defined because H centralizes Z(H).
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x1 = 0; x1 < nq; ++x1)
    for (int z1 = 0; z1 < nz; ++z1)
      for (int x2 = 0; x2 < nq; ++x2)
        for (int z2 = 0; z2 < nz; ++z2) {
          int r2 = q.coset_reps[x2];
          int conj = G.mul(G.mul(G.inv(r2), zg.to_parent[z1]), r2);
          int zi = zH.index_of(conj);
          if (zi < 0) throw std::logic_error("conjugation does not preserve Z(H)");
          table[pack(x1, z1)][pack(x2, z2)] = pack(q.group.mul(x1, x2), zg.group.mul(zi, z2));
        }
  std::vector<std::string> names(n);
  for (int x = 0; x < nq; ++x)
    for (int z = 0; z < nz; ++z)
      names[pack(x, z)] = "(" + q.group.element_name(x) + ", " + zg.group.element_name(z) + ")";
  UniversalGradingPresentation out{q.group, zg.group, FiniteGroup::from_table(table, "", names),
                                   static_cast<long long>(nz) * G.order() / data.H.size(), 0};
  if (out.group.order() != out.order) throw std::logic_error("universal grading order mismatch");
  // Adjoint component looks like Rep(H/Z(H)): predicted simple count there.
  QuotientGroup hz = quotient_group(hg.group, zH_local);
  out.adjoint_component_simples = static_cast<int>(conjugacy_classes(hz.group).size());
  return out;
}

// Rep(D(G)) presented as the category of (G x G, trivial, diagonal, trivial).
// The product group is heap-owned so the category data stays valid after the
// struct is moved.
struct DrinfeldDoubleData {
  std::shared_ptr<ProductGroup> product;
  GTCategoryData data;
};

inline DrinfeldDoubleData drinfeld_double_data(const FiniteGroup& G, int cap = kDefaultGroupCap) {
  if (static_cast<long long>(G.order()) * G.order() > cap)
    throw std::runtime_error("drinfeld double exceeds size cap");
  auto product = std::make_shared<ProductGroup>(direct_product(G, G));
  Subgroup delta = diagonal_subgroup(*product);
  GTCategoryData data = make_category_trivial(product->group, delta);
  // Double cosets of the diagonal biject with conjugacy classes of G.
  size_t classes = conjugacy_classes(G).size();
  if (data.cosets.representatives.size() != classes)
    throw std::logic_error("double cosets of the diagonal do not match conjugacy classes");
  return {std::move(product), std::move(data)};
}

}  // namespace gtcat
