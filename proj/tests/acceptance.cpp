// Acceptance checks for the whole library, one criterion per line.
// Exit code 0 iff every criterion passes within its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtcat/based_ring.hpp"
#include "gtcat/bimodule.hpp"
#include "gtcat/builtin_groups.hpp"
#include "gtcat/category.hpp"
#include "gtcat/characters.hpp"
#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"

using namespace gtcat;

namespace {

int failures = 0;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

template <typename F>
void criterion(int n, const std::string& desc, long budget_ms, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  std::string err;
  try {
    f();
  } catch (const std::exception& e) {
    err = e.what();
  }
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  t0)
                .count();
  bool ok = err.empty() && ms < budget_ms;
  std::printf("%s criterion %d: %s (exact, %ld ms, budget %ld ms)\n", ok ? "PASS" : "FAIL", n,
              desc.c_str(), ms, budget_ms);
  if (!err.empty()) std::printf("     reason: %s\n", err.c_str());
  if (!ok) ++failures;
}

int element_of_order(const FiniteGroup& G, int ord) {
  for (int a = 0; a < G.order(); ++a)
    if (element_order(G, a) == ord) return a;
  throw std::logic_error("no element of the requested order");
}

Cochain char_cochain(const Subgroup& H, const std::vector<Phase>& vals) {
  Cochain chi(H.parent(), H.members(), 1);
  const auto& mem = H.members();
  for (size_t i = 0; i < mem.size(); ++i)
    if (mem[i] != 0) chi.set(mem[i], vals[i]);
  return chi;
}

struct Instance {
  std::string name;
  GTCategoryData data;
};

struct Corpus {
  std::deque<FiniteGroup> groups;  // stable addresses for the category data
  std::deque<DrinfeldDoubleData> doubles;
  std::vector<Instance> instances;

  const GTCategoryData& by_name(const std::string& n) const {
    for (const auto& i : instances)
      if (i.name == n) return i.data;
    throw std::logic_error("no corpus instance named " + n);
  }
};

Corpus build_corpus() {
  Corpus c;
  auto add = [&](std::string name, GTCategoryData data) {
    c.instances.push_back({std::move(name), std::move(data)});
  };
  auto group = [&](const std::string& name) -> FiniteGroup& {
    c.groups.push_back(*builtin_group(name));
    return c.groups.back();
  };

  FiniteGroup& s3 = group("S3");
  add("S3/<t>", make_category_trivial(s3, subgroup_generated(s3, {element_of_order(s3, 2)})));
  add("S3/A3", make_category_trivial(s3, subgroup_generated(s3, {element_of_order(s3, 3)})));
  add("Vec(S3)", make_category_trivial(s3, trivial_subgroup(s3)));
  add("Rep(S3)", make_category_trivial(s3, full_subgroup(s3)));

  FiniteGroup& d8 = group("D8");
  add("D8/<s>", make_category_trivial(d8, subgroup_generated(d8, {4})));
  add("D8/Z", make_category_trivial(d8, center(d8)));
  {
    Subgroup zc = center(d8);
    Cochain psi = Cochain::zero(zc, 2);
    psi.set(2, 2, Phase(1, 2));
    add("D8/Z twisted", make_category(d8, Cochain::zero_on_group(d8, 3), zc, std::move(psi)));
  }

  FiniteGroup& z2z4 = group("Z2xZ4");
  {
    Subgroup v(z2z4, {0, 2, 4, 6});
    Cochain psi = symplectic_cochain(v, 2, 4);
    add("Z2xZ4 symplectic",
        make_category(z2z4, Cochain::zero_on_group(z2z4, 3), v, std::move(psi)));
  }

  FiniteGroup& a4 = group("A4");
  {
    std::vector<int> invol;
    for (int a = 1; a < a4.order(); ++a)
      if (element_order(a4, a) == 2) invol.push_back(a);
    add("A4/V4", make_category_trivial(a4, subgroup_generated(a4, invol)));
  }

  FiniteGroup& z4 = group("Z4");
  add("Z4 twisted", make_category(z4, zn_omega(z4, 2), Subgroup(z4, {0, 2}),
                                  Cochain::zero(Subgroup(z4, {0, 2}), 2)));

  FiniteGroup& cube = group("Z2xZ2xZ2");
  {
    Subgroup h = subgroup_generated(cube, {4, 2});
    add("cube cup", make_category(cube, z2cube_cup(cube), h, Cochain::zero(h, 2)));
  }

  FiniteGroup& q8 = group("Q8");
  add("Q8/<i>", make_category_trivial(q8, subgroup_generated(q8, {element_of_order(q8, 4)})));

  c.doubles.push_back(drinfeld_double_data(symmetric_group(3)));
  add("Rep(D(S3))", c.doubles.back().data);
  c.doubles.push_back(drinfeld_double_data(dihedral8()));
  add("Rep(D(D8))", c.doubles.back().data);
  return c;
}

// Coset representatives lying in the normalizer of H (the K-candidate set).
std::vector<int> normalizing_reps(const GTCategoryData& d) {
  Subgroup N = normalizer(d.group(), d.H);
  std::vector<int> out;
  for (int g : d.cosets.representatives)
    if (N.contains(g)) out.push_back(g);
  return out;
}

// All invertible objects (g, chi) with d chi = psi^g, from the presentation.
std::vector<InvertiblePair> invertible_pairs(const GTCategoryData& d,
                                             const InvertibleGroupPresentation& inv) {
  std::vector<InvertiblePair> out;
  for (int g : inv.K)
    for (const auto& cvals : inv.h_hat) out.push_back({g, inv.eta.at(g) + char_cochain(d.H, cvals)});
  return out;
}

}  // namespace

int main() {
  Corpus corpus = build_corpus();

  criterion(1, "psi^g is a 2-cocycle for every coset representative on >= 10 instances", 5000,
            [&] {
    require(corpus.instances.size() >= 10, "corpus too small");
    for (const auto& inst : corpus.instances)
      for (int g : inst.data.cosets.representatives) {
        Cochain pg = psi_g(inst.data.omega, inst.data.psi, inst.data.H, g);
        require(is_cocycle(pg), inst.name + ": psi^g fails the cocycle law at g=" +
                                    inst.data.group().element_name(g));
      }
  });

  criterion(2, "psi^{g3} = d beta(g1,g2) + psi^{g1} + ^{g1}psi^{g2} for all normalizing pairs",
            5000, [&] {
    long long checked = 0;
    for (const auto& inst : corpus.instances) {
      const GTCategoryData& d = inst.data;
      std::vector<int> K = normalizing_reps(d);
      for (int g1 : K)
        for (int g2 : K) {
          int g3 = d.cosets.representatives[d.cosets.membership[d.group().mul(g1, g2)]];
          Cochain beta = beta_cochain(d.omega, d.psi, d.H, d.cosets, g1, g2);
          Cochain lhs = psi_g(d.omega, d.psi, d.H, g3);
          Cochain rhs = coboundary(beta) + psi_g(d.omega, d.psi, d.H, g1) +
                        conjugate_cochain(psi_g(d.omega, d.psi, d.H, g2), g1);
          require(lhs == rhs, inst.name + ": beta relation fails at a pair");
          ++checked;
        }
    }
    require(checked > 0, "no normalizing pairs checked");
  });

  criterion(3, "sum of fpdim^2 equals |G|; Rep(D(S3)) has fpdims {1,1,2,2,2,2,3,3}", 10000, [&] {
    for (const auto& inst : corpus.instances) {
      long long sum = 0;
      for (const auto& s : enumerate_simples(inst.data)) sum += s.fpdim * s.fpdim;
      require(sum == inst.data.group().order(), inst.name + ": global dimension mismatch");
    }
    // Independent oracle for the double: class sizes times centralizer degrees.
    FiniteGroup s3 = symmetric_group(3);
    std::vector<long long> oracle;
    for (const auto& cl : conjugacy_classes(s3)) {
      GroupWithMap cg = subgroup_as_group(centralizer(s3, cl.front()));
      for (int deg : irreducible_degrees(cg.group))
        oracle.push_back(static_cast<long long>(cl.size()) * deg);
    }
    std::sort(oracle.begin(), oracle.end());
    std::vector<long long> dims;
    for (const auto& s : enumerate_simples(corpus.by_name("Rep(D(S3))"))) dims.push_back(s.fpdim);
    std::sort(dims.begin(), dims.end());
    require(dims == std::vector<long long>({1, 1, 2, 2, 2, 2, 3, 3}), "Rep(D(S3)) fpdims wrong");
    require(dims == oracle, "Rep(D(S3)) disagrees with the class/centralizer oracle");
  });

  criterion(4, "trivial component has class-count-of-H simples and psi^1 is a coboundary", 5000,
            [&] {
    for (const auto& inst : corpus.instances) {
      GradingReport g = grading(inst.data, enumerate_simples(inst.data));
      require(g.trivial_component_is_rep_H, inst.name + ": trivial component is not Rep(H)");
      require(g.psi_1_trivial, inst.name + ": psi^1 is not a coboundary");
      require(g.faithful_support, inst.name + ": grading is not faithful");
    }
  });

  criterion(5, "group-theoretic and based-ring nilpotency verdicts agree on >= 10 pairs", 5000,
            [&] {
    require(corpus.instances.size() >= 10, "corpus too small");
    for (const auto& inst : corpus.instances)
      require(nilpotency(inst.data).routes_agree, inst.name + ": nilpotency routes disagree");
    require(!nilpotency(corpus.by_name("S3/<t>")).nilpotent, "S3/<t> should not be nilpotent");
    NilpotencyReport d8s = nilpotency(corpus.by_name("D8/<s>"));
    require(d8s.nilpotent && d8s.defect == 2, "D8/<s> should be nilpotent with defect 2");
    require(!nilpotency(corpus.by_name("Rep(D(S3))")).nilpotent, "Rep(D(S3)) should not be nilpotent");
    require(nilpotency(corpus.by_name("Rep(D(D8))")).nilpotent, "Rep(D(D8)) should be nilpotent");
  });

  criterion(6, "adjoint series matches successive normal closures; R(D8,<s>) subring bijection",
            5000, [&] {
    for (const auto& inst : corpus.instances)
      require(adjoint_series_agrees_with_closures(inst.data.group(), inst.data.H),
              inst.name + ": adjoint series disagrees with normal closures");

    FiniteGroup d8 = dihedral8();
    Subgroup hs = subgroup_generated(d8, {4});
    DoubleCosetRing R = double_coset_ring(d8, hs);
    std::set<std::vector<int>> subgroups;
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) subgroups.insert(subgroup_generated(d8, {4, a, b}).members());
    std::vector<BasisSubset> subrings = enumerate_based_subrings(R.ring);
    require(subrings.size() == subgroups.size(), "subring/subgroup counts differ");
    for (const BasisSubset& S : subrings) {
      Subgroup K = gamma_of_subring(d8, R.cosets, S);
      require(subgroups.count(K.members()) == 1, "Gamma image is not an intermediate subgroup");
      require(subring_of_subgroup(R.cosets, K) == S, "subring -> subgroup -> subring round trip");
    }
    for (const auto& members : subgroups) {
      Subgroup K(d8, members);
      require(gamma_of_subring(d8, R.cosets, subring_of_subgroup(R.cosets, K)).members() == members,
              "subgroup -> subring -> subgroup round trip");
    }
  });

  criterion(7, "invertibles form K x H-hat of the right order; tensor matches the beta formula",
            5000, [&] {
    for (const auto& inst : corpus.instances) {
      const GTCategoryData& d = inst.data;
      // from_table inside machine-checks the group axioms of the table.
      InvertibleGroupPresentation inv = invertible_group(d);
      long long ones = 0;
      for (const auto& s : enumerate_simples(d))
        if (s.fpdim == 1) ++ones;
      require(inv.group.order() == ones, inst.name + ": invertible count mismatch");

      std::vector<InvertiblePair> pairs = invertible_pairs(d, inv);
      for (const auto& a : pairs)
        for (const auto& b : pairs) {
          InvertiblePair p = tensor_invertibles(d, a, b);
          require(p.chi == expected_tensor_character(d, a, b),
                  inst.name + ": tensor product disagrees with the predicted character");
        }
    }
    InvertibleGroupPresentation pa = invertible_group(corpus.by_name("S3/A3"));
    require(pa.group.order() == 6 && !is_abelian(pa.group),
            "invertibles of S3/A3 should be non-abelian of order 6");
  });

  criterion(8, "bimodule axioms hold for all 1-dim (g,rho) and the 2-dim monomial example", 5000,
            [&] {
    for (const auto& inst : corpus.instances) {
      const GTCategoryData& d = inst.data;
      for (int g : d.cosets.representatives) {
        Subgroup hg = intersect(d.H, conjugate_subgroup(d.H, g));
        TrivializationResult t = trivialize(psi_g(d.omega, d.psi, d.H, g));
        if (!t.trivial) continue;  // no 1-dimensional rho over this coset
        for (const auto& cvals : character_group(hg)) {
          ScalarRep rho = character_rep(hg, *t.witness + char_cochain(hg, cvals));
          GradedBimodule B = build_bimodule(d, g, rho);
          BimoduleCheckResult r = check_bimodule_axioms(d, B);
          require(r.ok, inst.name + ": " + r.message);
          ScalarRep back = extract_rep(d, B);
          for (int h : hg.members())
            require(back.mats.at(h) == rho.mats.at(h), inst.name + ": extract_rep round trip");
        }
      }
    }
    // Two-dimensional monomial representation over the twisted cube.
    const GTCategoryData& d = corpus.by_name("cube cup");
    int g = d.cosets.representatives[1];
    require(psi_g(d.omega, d.psi, d.H, g) == symplectic_cochain(d.H, 4, 2),
            "twisted cocycle at g is not the symplectic one");
    ScalarRep rho = pauli_rep(d.H, 4, 2);
    GradedBimodule B = build_bimodule(d, g, rho);
    require(check_bimodule_axioms(d, B).ok, "2-dim bimodule fails its axioms");
    ScalarRep back = extract_rep(d, B);
    for (int h : d.H.members())
      require(back.mats.at(h) == rho.mats.at(h), "2-dim extract_rep round trip");
  });

  criterion(9, "universal grading: S3/A3 of order 6 non-abelian; Rep(G) gives Z(G)", 5000, [&] {
    UniversalGradingPresentation u = universal_grading(corpus.by_name("S3/A3"));
    require(u.order == 6 && !is_abelian(u.group),
            "universal grading of S3/A3 should be non-abelian of order 6");

    FiniteGroup z6 = cyclic_group(6);
    UniversalGradingPresentation ua = universal_grading(make_category_trivial(z6, full_subgroup(z6)));
    require(ua.order == 6 && is_abelian(ua.group), "universal grading of Rep(Z6) should be Z6");
    std::multiset<int> got, want;
    for (int a = 0; a < 6; ++a) {
      got.insert(element_order(ua.group, a));
      want.insert(element_order(z6, a));
    }
    require(got == want, "universal grading of Rep(Z6) has wrong element orders");

    FiniteGroup d8 = dihedral8();
    UniversalGradingPresentation ud = universal_grading(make_category_trivial(d8, full_subgroup(d8)));
    require(ud.order == 2, "universal grading of Rep(D8) should be Z(D8) of order 2");
  });

  criterion(10, "trivialize agrees with brute-force search for denominator <= 4 cocycles", 10000,
            [&] {
    long long tested = 0;
    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
      FiniteGroup G = *builtin_group(name);
      Subgroup whole = full_subgroup(G);
      const std::vector<int>& mem = whole.members();
      int free_entries = (G.order() - 1) * (G.order() - 1);

      // All normalized 2-cochains with entries in (1/q)Z, filtered to cocycles.
      auto grid_cocycles = [&](int q) {
        std::vector<Cochain> out;
        std::vector<int> digits(free_entries, 0);
        while (true) {
          Cochain c = Cochain::zero(whole, 2);
          int idx = 0;
          for (int a : mem)
            for (int b : mem) {
              if (a == 0 || b == 0) continue;
              if (digits[idx]) c.set(a, b, Phase(digits[idx], q));
              ++idx;
            }
          if (is_cocycle(c)) out.push_back(std::move(c));
          int pos = 0;
          while (pos < free_entries && ++digits[pos] == q) digits[pos++] = 0;
          if (pos == free_entries) break;
        }
        return out;
      };
      std::vector<Cochain> quarter = grid_cocycles(4);
      std::vector<Cochain> third = grid_cocycles(3);

      // Candidates: sums of a 2-part and a 3-part, keeping per-entry
      // denominators <= 4 (these are exactly the denominator-<=4 cocycles).
      std::vector<Cochain> cands;
      for (const Cochain& c2 : quarter)
        for (const Cochain& c3 : third) {
          Cochain c = c2 + c3;
          bool small = true;
          for (int a : mem) {
            for (int b : mem)
              if (c(a, b).den() > 4) { small = false; break; }
            if (!small) break;
          }
          if (small) cands.push_back(std::move(c));
        }

      for (const Cochain& c : cands) {
        TrivializationResult t = trivialize(c);
        if (t.trivial) {
          require(coboundary(*t.witness) == c, std::string(name) + ": witness fails d eta = psi");
        }
        // Brute force over eta with values in (1/M)Z, M = lcm(dens) * |H|.
        long long M = c.denominator_lcm() * G.order();
        int nfree = G.order() - 1;
        std::vector<long long> cnum(static_cast<size_t>(G.order()) * G.order());
        for (int a : mem)
          for (int b : mem) {
            Phase v = c(a, b);
            cnum[static_cast<size_t>(a) * G.order() + b] = v.num() * (M / v.den());
          }
        std::vector<long long> eta(G.order(), 0);
        std::vector<long long> digits(nfree, 0);
        bool found = false;
        while (!found) {
          for (int i = 0; i < nfree; ++i) eta[mem[i + 1]] = digits[i];
          bool ok = true;
          for (int a : mem) {
            for (int b : mem) {
              long long d = ((eta[a] - eta[G.mul(a, b)] + eta[b] -
                              cnum[static_cast<size_t>(a) * G.order() + b]) %
                                 M +
                             M) %
                            M;
              if (d != 0) { ok = false; break; }
            }
            if (!ok) break;
          }
          if (ok) { found = true; break; }
          int pos = 0;
          while (pos < nfree && ++digits[pos] == M) digits[pos++] = 0;
          if (pos == nfree) break;
        }
        require(found == t.trivial,
                std::string(name) + ": trivialize disagrees with brute force");
        ++tested;
      }
    }
    require(tested >= 30, "too few cocycles exercised");
  });

  return failures == 0 ? 0 : 1;
}
