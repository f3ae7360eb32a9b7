#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "gtcat/builtin_groups.hpp"
#include "gtcat/category.hpp"
#include "gtcat/characters.hpp"
#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"

using namespace gtcat;

namespace {

int element_of_order(const FiniteGroup& G, int ord) {
  for (int a = 0; a < G.order(); ++a)
    if (element_order(G, a) == ord) return a;
  throw std::logic_error("no element of the requested order");
}

std::vector<long long> fpdims(const GTCategoryData& data) {
  std::vector<long long> out;
  for (const auto& s : enumerate_simples(data)) out.push_back(s.fpdim);
  std::sort(out.begin(), out.end());
  return out;
}

long long count_fpdim_one(const GTCategoryData& data) {
  long long n = 0;
  for (const auto& s : enumerate_simples(data))
    if (s.fpdim == 1) ++n;
  return n;
}

// The unique Klein four subgroup of Z2xZ4 together with a symplectic 2-cochain
// on it.
struct SymplecticInstance {
  Subgroup V;
  Cochain psi;
};

SymplecticInstance z2z4_symplectic(const FiniteGroup& G) {
  std::vector<int> invol;
  for (int a = 1; a < G.order(); ++a)
    if (element_order(G, a) == 2) invol.push_back(a);
  for (int a : invol)
    for (int b : invol) {
      if (a == b) continue;
      Subgroup V = subgroup_generated(G, {a, b});
      if (V.size() == 4) return {V, symplectic_cochain(V, a, b)};
    }
  throw std::logic_error("no Klein four subgroup found");
}

}  // namespace

TEST_CASE("category data validation") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  CHECK(validate_category_data(s3, Cochain::zero_on_group(s3, 3), ht, Cochain::zero(ht, 2)).ok);

  // d psi = omega|_H fails: the restriction of the order-4 associator to the
  // order-2 subgroup is nonzero but psi = 0.
  FiniteGroup z4 = cyclic_group(4);
  Subgroup h2(z4, {0, 2});
  ValidationResult bad = validate_category_data(z4, zn_omega(z4, 1), h2, Cochain::zero(h2, 2));
  CHECK_FALSE(bad.ok);
  CHECK(bad.message.find("d psi != omega|_H") != std::string::npos);
  CHECK_THROWS_AS(make_category(z4, zn_omega(z4, 1), h2, Cochain::zero(h2, 2)),
                  std::invalid_argument);

  // A perturbed associator is rejected with the violating 4-tuple.
  Cochain notco = Cochain::zero_on_group(z4, 3);
  notco.set(1, 1, 1, Phase(1, 3));
  ValidationResult nc = validate_category_data(z4, notco, h2, Cochain::zero(h2, 2));
  CHECK_FALSE(nc.ok);
  CHECK(nc.message.find("not a 3-cocycle") != std::string::npos);
  CHECK(nc.message.find("(") != std::string::npos);

  // Scaling by 2 makes the associator trivial on the subgroup; psi = 0 works.
  CHECK(validate_category_data(z4, zn_omega(z4, 2), h2, Cochain::zero(h2, 2)).ok);
}

TEST_CASE("simple objects and their dimensions") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  GTCategoryData c = make_category_trivial(s3, ht);
  CHECK(fpdims(c) == std::vector<long long>{1, 1, 2});

  // H = {e}: pointed category with |G| invertible simples.
  GTCategoryData vec = make_category_trivial(s3, trivial_subgroup(s3));
  CHECK(fpdims(vec) == std::vector<long long>(6, 1));

  // H = G: the representation category of G.
  GTCategoryData rep = make_category_trivial(s3, full_subgroup(s3));
  CHECK(fpdims(rep) == std::vector<long long>{1, 1, 2});
  FiniteGroup d8 = dihedral8();
  GTCategoryData repd8 = make_category_trivial(d8, full_subgroup(d8));
  CHECK(fpdims(repd8) == std::vector<long long>{1, 1, 1, 1, 2});
}

TEST_CASE("double of S3 via the diagonal") {
  FiniteGroup s3 = symmetric_group(3);
  DrinfeldDoubleData dd = drinfeld_double_data(s3);
  CHECK(dd.data.cosets.representatives.size() == conjugacy_classes(s3).size());
  std::vector<long long> dims = fpdims(dd.data);
  CHECK(dims == std::vector<long long>{1, 1, 2, 2, 2, 2, 3, 3});

  // Independent oracle: one family per conjugacy class of G, dimensions
  // |class| * (irreducible degrees of the centralizer of a class member).
  std::vector<long long> oracle;
  for (const auto& cl : conjugacy_classes(s3)) {
    Subgroup cent = centralizer(s3, cl.front());
    GroupWithMap cg = subgroup_as_group(cent);
    for (int d : irreducible_degrees(cg.group))
      oracle.push_back(static_cast<long long>(cl.size()) * d);
  }
  std::sort(oracle.begin(), oracle.end());
  CHECK(dims == oracle);

  DrinfeldDoubleData z2d = drinfeld_double_data(cyclic_group(2));
  CHECK(fpdims(z2d.data) == std::vector<long long>(4, 1));
}

TEST_CASE("grading by double cosets") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  GTCategoryData c = make_category_trivial(s3, ht);
  GradingReport g = grading(c, enumerate_simples(c));
  CHECK(g.simples_per_coset == std::vector<int>{2, 1});
  CHECK(g.trivial_component_simples == 2);  // class count of Z2
  CHECK(g.trivial_component_is_rep_H);
  CHECK(g.psi_1_trivial);
  CHECK(g.faithful_support);

  // H = G: a single component holding every simple.
  GTCategoryData rep = make_category_trivial(s3, full_subgroup(s3));
  GradingReport gr = grading(rep, enumerate_simples(rep));
  CHECK(gr.simples_per_coset == std::vector<int>{3});
  CHECK(gr.trivial_component_is_rep_H);

  // Double of S3: components of sizes {3, 2, 3}, trivial one first.
  DrinfeldDoubleData dd = drinfeld_double_data(s3);
  GradingReport gd = grading(dd.data, enumerate_simples(dd.data));
  CHECK(gd.trivial_component_simples == 3);
  std::vector<int> per = gd.simples_per_coset;
  std::sort(per.begin(), per.end());
  CHECK(per == std::vector<int>{2, 3, 3});
  CHECK(gd.trivial_component_is_rep_H);
  CHECK(gd.faithful_support);
}

TEST_CASE("nilpotency verdicts") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  NilpotencyReport r1 = nilpotency(make_category_trivial(s3, ht));
  CHECK_FALSE(r1.nilpotent);
  CHECK(r1.routes_agree);

  FiniteGroup d8 = dihedral8();
  Subgroup hs = subgroup_generated(d8, {4});
  NilpotencyReport r2 = nilpotency(make_category_trivial(d8, hs));
  REQUIRE(r2.nilpotent);
  CHECK(r2.cl_H == 1);
  CHECK(r2.defect == 2);
  CHECK(r2.ring_class == 2);
  CHECK(r2.lower_bound == 1);
  CHECK(r2.upper_bound == 3);

  // H = G with G nilpotent: class bounds collapse to cl(G).
  NilpotencyReport r3 = nilpotency(make_category_trivial(d8, full_subgroup(d8)));
  REQUIRE(r3.nilpotent);
  CHECK(r3.lower_bound == 2);
  CHECK(r3.upper_bound == 2);

  DrinfeldDoubleData ds3 = drinfeld_double_data(s3);
  CHECK_FALSE(nilpotency(ds3.data).nilpotent);
  DrinfeldDoubleData dd8 = drinfeld_double_data(d8);
  CHECK(nilpotency(dd8.data).nilpotent);
}

TEST_CASE("nilpotency routes agree on a corpus") {
  int checked = 0;
  for (const char* name : {"S3", "D8", "Q8", "A4", "Z6", "Z4"}) {
    FiniteGroup G = *builtin_group(name);
    std::set<std::vector<int>> done;
    std::vector<std::vector<int>> seeds = {{}};
    for (int a = 0; a < G.order(); ++a) seeds.push_back({a});
    for (const auto& s : seeds) {
      Subgroup H = subgroup_generated(G, s);
      if (!done.insert(H.members()).second) continue;
      // nilpotency() itself throws if the group-theoretic and based-ring
      // routes disagree.
      CHECK(nilpotency(make_category_trivial(G, H)).routes_agree);
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("group of invertible objects") {
  FiniteGroup s3 = symmetric_group(3);

  // Pointed case: every simple is invertible and the group is G itself.
  GTCategoryData vec = make_category_trivial(s3, trivial_subgroup(s3));
  InvertibleGroupPresentation pv = invertible_group(vec);
  CHECK(pv.group.order() == 6);
  CHECK_FALSE(is_abelian(pv.group));
  CHECK(pv.group.order() == count_fpdim_one(vec));

  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  GTCategoryData ct = make_category_trivial(s3, ht);
  InvertibleGroupPresentation pt = invertible_group(ct);
  CHECK(pt.group.order() == 2);
  CHECK(pt.group.order() == count_fpdim_one(ct));

  // Normal H = A3: two cosets times three characters, non-abelian of order 6.
  Subgroup a3 = subgroup_generated(s3, {element_of_order(s3, 3)});
  GTCategoryData ca = make_category_trivial(s3, a3);
  InvertibleGroupPresentation pa = invertible_group(ca);
  CHECK(pa.group.order() == 6);
  CHECK_FALSE(is_abelian(pa.group));
  CHECK(pa.group.order() == count_fpdim_one(ca));
}

TEST_CASE("invertible count matches the unit-dimension simples on twisted instances") {
  FiniteGroup z4 = cyclic_group(4);
  Subgroup h2(z4, {0, 2});
  GTCategoryData c1 = make_category(z4, zn_omega(z4, 2), h2, Cochain::zero(h2, 2));
  CHECK(invertible_group(c1).group.order() == count_fpdim_one(c1));

  FiniteGroup cube = *builtin_group("Z2xZ2xZ2");
  Subgroup hc = subgroup_generated(cube, {4, 2});
  GTCategoryData c2 = make_category(cube, z2cube_cup(cube), hc, Cochain::zero(hc, 2));
  CHECK(invertible_group(c2).group.order() == count_fpdim_one(c2));

  FiniteGroup d8 = dihedral8();
  Subgroup zc = center(d8);
  Cochain psic = Cochain::zero(zc, 2);
  psic.set(2, 2, Phase(1, 2));
  GTCategoryData c3 = make_category(d8, Cochain::zero_on_group(d8, 3), zc, psic);
  CHECK(invertible_group(c3).group.order() == count_fpdim_one(c3));

  FiniteGroup z2z4 = *builtin_group("Z2xZ4");
  SymplecticInstance si = z2z4_symplectic(z2z4);
  GTCategoryData c4 = make_category(z2z4, Cochain::zero_on_group(z2z4, 3), si.V, si.psi);
  CHECK(invertible_group(c4).group.order() == count_fpdim_one(c4));
}

TEST_CASE("universal grading group") {
  FiniteGroup z6 = cyclic_group(6);
  UniversalGradingPresentation u1 = universal_grading(make_category_trivial(z6, full_subgroup(z6)));
  CHECK(u1.order == 6);
  CHECK(is_abelian(u1.group));
  // Same multiset of element orders as Z6 (decisive for abelian groups).
  std::multiset<int> orders, z6orders;
  for (int a = 0; a < 6; ++a) {
    orders.insert(element_order(u1.group, a));
    z6orders.insert(element_order(z6, a));
  }
  CHECK(orders == z6orders);

  FiniteGroup d8 = dihedral8();
  UniversalGradingPresentation u2 = universal_grading(make_category_trivial(d8, full_subgroup(d8)));
  CHECK(u2.order == 2);
  CHECK(u2.adjoint_component_simples == 4);  // D8/Z(D8) is Klein four

  FiniteGroup s3 = symmetric_group(3);
  Subgroup a3 = subgroup_generated(s3, {element_of_order(s3, 3)});
  UniversalGradingPresentation u3 = universal_grading(make_category_trivial(s3, a3));
  CHECK(u3.order == 6);
  CHECK_FALSE(is_abelian(u3.group));

  // Pointed case: the grading group is G itself.
  UniversalGradingPresentation u4 = universal_grading(make_category_trivial(s3, trivial_subgroup(s3)));
  CHECK(u4.order == 6);
  CHECK_FALSE(is_abelian(u4.group));

  // Rejected for non-normal H and for a nonzero associator.
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  CHECK_THROWS_AS(universal_grading(make_category_trivial(s3, ht)), std::invalid_argument);
  FiniteGroup z4 = cyclic_group(4);
  Subgroup h2(z4, {0, 2});
  GTCategoryData tw = make_category(z4, zn_omega(z4, 2), h2, Cochain::zero(h2, 2));
  CHECK_THROWS_AS(universal_grading(tw), std::invalid_argument);
}
