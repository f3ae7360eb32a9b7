#include <catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "gtcat/bimodule.hpp"
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

// 1-cochain on H from a character value table (indexed by member position).
Cochain char_cochain(const Subgroup& H, const std::vector<Phase>& vals) {
  Cochain chi(H.parent(), H.members(), 1);
  const auto& mem = H.members();
  for (size_t i = 0; i < mem.size(); ++i)
    if (mem[i] != 0) chi.set(mem[i], vals[i]);
  return chi;
}

}  // namespace

TEST_CASE("phase matrix algebra") {
  PhaseMatrix I = PhaseMatrix::identity(2);
  PhaseMatrix S = PhaseMatrix::scalar(2, Phase(1, 3));
  CHECK((I * I) == I);
  CHECK((I * S) == S);
  CHECK((S * S) == PhaseMatrix::scalar(2, Phase(2, 3)));
  CHECK(S.scaled(Phase(2, 3)) == PhaseMatrix::identity(2));
  CHECK(PhaseMatrix::scalar(1, Phase(1, 4)).scalar_value() == Phase(1, 4));
  CHECK_THROWS_AS(I.scalar_value(), std::logic_error);

  // X * X = I for the swap; a matrix with a full column breaks monomiality.
  PhaseMatrix X(2, 2);
  X.at(0, 1) = Phase();
  X.at(1, 0) = Phase();
  CHECK((X * X) == I);
  // A full row against a full column adds two nonzero entries in one cell.
  PhaseMatrix row(2, 2), col(2, 2);
  row.at(0, 0) = Phase();
  row.at(0, 1) = Phase();
  col.at(0, 0) = Phase();
  col.at(1, 0) = Phase();
  CHECK_THROWS_AS(row * col, std::domain_error);
  CHECK_THROWS_AS(X * PhaseMatrix(3, 3), std::invalid_argument);
}

TEST_CASE("scalar representation checks") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  CHECK_FALSE(check_scalar_rep(trivial_rep(ht), Cochain::zero(ht, 2)).has_value());

  // A character is a projective rep with cocycle d chi.
  FiniteGroup z4 = cyclic_group(4);
  Subgroup wz4 = full_subgroup(z4);
  Cochain chi(z4, wz4.members(), 1);
  chi.set(1, Phase(1, 8));
  chi.set(2, Phase(1, 4));
  chi.set(3, Phase(3, 8));
  CHECK_FALSE(check_scalar_rep(character_rep(wz4, chi), coboundary(chi)).has_value());
  CHECK(check_scalar_rep(character_rep(wz4, chi), Cochain::zero(wz4, 2)).has_value());

  // The monomial two-dimensional rep of Klein four satisfies exactly the
  // symplectic cocycle, over every ordered pair of arguments.
  FiniteGroup v4 = klein_four();
  Subgroup v = full_subgroup(v4);
  ScalarRep pr = pauli_rep(v, 1, 2);
  Cochain sy = symplectic_cochain(v, 1, 2);
  CHECK_FALSE(check_scalar_rep(pr, sy).has_value());
  auto err = check_scalar_rep(pr, Cochain::zero(v, 2));
  REQUIRE(err.has_value());
  CHECK(err->find("projective law") != std::string::npos);
  CHECK_THROWS_AS(pauli_rep(v, 1, 1), std::invalid_argument);
}

TEST_CASE("regular bimodule of the unit coset") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  GTCategoryData data = make_category_trivial(s3, ht);
  GradedBimodule B = build_bimodule(data, 0, trivial_rep(ht));
  CHECK(B.support == ht.members());
  CHECK(check_bimodule_axioms(data, B).ok);
  // Everything trivial: each action matrix is the identity.
  for (const auto& [key, m] : B.l) CHECK(m == PhaseMatrix::identity(1));
  for (const auto& [key, m] : B.r) CHECK(m == PhaseMatrix::identity(1));
}

TEST_CASE("bimodule over the big double coset of S3") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  GTCategoryData data = make_category_trivial(s3, ht);
  int g = data.cosets.representatives[1];
  Subgroup hg = intersect(data.H, conjugate_subgroup(data.H, g));
  REQUIRE(hg.size() == 1);
  GradedBimodule B = build_bimodule(data, g, trivial_rep(hg));
  CHECK(B.support.size() == 4);
  CHECK(check_bimodule_axioms(data, B).ok);

  // g must be the stored representative of its coset.
  int other = -1;
  for (int x : B.support)
    if (x != g) { other = x; break; }
  CHECK_THROWS_AS(build_bimodule(data, other, trivial_rep(hg)), std::invalid_argument);

  // Corrupting a single left-action entry is caught and located.
  GradedBimodule bad = B;
  bad.l.begin()->second = bad.l.begin()->second.scaled(Phase(1, 3));
  BimoduleCheckResult r = check_bimodule_axioms(data, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("law fails at") != std::string::npos);
}

TEST_CASE("two-dimensional bimodule over the twisted cube") {
  FiniteGroup cube = *builtin_group("Z2xZ2xZ2");
  Subgroup H = subgroup_generated(cube, {4, 2});
  GTCategoryData data = make_category(cube, z2cube_cup(cube), H, Cochain::zero(H, 2));
  REQUIRE(data.cosets.representatives.size() == 2);
  int g = data.cosets.representatives[1];

  // H^g = H (abelian group); the twisted cocycle at g is exactly the
  // symplectic one, so the monomial two-dimensional rep matches it.
  Cochain pg = psi_g(data.omega, data.psi, H, g);
  CHECK(pg == symplectic_cochain(H, 4, 2));
  ScalarRep rho = pauli_rep(H, 4, 2);
  GradedBimodule B = build_bimodule(data, g, rho);
  CHECK(B.dim == 2);
  CHECK(B.support.size() == 4);
  CHECK(check_bimodule_axioms(data, B).ok);

  // The rep extracted from the actions equals the one we fed in.
  ScalarRep back = extract_rep(data, B);
  for (int h : H.members()) CHECK(back.mats.at(h) == rho.mats.at(h));
}

TEST_CASE("extract_rep round-trips one-dimensional bimodules") {
  FiniteGroup d8 = dihedral8();
  Subgroup zc = center(d8);
  Cochain psic = Cochain::zero(zc, 2);
  psic.set(2, 2, Phase(1, 2));
  GTCategoryData data = make_category(d8, Cochain::zero_on_group(d8, 3), zc, psic);
  for (int g : data.cosets.representatives) {
    Cochain pg = psi_g(data.omega, data.psi, zc, g);
    TrivializationResult t = trivialize(pg);
    REQUIRE(t.trivial);
    for (const auto& cvals : character_group(zc)) {
      Cochain chi = *t.witness + char_cochain(zc, cvals);
      ScalarRep rho = character_rep(zc, chi);
      GradedBimodule B = build_bimodule(data, g, rho);
      CHECK(check_bimodule_axioms(data, B).ok);
      ScalarRep back = extract_rep(data, B);
      for (int h : zc.members()) CHECK(back.mats.at(h) == rho.mats.at(h));
    }
  }
}

TEST_CASE("tensor product of invertibles: unit law") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup ht = subgroup_generated(s3, {element_of_order(s3, 2)});
  GTCategoryData data = make_category_trivial(s3, ht);
  Cochain eta1 = -beta_cochain(data.omega, data.psi, ht, data.cosets, 0, 0);
  InvertiblePair unit{0, eta1};
  InvertiblePair p = tensor_invertibles(data, unit, unit);
  CHECK(p.g == 0);
  CHECK(p.chi == expected_tensor_character(data, unit, unit));
}

TEST_CASE("tensor product of invertibles matches the predicted character") {
  // Untwisted normal case: beta vanishes, so the product character is just
  // chi1 + ^{g1}chi2.
  FiniteGroup s3 = symmetric_group(3);
  Subgroup a3 = subgroup_generated(s3, {element_of_order(s3, 3)});
  GTCategoryData data = make_category_trivial(s3, a3);
  std::vector<InvertiblePair> pairs;
  for (int g : data.cosets.representatives)
    for (const auto& cvals : character_group(a3)) pairs.push_back({g, char_cochain(a3, cvals)});
  CHECK(pairs.size() == 6);
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      InvertiblePair p = tensor_invertibles(data, a, b);
      Cochain want = expected_tensor_character(data, a, b);
      CHECK(p.g ==
            data.cosets.representatives[data.cosets.membership[s3.mul(a.g, b.g)]]);
      CHECK(p.chi == want);
      CHECK(coboundary(p.chi) == psi_g(data.omega, data.psi, a3, p.g));
    }
}

TEST_CASE("tensor product of invertibles on a twisted instance") {
  FiniteGroup d8 = dihedral8();
  Subgroup zc = center(d8);
  Cochain psic = Cochain::zero(zc, 2);
  psic.set(2, 2, Phase(1, 2));
  GTCategoryData data = make_category(d8, Cochain::zero_on_group(d8, 3), zc, psic);
  std::vector<InvertiblePair> pairs;
  for (int g : data.cosets.representatives) {
    TrivializationResult t = trivialize(psi_g(data.omega, data.psi, zc, g));
    REQUIRE(t.trivial);
    for (const auto& cvals : character_group(zc))
      pairs.push_back({g, *t.witness + char_cochain(zc, cvals)});
  }
  CHECK(pairs.size() == 8);
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      InvertiblePair p = tensor_invertibles(data, a, b);
      CHECK(p.chi == expected_tensor_character(data, a, b));
    }
}
