// gtcat: analyses of group-theoretical categories C(G, omega, H, psi) built
// from finite-group data: double coset rings, nilpotency, simple and
// invertible objects, universal gradings, Drinfeld doubles, and a verifier
// for the algebraic identities the whole construction rests on.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gtcat/based_ring.hpp"
#include "gtcat/bimodule.hpp"
#include "gtcat/builtin_groups.hpp"
#include "gtcat/category.hpp"
#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"
#include "gtcat/io.hpp"

namespace {

using namespace gtcat;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitParse = 3;

struct Options {
  std::string group = "builtin:S3";
  std::string subgroup;
  std::string omega = "zero";
  std::string psi = "zero";
  std::string format = "text";
  std::string output;
  unsigned seed = 0;
  int cap = kDefaultGroupCap;
};

// The category data keeps pointers into the group, so the instance owns the
// group on the heap for a stable address.
struct Instance {
  std::shared_ptr<const FiniteGroup> G;
  Subgroup H;
  GTCategoryData data;

  const FiniteGroup& group() const { return *G; }
};

Instance load_instance(const Options& opt) {
  auto G = std::make_shared<const FiniteGroup>(resolve_group(opt.group, opt.cap));
  Subgroup H = resolve_subgroup(*G, opt.subgroup);
  Cochain omega = resolve_cochain(opt.omega, *G, H, 3);
  Cochain psi = resolve_cochain(opt.psi, *G, H, 2);
  GTCategoryData data = make_category(*G, std::move(omega), H, std::move(psi));
  return {std::move(G), std::move(H), std::move(data)};
}

void emit(const Options& opt, const std::string& text, const json& j) {
  std::string body = opt.format == "json" ? j.dump(2) + "\n" : text;
  if (opt.output.empty() || opt.output == "-") {
    std::cout << body;
  } else {
    std::ofstream out(opt.output);
    if (!out) throw ParseError("cannot write output file: " + opt.output);
    out << body;
  }
}

json instance_json(const Instance& inst) {
  json j;
  j["group"] = inst.group().name().empty() ? "(table)" : inst.group().name();
  j["group_order"] = inst.group().order();
  json hm = json::array();
  for (int h : inst.H.members()) hm.push_back(inst.group().element_name(h));
  j["subgroup"] = hm;
  j["omega_zero"] = inst.data.omega.is_zero();
  j["psi_zero"] = inst.data.psi.is_zero();
  return j;
}

int cmd_ring(const Options& opt) {
  Instance inst = load_instance(opt);
  DoubleCosetRing R = double_coset_ring(inst.group(), inst.H);
  AdjointSeries as = adjoint_series(R.ring);

  std::ostringstream text;
  text << "double coset ring R(G,H): rank " << R.ring.rank << "\n";
  text << "basis:";
  for (const auto& l : R.ring.labels) text << " " << l;
  text << "\nadjoint series ranks:";
  for (const auto& s : as.series) text << " " << s.size();
  text << "\nnilpotent: " << (as.nilpotent ? "yes" : "no");
  if (as.clazz) text << " (class " << *as.clazz << ")";
  text << "\nGamma chain:";
  for (const auto& s : as.series) {
    Subgroup gamma = gamma_of_subring(inst.group(), R.cosets, s);
    text << " |" << gamma.size() << "|";
  }
  text << "\n";

  json j = instance_json(inst);
  j["rank"] = R.ring.rank;
  j["labels"] = R.ring.labels;
  j["star"] = R.ring.star;
  j["structure_constants"] = R.ring.N;
  json ranks = json::array();
  json gammas = json::array();
  for (const auto& s : as.series) {
    ranks.push_back(s.size());
    Subgroup gamma = gamma_of_subring(inst.group(), R.cosets, s);
    json members = json::array();
    for (int x : gamma.members()) members.push_back(inst.group().element_name(x));
    gammas.push_back(members);
  }
  j["adjoint_series_ranks"] = ranks;
  j["gamma_chain"] = gammas;
  j["nilpotent"] = as.nilpotent;
  if (as.clazz) j["nilpotency_class"] = *as.clazz;
  emit(opt, text.str(), j);
  return kExitOk;
}

int cmd_nilpotency(const Options& opt) {
  Instance inst = load_instance(opt);
  NilpotencyReport rep = nilpotency(inst.data);
  Subgroup closure = normal_closure(inst.group(), inst.H);

  std::ostringstream text;
  text << "category " << (rep.nilpotent ? "nilpotent" : "not nilpotent")
       << "; normal closure of H has order " << closure.size() << "\n";
  if (rep.cl_H) text << "cl(H) = " << *rep.cl_H << "\n";
  if (rep.defect) text << "defect of H in G = " << *rep.defect << "\n";
  if (rep.lower_bound)
    text << "bounds: " << *rep.lower_bound << " <= cl(C) <= " << *rep.upper_bound << "\n";
  if (rep.ring_class) text << "double coset ring nilpotency class = " << *rep.ring_class << "\n";
  text << "routes agree: " << (rep.routes_agree ? "yes" : "no") << "\n";

  json j = instance_json(inst);
  j["nilpotent"] = rep.nilpotent;
  j["normal_closure_order"] = closure.size();
  if (rep.cl_H) j["cl_H"] = *rep.cl_H;
  if (rep.defect) j["defect"] = *rep.defect;
  if (rep.lower_bound) j["lower_bound"] = *rep.lower_bound;
  if (rep.upper_bound) j["upper_bound"] = *rep.upper_bound;
  if (rep.ring_class) j["ring_class"] = *rep.ring_class;
  j["routes_agree"] = rep.routes_agree;
  emit(opt, text.str(), j);
  return kExitOk;
}

void report_simples(const Options& opt, const Instance& inst) {
  auto simples = enumerate_simples(inst.data);
  GradingReport gr = grading(inst.data, simples);

  std::ostringstream text;
  long long total = 0;
  text << "simple objects (" << simples.size() << "):\n";
  for (const auto& s : simples) {
    text << "  coset " << s.coset_index << " (g = " << inst.group().element_name(s.g) << "), rep #"
         << s.rep_label << ", dim rho = " << s.dim_rho << ", fpdim = " << s.fpdim << "\n";
    total += s.fpdim * s.fpdim;
  }
  text << "sum of fpdim^2 = " << total << " (|G| = " << inst.group().order() << ")\n";
  text << "trivial component simples = " << gr.trivial_component_simples
       << (gr.trivial_component_is_rep_H ? " (= class count of H)" : " (MISMATCH)") << "\n";
  text << "psi^1 trivial: " << (gr.psi_1_trivial ? "yes" : "no")
       << "; grading support faithful: " << (gr.faithful_support ? "yes" : "no") << "\n";

  json j = instance_json(inst);
  json arr = json::array();
  for (const auto& s : simples)
    arr.push_back({{"g", inst.group().element_name(s.g)},
                   {"coset", s.coset_index},
                   {"rep", s.rep_label},
                   {"dim_rho", s.dim_rho},
                   {"fpdim", s.fpdim}});
  j["simples"] = arr;
  j["fpdim_square_sum"] = total;
  j["trivial_component_simples"] = gr.trivial_component_simples;
  j["trivial_component_is_rep_H"] = gr.trivial_component_is_rep_H;
  j["psi_1_trivial"] = gr.psi_1_trivial;
  j["faithful_support"] = gr.faithful_support;
  emit(opt, text.str(), j);
}

int cmd_simples(const Options& opt) {
  Instance inst = load_instance(opt);
  report_simples(opt, inst);
  return kExitOk;
}

int cmd_invertibles(const Options& opt) {
  Instance inst = load_instance(opt);
  InvertibleGroupPresentation inv = invertible_group(inst.data);

  std::ostringstream text;
  text << "invertible objects form K |x_nu H-hat of order " << inv.group.order() << "\n";
  text << "|K| = " << inv.K.size() << ", |H-hat| = " << inv.h_hat.size() << "\n";
  text << "K representatives:";
  for (int g : inv.K) text << " " << inst.group().element_name(g);
  text << "\nabelian: " << (is_abelian(inv.group) ? "yes" : "no") << "\n";

  json j = instance_json(inst);
  j["order"] = inv.group.order();
  json ks = json::array();
  for (int g : inv.K) ks.push_back(inst.group().element_name(g));
  j["K"] = ks;
  j["character_count"] = inv.h_hat.size();
  j["abelian"] = is_abelian(inv.group);
  json nuv = json::array();
  for (const auto& [key, chi] : inv.nu)
    nuv.push_back({{"g1", inst.group().element_name(key.first)},
                   {"g2", inst.group().element_name(key.second)},
                   {"nu_character", chi}});
  j["nu"] = nuv;
  j["element_names"] = inv.group.element_names();
  emit(opt, text.str(), j);
  return kExitOk;
}

int cmd_ugrading(const Options& opt) {
  Instance inst = load_instance(opt);
  UniversalGradingPresentation u = universal_grading(inst.data);

  std::ostringstream text;
  text << "universal grading group of order " << u.order << " = |Z(H)| * |G| / |H|\n";
  text << "G/H order " << u.quotient.order() << ", Z(H) order " << u.center_of_H.order() << "\n";
  text << "abelian: " << (is_abelian(u.group) ? "yes" : "no") << "\n";
  text << "adjoint component simple count (Rep(H/Z(H))): " << u.adjoint_component_simples << "\n";

  json j = instance_json(inst);
  j["order"] = u.order;
  j["quotient_order"] = u.quotient.order();
  j["center_order"] = u.center_of_H.order();
  j["abelian"] = is_abelian(u.group);
  j["element_names"] = u.group.element_names();
  j["adjoint_component_simples"] = u.adjoint_component_simples;
  emit(opt, text.str(), j);
  return kExitOk;
}

int cmd_double(const Options& opt) {
  FiniteGroup G = resolve_group(opt.group, opt.cap);
  DrinfeldDoubleData dd = drinfeld_double_data(G, opt.cap);
  // Alias the instance's group handle to the heap-owned product group.
  std::shared_ptr<const FiniteGroup> owner(dd.product, &dd.product->group);
  Instance inst{std::move(owner), dd.data.H, std::move(dd.data)};
  report_simples(opt, inst);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  Instance inst = load_instance(opt);
  const FiniteGroup& G = inst.group();
  const Subgroup& H = inst.H;
  const GTCategoryData& data = inst.data;
  std::mt19937 rng(opt.seed);
  std::ostringstream text;
  bool ok = true;
  auto record = [&](const std::string& name, bool pass) {
    text << (pass ? "PASS " : "FAIL ") << name << "\n";
    ok = ok && pass;
  };

  // psi^g is a 2-cocycle for every representative.
  bool cocycles = true;
  for (int g : data.cosets.representatives)
    cocycles = cocycles && is_cocycle(psi_g(data.omega, data.psi, H, g));
  record("psi^g cocycle law on all double coset representatives", cocycles);

  // beta relation on all normalizer pairs.
  Subgroup N = normalizer(G, H);
  bool beta_ok = true;
  std::vector<int> nreps;
  for (int g : data.cosets.representatives)
    if (N.contains(g)) nreps.push_back(g);
  for (int g1 : nreps)
    for (int g2 : nreps) {
      int g3 = data.cosets.representatives[data.cosets.membership[G.mul(g1, g2)]];
      Cochain lhs = psi_g(data.omega, data.psi, H, g3);
      Cochain beta = beta_cochain(data.omega, data.psi, H, data.cosets, g1, g2);
      Cochain rhs = coboundary(beta) + psi_g(data.omega, data.psi, H, g1) +
                    conjugate_cochain(psi_g(data.omega, data.psi, H, g2), g1);
      beta_ok = beta_ok && lhs == rhs;
    }
  record("beta relation on all normalizer pairs", beta_ok);

  // Global dimension and grading.
  bool dims_ok = true;
  try {
    auto simples = enumerate_simples(data);
    GradingReport gr = grading(data, simples);
    dims_ok = gr.trivial_component_is_rep_H && gr.psi_1_trivial && gr.faithful_support;
  } catch (const std::exception&) {
    dims_ok = false;
  }
  record("global dimension and trivial grading component", dims_ok);

  // Bimodule axioms for sampled (g, 1-dim rho) pairs.
  bool bimod_ok = true;
  int built = 0;
  for (int g : data.cosets.representatives) {
    Subgroup Hg = intersect(H, conjugate_subgroup(H, g));
    Cochain pg = psi_g(data.omega, data.psi, H, g);
    TrivializationResult t = trivialize(pg);
    if (!t.trivial) continue;  // 1-dimensional reps need a trivialized cocycle
    GradedBimodule B = build_bimodule(data, g, character_rep(Hg, *t.witness));
    BimoduleCheckResult c = check_bimodule_axioms(data, B);
    bimod_ok = bimod_ok && c.ok;
    ScalarRep back = extract_rep(data, B);
    for (int h : Hg.members())
      bimod_ok = bimod_ok && back.mats.at(h).scalar_value() == (*t.witness)(h);
    ++built;
    if (built >= 8) break;
  }
  record("bimodule axioms and extract round-trip on trivializable cosets", bimod_ok);

  // Tensor product of invertibles against the beta-twisted product law.
  bool tensor_ok = true;
  try {
    InvertibleGroupPresentation inv = invertible_group(data);
    std::vector<InvertiblePair> pairs;
    for (int g : inv.K) pairs.push_back({g, inv.eta.at(g)});
    for (const auto& p1 : pairs)
      for (const auto& p2 : pairs) {
        InvertiblePair got = tensor_invertibles(data, p1, p2);
        Cochain want = expected_tensor_character(data, p1, p2);
        tensor_ok = tensor_ok && got.chi == want;
      }
  } catch (const std::exception&) {
    tensor_ok = false;
  }
  record("invertible tensor products match the beta formula", tensor_ok);

  text << (ok ? "all identities verified" : "verification FAILED") << "\n";
  json j = instance_json(inst);
  j["ok"] = ok;
  j["seed"] = opt.seed;
  emit(opt, text.str(), j);
  return ok ? kExitOk : kExitVerification;
}

int cmd_catalog(const Options& opt) {
  std::ostringstream text;
  text << "builtin groups:\n";
  for (const auto& name : builtin_group_catalog()) text << "  " << name << "\n";
  text << "builtin cochains:\n";
  text << "  zn_omega:k   (3-cochain on a cyclic group)\n";
  text << "  z2cube_cup   (3-cochain on Z2xZ2xZ2)\n";
  text << "  symplectic   (2-cochain on a Klein four subgroup; alias z2z2_symplectic)\n";
  json j;
  j["groups"] = builtin_group_catalog();
  j["cochains"] = {"zn_omega", "z2cube_cup", "symplectic"};
  emit(opt, text.str(), j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyses of group-theoretical fusion categories from finite-group data"};
  app.require_subcommand(1);

  Options opt;
  if (const char* cap = std::getenv("GTCAT_CAP")) {
    try {
      opt.cap = std::stoi(cap);
    } catch (...) {
      std::cerr << "bad GTCAT_CAP value\n";
      return kExitParse;
    }
  }

  auto add_common = [&](CLI::App* sub, bool needs_subgroup) {
    sub->add_option("--group", opt.group, "builtin:NAME or a group JSON file");
    if (needs_subgroup)
      sub->add_option("--subgroup", opt.subgroup,
                      "generators (names or indices), or center/full/trivial");
    sub->add_option("--omega", opt.omega, "zero, builtin:NAME[:k], or a cochain JSON file");
    sub->add_option("--psi", opt.psi, "zero, builtin:NAME, or a cochain JSON file");
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", opt.output, "output path (default stdout)");
    sub->add_option("--seed", opt.seed, "seed for randomized verification");
    sub->add_option("--cap", opt.cap, "group order cap");
  };

  auto* ring = app.add_subcommand("ring", "double coset ring and adjoint series");
  auto* nilp = app.add_subcommand("nilpotency", "nilpotency verdict, class bounds, defect");
  auto* simples = app.add_subcommand("simples", "simple objects and grading");
  auto* inv = app.add_subcommand("invertibles", "group of invertible objects");
  auto* ugr = app.add_subcommand("ugrading", "universal grading group");
  auto* dbl = app.add_subcommand("double", "Drinfeld double Rep(D(G)) simples");
  auto* verify = app.add_subcommand("verify", "exhaustive identity verification");
  auto* catalog = app.add_subcommand("catalog", "list builtin groups and cochains");
  for (auto* sub : {ring, nilp, simples, inv, ugr, verify}) add_common(sub, true);
  add_common(dbl, false);
  catalog->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (ring->parsed()) return cmd_ring(opt);
    if (nilp->parsed()) return cmd_nilpotency(opt);
    if (simples->parsed()) return cmd_simples(opt);
    if (inv->parsed()) return cmd_invertibles(opt);
    if (ugr->parsed()) return cmd_ugrading(opt);
    if (dbl->parsed()) return cmd_double(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (catalog->parsed()) return cmd_catalog(opt);
  } catch (const gtcat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitParse;
}
