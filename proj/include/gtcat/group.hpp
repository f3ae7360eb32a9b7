#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtcat {

inline constexpr int kDefaultGroupCap = 5000;
// Full associativity check up to this order; random sampling beyond.
inline constexpr int kFullAssocCheckCap = 512;

// A finite group stored as a dense Cayley table with elements 0..n-1 and the
// identity at index 0.  Immutable after construction.
class FiniteGroup {
 public:
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // g h g^-1
  int conj(int g, int h) const { return mul(mul(g, h), inv_[g]); }
  int pow(int a, long long e) const {
    int r = 0, base = a;
    if (e < 0) { base = inv_[a]; e = -e; }
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  const std::string& name() const { return name_; }
  std::string element_name(int a) const {
    if (a < 0 || a >= n_) throw std::out_of_range("element index");
    if (!names_.empty()) return names_[a];
    return std::to_string(a);
  }
  std::optional<int> element_by_name(const std::string& s) const {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i)
      if (names_[i] == s) return i;
    return std::nullopt;
  }
  const std::vector<std::string>& element_names() const { return names_; }

  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::string name = "",
                                std::vector<std::string> names = {}) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(table[i].size()) != n)
        throw std::invalid_argument("multiplication table is not square");
      for (int j = 0; j < n; ++j) {
        int v = table[i][j];
        if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
        flat[i * n + j] = v;
      }
    }
    // Locate the two-sided identity.
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j)
        if (flat[i * n + j] != j || flat[j * n + i] != j) ok = false;
      if (ok) e = i;
    }
    if (e < 0) throw std::invalid_argument("table has no identity element");
    if (e != 0) {
      // Relabel so the identity sits at index 0 (swap labels 0 and e).
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[0], perm[e]);
      std::vector<int> relabeled(flat.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          relabeled[i * n + j] = perm[flat[perm[i] * n + perm[j]]];
      flat.swap(relabeled);
      if (!names.empty()) std::swap(names[0], names[e]);
    }
    return FiniteGroup(n, std::move(flat), std::move(name), std::move(names));
  }

  // Permutations given as images of 0..degree-1.  Generators are closed under
  // products by breadth-first enumeration.
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& gens,
                                       std::string name = "",
                                       int cap = kDefaultGroupCap) {
    using Perm = std::vector<int>;
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != degree)
        throw std::invalid_argument("generator degree mismatch");
      std::vector<char> seen(degree, 0);
      for (int v : g) {
        if (v < 0 || v >= degree || seen[v])
          throw std::invalid_argument("generator is not a permutation");
        seen[v] = 1;
      }
    }
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    std::queue<int> todo;
    todo.push(0);
    auto compose = [&](const Perm& p, const Perm& q) {
      Perm r(degree);
      for (int i = 0; i < degree; ++i) r[i] = p[q[i]];
      return r;
    };
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop();
      for (const auto& g : gens) {
        Perm prod = compose(elems[cur], g);
        if (index.emplace(prod, static_cast<int>(elems.size())).second) {
          if (static_cast<int>(elems.size()) >= cap)
            throw std::runtime_error("generator closure exceeds size cap " + std::to_string(cap));
          elems.push_back(prod);
          todo.push(static_cast<int>(elems.size()) - 1);
        }
      }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[i][j] = index.at(compose(elems[i], elems[j]));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = cycle_notation(elems[i]);
    return from_table(table, std::move(name), std::move(names));
  }

  static std::string cycle_notation(const std::vector<int>& perm) {
    int d = static_cast<int>(perm.size());
    std::vector<char> done(d, 0);
    std::string out;
    for (int i = 0; i < d; ++i) {
      if (done[i] || perm[i] == i) { done[i] = 1; continue; }
      out += '(';
      int j = i;
      bool first = true;
      while (!done[j]) {
        done[j] = 1;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = perm[j];
      }
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

 private:
  FiniteGroup(int n, std::vector<int> flat, std::string name, std::vector<std::string> names)
      : n_(n), table_(std::move(flat)), name_(std::move(name)), names_(std::move(names)) {
    validate();
  }

  void validate() {
    // Latin square: every row and column is a permutation.
    std::vector<char> seen(n_);
    for (int i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < n_; ++j) {
        int v = table_[i * n_ + j];
        if (seen[v]) throw std::invalid_argument("table is not a Latin square (repeated entry in row)");
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < n_; ++j) {
        int v = table_[j * n_ + i];
        if (seen[v]) throw std::invalid_argument("table is not a Latin square (repeated entry in column)");
        seen[v] = 1;
      }
    }
    for (int j = 0; j < n_; ++j)
      if (table_[j] != j || table_[j * n_] != j)
        throw std::invalid_argument("index 0 is not the identity after relabeling");
    if (n_ <= kFullAssocCheckCap) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw std::invalid_argument("table is not associative");
    } else {
      std::mt19937 rng(0xA55A);
      std::uniform_int_distribution<int> dist(0, n_ - 1);
      for (int t = 0; t < 200000; ++t) {
        int a = dist(rng), b = dist(rng), c = dist(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("table is not associative");
      }
    }
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0) { inv_[a] = b; break; }
      if (inv_[a] < 0 || mul(inv_[a], a) != 0)
        throw std::invalid_argument("element without two-sided inverse");
    }
  }

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;
  std::vector<std::string> names_;
};

// Subgroup of a FiniteGroup: sorted member list plus O(1) membership mask.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<int> members)
      : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent.order(), 0);
    for (int m : members_) {
      if (m < 0 || m >= parent.order()) throw std::invalid_argument("subgroup member out of range");
      mask_[m] = 1;
    }
    if (members_.empty() || members_[0] != 0)
      throw std::invalid_argument("subgroup does not contain the identity");
    pos_.assign(parent.order(), -1);
    for (int i = 0; i < static_cast<int>(members_.size()); ++i) pos_[members_[i]] = i;
    for (int a : members_) {
      if (!mask_[parent.inv(a)]) throw std::invalid_argument("subgroup not closed under inverse");
      for (int b : members_)
        if (!mask_[parent.mul(a, b)]) throw std::invalid_argument("subgroup not closed under product");
    }
  }

  const FiniteGroup& parent() const { return *parent_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int g) const { return g >= 0 && g < static_cast<int>(mask_.size()) && mask_[g]; }
  // Position of g in the sorted member list, -1 if absent.
  int index_of(int g) const { return pos_[g]; }

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }

 private:
  const FiniteGroup* parent_;
  std::vector<int> members_;
  std::vector<char> mask_;
  std::vector<int> pos_;
};

inline Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::queue<int> todo;
  todo.push(0);
  for (int g : gens) {
    if (g < 0 || g >= G.order()) throw std::out_of_range("generator index out of range");
    if (!in[g]) { in[g] = 1; members.push_back(g); todo.push(g); }
  }
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop();
    for (size_t i = 0; i < members.size(); ++i) {
      int b = members[i];
      for (int p : {G.mul(a, b), G.mul(b, a)}) {
        if (!in[p]) { in[p] = 1; members.push_back(p); todo.push(p); }
      }
    }
  }
  return Subgroup(G, std::move(members));
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G, {0}); }

inline Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(G, std::move(all));
}

inline Subgroup center(const FiniteGroup& G) {
  std::vector<int> z;
  for (int a = 0; a < G.order(); ++a) {
    bool central = true;
    for (int b = 0; b < G.order() && central; ++b)
      if (G.mul(a, b) != G.mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return Subgroup(G, std::move(z));
}

inline Subgroup centralizer(const FiniteGroup& G, int h) {
  std::vector<int> c;
  for (int a = 0; a < G.order(); ++a)
    if (G.mul(a, h) == G.mul(h, a)) c.push_back(a);
  return Subgroup(G, std::move(c));
}

inline Subgroup conjugate_subgroup(const Subgroup& H, int g) {
  const FiniteGroup& G = H.parent();
  std::vector<int> m;
  m.reserve(H.size());
  for (int h : H.members()) m.push_back(G.conj(g, h));
  return Subgroup(G, std::move(m));
}

inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> n;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int h : H.members())
      if (!H.contains(G.conj(g, h))) { ok = false; break; }
    if (ok) n.push_back(g);
  }
  return Subgroup(G, std::move(n));
}

inline Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  std::vector<int> m;
  for (int a : A.members())
    if (B.contains(a)) m.push_back(a);
  return Subgroup(A.parent(), std::move(m));
}

inline bool is_subgroup_of(const Subgroup& A, const Subgroup& B) {
  for (int a : A.members())
    if (!B.contains(a)) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (int g = 0; g < G.order(); ++g)
    for (int h : H.members())
      if (!H.contains(G.conj(g, h))) return false;
  return true;
}

// Normal in the ambient group K (H must be contained in K).
inline bool is_normal_in(const Subgroup& K, const Subgroup& H) {
  const FiniteGroup& G = K.parent();
  for (int g : K.members())
    for (int h : H.members())
      if (!H.contains(G.conj(g, h))) return false;
  return true;
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<char> done(G.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < G.order(); ++a) {
    if (done[a]) continue;
    std::set<int> cls;
    for (int g = 0; g < G.order(); ++g) cls.insert(G.conj(g, a));
    std::vector<int> c(cls.begin(), cls.end());
    for (int x : c) done[x] = 1;
    classes.push_back(std::move(c));
  }
  // Deterministic order: by minimal element (the identity class comes first).
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return classes;
}

inline Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B) {
  const FiniteGroup& G = A.parent();
  std::vector<int> gens;
  for (int a : A.members())
    for (int b : B.members())
      gens.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  return subgroup_generated(G, gens);
}

inline Subgroup derived_subgroup(const FiniteGroup& G) {
  Subgroup whole = full_subgroup(G);
  return commutator_subgroup(whole, whole);
}

inline bool is_abelian(const FiniteGroup& G) {
  for (int a = 0; a < G.order(); ++a)
    for (int b = a + 1; b < G.order(); ++b)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

inline int element_order(const FiniteGroup& G, int a) {
  int x = a, k = 1;
  while (x != 0) { x = G.mul(x, a); ++k; }
  return k;
}

inline long long group_exponent(const FiniteGroup& G) {
  long long e = 1;
  for (int a = 0; a < G.order(); ++a) e = std::lcm(e, static_cast<long long>(element_order(G, a)));
  return e;
}

struct NilpotencyInfo {
  bool nilpotent = false;
  int clazz = -1;  // nilpotency class when nilpotent
  std::vector<Subgroup> lower_central_series;
};

inline NilpotencyInfo nilpotency_of_group(const FiniteGroup& G) {
  NilpotencyInfo out;
  Subgroup whole = full_subgroup(G);
  out.lower_central_series.push_back(whole);
  while (true) {
    Subgroup next = commutator_subgroup(out.lower_central_series.back(), whole);
    if (next == out.lower_central_series.back()) break;
    out.lower_central_series.push_back(next);
    if (next.size() == 1) break;
  }
  if (out.lower_central_series.back().size() == 1) {
    out.nilpotent = true;
    out.clazz = static_cast<int>(out.lower_central_series.size()) - 1;
  }
  return out;
}

inline NilpotencyInfo nilpotency_of_subgroup(const Subgroup& H);

// Smallest subgroup of K containing all K-conjugates of H.  H must lie in K.
inline Subgroup normal_closure_in(const Subgroup& K, const Subgroup& H) {
  const FiniteGroup& G = K.parent();
  std::vector<int> gens;
  for (int k : K.members())
    for (int h : H.members())
      gens.push_back(G.conj(k, h));
  return subgroup_generated(G, gens);
}

inline Subgroup normal_closure(const FiniteGroup& G, const Subgroup& H) {
  return normal_closure_in(full_subgroup(G), H);
}

struct SubnormalSeries {
  std::vector<Subgroup> terms;  // G = H^(G,0) >= H^(G,1) >= ... until stabilization
  bool subnormal = false;       // series stabilizes at H itself
  std::optional<int> defect;    // first index with term == H, when subnormal
};

inline SubnormalSeries successive_normal_closures(const FiniteGroup& G, const Subgroup& H) {
  SubnormalSeries out;
  out.terms.push_back(full_subgroup(G));
  while (true) {
    Subgroup next = normal_closure_in(out.terms.back(), H);
    if (next == out.terms.back()) break;
    out.terms.push_back(next);
  }
  const Subgroup& last = out.terms.back();
  if (last.members() == H.members()) {
    out.subnormal = true;
    for (int i = 0; i < static_cast<int>(out.terms.size()); ++i)
      if (out.terms[i].members() == H.members()) { out.defect = i; break; }
  }
  return out;
}

inline bool is_subnormal(const FiniteGroup& G, const Subgroup& H) {
  return successive_normal_closures(G, H).subnormal;
}

struct DoubleCosetDecomposition {
  std::vector<int> representatives;  // minimal element of each coset; identity coset first
  std::vector<int> membership;       // group element -> coset index
  std::vector<int> sizes;
};

inline DoubleCosetDecomposition double_cosets(const FiniteGroup& G, const Subgroup& H) {
  DoubleCosetDecomposition out;
  out.membership.assign(G.order(), -1);
  for (int x = 0; x < G.order(); ++x) {
    if (out.membership[x] >= 0) continue;
    int idx = static_cast<int>(out.representatives.size());
    int count = 0;
    // x is minimal in its coset because elements are scanned in order.
    for (int a : H.members())
      for (int b : H.members()) {
        int y = G.mul(G.mul(a, x), b);
        if (out.membership[y] < 0) { out.membership[y] = idx; ++count; }
      }
    out.representatives.push_back(x);
    out.sizes.push_back(count);
  }
  return out;
}

struct GroupWithMap {
  FiniteGroup group;
  std::vector<int> to_parent;  // new element index -> parent element index
};

// H as a standalone FiniteGroup.  Element i corresponds to H.members()[i]
// (identity first since the member list is sorted).
inline GroupWithMap subgroup_as_group(const Subgroup& H) {
  const FiniteGroup& G = H.parent();
  int n = H.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = H.index_of(G.mul(H.members()[i], H.members()[j]));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = G.element_name(H.members()[i]);
  return {FiniteGroup::from_table(table, "", std::move(names)), H.members()};
}

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;       // parent element -> quotient element index
  std::vector<int> coset_reps;       // quotient element index -> minimal parent representative
};

inline QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient by a non-normal subgroup");
  std::vector<int> proj(G.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < G.order(); ++x) {
    if (proj[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    for (int n : N.members()) proj[G.mul(x, n)] = idx;
    reps.push_back(x);
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i][j] = proj[G.mul(reps[i], reps[j])];
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) names[i] = "[" + G.element_name(reps[i]) + "]";
  return {FiniteGroup::from_table(table, "", std::move(names)), std::move(proj), std::move(reps)};
}

inline NilpotencyInfo nilpotency_of_subgroup(const Subgroup& H) {
  return nilpotency_of_group(subgroup_as_group(H).group);
}

struct ProductGroup {
  FiniteGroup group;
  int left_order;
  int right_order;
  int pair(int a, int b) const { return a * right_order + b; }
  int first(int x) const { return x / right_order; }
  int second(int x) const { return x % right_order; }
};

inline ProductGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  int na = A.order(), nb = B.order();
  int n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          table[a1 * nb + b1][a2 * nb + b2] = A.mul(a1, a2) * nb + B.mul(b1, b2);
  std::vector<std::string> names(n);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      names[a * nb + b] = "(" + A.element_name(a) + "," + B.element_name(b) + ")";
  std::string nm = A.name().empty() || B.name().empty() ? "" : A.name() + "x" + B.name();
  return {FiniteGroup::from_table(table, nm, std::move(names)), na, nb};
}

inline Subgroup diagonal_subgroup(const ProductGroup& P) {
  if (P.left_order != P.right_order)
    throw std::invalid_argument("diagonal subgroup needs equal factors");
  std::vector<int> m;
  for (int a = 0; a < P.left_order; ++a) m.push_back(P.pair(a, a));
  return Subgroup(P.group, std::move(m));
}

}  // namespace gtcat
