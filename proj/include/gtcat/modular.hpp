#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gtcat {

using i64 = long long;

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((__int128)a * b % m);
}

inline i64 powmod(i64 a, i64 e, i64 m) {
  i64 r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline i64 invmod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    i64 q = g / a1;
    g -= q * a1; std::swap(g, a1);
    x -= q * x1; std::swap(x, x1);
  }
  if (g != 1) throw std::invalid_argument("invmod: not invertible");
  return ((x % m) + m) % m;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p with p ≡ 1 (mod lcm) and p > bound.
inline i64 find_splitting_prime(i64 lcm, i64 bound) {
  i64 p = ((bound / lcm) + 1) * lcm + 1;
  while (!is_prime(p)) p += lcm;
  return p;
}

inline i64 primitive_root(i64 p) {
  i64 phi = p - 1;
  std::vector<i64> primes;
  i64 m = phi;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : primes)
      if (powmod(g, phi / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// Dense matrix over F_p.
struct FpMatrix {
  int rows = 0, cols = 0;
  i64 p = 0;
  std::vector<i64> a;

  FpMatrix() = default;
  FpMatrix(int r, int c, i64 prime) : rows(r), cols(c), p(prime), a(static_cast<size_t>(r) * c, 0) {}
  i64& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  i64 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FpMatrix identity(int n, i64 p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  FpMatrix operator*(const FpMatrix& o) const {
    FpMatrix r(rows, o.cols, p);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        i64 v = at(i, k);
        if (!v) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % p;
      }
    return r;
  }

  std::vector<i64> apply(const std::vector<i64>& v) const {
    std::vector<i64> r(rows, 0);
    for (int i = 0; i < rows; ++i) {
      i64 s = 0;
      for (int j = 0; j < cols; ++j) s = (s + at(i, j) * v[j]) % p;
      r[i] = s;
    }
    return r;
  }

  i64 trace() const {
    i64 t = 0;
    for (int i = 0; i < rows; ++i) t = (t + at(i, i)) % p;
    return t;
  }
};

// Characteristic polynomial coefficients via Newton's identities; requires
// p > rows.  Returns c with charpoly(x) = sum_i c[i] x^i, c[rows] = 1.
inline std::vector<i64> charpoly_mod_p(const FpMatrix& A) {
  int n = A.rows;
  i64 p = A.p;
  if (p <= n) throw std::invalid_argument("charpoly: prime too small");
  std::vector<i64> psum(n + 1, 0);  // power sums of eigenvalues
  FpMatrix pw = A;
  for (int k = 1; k <= n; ++k) {
    psum[k] = pw.trace();
    if (k < n) pw = pw * A;
  }
  std::vector<i64> e(n + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    i64 s = 0;
    for (int i = 1; i <= k; ++i) {
      i64 term = mulmod(e[k - i], psum[i], p);
      s = ((i % 2 == 1) ? s + term : s - term + p) % p;
    }
    e[k] = mulmod(s, invmod(k, p), p);
  }
  std::vector<i64> c(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    i64 v = e[n - k];
    if ((n - k) % 2 == 1) v = (p - v) % p;
    c[k] = v;
  }
  return c;
}

inline std::vector<i64> poly_roots_mod_p(const std::vector<i64>& c, i64 p) {
  std::vector<i64> roots;
  for (i64 x = 0; x < p; ++x) {
    i64 v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = (mulmod(v, x, p) + c[i]) % p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

// Kernel basis of A over F_p (vectors of length A.cols).
inline std::vector<std::vector<i64>> kernel_mod_p(FpMatrix A) {
  i64 p = A.p;
  int rows = A.rows, cols = A.cols;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (A.at(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(A.at(r, j), A.at(pr, j));
    i64 inv = invmod(A.at(r, c), p);
    for (int j = 0; j < cols; ++j) A.at(r, j) = mulmod(A.at(r, j), inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || A.at(i, c) == 0) continue;
      i64 f = A.at(i, c);
      for (int j = 0; j < cols; ++j)
        A.at(i, j) = ((A.at(i, j) - f * A.at(r, j)) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<i64>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<i64> v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = (p - A.at(i, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- Linear systems over Z/M (for coboundary-witness solving) ---

namespace detail {

// Solve A x = b over Z/p^e by Gaussian elimination with full pivoting on the
// entry of minimal p-valuation in the remaining submatrix.  A is row-major
// rows x cols.  Full pivoting is required for completeness: every non-pivot
// coefficient left in a pivot row is at least as divisible as its pivot, so in
// back substitution the divisibility of the right-hand side by the pivot is
// independent of the free variables and decides solvability exactly.
inline std::optional<std::vector<i64>> solve_mod_prime_power(
    std::vector<std::vector<i64>> A, std::vector<i64> b, i64 p, int e) {
  i64 q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  auto norm = [&](i64 v) { v %= q; if (v < 0) v += q; return v; };
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  for (auto& row : A)
    for (auto& v : row) v = norm(v);
  for (auto& v : b) v = norm(v);
  auto valuation = [&](i64 v) {
    if (v == 0) return e;
    int k = 0;
    while (v % p == 0) { v /= p; ++k; }
    return k;
  };
  struct Pivot { int col, row, val; };
  std::vector<Pivot> pivots;
  std::vector<char> row_used(rows, 0), col_used(cols, 0);
  while (true) {
    int br = -1, bc = -1, bestv = e;
    for (int i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      for (int j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        int v = valuation(A[i][j]);
        if (v < bestv) { bestv = v; br = i; bc = j; }
      }
    }
    if (br < 0) break;
    i64 pv = 1;
    for (int i = 0; i < bestv; ++i) pv *= p;
    i64 unit = A[br][bc] / pv;  // unit mod q (valuation exactly bestv)
    i64 uinv = invmod(unit, q);
    for (auto& v : A[br]) v = mulmod(v, uinv, q);
    b[br] = mulmod(b[br], uinv, q);
    for (int i = 0; i < rows; ++i) {
      if (row_used[i] || i == br || A[i][bc] == 0) continue;
      i64 f = A[i][bc] / pv;  // exact: valuation >= bestv by pivot choice
      for (int j = 0; j < cols; ++j) A[i][j] = norm(A[i][j] - mulmod(f, A[br][j], q));
      b[i] = norm(b[i] - mulmod(f, b[br], q));
    }
    row_used[br] = 1;
    col_used[bc] = 1;
    pivots.push_back({bc, br, bestv});
  }
  for (int i = 0; i < rows; ++i)
    if (!row_used[i] && b[i] % q != 0) return std::nullopt;
  // Back substitution in reverse pivot order; free variables stay 0.
  std::vector<i64> x(cols, 0);
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    auto [col, r, val] = pivots[k];
    i64 pv = 1;
    for (int i = 0; i < val; ++i) pv *= p;
    i64 rhs = b[r];
    for (int j = 0; j < cols; ++j)
      if (j != col && A[r][j] != 0) rhs = norm(rhs - mulmod(A[r][j], x[j], q));
    if (rhs % pv != 0) return std::nullopt;
    x[col] = rhs / pv;
  }
  return x;
}

}  // namespace detail

// Solve A x ≡ b (mod M) by prime-power decomposition and CRT.  Returns one
// solution or nullopt; the caller should verify if paranoid.
inline std::optional<std::vector<i64>> solve_linear_mod(
    const std::vector<std::vector<i64>>& A, const std::vector<i64>& b, i64 M) {
  if (M == 1) return std::vector<i64>(A.empty() ? 0 : A[0].size(), 0);
  std::vector<std::pair<i64, int>> factors;
  i64 m = M;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) { m /= d; ++e; }
      factors.push_back({d, e});
    }
  if (m > 1) factors.push_back({m, 1});
  int cols = A.empty() ? 0 : static_cast<int>(A[0].size());
  std::vector<i64> x(cols, 0);
  i64 mod_so_far = 1;
  for (auto [p, e] : factors) {
    auto part = detail::solve_mod_prime_power(A, b, p, e);
    if (!part) return std::nullopt;
    i64 q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (mod_so_far == 1) {
      x = *part;
      for (auto& v : x) v %= q;
    } else {
      // CRT combine coordinatewise.
      i64 inv = invmod(mod_so_far % q, q);
      for (int j = 0; j < cols; ++j) {
        i64 diff = (((*part)[j] - x[j]) % q + q) % q;
        x[j] = x[j] + mod_so_far * mulmod(diff, inv, q);
      }
    }
    mod_so_far *= q;
  }
  for (auto& v : x) v = ((v % M) + M) % M;
  // Verify.
  for (size_t i = 0; i < A.size(); ++i) {
    i64 s = 0;
    for (int j = 0; j < cols; ++j) s = (s + A[i][j] % M * x[j]) % M;
    if (((s - b[i]) % M + M) % M != 0) return std::nullopt;
  }
  return x;
}

}  // namespace gtcat
