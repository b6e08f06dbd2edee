#pragma once

// Slow, independent reference computations used to check the library.

#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "gamma4/matrix.hpp"

namespace oracle {

using gamma4::Int;
using gamma4::IntMatrix;

// Laplace expansion along the first row.
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = m(r, c);
    total += (j % 2 ? -1 : 1) * m(0, j) * cofactor_det(sub);
  }
  return total;
}

// All integer vectors of Z^n with squared length `norm`.
inline std::vector<std::vector<Int>> vectors_of_norm(std::size_t n, Int norm) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> v(n, 0);
  auto rec = [&](auto& self, std::size_t c, Int left) -> void {
    if (c == n) {
      if (left == 0) out.push_back(v);
      return;
    }
    for (Int x = -norm; x <= norm; ++x) {
      if (x * x > left) continue;
      v[c] = x;
      self(self, c + 1, left - x * x);
    }
    v[c] = 0;
  };
  rec(rec, 0, norm);
  return out;
}

// Does the negative definite `gram` embed in (Z^n, -Id)? Plain backtracking
// over every vector of the right norm, basis vectors in index order, no
// symmetry reduction.
inline bool naive_embeddable(const IntMatrix& gram, std::size_t n) {
  const std::size_t r = gram.rows();
  std::vector<std::vector<std::vector<Int>>> cands(r);
  for (std::size_t i = 0; i < r; ++i) cands[i] = vectors_of_norm(n, -gram(i, i));
  std::vector<const std::vector<Int>*> chosen(r, nullptr);
  auto rec = [&](auto& self, std::size_t i) -> bool {
    if (i == r) return true;
    for (const auto& v : cands[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        Int dot = 0;
        for (std::size_t c = 0; c < n; ++c) dot += v[c] * (*chosen[j])[c];
        ok = dot == -gram(i, j);
      }
      if (!ok) continue;
      chosen[i] = &v;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k
// minors, s_k = d_k / d_{k-1}. Exponential; only for small matrices.
inline std::vector<Int> invariant_factors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Int> d(n + 1, 0);
  d[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    auto pick_cols = [&](auto& self, std::size_t idx, std::size_t from) -> void {
      if (idx == k) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
        g = std::gcd(g, std::abs(cofactor_det(sub)));
        return;
      }
      for (std::size_t c = from; c < n; ++c) {
        cols[idx] = c;
        self(self, idx + 1, c + 1);
      }
    };
    auto pick_rows = [&](auto& self, std::size_t idx, std::size_t from) -> void {
      if (idx == k) {
        pick_cols(pick_cols, 0, 0);
        return;
      }
      for (std::size_t r = from; r < n; ++r) {
        rows[idx] = r;
        self(self, idx + 1, r + 1);
      }
    };
    pick_rows(pick_rows, 0, 0);
    d[k] = g;
  }
  std::vector<Int> s;
  for (std::size_t k = 1; k <= n; ++k) s.push_back(d[k - 1] == 0 ? 0 : d[k] / d[k - 1]);
  return s;
}

// Every unit u mod n: is q u^2 = +-1?
inline bool some_unit_gives_pm1(Int n, Int q) {
  for (Int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const Int v = ((q % n) * ((u * u) % n) % n + n) % n;
    if (v == 1 || v == n - 1) return true;
  }
  return n == 1;
}

// The orbit {+-u^2 q mod n}.
inline std::set<Int> unit_square_orbit(Int n, Int q) {
  std::set<Int> out;
  if (n == 1) return {0};
  for (Int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const Int v = ((q % n) * ((u * u) % n) % n + n) % n;
    out.insert(v);
    out.insert((n - v) % n);
  }
  return out;
}

// Self-linking of x under -G^{-1}, as a fraction num/den in lowest terms
// with 0 <= num < den, via exact rational Gaussian elimination.
struct Fraction {
  Int num = 0, den = 1;
};

inline Fraction self_linking(const IntMatrix& g, const std::vector<Int>& x) {
  // Solve G y = x over Q with fractions held as (numerator vector, common denominator det).
  const std::size_t n = g.rows();
  const Int det = cofactor_det(g);
  std::vector<Int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix m = g;
    for (std::size_t r = 0; r < n; ++r) m(r, i) = x[r];
    y[i] = cofactor_det(m);  // Cramer: y_i = det_i / det
  }
  Int num = 0;
  for (std::size_t i = 0; i < n; ++i) num -= x[i] * y[i];
  Int den = det;
  if (den < 0) num = -num, den = -den;
  num %= den;
  if (num < 0) num += den;
  const Int g2 = std::gcd(num, den);
  return {num / (g2 ? g2 : 1), den / (g2 ? g2 : 1)};
}

}  // namespace oracle
