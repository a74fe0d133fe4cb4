#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace intdist {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;  // rows are basis vectors

inline mpz_class dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Integral LLL (all Gram-Schmidt data kept as exact integers d_i, λ_ij).
// Reduces the rows of b in place; delta = num/den in (1/4, 1).
inline void lll_reduce(IntMatrix& basis, long delta_num = 99, long delta_den = 100) {
  const int n = static_cast<int>(basis.size());
  if (n <= 1) return;
  // 1-based views
  auto b = [&](int i) -> IntVector& { return basis[i - 1]; };
  std::vector<mpz_class> d(n + 1);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1));

  auto redi = [&](int k, int l) {
    mpz_class two_abs = 2 * abs(lam[k][l]);
    if (two_abs <= d[l]) return;
    mpz_class q;
    mpz_class num = 2 * lam[k][l] + d[l];
    mpz_class den = 2 * d[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    IntVector& bk = b(k);
    const IntVector& bl = b(l);
    for (std::size_t c = 0; c < bk.size(); ++c) bk[c] -= q * bl[c];
    lam[k][l] -= q * d[l];
    for (int i = 1; i <= l - 1; ++i) lam[k][i] -= q * lam[l][i];
  };

  int kmax = 1;
  auto swapi = [&](int k) {
    std::swap(b(k), b(k - 1));
    for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    mpz_class l = lam[k][k - 1];
    mpz_class B = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (int i = k + 1; i <= kmax; ++i) {
      mpz_class t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = B;
  };

  d[0] = 1;
  d[1] = dot(b(1), b(1));
  if (d[1] == 0) throw PreconditionError("lll: basis vectors are linearly dependent");
  int k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        mpz_class u = dot(b(k), b(j));
        for (int i = 1; i <= j - 1; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u == 0) throw PreconditionError("lll: basis vectors are linearly dependent");
          d[k] = u;
        }
      }
    }
    redi(k, k - 1);
    mpz_class lhs = delta_den * d[k] * d[k - 2];
    mpz_class rhs = delta_num * d[k - 1] * d[k - 1] - delta_den * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swapi(k);
      k = std::max(2, k - 1);
    } else {
      for (int l = k - 2; l >= 1; --l) redi(k, l);
      ++k;
    }
  }
}

}  // namespace intdist
