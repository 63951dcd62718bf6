// Test-only dense power-series arithmetic over mpq_class. Shares no code
// with the library; used to freeze expected values.
#ifndef FGLAB_TESTS_DENSE_ORACLE_HPP
#define FGLAB_TESTS_DENSE_ORACLE_HPP

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Q = mpq_class;
using Uni = std::vector<Q>;               // index = power of t, size N+1
using Bi = std::vector<std::vector<Q>>;   // [i][j] coefficient of x^i y^j

inline Uni uni(int n) { return Uni(static_cast<std::size_t>(n + 1)); }
inline Bi bi(int n) { return Bi(static_cast<std::size_t>(n + 1), std::vector<Q>(static_cast<std::size_t>(n + 1))); }

inline Uni mul(const Uni& a, const Uni& b, int n) {
  Uni c = uni(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Bi mul(const Bi& a, const Bi& b, int n) {
  Bi c = bi(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (a[i][j] == 0) continue;
      for (int k = 0; i + j + k <= n; ++k)
        for (int l = 0; i + j + k + l <= n; ++l) c[i + k][j + l] += a[i][j] * b[k][l];
    }
  return c;
}

/// sum_k f_k g^k by repeated multiplication.
inline Uni compose(const Uni& f, const Uni& g, int n) {
  Uni out = uni(n), power = uni(n);
  power[0] = 1;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n; ++i) out[i] += f[k] * power[i];
    power = mul(power, g, n);
  }
  return out;
}

inline Bi compose(const Uni& f, const Bi& g, int n) {
  Bi out = bi(n), power = bi(n);
  power[0][0] = 1;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) out[i][j] += f[k] * power[i][j];
    power = mul(power, g, n);
  }
  return out;
}

/// 1/a for a(0) != 0 by the usual recurrence.
inline Uni inverse(const Uni& a, int n) {
  Uni b = uni(n);
  b[0] = 1 / a[0];
  for (int k = 1; k <= n; ++k) {
    Q s = 0;
    for (int i = 1; i <= k; ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  return b;
}

/// Lagrange inversion: [t^n] g = (1/n) [t^(n-1)] (t / f(t))^n.
inline Uni revert(const Uni& f, int n) {
  Uni shifted = uni(n);
  for (int i = 1; i <= n; ++i) shifted[i - 1] = f[i];
  const Uni h = inverse(shifted, n);
  Uni g = uni(n), power = uni(n);
  power[0] = 1;
  for (int k = 1; k <= n; ++k) {
    power = mul(power, h, n);
    g[k] = power[k - 1] / k;
  }
  return g;
}

inline Bi in_x(const Uni& f, int n) {
  Bi out = bi(n);
  for (int i = 0; i <= n; ++i) out[i][0] = f[i];
  return out;
}

inline Bi in_y(const Uni& f, int n) {
  Bi out = bi(n);
  for (int j = 0; j <= n; ++j) out[0][j] = f[j];
  return out;
}

inline Bi add(Bi a, const Bi& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

/// exp(log x + log y).
inline Bi law_from_log(const Uni& log, int n) {
  return compose(revert(log, n), add(in_x(log, n), in_y(log, n)), n);
}

/// Integral of 1 / (dF/dy)(t, 0).
inline Uni log_of_law(const Bi& law, int n) {
  Uni d = uni(n);
  for (int i = 0; i + 1 <= n; ++i) d[i] = law[i][1];
  const Uni inv = inverse(d, n);
  Uni log = uni(n);
  for (int i = 0; i < n; ++i) log[i + 1] = inv[i] / (i + 1);
  return log;
}

}  // namespace oracle

#endif  // FGLAB_TESTS_DENSE_ORACLE_HPP
