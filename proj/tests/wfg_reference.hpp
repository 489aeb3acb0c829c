#ifndef CONEOPT_TESTS_WFG_REFERENCE_HPP
#define CONEOPT_TESTS_WFG_REFERENCE_HPP

// Independent transcription of the WFG4 and WFG9 definitions, kept in the
// published toolkit's stage-by-stage vector style (normalize, t1..t3, shape)
// and generic in the number of objectives. Used only as a cross-check oracle.

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace wfg_ref {

constexpr double PI = 3.14159265358979323846;

using Vec = std::vector<double>;

inline Vec subvec(const Vec& v, std::size_t head, std::size_t tail) {
  return Vec(v.begin() + static_cast<long>(head), v.begin() + static_cast<long>(tail));
}

inline double s_multi(double y, int A, double B, double C) {
  const double tmp1 = std::fabs(y - C) / (2.0 * (std::floor(C - y) + C));
  const double tmp2 = (4.0 * A + 2.0) * PI * (0.5 - tmp1);
  return (1.0 + std::cos(tmp2) + 4.0 * B * std::pow(tmp1, 2.0)) / (B + 2.0);
}

inline double s_decept(double y, double A, double B, double C) {
  const double tmp1 = std::floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B);
  const double tmp2 = std::floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B);
  return 1.0 + (std::fabs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B);
}

inline double b_param(double y, double u, double A, double B, double C) {
  const double v = A - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + A);
  return std::pow(y, B + (C - B) * v);
}

inline double r_sum(const Vec& y, const Vec& w) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    num += w[i] * y[i];
    den += w[i];
  }
  return num / den;
}

inline double r_nonsep(const Vec& y, std::size_t A) {
  double num = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    num += y[j];
    for (std::size_t k = 0; k + 2 <= A; ++k)
      num += std::fabs(y[j] - y[(j + k + 1) % y.size()]);
  }
  const double tmp = std::ceil(A / 2.0);
  const double den = y.size() / static_cast<double>(A) * tmp * (1.0 + 2.0 * A - 2.0 * tmp);
  return num / den;
}

inline Vec normalise(const Vec& z) {
  Vec y(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) y[i] = z[i] / (2.0 * (i + 1.0));
  return y;
}

inline Vec wfg4_t1(const Vec& y) {
  Vec t(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) t[i] = s_multi(y[i], 30, 10.0, 0.35);
  return t;
}

inline Vec wfg4_t2(const Vec& y, std::size_t k, std::size_t M) {
  Vec t(M);
  const std::size_t group = k / (M - 1);
  for (std::size_t i = 1; i < M; ++i) {
    const Vec part = subvec(y, (i - 1) * group, i * group);
    t[i - 1] = r_sum(part, Vec(part.size(), 1.0));
  }
  const Vec tail = subvec(y, k, y.size());
  t[M - 1] = r_sum(tail, Vec(tail.size(), 1.0));
  return t;
}

inline Vec wfg9_t1(const Vec& y) {
  Vec t(y.size());
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    const Vec tail = subvec(y, i + 1, y.size());
    const double u = r_sum(tail, Vec(tail.size(), 1.0));
    t[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
  }
  t.back() = y.back();
  return t;
}

inline Vec wfg9_t2(const Vec& y, std::size_t k) {
  Vec t(y.size());
  for (std::size_t i = 0; i < k; ++i) t[i] = s_decept(y[i], 0.35, 0.001, 0.05);
  for (std::size_t i = k; i < y.size(); ++i) t[i] = s_multi(y[i], 30, 95.0, 0.35);
  return t;
}

inline Vec wfg9_t3(const Vec& y, std::size_t k, std::size_t M) {
  Vec t(M);
  const std::size_t group = k / (M - 1);
  for (std::size_t i = 1; i < M; ++i)
    t[i - 1] = r_nonsep(subvec(y, (i - 1) * group, i * group), group);
  t[M - 1] = r_nonsep(subvec(y, k, y.size()), y.size() - k);
  return t;
}

inline Vec concave_h(const Vec& x, std::size_t M) {
  Vec h(M);
  for (std::size_t m = 1; m <= M; ++m) {
    double v = 1.0;
    for (std::size_t i = 1; i <= M - m; ++i) v *= std::sin(x[i - 1] * PI / 2.0);
    if (m > 1) v *= std::cos(x[M - m] * PI / 2.0);
    h[m - 1] = v;
  }
  return h;
}

inline Vec shape(const Vec& t, std::size_t M) {
  // Underlying parameters with degeneracy constants A_i = 1, then
  // f_m = D x_M + S_m h_m with D = 1, S_m = 2m.
  Vec x(M);
  for (std::size_t i = 0; i + 1 < M; ++i)
    x[i] = std::max(t[M - 1], 1.0) * (t[i] - 0.5) + 0.5;
  x[M - 1] = t[M - 1];
  const Vec h = concave_h(x, M);
  Vec f(M);
  for (std::size_t m = 0; m < M; ++m) f[m] = x[M - 1] + 2.0 * (m + 1.0) * h[m];
  return f;
}

inline Vec wfg4(const Vec& z, std::size_t k, std::size_t M = 2) {
  assert(k % (M - 1) == 0 && k < z.size());
  Vec y = normalise(z);
  y = wfg4_t1(y);
  return shape(wfg4_t2(y, k, M), M);
}

inline Vec wfg9(const Vec& z, std::size_t k, std::size_t M = 2) {
  assert(k % (M - 1) == 0 && k < z.size());
  Vec y = normalise(z);
  y = wfg9_t1(y);
  y = wfg9_t2(y, k);
  return shape(wfg9_t3(y, k, M), M);
}

} // namespace wfg_ref

#endif
