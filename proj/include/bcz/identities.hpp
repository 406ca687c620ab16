#pragma once

#include <string>
#include <vector>

#include "bcz/lfunc.hpp"
#include "bcz/sampling.hpp"

namespace bcz {

// Parameters for one identity evaluation. The meaning of v depends on the identity:
//   contiguous-4F3      a1..a4, b1..b3
//   bailey-*            r1..r6 (sum zero), n
//   l-*                 A, B, C, D, E, F (G from the balance condition)
//   pNfirst*            z, z', a, b, x, N
//   trig                A1, B1, C1, D1
struct IdentityDraw {
  std::vector<cplx> v;
  int n = 0;
};

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"contiguous-4F3", "bailey-123-456", "bailey-123-356", "l-fundamental-1",
                                                 "l-fundamental-2", "l-incoherent",   "l-w76",          "pNfirst-almostpN",
                                                 "pNfirst1-almostpN1", "trig"};
  return names;
}

namespace detail {

inline double identity_relerr(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0}); }

// S(a,b,c) for 0-based indices; {d,e,f} is the complement.
inline cplx bailey_s(const std::vector<cplx>& r, int n, int a, int b, int c) {
  std::vector<int> rest;
  for (int i = 0; i < 6; ++i)
    if (i != a && i != b && i != c) rest.push_back(i);
  const double phi = (n - 1) / 3.0;
  auto eps = [&](int i, int j) { return r[static_cast<size_t>(i)] + r[static_cast<size_t>(j)] - phi; };
  const int d = rest[0], e = rest[1], f = rest[2];
  const cplx ef = eps(e, f), df = eps(d, f), de = eps(d, e);
  const double nd = n;
  cplx pre = ((n % 2) ? -1.0 : 1.0) * pochhammer(1.0 - nd - ef, n) * pochhammer(1.0 - nd - df, n) * pochhammer(1.0 - nd - de, n);
  return pre * hyp({-nd, eps(a, b), eps(b, c), eps(a, c)}, {1.0 - nd - de, 1.0 - nd - ef, 1.0 - nd - df});
}

inline cplx l_balanced(const std::vector<cplx>& v) {
  cplx G = 1.0 + v[0] + v[1] + v[2] + v[3] - v[4] - v[5];
  return l_function(v[0], v[1], v[2], v[3], v[4], v[5], G);
}

inline cplx sin_prod(std::initializer_list<cplx> l) {
  cplx p = 1.0;
  for (cplx v : l) p *= sin_pi(v);
  return p;
}

}  // namespace detail

// The two-form p_N at x: Pochhammer-prefactor form with bottom (1+a, 1-z-N, 1-z'-N).
inline cplx pn_first(cplx z, cplx zp, double a, double b, cplx x, int N) {
  const double Nn = N, e2 = a + b + 1.0;
  const cplx S = z + zp + b;
  cplx pre = pochhammer(a + 1.0, N) * pochhammer(1.0 - z - Nn, N) * pochhammer(1.0 - zp - Nn, N) / pochhammer(1.0 - Nn - S, N);
  return pre * hyp({-Nn, 1.0 - Nn - S, x + e2, -x}, {1.0 + a, 1.0 - z - Nn, 1.0 - zp - Nn});
}
inline cplx pn_almost(cplx z, cplx zp, double a, double b, cplx x, int N) {
  const double Nn = N, e2 = a + b + 1.0;
  const cplx S = z + zp + b;
  cplx pre = pochhammer(x + e2, N) * pochhammer(x - Nn + 1.0, N);
  return pre * hyp({-Nn, -Nn - a, z, zp}, {S, x - Nn + 1.0, -x - Nn - a - b});
}
inline cplx pn1_first(cplx z, cplx zp, double a, double b, cplx x, int N) {
  const double Nn = N, e2 = a + b + 1.0;
  const cplx S = z + zp + b;
  cplx pre = pochhammer(a + 1.0, N - 1) * pochhammer(1.0 - z - Nn, N - 1) * pochhammer(1.0 - zp - Nn, N - 1) / pochhammer(-Nn - S, N - 1);
  return pre * hyp({1.0 - Nn, -Nn - S, x + e2, -x}, {1.0 + a, 1.0 - z - Nn, 1.0 - zp - Nn});
}
inline cplx pn1_almost(cplx z, cplx zp, double a, double b, cplx x, int N) {
  const double Nn = N, e2 = a + b + 1.0;
  const cplx S = z + zp + b;
  cplx pre = pochhammer(x + e2, N - 1) * pochhammer(x - Nn + 2.0, N - 1);
  return pre * hyp({1.0 - Nn, 1.0 - Nn - a, z + 1.0, zp + 1.0}, {S + 2.0, x - Nn + 2.0, -x - Nn - a - b + 1.0});
}

inline double identity_residual(const std::string& name, const IdentityDraw& d) {
  const auto& v = d.v;
  if (name == "contiguous-4F3") {
    cplx a1 = v[0], a2 = v[1], a3 = v[2], a4 = v[3], b1 = v[4], b2 = v[5], b3 = v[6];
    cplx lhs = hyp({a1, a2, a3, a4}, {b1, b2, b3});
    cplx rhs = hyp({a1, a2, a3, a4}, {b1 + 1.0, b2, b3}) +
               a1 * a2 * a3 * a4 / (b1 * (b1 + 1.0) * b2 * b3) * hyp({a1 + 1.0, a2 + 1.0, a3 + 1.0, a4 + 1.0}, {b1 + 2.0, b2 + 1.0, b3 + 1.0});
    return detail::identity_relerr(lhs, rhs);
  }
  if (name == "bailey-123-456") return detail::identity_relerr(detail::bailey_s(v, d.n, 0, 1, 2), detail::bailey_s(v, d.n, 3, 4, 5));
  if (name == "bailey-123-356") return detail::identity_relerr(detail::bailey_s(v, d.n, 0, 1, 2), detail::bailey_s(v, d.n, 2, 4, 5));
  if (name == "l-fundamental-1" || name == "l-fundamental-2" || name == "l-incoherent" || name == "l-w76") {
    const cplx A = v[0], B = v[1], C = v[2], D = v[3], E = v[4], F = v[5];
    const cplx G = 1.0 + A + B + C + D - E - F;
    const cplx L = l_function(A, B, C, D, E, F, G);
    if (name == "l-fundamental-1") return detail::identity_relerr(L, l_function(1.0 + A - E, A, G - C, F - C, 1.0 + A - C, 1.0 + A + B - E, 1.0 + A + D - E));
    if (name == "l-fundamental-2") return detail::identity_relerr(L, l_function(A, B, G - C, G - D, 1.0 + A + B - F, 1.0 + A + B - E, G));
    if (name == "l-w76") return detail::identity_relerr(L, l_via_w76(A, B, C, D, E, F, G));
    cplx t1 = sin_pi(F - G) * sin_pi(G) * L * rgamma_c(1.0 + A - F) * rgamma_c(1.0 + B - F) * rgamma_c(1.0 + C - F) * rgamma_c(1.0 + D - F) *
              rgamma_c(E - A) * rgamma_c(E - B) * rgamma_c(E - C) * rgamma_c(E - D);
    cplx t2 = (detail::sin_prod({G, G - E, F - A, F - B, F - C, F - D}) + detail::sin_prod({F, E - F, G - A, G - B, G - C, G - D})) /
              std::pow(kPi, 4) * l_function(A, B, C, D, F, E, G);
    cplx t3 = sin_pi(E - F) * sin_pi(F - G) * rgamma_c(A) * rgamma_c(B) * rgamma_c(C) * rgamma_c(D) * rgamma_c(G - A) * rgamma_c(G - B) *
              rgamma_c(G - C) * rgamma_c(G - D) * l_function(1.0 - A, 1.0 - B, 1.0 - C, 1.0 - D, 2.0 - E, 2.0 - F, 2.0 - G);
    return std::abs(t1 + t2 + t3) / std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1.0});
  }
  if (name == "pNfirst-almostpN" || name == "pNfirst1-almostpN1") {
    const cplx z = v[0], zp = v[1], x = v[4];
    const double a = v[2].real(), b = v[3].real();
    if (name == "pNfirst-almostpN") return detail::identity_relerr(pn_first(z, zp, a, b, x, d.n), pn_almost(z, zp, a, b, x, d.n));
    return detail::identity_relerr(pn1_first(z, zp, a, b, x, d.n), pn1_almost(z, zp, a, b, x, d.n));
  }
  if (name == "trig") {
    const cplx A1 = v[0], B1 = v[1], C1 = v[2], D1 = v[3];
    const cplx X = A1 + B1, Y = C1 + D1, Z = A1 - B1, W = C1 - D1;
    const cplx A2 = 0.5 * (X + W), B2 = 0.5 * (X - W), C2 = 0.5 * (Y + Z), D2 = 0.5 * (Y - Z);
    cplx lhs = std::sin(A1) * std::sin(B1) * std::sin(C1) * std::sin(D1) - std::sin(A2) * std::sin(B2) * std::sin(C2) * std::sin(D2);
    cplx rhs = std::sin(0.5 * (X + Y)) * std::sin(0.5 * (Y - X)) * std::sin(0.5 * (Z + W)) * std::sin(0.5 * (W - Z));
    return detail::identity_relerr(lhs, rhs);
  }
  throw DomainError("identity_residual: unknown identity " + name);
}

// A random draw satisfying the constraints of the named identity, |params| <= 5.
inline IdentityDraw draw_identity_params(const std::string& name, CounterRng& rng) {
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * rng.uniform(); };
  auto c = [&](double r) { return cplx(u(-r, r), u(-r, r)); };
  auto off_int = [&](cplx w) { return std::abs(w.real() - std::round(w.real())) > 0.05 || std::abs(w.imag()) > 0.05; };
  IdentityDraw d;
  if (name == "contiguous-4F3") {
    d.n = 1 + static_cast<int>(rng.next() % 6);
    d.v = {cplx(-static_cast<double>(d.n), 0.0), c(2.5), c(2.5), c(2.5)};
    for (int i = 0; i < 3; ++i) {
      cplx w;
      do w = c(3.0) + cplx(1.0, 0.0);
      while (!off_int(w) || !off_int(w + 1.0));
      d.v.push_back(w);
    }
    return d;
  }
  if (name == "bailey-123-456" || name == "bailey-123-356") {
    d.n = 1 + static_cast<int>(rng.next() % 5);
    cplx s = 0.0;
    for (int i = 0; i < 5; ++i) {
      d.v.push_back(c(1.5));
      s += d.v.back();
    }
    d.v.push_back(-s);
    return d;
  }
  if (name.rfind("l-", 0) == 0) {
    for (;;) {
      d.v.clear();
      for (int i = 0; i < 6; ++i) d.v.push_back(c(1.5));
      const cplx A = d.v[0], B = d.v[1], C = d.v[2], D = d.v[3], E = d.v[4], F = d.v[5];
      const cplx G = 1.0 + A + B + C + D - E - F;
      if (std::abs(G) > 5.0 || !off_int(E) || !off_int(F) || !off_int(G)) continue;
      if (name == "l-fundamental-1" && !off_int(1.0 + A - C)) continue;
      if (name == "l-fundamental-2" && !off_int(1.0 + A + B - F)) continue;
      if (name == "l-incoherent" && (!off_int(F - E) || !off_int(F - G))) continue;
      if (name == "l-w76" && ((F - D).real() < 0.5 || !off_int(D + G - E))) continue;
      return d;
    }
  }
  if (name == "pNfirst-almostpN" || name == "pNfirst1-almostpN1") {
    d.n = 1 + static_cast<int>(rng.next() % 5);
    double b = u(-0.5, 2.0), a = u(b, 3.0);
    for (;;) {
      cplx z = c(2.5), zp = c(2.5), x = c(4.0) + cplx(4.0, 0.0);
      d.v = {z, zp, a, b, x};
      const cplx S = z + zp + b;
      if (!off_int(S) || !off_int(x) || !off_int(2.0 * x + a + b) || !off_int(z) || !off_int(zp)) continue;
      return d;
    }
  }
  if (name == "trig") {
    d.v = {c(5.0), c(5.0), c(5.0), c(5.0)};
    for (auto& w : d.v) w = cplx(w.real(), 0.2 * w.imag());
    return d;
  }
  throw DomainError("draw_identity_params: unknown identity " + name);
}

}  // namespace bcz
