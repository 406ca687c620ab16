#pragma once

#include <array>
#include <functional>
#include <vector>

#include "bcz/hyper.hpp"
#include "bcz/zmeasure.hpp"

namespace bcz {

struct LatticeWeight {
  Params params;
  int N = 1;
  double eps() const { return params.eps(); }
  double xhat(double x) const { return (x + eps()) * (x + eps()); }
};

// W(x^) in the sine form; coincides with weight_w at every lattice point.
inline cplx weight_W(int x, const LatticeWeight& lw) {
  const Params& p = lw.params;
  p.check_ab();
  const double e = p.eps(), e2 = 2.0 * e, xd = x;
  const cplx Nn = static_cast<double>(lw.N);
  cplx sz = sin_pi(p.z), szp = sin_pi(p.zp);
  cplx l = std::lgamma(xd + p.a + 1.0) - std::lgamma(xd + p.b + 1.0);
  // sin(pi z) Gamma(x+1-z-N)/pi, continuous in z through the integer points;
  // the factor goes to `scale` and its log-Gamma part to `l`.
  cplx scale = eps_gamma_factor(x, e);
  auto reflected = [&](cplx zz, cplx s) -> bool {
    cplx arg = xd + 1.0 - zz - Nn;
    if (near_nonpos_int(arg)) {
      int m = x + 1 - lw.N;
      scale *= (m % 2 != 0) ? 1.0 : -1.0;
      l -= lgamma_c(1.0 - arg);
      return true;
    }
    if (s == cplx(0.0, 0.0)) return false;
    scale *= s / kPi;
    l += lgamma_c(arg);
    return true;
  };
  if (!reflected(p.z, sz) || !reflected(p.zp, szp)) return 0.0;
  l -= lgamma_c(xd + p.z + Nn + e2) + lgamma_c(xd + p.zp + Nn + e2);
  return scale * std::exp(l);
}

// w^(t | a1..a4; alpha) = (t+alpha) / prod Gamma(a_i+alpha+t) Gamma(a_i-alpha-t)
inline cplx weight_what(double t, const std::array<cplx, 4>& ai, cplx alpha) {
  cplx l = 0.0;
  for (cplx a : ai)
    for (cplx arg : {a + alpha + t, a - alpha - t}) {
      if (near_nonpos_int(arg)) return 0.0;
      l -= lgamma_c(arg);
    }
  return (t + alpha) * std::exp(l);
}

inline std::array<cplx, 4> neretin_parameters(const LatticeWeight& lw) {
  const Params& p = lw.params;
  const double e = p.eps(), Nn = lw.N;
  return {cplx(1.0 - e), cplx(p.b + 1.0 - e), p.z + Nn + e, p.zp + Nn + e};
}

// W(x^) through the w^ identification; Richardson in a near a, a+b integer.
inline cplx weight_W_via_neretin(int x, const LatticeWeight& lw) {
  auto eval = [&](const Params& p) {
    LatticeWeight l2{p, lw.N};
    return weight_what(x, neretin_parameters(l2), p.eps()) * kPi * kPi / (sin_pi(p.a) * sin_pi(p.a + p.b));
  };
  const Params& p = lw.params;
  if (near_int(cplx(p.a), 1e-8) || near_int(cplx(p.a + p.b), 1e-8)) {
    auto avg = [&](double h) {
      Params up = p, dn = p;
      up.a += h;
      dn.a -= h;
      return 0.5 * (eval(up) + eval(dn));
    };
    const double h = 1e-3;
    cplx r1 = avg(h), r2 = avg(2.0 * h), r4 = avg(4.0 * h);
    cplx q1 = (4.0 * r1 - r2) / 3.0, q2 = (4.0 * r2 - r4) / 3.0;
    return (16.0 * q1 - q2) / 15.0;
  }
  return eval(p);
}

inline cplx neretin_k(int n, const std::array<cplx, 4>& ai) {
  cplx s = ai[0] + ai[1] + ai[2] + ai[3];
  return pochhammer(static_cast<double>(n) + 3.0 - s, n);
}

inline cplx wilson_neretin_Q(int n, cplx t, cplx a1, cplx a2, cplx a3, cplx a4, cplx alpha) {
  cplx s = a1 + a2 + a3 + a4;
  cplx b1 = 2.0 - a1 - a2, b2 = 2.0 - a1 - a3, b3 = 2.0 - a1 - a4;
  cplx pref = pochhammer(b1, n) * pochhammer(b2, n) * pochhammer(b3, n);
  SeriesSpec sp{{-static_cast<double>(n), static_cast<double>(n) + 3.0 - s, 1.0 - a1 + t + alpha, 1.0 - a1 - t - alpha},
                {b1, b2, b3},
                1.0,
                n};
  return pref * pfq(sp).value;
}

// Unordered pairs i<j in both products.
inline cplx squared_norm_H(int n, cplx a1, cplx a2, cplx a3, cplx a4, cplx alpha) {
  const cplx a[4] = {a1, a2, a3, a4};
  cplx s = a1 + a2 + a3 + a4;
  cplx three = 3.0 - s + static_cast<double>(n);
  if (near_nonpos_int(three)) throw DomainError("squared_norm_H: defining sum diverges");
  cplx num = sin_pi(2.0 * alpha), lg = std::lgamma(n + 1.0) - lgamma_c(three);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      num *= sin_pi(a[i] + a[j]);
      lg += lgamma_c(2.0 - a[i] - a[j] + static_cast<double>(n));
    }
  // overall sign chosen so that H_n equals sum_t Q_n^2 w^(t)
  return -num / (2.0 * std::pow(kPi, 6) * sin_pi(s)) * std::exp(lg) / (3.0 - s + 2.0 * n);
}

// Monic p_n as a polynomial in x^, summed without Gamma prefactors:
// (x+2eps)_k (-x)_k = prod_{i<k} ((eps+i)^2 - x^).
inline KernelValue monic_p_hat(int n, cplx xh, const LatticeWeight& lw) {
  const Params& p = lw.params;
  const int N = lw.N;
  if (n < 0 || n > N) throw DomainError("monic_p: need 0 <= n <= N");
  const cplx S = p.sigma();
  if (!(S.real() > 2.0 * n - 2.0 * N)) throw DomainError("monic_p: needs Re(Sigma) > 2n-2N");
  const double e = p.eps(), Nn = N;
  const cplx c = static_cast<double>(n) + 1.0 - 2.0 * Nn - S;
  const cplx norm = pochhammer(c, n);
  if (std::abs(norm) == 0.0) throw PoleError("monic_p: degenerate normalization");
  // tail products prod_{j=k}^{n-1}(1+a+j)(1-z-N+j)(1-z'-N+j)
  std::vector<cdd> tail(static_cast<size_t>(n) + 1, cdd(cplx(1.0, 0.0)));
  for (int k = n - 1; k >= 0; --k) {
    cplx f = (1.0 + p.a + k) * (1.0 - p.z - Nn + static_cast<double>(k)) * (1.0 - p.zp - Nn + static_cast<double>(k));
    tail[static_cast<size_t>(k)] = tail[static_cast<size_t>(k) + 1] * cdd(f);
  }
  KernelValue out;
  cdd acc(cplx(0.0, 0.0)), head(cplx(1.0, 0.0));
  for (int k = 0; k <= n; ++k) {
    cdd term = head * tail[static_cast<size_t>(k)];
    out.max_term = std::max(out.max_term, std::abs(term.to_cplx()));
    acc = acc + term;
    if (k == n) break;
    double ik = (e + k) * (e + k);
    cplx step = (static_cast<double>(k) - static_cast<double>(n)) * (c + static_cast<double>(k)) / static_cast<double>(k + 1);
    head = head * cdd(step) * (cdd(cplx(ik, 0.0)) - cdd(xh));
  }
  out.value = (acc / cdd(norm)).to_cplx();
  out.max_term /= std::abs(norm);
  return out;
}

inline cplx monic_p(int n, int x, const LatticeWeight& lw) { return monic_p_hat(n, lw.xhat(x), lw).value; }

inline cplx norm_h(int n, const LatticeWeight& lw) {
  const Params& p = lw.params;
  const int N = lw.N;
  if (n < 0 || n > N - 1) throw DomainError("norm_h: need 0 <= n <= N-1");
  const cplx S = p.sigma();
  if (!(S.real() > 2.0 * n - 2.0 * N + 1.0)) throw DomainError("norm_h: needs Re(Sigma) > 2n-2N+1");
  const double m = N - n;
  cplx r = 0.5 * gamma_ratio({static_cast<double>(n) + 1.0, n + p.a + 1.0, 2.0 * N + S - 2.0 * n, 2.0 * N + S - 2.0 * n - 1.0},
                             {2.0 * N + S - static_cast<double>(n), 2.0 * N + S + p.a - static_cast<double>(n)});
  return r * rgamma_c(p.z + m) * rgamma_c(p.zp + m) * rgamma_c(p.z + p.b + m) * rgamma_c(p.zp + p.b + m);
}

struct LatticeSum {
  cplx value{0.0, 0.0};
  int cutoff = 0;
};

// sum_{x>=0} f(x) for summands decaying like x^{-s}, s > 1, with an integral tail.
inline LatticeSum lattice_sum(const std::function<cplx(int)>& f, double s, double rtol = 1e-13, int max_terms = 4000000) {
  if (!(s > 1.0)) throw DivergenceError("lattice_sum: summand does not decay fast enough");
  cdd acc(cplx(0.0, 0.0));
  double mass = 0.0;
  LatticeSum out;
  int quiet = 0;
  for (int x = 0; x < max_terms; ++x) {
    cplx t = f(x);
    acc = acc + cdd(t);
    mass += std::abs(t);
    if (x < 16) continue;
    double tail = std::abs(t) * (x + 0.5) / (s - 1.0);
    if (tail <= rtol * mass) {
      if (++quiet >= 4) {
        out.value = acc.to_cplx() + t * (x + 0.5) / (s - 1.0);
        out.cutoff = x;
        return out;
      }
    } else {
      quiet = 0;
    }
  }
  throw DivergenceError("lattice_sum: no convergence within the term budget");
}

inline cplx gram_entry(int m, int n, const LatticeWeight& lw) {
  const double s = 2.0 * lw.params.sigma().real() + 4.0 * lw.N - 1.0 - 2.0 * (m + n);
  return lattice_sum(
             [&](int x) {
               cplx w = weight_w(x, lw.params, lw.N);
               if (w == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
               cplx xh = lw.xhat(x);
               return monic_p_hat(m, xh, lw).value * monic_p_hat(n, xh, lw).value * w;
             },
             s)
      .value;
}

inline double orthogonality_residual(int m, int n, const LatticeWeight& lw) {
  if (m < 0 || n < 0 || m > lw.N - 1 || n > lw.N - 1) throw DomainError("orthogonality_residual: need m, n <= N-1");
  cplx g = gram_entry(m, n, lw);
  cplx target = (m == n) ? norm_h(n, lw) : cplx(0.0, 0.0);
  double scale = std::max(std::abs(norm_h(m, lw)), std::abs(norm_h(n, lw)));
  return std::abs(g - target) / scale;
}

// Monic orthogonal polynomials from Gram-Schmidt on monomials in x^ over the
// truncated lattice 0..M-1, in double-double. Row n holds p_n at every point.
inline std::vector<std::vector<cdd>> gram_schmidt_oracle(int nmax, const LatticeWeight& lw, int M = 1000) {
  std::vector<cdd> w(static_cast<size_t>(M)), xh(static_cast<size_t>(M));
  for (int x = 0; x < M; ++x) {
    w[static_cast<size_t>(x)] = cdd(weight_w(x, lw.params, lw.N));
    dd v = dd(x) + dd(lw.eps());
    xh[static_cast<size_t>(x)] = cdd(v * v, dd(0.0));
  }
  auto inner = [&](const std::vector<cdd>& u, const std::vector<cdd>& v) {
    cdd s(cplx(0.0, 0.0));
    for (int x = 0; x < M; ++x) s = s + u[static_cast<size_t>(x)] * v[static_cast<size_t>(x)] * w[static_cast<size_t>(x)];
    return s;
  };
  std::vector<std::vector<cdd>> P;
  std::vector<cdd> norms;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<cdd> v(static_cast<size_t>(M), cdd(cplx(1.0, 0.0)));
    if (n > 0)
      for (int x = 0; x < M; ++x) v[static_cast<size_t>(x)] = P.back()[static_cast<size_t>(x)] * xh[static_cast<size_t>(x)];
    for (int j = 0; j < n; ++j) {
      cdd c = inner(v, P[static_cast<size_t>(j)]) / norms[static_cast<size_t>(j)];
      for (int x = 0; x < M; ++x) v[static_cast<size_t>(x)] = v[static_cast<size_t>(x)] - c * P[static_cast<size_t>(j)][static_cast<size_t>(x)];
    }
    norms.push_back(inner(v, v));
    P.push_back(std::move(v));
  }
  return P;
}

}  // namespace bcz
