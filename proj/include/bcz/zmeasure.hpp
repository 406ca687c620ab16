#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bcz/core.hpp"
#include "bcz/gamma.hpp"

namespace bcz {

struct Params {
  cplx z{0.0, 0.0};
  cplx zp{0.0, 0.0};
  double a = 0.0;
  double b = 0.0;

  double eps() const { return 0.5 * (a + b + 1.0); }
  cplx sigma() const { return z + zp + b; }
  void check_ab() const {
    if (!(a >= b && b >= -0.5)) throw PoleError("parameters must satisfy a >= b >= -1/2");
  }
};

using Signature = std::vector<int>;  // weakly decreasing, nonnegative

struct FrobeniusCoords {
  std::vector<int> p;
  std::vector<int> q;
  int d() const { return static_cast<int>(p.size()); }
};

// lattice indices x, stored ascending; the point is (x+eps)^2
using PointConfig = std::vector<int>;

enum class PairKind { principal, complementary, degenerate, outside };

struct PairClass {
  PairKind kind = PairKind::outside;
  int n = 0;
  std::string name() const {
    switch (kind) {
      case PairKind::principal: return "principal";
      case PairKind::complementary: return "complementary";
      case PairKind::degenerate: return "degenerate(" + std::to_string(n) + ")";
      default: return "outside";
    }
  }
};

inline PairClass classify_pair(cplx z, cplx zp) {
  const double tol = 1e-12;
  auto is_real = [&](cplx v) { return std::abs(v.imag()) <= tol * std::max(1.0, std::abs(v)); };
  auto is_int = [&](double v) { return std::abs(v - std::round(v)) <= tol * std::max(1.0, std::abs(v)); };
  if (!is_real(z) && std::abs(zp - std::conj(z)) <= tol * std::max(1.0, std::abs(z))) return {PairKind::principal, 0};
  if (!is_real(z) || !is_real(zp)) return {PairKind::outside, 0};
  double x = z.real(), y = zp.real();
  if (!is_int(x) && !is_int(y) && std::floor(x) == std::floor(y)) return {PairKind::complementary, static_cast<int>(std::floor(x))};
  if (is_int(x) && std::round(x) >= 1.0 && y > std::round(x) - 1.0) return {PairKind::degenerate, static_cast<int>(std::round(x))};
  if (is_int(y) && std::round(y) >= 1.0 && x > std::round(y) - 1.0) return {PairKind::degenerate, static_cast<int>(std::round(y))};
  return {PairKind::outside, 0};
}

inline bool in_U(const Params& p) { return p.sigma().real() > -1.0; }

inline bool in_U0(const Params& p) {
  if (!in_U(p)) return false;
  auto negint = [](cplx v) {
    return std::abs(v.imag()) <= 1e-12 && v.real() < -0.5 && std::abs(v.real() - std::round(v.real())) <= 1e-12 * std::max(1.0, std::abs(v.real()));
  };
  return !(negint(p.z) || negint(p.zp) || negint(p.z + p.b) || negint(p.zp + p.b));
}

inline bool is_admissible(const Params& p) {
  p.check_ab();
  double e2 = 2.0 * p.eps();
  return p.sigma().real() > -1.0 && classify_pair(p.z, p.zp).kind != PairKind::outside &&
         classify_pair(p.z + e2, p.zp + e2).kind != PairKind::outside;
}

// (x+eps) Gamma(x+2eps) / Gamma(x+1); at eps=0, x=0 the value is the b -> -1/2 limit 1/2.
inline double eps_gamma_factor(int x, double eps) {
  if (x == 0 && eps == 0.0) return 0.5;
  double xe = x + eps;
  return xe / (x + 2.0 * eps) * std::exp(std::lgamma(x + 2.0 * eps + 1.0) - std::lgamma(x + 1.0));
}

// w(x | z, z', a, b; N)
inline cplx weight_w(int x, const Params& p, int N) {
  p.check_ab();
  const double e2 = 2.0 * p.eps();
  const double xd = x;
  const cplx args[4] = {p.z - xd + static_cast<double>(N), p.zp - xd + static_cast<double>(N), p.z + xd + static_cast<double>(N) + e2,
                        p.zp + xd + static_cast<double>(N) + e2};
  cplx s = std::lgamma(xd + p.a + 1.0) - std::lgamma(xd + p.b + 1.0);
  for (cplx v : args) {
    if (near_nonpos_int(v)) return 0.0;
    s -= lgamma_c(v);
  }
  return eps_gamma_factor(x, p.eps()) * std::exp(s);
}

// Total mass of P'_N. The Gamma product alone exceeds the lattice sum of
// P'_N by exactly 2^N, so the factor 2^{-N} is included here.
inline cplx partition_s_n(const Params& p, int N) {
  if (!in_U0(p)) throw PoleError("partition_s_n: parameters outside U0");
  cplx s = -static_cast<double>(N) * std::log(2.0);
  const cplx S = p.sigma();
  for (int i = 1; i <= N; ++i) {
    double di = i;
    s += lgamma_c(S + di) + std::lgamma(p.a + di) + std::lgamma(di);
    s -= lgamma_c(p.z + di) + lgamma_c(p.z + p.b + di) + lgamma_c(p.zp + di) + lgamma_c(p.zp + p.b + di) +
         lgamma_c(S + p.a + static_cast<double>(N) + di);
  }
  return std::exp(s);
}

inline std::vector<int> shifted_l(const Signature& lam) {
  const int N = static_cast<int>(lam.size());
  std::vector<int> l(lam.size());
  for (int i = 0; i < N; ++i) l[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + N - 1 - i;
  return l;
}

inline cplx p_prime(const Signature& lam, const Params& p, int N) {
  if (static_cast<int>(lam.size()) != N) throw DomainError("p_prime: signature length must equal N");
  auto l = shifted_l(lam);
  const double e = p.eps();
  cplx v = 1.0;
  for (int i = 0; i < N; ++i) {
    v *= weight_w(l[static_cast<size_t>(i)], p, N);
    if (v == cplx(0.0, 0.0)) return 0.0;
    double li = (l[static_cast<size_t>(i)] + e) * (l[static_cast<size_t>(i)] + e);
    for (int j = i + 1; j < N; ++j) {
      double lj = (l[static_cast<size_t>(j)] + e) * (l[static_cast<size_t>(j)] + e);
      v *= (li - lj) * (li - lj);
    }
  }
  return v;
}

inline cplx prob(const Signature& lam, const Params& p, int N) { return p_prime(lam, p, N) / partition_s_n(p, N); }

inline FrobeniusCoords frobenius(const Signature& lam) {
  FrobeniusCoords f;
  const int n = static_cast<int>(lam.size());
  int d = 0;
  while (d < n && lam[static_cast<size_t>(d)] >= d + 1) ++d;
  for (int i = 1; i <= d; ++i) {
    f.p.push_back(lam[static_cast<size_t>(i - 1)] - i);
    int conj = 0;
    for (int v : lam)
      if (v >= i) ++conj;
    f.q.push_back(conj - i);
  }
  return f;
}

inline Signature from_frobenius(const FrobeniusCoords& f, int N) {
  Signature lam(static_cast<size_t>(N), 0);
  const int d = f.d();
  for (int i = 1; i <= N; ++i) {
    if (i <= d) {
      lam[static_cast<size_t>(i - 1)] = f.p[static_cast<size_t>(i - 1)] + i;
    } else {
      int c = 0;
      for (int j = 1; j <= d; ++j)
        if (f.q[static_cast<size_t>(j - 1)] + j >= i) ++c;
      lam[static_cast<size_t>(i - 1)] = c;
    }
  }
  return lam;
}

inline PointConfig map_O(const Signature& lam) {
  PointConfig c = shifted_l(lam);
  std::sort(c.begin(), c.end());
  return c;
}

inline PointConfig map_L(const Signature& lam) {
  const int N = static_cast<int>(lam.size());
  auto f = frobenius(lam);
  PointConfig c;
  for (int v : f.p) c.push_back(N + v);
  for (int v : f.q) c.push_back(N - 1 - v);
  std::sort(c.begin(), c.end());
  return c;
}

inline PointConfig symmetric_difference_lower(const PointConfig& c, int N) {
  PointConfig low(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) low[static_cast<size_t>(i)] = i;
  PointConfig out;
  std::set_symmetric_difference(c.begin(), c.end(), low.begin(), low.end(), std::back_inserter(out));
  return out;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Visit every signature with max part <= k.
inline void for_each_signature(int k, int N, const std::function<void(const Signature&)>& fn) {
  Signature lam(static_cast<size_t>(N), 0);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == N) {
      fn(lam);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      lam[static_cast<size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, k);
}

inline std::vector<Signature> enumerate_degenerate(int k, int N) {
  if (k < 1 || N < 1) throw DomainError("enumerate_degenerate: k, N must be positive");
  if (binomial(N + k, k) > 1e6) throw SizeError("enumerate_degenerate: more than 10^6 signatures");
  std::vector<Signature> out;
  for_each_signature(k, N, [&](const Signature& s) { out.push_back(s); });
  std::reverse(out.begin(), out.end());
  return out;
}

struct TruncatedSum {
  cplx total{0.0, 0.0};
  int cutoff = 0;
  double tail_estimate = 0.0;
};

// Sum of P'_N over all signatures, growing the cutoff on lambda_1 until the
// estimated tail falls below 1e-10 of the running sum.
inline TruncatedSum total_measure(const Params& p, int N, int max_cut = 4000) {
  const double e = p.eps();
  const double decay = 2.0 + 2.0 * p.sigma().real();
  std::vector<cplx> w;
  std::vector<double> xh;
  auto grow = [&](int upto) {
    for (int x = static_cast<int>(w.size()); x <= upto; ++x) {
      w.push_back(weight_w(x, p, N));
      xh.push_back((x + e) * (x + e));
    }
  };
  TruncatedSum out;
  std::vector<int> l(static_cast<size_t>(N));
  int M = 0;
  cdd acc(cplx(0.0, 0.0));
  // shell-by-shell: signatures with lambda_1 == m
  auto shell = [&](int m) {
    grow(m + N);
    cdd s(cplx(0.0, 0.0));
    std::function<void(int, int, cplx)> rec = [&](int i, int cap, cplx partial) {
      if (i == N) {
        s = s + cdd(partial);
        return;
      }
      for (int v = (i == 0 ? m : 0); v <= cap; ++v) {
        int li = v + N - 1 - i;
        cplx f = partial * w[static_cast<size_t>(li)];
        if (f == cplx(0.0, 0.0)) continue;
        for (int j = 0; j < i; ++j) {
          double dlt = xh[static_cast<size_t>(l[static_cast<size_t>(j)])] - xh[static_cast<size_t>(li)];
          f *= dlt * dlt;
        }
        l[static_cast<size_t>(i)] = li;
        rec(i + 1, v, f);
      }
    };
    rec(0, m, cplx(1.0, 0.0));
    return s.to_cplx();
  };
  int quiet = 0;
  for (M = 0; M <= max_cut; ++M) {
    cplx sh = shell(M);
    acc = acc + cdd(sh);
    double tail = std::abs(sh) * (M + 1.0) / std::max(decay - 1.0, 1e-3);
    out.tail_estimate = tail;
    if (M > 8 && tail < 1e-10 * std::abs(acc.to_cplx())) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  out.total = acc.to_cplx();
  out.cutoff = std::min(M, max_cut);
  return out;
}

}  // namespace bcz
