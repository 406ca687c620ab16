#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "bcz/core.hpp"
#include "bcz/gamma.hpp"

namespace bcz {

struct SeriesSpec {
  std::vector<cplx> top;
  std::vector<cplx> bottom;
  cplx argument{1.0, 0.0};
  std::optional<int> terminating_order;
};

struct KernelValue {
  cplx value{0.0, 0.0};
  double max_term = 0.0;
  double cancellation() const { return max_term / std::max(std::abs(value), 1e-300); }
};

namespace detail {

// smallest n with top[i] = -n, or -1
inline int termination_index(const std::vector<cplx>& top) {
  int n = -1;
  for (cplx a : top)
    if (near_nonpos_int(a)) {
      int m = static_cast<int>(-std::round(a.real()));
      if (n < 0 || m < n) n = m;
    }
  return n;
}

inline void check_bottom(const std::vector<cplx>& bottom, int n) {
  for (cplx b : bottom)
    if (near_nonpos_int(b)) {
      int m = static_cast<int>(-std::round(b.real()));
      if (n < 0 || m < n) throw PoleError("pfq: bottom parameter hits a pole");
    }
}

inline std::vector<cplx> terms_terminating(const SeriesSpec& s, int n) {
  std::vector<cplx> t(static_cast<size_t>(n) + 1);
  cplx term = 1.0;
  t[0] = term;
  for (int k = 0; k < n; ++k) {
    cplx num = s.argument, den = static_cast<double>(k + 1);
    for (cplx a : s.top) num *= a + static_cast<double>(k);
    for (cplx b : s.bottom) den *= b + static_cast<double>(k);
    term *= num / den;
    t[k + 1] = term;
  }
  return t;
}

inline cplx sum_terminating_dd(const SeriesSpec& s, int n) {
  cdd term(cplx(1.0, 0.0)), acc = term, z(s.argument);
  for (int k = 0; k < n; ++k) {
    cdd num = z, den(cplx(static_cast<double>(k + 1), 0.0));
    dd kk(static_cast<double>(k));
    for (cplx a : s.top) num = num * cdd(dd(a.real()) + kk, dd(a.imag()));
    for (cplx b : s.bottom) den = den * cdd(dd(b.real()) + kk, dd(b.imag()));
    term = term * num / den;
    acc = acc + term;
  }
  return acc.to_cplx();
}

inline const std::vector<double>& bernoulli_numbers() {
  static const std::vector<double> B = [] {
    std::vector<double> b(24, 0.0);
    b[0] = 1.0;
    b[1] = -0.5;
    for (int k = 1; 2 * k < 24; ++k) b[2 * k] = boost::math::bernoulli_b2n<double>(k);
    return b;
  }();
  return B;
}

// log Gamma(u+a) - (u+a-1/2) log u + u - log(2 pi)/2
inline cplx stirling_remainder(cplx u, cplx a) {
  if (std::abs(u) >= 40.0 * (std::abs(a) + 2.0)) {
    const auto& B = bernoulli_numbers();
    cplx ui = 1.0 / u, up = ui, acc = 0.0;
    for (int n = 1; n <= 14; ++n) {
      int m = n + 1;
      cplx bp = 0.0, apow = 1.0;
      double binom = 1.0;
      std::vector<cplx> pw(static_cast<size_t>(m) + 1);
      for (int i = 0; i <= m; ++i) {
        pw[static_cast<size_t>(i)] = apow;
        apow *= a;
      }
      for (int k = 0; k <= m; ++k) {
        if (B[static_cast<size_t>(k)] != 0.0) bp += binom * B[static_cast<size_t>(k)] * pw[static_cast<size_t>(m - k)];
        binom = binom * (m - k) / (k + 1);
      }
      cplx term = ((n % 2) ? 1.0 : -1.0) * bp / (static_cast<double>(n) * (n + 1)) * up;
      acc += term;
      if (std::abs(term) < 1e-18 * std::max(std::abs(acc), 1e-300)) break;
      up *= ui;
    }
    return acc;
  }
  return lgamma_c(u + a) - (u + a - 0.5) * std::log(u) + u - 0.5 * std::log(2.0 * kPi);
}

// sum_{k>=K} f(k) for a smooth f decaying like u^{-1-decay}: integral over
// [K-1/2, inf) in log-scaled Gauss-Legendre panels plus midpoint Euler-Maclaurin corrections.
inline cplx smooth_tail_sum(const std::function<cplx(double)>& f, int K, double decay, double osc = 0.0) {
  const double Kp = K - 0.5;
  double h = std::min(0.5, 1.0 / std::max(1.0, osc));
  using GL = boost::math::quadrature::gauss<double, 20>;
  const auto& x = GL::abscissa();
  const auto& w = GL::weights();
  cdd acc(cplx(0.0, 0.0));
  double wlo = 0.0;
  for (int panel = 0; panel < 20000; ++panel) {
    double mid = wlo + 0.5 * h, half = 0.5 * h;
    cplx ps = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      for (int sg = -1; sg <= 1; sg += 2) {
        if (x[i] == 0.0 && sg == 1) continue;
        double ww = mid + sg * half * x[i];
        double u = Kp * std::exp(ww);
        ps += w[i] * f(u) * u;
      }
    }
    ps *= half;
    acc = acc + cdd(ps);
    wlo += h;
    double u_end = Kp * std::exp(wlo);
    double bound = std::abs(f(u_end) * u_end) / std::max(decay, 1e-3);
    if (wlo > 1.0 && bound < 1e-18 * std::abs(acc.to_cplx())) break;
    if (wlo > 1.0 && acc.to_cplx() == cplx(0.0, 0.0)) break;
    if (u_end > 1e290) break;
  }
  cplx integral = acc.to_cplx();
  cplx fm2 = f(Kp - 2.0), fm1 = f(Kp - 1.0), fp1 = f(Kp + 1.0), fp2 = f(Kp + 2.0);
  cplx d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / 12.0;
  cplx d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / 2.0;
  return integral + d1 / 24.0 - 7.0 * d3 / 5760.0;
}

// Tail sum_{k>=K} t_k of a balanced-or-better unit-argument series, using the
// analytically continued term.
inline cplx unit_tail(const SeriesSpec& s, int K, cplx tK) {
  cplx excess = -1.0;
  for (cplx a : s.top) excess += a;
  for (cplx b : s.bottom) excess -= b;
  auto logshape = [&](cplx u) {
    cplx v = excess * std::log(u);
    for (cplx a : s.top) v += stirling_remainder(u, a);
    for (cplx b : s.bottom) v -= stirling_remainder(u, b);
    v -= stirling_remainder(u, 1.0);
    return v;
  };
  if (tK == cplx(0.0, 0.0)) return 0.0;
  cplx c0 = std::log(tK) - logshape(static_cast<double>(K));
  cplx s_exp = -(excess + 1.0);
  return smooth_tail_sum([&](double u) { return std::exp(c0 + logshape(u)); }, K, s_exp.real(), std::abs(s_exp.imag()));
}

}  // namespace detail

// Generalized hypergeometric series pFq(top; bottom; argument).
inline KernelValue pfq(const SeriesSpec& s) {
  int n = s.terminating_order ? *s.terminating_order : detail::termination_index(s.top);
  detail::check_bottom(s.bottom, n);
  KernelValue out;
  if (n >= 0) {
    auto t = detail::terms_terminating(s, n);
    cdd acc(cplx(0.0, 0.0));
    for (cplx v : t) {
      acc = acc + cdd(v);
      out.max_term = std::max(out.max_term, std::abs(v));
    }
    out.value = acc.to_cplx();
    if (out.max_term > 1e6 * std::abs(out.value)) out.value = detail::sum_terminating_dd(s, n);
    return out;
  }

  const size_t p = s.top.size(), q = s.bottom.size();
  const bool unit = std::abs(s.argument - 1.0) < 1e-15;
  if (std::abs(s.argument) > 1.0 + 1e-15 && p > q) throw DomainError("pfq: argument outside the unit disk");
  if (unit && p == q + 1) {
    cplx ex = 0.0;
    for (cplx b : s.bottom) ex += b;
    for (cplx a : s.top) ex -= a;
    if (ex.real() <= 0.0) throw DomainError("pfq: unit-argument series needs Re(sum bottom - sum top) > 0");
    double P = 1.0;
    for (cplx a : s.top) P = std::max(P, std::abs(a));
    for (cplx b : s.bottom) P = std::max(P, std::abs(b));
    int K = static_cast<int>(std::max(256.0, 8.0 * P + 64.0));
    if (K > 1000000) throw DivergenceError("pfq: parameters too large for unit-argument summation");
    cplx term = 1.0;
    cdd acc(cplx(0.0, 0.0));
    for (int k = 0; k < K; ++k) {
      acc = acc + cdd(term);
      out.max_term = std::max(out.max_term, std::abs(term));
      cplx num = 1.0, den = static_cast<double>(k + 1);
      for (cplx a : s.top) num *= a + static_cast<double>(k);
      for (cplx b : s.bottom) den *= b + static_cast<double>(k);
      term *= num / den;
    }
    out.value = acc.to_cplx() + detail::unit_tail(s, K, term);
    return out;
  }
  if (unit && p > q + 1) throw DomainError("pfq: divergent unit-argument series");

  cplx term = 1.0;
  cdd acc(cplx(0.0, 0.0));
  int small = 0;
  for (int k = 0; k < 1000000; ++k) {
    acc = acc + cdd(term);
    out.max_term = std::max(out.max_term, std::abs(term));
    if (std::abs(term) < 1e-18 * std::abs(acc.to_cplx())) {
      if (++small >= 3) {
        out.value = acc.to_cplx();
        return out;
      }
    } else {
      small = 0;
    }
    cplx num = s.argument, den = static_cast<double>(k + 1);
    for (cplx a : s.top) num *= a + static_cast<double>(k);
    for (cplx b : s.bottom) den *= b + static_cast<double>(k);
    term *= num / den;
    if (term == cplx(0.0, 0.0)) {
      out.value = acc.to_cplx();
      return out;
    }
  }
  throw DivergenceError("pfq: no convergence within 10^6 terms");
}

inline cplx hyp(std::vector<cplx> top, std::vector<cplx> bottom, cplx z = 1.0) {
  return pfq(SeriesSpec{std::move(top), std::move(bottom), z, std::nullopt}).value;
}

inline cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) { return hyp({a, b}, {c}, z); }

}  // namespace bcz
