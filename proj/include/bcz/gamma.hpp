#pragma once

#include <initializer_list>
#include <vector>

#include "bcz/core.hpp"

namespace bcz {

// log(sin(pi z)) modulo 2*pi*i, safe for large |Im z| and accurate near the zeros.
inline cplx log_sin_pi(cplx z) {
  double n = std::round(z.real());
  double f = z.real() - n;
  bool odd = std::fmod(std::abs(n), 2.0) == 1.0;
  cplx w(kPi * f, kPi * z.imag());
  cplx ls;
  if (std::abs(w.imag()) < 15.0) {
    ls = std::log(std::sin(w));
  } else if (w.imag() > 0) {
    cplx i(0.0, 1.0);
    ls = -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
  } else {
    cplx i(0.0, 1.0);
    ls = i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
  }
  if (odd) ls += cplx(0.0, kPi);
  return ls;
}

inline cplx sin_pi(cplx z) {
  double n = std::round(z.real());
  double f = z.real() - n;
  cplx s = std::sin(cplx(kPi * f, kPi * z.imag()));
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

inline double sin_pi(double x) { return sin_pi(cplx(x, 0.0)).real(); }

namespace detail {

inline cplx lgamma_stirling(cplx z) {
  static const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  cplx zi = 1.0 / z, zi2 = zi * zi, p = zi, s = 0.0;
  for (int k = 1; k <= 8; ++k) {
    s += B[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= zi2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + s;
}

}  // namespace detail

// Principal-branch-equivalent log Gamma (exact up to multiples of 2 pi i).
inline cplx lgamma_c(cplx z) {
  if (z.real() < 0.5) {
    if (near_nonpos_int(z)) throw PoleError("lgamma at a nonpositive integer");
    return std::log(kPi) - log_sin_pi(z) - lgamma_c(1.0 - z);
  }
  if (std::abs(z) >= 15.0) return detail::lgamma_stirling(z);
  cplx prod = 1.0;
  while (std::abs(z) < 15.0) {
    prod *= z;
    z += 1.0;
  }
  return detail::lgamma_stirling(z) - std::log(prod);
}

inline cplx gamma_c(cplx z) {
  if (near_nonpos_int(z)) throw PoleError("Gamma pole at " + std::to_string(z.real()));
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 170.0) return std::tgamma(z.real());
  return std::exp(lgamma_c(z));
}

// 1/Gamma(z), exactly zero at the poles of Gamma.
inline cplx rgamma_c(cplx z) {
  if (near_nonpos_int(z)) return 0.0;
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 170.0) return 1.0 / std::tgamma(z.real());
  return std::exp(-lgamma_c(z));
}

inline cplx pochhammer(cplx x, int k) {
  cplx p = 1.0;
  for (int i = 0; i < k; ++i) p *= x + static_cast<double>(i);
  return p;
}

inline xc pochhammer_x(cplx x, int k) {
  xc p(cplx(1.0, 0.0));
  for (int i = 0; i < k; ++i) p = p * (x + static_cast<double>(i));
  return p;
}

struct GammaRatio {
  std::vector<cplx> numerator_args;
  std::vector<cplx> denominator_args;
};

// Gamma[num / den]; every pole is an error.
inline cplx gamma_ratio(const GammaRatio& g) {
  cplx s = 0.0;
  for (cplx a : g.numerator_args) {
    if (near_nonpos_int(a)) throw PoleError("gamma_ratio: numerator pole");
    s += lgamma_c(a);
  }
  for (cplx a : g.denominator_args) {
    if (near_nonpos_int(a)) throw PoleError("gamma_ratio: denominator pole");
    s -= lgamma_c(a);
  }
  return std::exp(s);
}

inline cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  return gamma_ratio(GammaRatio{num, den});
}

// Gamma[num / den] where a denominator pole gives an exact zero.
inline cplx gamma_ratio_z(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  cplx s = 0.0;
  for (cplx a : den) {
    if (near_nonpos_int(a)) return 0.0;
    s -= lgamma_c(a);
  }
  for (cplx a : num) {
    if (near_nonpos_int(a)) throw PoleError("gamma_ratio: numerator pole");
    s += lgamma_c(a);
  }
  return std::exp(s);
}

// log of Gamma[num / den] (mod 2 pi i); poles are errors.
inline cplx log_gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  cplx s = 0.0;
  for (cplx a : num) s += lgamma_c(a);
  for (cplx a : den) s -= lgamma_c(a);
  return s;
}

}  // namespace bcz
