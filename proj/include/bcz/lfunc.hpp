#pragma once

#include "bcz/gamma.hpp"
#include "bcz/hyper.hpp"

namespace bcz {

// L(A,B,C,D; E; F,G): two balanced unit-argument 4F3 series with Gamma weights.
inline cplx l_function(cplx A, cplx B, cplx C, cplx D, cplx E, cplx F, cplx G) {
  if (std::abs(E + F + G - A - B - C - D - 1.0) > 1e-10) throw ConstraintError("l_function: E+F+G-A-B-C-D must equal 1");
  if (near_int(E, kPoleTol * std::max(1.0, std::abs(E)))) throw PoleError("l_function: E is an integer");
  cplx c1 = gamma_ratio_z({1.0 - E}, {F, G, 1.0 + A - E, 1.0 + B - E, 1.0 + C - E, 1.0 + D - E}) / kPi;
  cplx c2 = gamma_ratio_z({E - 1.0}, {1.0 + F - E, 1.0 + G - E, A, B, C, D}) / kPi;
  cplx out = 0.0;
  if (c1 != cplx(0.0, 0.0)) out += c1 * hyp({A, B, C, D}, {E, F, G});
  if (c2 != cplx(0.0, 0.0))
    out += c2 * hyp({1.0 + A - E, 1.0 + B - E, 1.0 + C - E, 1.0 + D - E}, {2.0 - E, 1.0 + F - E, 1.0 + G - E});
  return out;
}

// Single-series form valid when A = -n.
inline cplx l_function_terminating(int n, cplx X, cplx Y, cplx Z, cplx U, cplx V, cplx W) {
  cplx A = -static_cast<double>(n);
  cplx c = gamma_ratio_z({1.0 - U}, {1.0 + A - U, 1.0 + X - U, 1.0 + Y - U, 1.0 + Z - U, V, W}) / kPi;
  if (c == cplx(0.0, 0.0)) return 0.0;
  return c * hyp({A, X, Y, Z}, {U, V, W});
}

// Very-well-poised 7F6(1), W(A; C, D, E, F, G).
inline cplx w76(cplx A, cplx C, cplx D, cplx E, cplx F, cplx G) {
  const cplx xs[5] = {C, D, E, F, G};
  for (cplx x : xs)
    if (near_nonpos_int(1.0 + A - x)) {
      int m = static_cast<int>(-std::round((1.0 + A - x).real()));
      bool cut = false;
      for (cplx y : xs)
        if (near_nonpos_int(y) && -std::round(y.real()) < m + 1) cut = true;
      if (near_nonpos_int(A) && -std::round(A.real()) < m + 1) cut = true;
      if (!cut) throw DomainError("w76: A - C etc. must avoid negative integers");
    }
  int n = -1;
  for (cplx y : xs)
    if (near_nonpos_int(y)) {
      int m = static_cast<int>(-std::round(y.real()));
      n = (n < 0) ? m : std::min(n, m);
    }
  if (near_nonpos_int(A)) {
    int m = static_cast<int>(-std::round(A.real()));
    n = (n < 0) ? m : std::min(n, m);
  }
  if (n >= 0) {
    // (A)_k (1+A/2)_k / (A/2)_k = (A+1)_{k-1} (A+2k)
    cdd acc(cplx(1.0, 0.0));
    cplx ratio_part = 1.0;
    for (int k = 1; k <= n; ++k) {
      cplx kk = static_cast<double>(k);
      for (cplx x : xs) ratio_part *= (x + kk - 1.0) / (1.0 + A - x + kk - 1.0);
      ratio_part /= kk;
      if (k >= 2) ratio_part *= A + kk - 1.0;
      acc = acc + cdd(ratio_part * (A + 2.0 * kk));
    }
    return acc.to_cplx();
  }
  cplx S = C + D + E + F + G;
  if ((2.0 + 2.0 * A - S).real() <= 0.0) throw DomainError("w76: Re(2+2A-C-D-E-F-G) must be positive");
  return hyp({A, 1.0 + A / 2.0, C, D, E, F, G}, {A / 2.0, 1.0 + A - C, 1.0 + A - D, 1.0 + A - E, 1.0 + A - F, 1.0 + A - G});
}

// Right-hand side of the L-to-7F6 conversion.
inline cplx l_via_w76(cplx A, cplx B, cplx C, cplx D, cplx E, cplx F, cplx G) {
  if ((F - D).real() <= 0.0) throw DomainError("L-to-W conversion needs Re(F-D) > 0");
  cplx pref = gamma_ratio_z({1.0 + D + G - E}, {G, 1.0 + G - E, F - D, 1.0 + A + D - E, 1.0 + B + D - E, 1.0 + C + D - E}) / kPi;
  return w76(D + G - E, G - A, G - B, G - C, D, 1.0 + D - E) * pref;
}

}  // namespace bcz
