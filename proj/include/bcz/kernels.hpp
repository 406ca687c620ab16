#pragma once

#include <array>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bcz/orthopoly.hpp"

namespace bcz {

enum class KernelKind { O, L };

struct DiscreteKernel {
  Params params;
  int N = 1;
  KernelKind kind = KernelKind::O;
};

namespace detail {

struct AlmostSeries {
  int n = 0;
  std::array<cplx, 4> top{};
  cplx bottom{1.0, 0.0};
};

inline cplx almost_coefficient_step(const AlmostSeries& s, int k) {
  // c_{k+1}/c_k including the sign (-1)
  cplx r = -1.0 / ((s.bottom + static_cast<double>(k)) * static_cast<double>(k + 1));
  for (cplx t : s.top) r *= t + static_cast<double>(k);
  return r;
}

// sum_k c_k (-1)^k prod_{j<n-k} (xh - (j+eps)^2)
inline KernelValue almost_poly(const AlmostSeries& s, cplx xh, double eps) {
  const int n = s.n;
  std::vector<cdd> prefix(static_cast<size_t>(n) + 1, cdd(cplx(1.0, 0.0)));
  for (int j = 0; j < n; ++j) prefix[static_cast<size_t>(j) + 1] = prefix[static_cast<size_t>(j)] * (cdd(xh) - cdd(cplx((j + eps) * (j + eps), 0.0)));
  KernelValue out;
  cdd acc(cplx(0.0, 0.0));
  cplx c = 1.0;
  for (int k = 0; k <= n; ++k) {
    cdd t = cdd(c) * prefix[static_cast<size_t>(n - k)];
    out.max_term = std::max(out.max_term, std::abs(t.to_cplx()));
    acc = acc + t;
    if (k < n) c *= almost_coefficient_step(s, k);
    if (c == cplx(0.0, 0.0)) break;
  }
  out.value = acc.to_cplx();
  return out;
}

// almost_poly / prod_{j<Ntot} (xh - (j+eps)^2), summed term by term
inline KernelValue almost_ratio(const AlmostSeries& s, int Ntot, cplx xh, double eps) {
  const int n = s.n;
  cplx t = 1.0;
  for (int j = n; j < Ntot; ++j) t /= xh - (j + eps) * (j + eps);
  KernelValue out;
  cdd acc(cplx(0.0, 0.0));
  for (int k = 0; k <= n; ++k) {
    out.max_term = std::max(out.max_term, std::abs(t));
    acc = acc + cdd(t);
    if (k == n) break;
    double jh = (n - k - 1 + eps) * (n - k - 1 + eps);
    t *= almost_coefficient_step(s, k) / (xh - jh);
    if (t == cplx(0.0, 0.0)) break;
  }
  out.value = acc.to_cplx();
  return out;
}

}  // namespace detail

inline detail::AlmostSeries almost_pN(const Params& p, int N) {
  const double Nn = N;
  return {N, {cplx(-Nn), cplx(-Nn - p.a), p.z, p.zp}, p.sigma()};
}
inline detail::AlmostSeries almost_pN_tilde(const Params& p, int N) {
  auto s = almost_pN(p, N);
  s.bottom += 1.0;
  return s;
}
inline detail::AlmostSeries almost_pN1(const Params& p, int N) {
  const double Nn = N;
  return {N - 1, {cplx(1.0 - Nn), cplx(1.0 - Nn - p.a), p.z + 1.0, p.zp + 1.0}, p.sigma() + 2.0};
}

inline cplx p_n_tilde_hat(cplx xh, const Params& p, int N) {
  if (near_nonpos_int(p.sigma() + 1.0)) throw PoleError("p_n_tilde: Sigma+1 is a pole");
  return detail::almost_poly(almost_pN_tilde(p, N), xh, p.eps()).value;
}

inline cplx p_n_tilde(int x, const DiscreteKernel& k) {
  double e = k.params.eps();
  return p_n_tilde_hat((x + e) * (x + e), k.params, k.N);
}

// h_{N-1} in the single Gamma-bracket form.
inline cplx norm_h_last(const Params& p, int N) {
  const cplx S = p.sigma();
  const double Nn = N;
  cplx r = 0.5 * std::exp(std::lgamma(Nn + p.a) + std::lgamma(Nn) + lgamma_c(S + 1.0) + lgamma_c(S + 2.0) - lgamma_c(Nn + S + p.a + 1.0) -
                          lgamma_c(Nn + S + 1.0));
  return r * rgamma_c(1.0 + p.z) * rgamma_c(1.0 + p.zp) * rgamma_c(1.0 + p.z + p.b) * rgamma_c(1.0 + p.zp + p.b);
}

inline double psi_geq(int x, const Params& p, int N) {
  if (x < N) throw DomainError("psi_geq: need x >= N");
  const double e = p.eps(), e2 = 2.0 * e, xd = x, Nn = N;
  const cplx args[4] = {-xd + p.z + Nn, xd + p.z + Nn + e2, -xd + p.zp + Nn, xd + p.zp + Nn + e2};
  cplx l = 2.0 * std::lgamma(xd + Nn + e2) - 2.0 * std::lgamma(xd - Nn + 1.0) + std::lgamma(xd + 1.0) + std::lgamma(xd + p.a + 1.0) -
           std::lgamma(xd + e2) - std::lgamma(xd + p.b + 1.0);
  for (cplx v : args) {
    if (near_nonpos_int(v)) return 0.0;
    l -= lgamma_c(v);
  }
  return ((xd + e) * std::exp(l)).real();
}

inline double psi_less(int x, const Params& p, int N) {
  if (x < 0 || x >= N) throw DomainError("psi_less: need 0 <= x < N");
  const double e = p.eps(), e2 = 2.0 * e, xd = x, Nn = N;
  const cplx args[4] = {-xd + p.z + Nn, xd + p.z + Nn + e2, -xd + p.zp + Nn, xd + p.zp + Nn + e2};
  cplx l = -2.0 * std::lgamma(Nn - xd) - 2.0 * std::lgamma(xd + Nn + e2) + std::lgamma(xd + p.b + 1.0) - std::lgamma(xd + p.a + 1.0);
  for (cplx v : args) l += lgamma_c(v);
  return (4.0 * eps_gamma_factor(x, e) * std::exp(l)).real();
}

// psi_geq continued to real u >= N through the sine form of W.
inline cplx psi_geq_continuous(double u, const Params& p, int N) {
  cplx s = sin_pi(p.z) * sin_pi(p.zp);
  if (s == cplx(0.0, 0.0)) return 0.0;
  const double e = p.eps(), e2 = 2.0 * e, Nn = N;
  cplx l = 2.0 * std::lgamma(u + Nn + e2) - 2.0 * std::lgamma(u - Nn + 1.0) + std::lgamma(u + 1.0) + std::lgamma(u + p.a + 1.0) -
           std::lgamma(u + e2) - std::lgamma(u + p.b + 1.0);
  l += lgamma_c(u + 1.0 - p.z - Nn) + lgamma_c(u + 1.0 - p.zp - Nn) - lgamma_c(u + p.z + Nn + e2) - lgamma_c(u + p.zp + Nn + e2);
  return s / (kPi * kPi) * (u + e) * std::exp(l);
}

// psi~ on the pole set Y: psi(y^)/(2(y+eps)), odd under zeta -> -zeta-2eps.
inline cplx psi_tilde(cplx y, const Params& p, int N) {
  const double e = p.eps();
  double r = std::round(y.real());
  bool direct = std::abs(y - cplx(r, 0.0)) < 1e-9 && r >= 0.0;
  int j;
  double sign = 1.0;
  if (direct) {
    j = static_cast<int>(r);
  } else {
    cplx m = -y - 2.0 * e;
    double rm = std::round(m.real());
    if (!(std::abs(m - cplx(rm, 0.0)) < 1e-9 && rm >= 0.0)) throw DomainError("psi_tilde: argument is not in the pole set");
    j = static_cast<int>(rm);
    sign = -1.0;
  }
  double psi = (j >= N) ? psi_geq(j, p, N) : psi_less(j, p, N);
  return sign * psi / (2.0 * (j + e));
}

inline cplx g_factor(cplx zeta, const Params& p, int N) {
  const cplx S = p.sigma();
  const double Nn = N;
  double r = std::round(zeta.real());
  if (std::abs(zeta - cplx(r, 0.0)) < 1e-12) {
    int y = static_cast<int>(r);
    return ((y + N + 1) % 2 == 0) ? 1.0 : -1.0;
  }
  cplx den = sin_pi(S) * sin_pi(zeta - p.z) * sin_pi(zeta - p.zp);
  cplx num = sin_pi(p.z) * sin_pi(p.zp) * sin_pi(zeta - S + Nn);
  if (std::abs(den) < 1e-300) {
    if (std::abs(num) < 1e-300) return 0.0;
    throw PoleError("g_factor: pole");
  }
  return num / den;
}

// (1/2 pi i) contour integral of f(w)/(w-x)^2 on a circle of radius r.
inline cplx contour_derivative(const std::function<cplx(cplx)>& f, cplx x, double r = 0.3, int n = 32) {
  cplx acc = 0.0;
  for (int j = 0; j < n; ++j) {
    cplx u = std::polar(1.0, 2.0 * kPi * (j + 0.5) / n);
    acc += f(x + r * u) / u;
  }
  return acc / (static_cast<double>(n) * r);
}

// Residue of f at y0 from (zeta-y0) f(zeta) averaged over four points on a small circle.
inline cplx residue_at(const std::function<cplx(cplx)>& f, cplx y0, double r = 1e-5) {
  cplx acc = 0.0;
  for (int j = 0; j < 4; ++j) {
    cplx d = r * std::polar(1.0, kPi / 4.0 + j * kPi / 2.0);
    acc += d * f(y0 + d);
  }
  return acc / 4.0;
}

class RSBundle {
 public:
  RSBundle(const Params& p, int N) : p_(p), N_(N), eps_(p.eps()) {
    if (N < 1) throw DomainError("RSBundle: N must be positive");
    sR_ = almost_pN(p, N);
    sS_ = almost_pN1(p, N);
    hN1_ = norm_h_last(p, N);
    const cplx d = p.z - p.zp;
    double off = std::abs(d.imag()) + std::abs(d.real() - std::round(d.real()));
    if (off < 1e-8) {
      if (off < 1e-6) warn("NearDegenerateWarning: z - z' is within 1e-6 of an integer; averaging over z +/- 1e-5");
      Params up = p, dn = p;
      up.z += 1e-5;
      dn.z -= 1e-5;
      plus_ = std::make_shared<RSBundle>(up, N);
      minus_ = std::make_shared<RSBundle>(dn, N);
    } else if (off < 1e-6) {
      warn("NearDegenerateWarning: z - z' is within 1e-6 of an integer");
    }
    for (int t = 0; t < 2; ++t) {
      const cplx z1 = t ? p.zp : p.z, z2 = t ? p.z : p.zp;
      const cplx S = p.sigma();
      const double Nn = N;
      sin_[t] = sin_pi(z1);
      if (sin_[t] == cplx(0.0, 0.0) || plus_) continue;
      cplx common = -lgamma_c(Nn + z1 + p.b + 1.0) - lgamma_c(Nn + z1 + 2.0 * eps_);
      logR_[t] = common + lgamma_c(z2 - z1) + lgamma_c(z1 + p.b + 1.0) + lgamma_c(z1 + 1.0) - lgamma_c(S + 1.0) +
                 lgamma_c(Nn + S + p.a + 1.0) + lgamma_c(Nn + S + 1.0);
      if (!near_nonpos_int(S)) logS_[t] = common + lgamma_c(z2 - z1) + lgamma_c(S) - lgamma_c(z2) - lgamma_c(z2 + p.b) + std::lgamma(Nn + p.a + 1.0) + std::lgamma(Nn + 1.0);
    }
  }

  const Params& params() const { return p_; }
  int N() const { return N_; }
  double eps() const { return eps_; }
  cplx h_last() const { return hN1_; }
  cplx zhat(cplx zeta) const { return (zeta + eps_) * (zeta + eps_); }

  cplx lattice_product(cplx zh) const {
    cplx v = 1.0;
    for (int j = 0; j < N_; ++j) v *= zh - (j + eps_) * (j + eps_);
    return v;
  }

  // Gamma form: monic p_N / prod
  KernelValue r_geq_gamma(cplx zeta) const {
    cplx zh = zhat(zeta);
    auto v = monic_p_hat(N_, zh, LatticeWeight{p_, N_});
    cplx d = lattice_product(zh);
    return {v.value / d, v.max_term / std::abs(d)};
  }
  // terminating 4F3 with bottom zeta-N+1, -zeta-N-a-b
  KernelValue r_geq_series(cplx zeta) const {
    if (near_nonpos_int(p_.sigma())) throw PoleError("r_geq: Sigma is a pole of the series form");
    return detail::almost_ratio(sR_, N_, zhat(zeta), eps_);
  }
  KernelValue s_geq_gamma(cplx zeta) const {
    cplx zh = zhat(zeta);
    auto v = monic_p_hat(N_ - 1, zh, LatticeWeight{p_, N_});
    cplx d = lattice_product(zh) * hN1_;
    return {v.value / d, v.max_term / std::abs(d)};
  }
  KernelValue s_geq_series(cplx zeta) const {
    auto v = detail::almost_ratio(sS_, N_, zhat(zeta), eps_);
    return {v.value / hN1_, v.max_term / std::abs(hN1_)};
  }

  bool use_gamma_form(cplx zeta) const {
    return N_ <= 12 && std::abs(zeta + eps_) <= 3.0 * N_ && p_.sigma().real() > 0.0;
  }
  cplx r_geq(cplx zeta) const { return use_gamma_form(zeta) ? r_geq_gamma(zeta).value : r_geq_series(zeta).value; }
  cplx s_geq(cplx zeta) const { return use_gamma_form(zeta) ? s_geq_gamma(zeta).value : s_geq_series(zeta).value; }

  // two-term closed forms
  cplx r_less_closed(cplx zeta) const { return two_term(zeta, false); }
  cplx s_less_closed(cplx zeta) const { return two_term(zeta, true); }

  // defining sums over the lattice y >= N
  cplx r_less_sum(cplx zeta) const { return 1.0 + defining_sum(zeta, false); }
  cplx s_less_sum(cplx zeta) const { return defining_sum(zeta, true); }

  bool use_sum_form(cplx zeta) const { return std::abs(zeta + eps_) > 3.0 * N_ + 3.0 && p_.sigma().real() > 0.5; }
  cplx r_less(cplx zeta) const { return use_sum_form(zeta) ? r_less_sum(zeta) : r_less_closed(zeta); }
  cplx s_less(cplx zeta) const { return use_sum_form(zeta) ? s_less_sum(zeta) : s_less_closed(zeta); }

 private:
  cplx two_term(cplx zeta, bool s_kind) const {
    if (plus_) return 0.5 * (plus_->two_term(zeta, s_kind) + minus_->two_term(zeta, s_kind));
    const cplx S = p_.sigma();
    if (s_kind && near_nonpos_int(S) && std::abs(S) < 1e-12) throw PoleError("s_less: closed form needs Sigma != 0");
    const double Nn = N_, e2 = 2.0 * eps_;
    cplx out = 0.0;
    for (int t = 0; t < 2; ++t) {
      if (sin_[t] == cplx(0.0, 0.0)) continue;
      const cplx z1 = t ? p_.zp : p_.z, z2 = t ? p_.z : p_.zp;
      cplx lz = lgamma_c(Nn + zeta + e2) + lgamma_c(Nn - zeta) - lgamma_c(Nn + zeta + z2 + e2) - lgamma_c(Nn - zeta + z2);
      cplx top0 = s_kind ? z1 + p_.b : 1.0 + z1 + p_.b;
      cplx top1 = s_kind ? 1.0 - z2 : -z2;
      cplx f = hyp({top0, top1, zeta + Nn + z1 + e2, Nn - zeta + z1}, {1.0 + z1 - z2, Nn + z1 + p_.b + 1.0, Nn + z1 + e2});
      cplx pref = s_kind ? -sin_[t] / (2.0 * kPi) * std::exp(logS_[t] + lz) : -sin_[t] / kPi * std::exp(logR_[t] + lz);
      out += pref * f;
    }
    return out;
  }

  cplx defining_sum(cplx zeta, bool s_kind) const {
    const cplx S = p_.sigma();
    if (!(S.real() > 0.0)) throw DivergenceError("defining sum for R<, S< needs Re(Sigma) > 0");
    const cplx zh = zhat(zeta);
    auto partner = [&](double u) { return s_kind ? r_geq_series(cplx(u, 0.0)).value : s_geq_series(cplx(u, 0.0)).value; };
    const int Y0 = N_ + std::max(400, static_cast<int>(4.0 * std::abs(zeta + eps_)));
    cdd acc(cplx(0.0, 0.0));
    for (int y = N_; y < Y0; ++y) {
      double ps = psi_geq(y, p_, N_);
      if (ps == 0.0) continue;
      acc = acc + cdd(ps * partner(y) / (zh - (y + eps_) * (y + eps_)));
    }
    if (sin_pi(p_.z) * sin_pi(p_.zp) != cplx(0.0, 0.0)) {
      double decay = s_kind ? 2.0 * S.real() : 2.0 * S.real() + 2.0;
      auto f = [&](double u) { return psi_geq_continuous(u, p_, N_) * partner(u) / (zh - (u + eps_) * (u + eps_)); };
      acc = acc + cdd(detail::smooth_tail_sum(f, Y0, decay));
    }
    return acc.to_cplx();
  }

  Params p_;
  int N_;
  double eps_;
  detail::AlmostSeries sR_, sS_;
  cplx hN1_;
  cplx sin_[2]{}, logR_[2]{}, logS_[2]{};
  std::shared_ptr<RSBundle> plus_, minus_;
};

inline cplx r_geq(cplx zeta, const RSBundle& b) { return b.r_geq(zeta); }
inline cplx s_geq(cplx zeta, const RSBundle& b) { return b.s_geq(zeta); }
inline cplx r_less(cplx zeta, const RSBundle& b) { return b.r_less(zeta); }
inline cplx s_less(cplx zeta, const RSBundle& b) { return b.s_less(zeta); }

// ---------------------------------------------------------------------------
// K^O

class KernelO {
 public:
  KernelO(const Params& p, int N) : p_(p), N_(N), lw_{p, N} {
    for (int n = 0; n < N; ++n) h_.push_back(norm_h(n, lw_));
  }

  struct Point {
    double W = 0.0;
    std::vector<cplx> pn;  // p_0 .. p_{N-1}
    cplx pN{0.0, 0.0}, pNt{0.0, 0.0};
  };

  const Point& point(int x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    Point pt;
    pt.W = std::max(0.0, weight_w(x, p_, N_).real());
    cplx xh = lw_.xhat(x);
    for (int n = 0; n < N_; ++n) pt.pn.push_back(monic_p_hat(n, xh, lw_).value);
    if (p_.sigma().real() > 0.0)
      pt.pN = monic_p_hat(N_, xh, lw_).value;
    else if (!near_nonpos_int(p_.sigma()))
      pt.pN = detail::almost_poly(almost_pN(p_, N_), xh, p_.eps()).value;
    pt.pNt = p_n_tilde_hat(xh, p_, N_);
    return cache_.emplace(x, std::move(pt)).first->second;
  }

  double cd_sum(int x, int y) {
    const Point &a = point(x), &b = point(y);
    cplx s = 0.0;
    for (int n = 0; n < N_; ++n) s += a.pn[static_cast<size_t>(n)] * b.pn[static_cast<size_t>(n)] / h_[static_cast<size_t>(n)];
    return (std::sqrt(a.W * b.W) * s).real();
  }
  double ratio_form(int x, int y) {
    if (x == y) throw DomainError("kernel_O ratio form is off-diagonal only");
    const Point &a = point(x), &b = point(y);
    cplx d = lw_.xhat(x) - lw_.xhat(y);
    return (std::sqrt(a.W * b.W) / h_.back() * (a.pN * b.pn.back() - a.pn.back() * b.pN) / d).real();
  }
  double tilde_form(int x, int y) {
    if (x == y) throw DomainError("kernel_O ratio form is off-diagonal only");
    const Point &a = point(x), &b = point(y);
    cplx d = lw_.xhat(x) - lw_.xhat(y);
    return (std::sqrt(a.W * b.W) / h_.back() * (a.pNt * b.pn.back() - a.pn.back() * b.pNt) / d).real();
  }
  double operator()(int x, int y) { return x == y ? cd_sum(x, x) : tilde_form(x, y); }

 private:
  Params p_;
  int N_;
  LatticeWeight lw_;
  std::vector<cplx> h_;
  std::unordered_map<int, Point> cache_;
};

inline double kernel_O(int x, int y, const DiscreteKernel& k) {
  KernelO K(k.params, k.N);
  return K(x, y);
}

// K^L through the particle-hole transformation of K^O on {0..N-1} with the
// sign gauge eps(x) = (-1)^{N-1-x} for x < N and +1 otherwise.
inline double kernel_L_sign_form(int x, int y, KernelO& KO, int N) {
  auto sg = [N](int v) { return (v < N && (N - 1 - v) % 2 != 0) ? -1.0 : 1.0; };
  double kp = KO(x, y);
  if (x < N) kp = (x == y ? 1.0 : 0.0) - kp;
  return sg(x) * sg(y) * kp;
}

// ---------------------------------------------------------------------------
// K^L from the closed-form R/S functions

class KernelL {
 public:
  KernelL(const Params& p, int N) : p_(p), N_(N) {
    const cplx S = p.sigma();
    if (p.eps() == 0.0) {
      warn("kernel_L: eps = 0, using the particle-hole form of K^O");
      ko_ = std::make_unique<KernelO>(p, N);
      return;
    }
    if (std::abs(S) < 1e-8) {
      warn("kernel_L: Sigma = 0, averaging over Sigma = +/- 1e-5");
      Params up = p, dn = p;
      up.z += 0.5e-5;
      up.zp += 0.5e-5;
      dn.z -= 0.5e-5;
      dn.zp -= 0.5e-5;
      plus_ = std::make_unique<KernelL>(up, N);
      minus_ = std::make_unique<KernelL>(dn, N);
      return;
    }
    bundle_ = std::make_unique<RSBundle>(p, N);
  }

  struct Point {
    double psi = 0.0;
    cplx R{0.0, 0.0}, S{0.0, 0.0};
    bool has_d = false;
    cplx dR{0.0, 0.0}, dS{0.0, 0.0};
  };

  const RSBundle& bundle() const { return *bundle_; }

  Point& point(int x, bool need_d) {
    auto it = cache_.find(x);
    if (it == cache_.end()) {
      Point pt;
      cplx zx = static_cast<double>(x);
      if (x >= N_) {
        pt.psi = psi_geq(x, p_, N_);
        pt.R = bundle_->r_geq(zx);
        pt.S = bundle_->s_geq(zx);
      } else {
        pt.psi = psi_less(x, p_, N_);
        pt.R = bundle_->r_less(zx);
        pt.S = bundle_->s_less(zx);
      }
      it = cache_.emplace(x, pt).first;
    }
    Point& pt = it->second;
    if (need_d && !pt.has_d) {
      cplx zx = static_cast<double>(x);
      const RSBundle& b = *bundle_;
      if (x >= N_) {
        pt.dR = contour_derivative([&](cplx w) { return b.r_geq(w); }, zx);
        pt.dS = contour_derivative([&](cplx w) { return b.s_geq(w); }, zx);
      } else {
        pt.dR = contour_derivative([&](cplx w) { return b.r_less(w); }, zx);
        pt.dS = contour_derivative([&](cplx w) { return b.s_less(w); }, zx);
      }
      pt.has_d = true;
    }
    return pt;
  }

  double operator()(int x, int y) {
    if (ko_) return kernel_L_sign_form(x, y, *ko_, N_);
    if (plus_) return 0.5 * ((*plus_)(x, y) + (*minus_)(x, y));
    const double e = p_.eps();
    if (x == y) {
      Point& a = point(x, true);
      if (a.psi == 0.0) return 0.0;
      return (a.psi * (a.dR * a.S - a.dS * a.R) / (2.0 * (x + e))).real();
    }
    const Point a = point(x, false);
    const Point b = point(y, false);
    if (a.psi == 0.0 || b.psi == 0.0) return 0.0;
    const double d = (x + e) * (x + e) - (y + e) * (y + e);
    const double s = std::sqrt(a.psi * b.psi);
    const bool xi = x >= N_, yi = y >= N_;
    cplx v;
    if (xi == yi)
      v = a.R * b.S - a.S * b.R;
    else
      v = a.R * b.R - a.S * b.S;
    return (s * v / d).real();
  }

 private:
  Params p_;
  int N_;
  std::unique_ptr<RSBundle> bundle_;
  std::unique_ptr<KernelO> ko_;
  std::unique_ptr<KernelL> plus_, minus_;
  std::unordered_map<int, Point> cache_;
};

inline double kernel_L(int x, int y, const DiscreteKernel& k) {
  KernelL K(k.params, k.N);
  return K(x, y);
}

}  // namespace bcz
