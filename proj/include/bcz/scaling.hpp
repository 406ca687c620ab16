#pragma once

#include <memory>
#include <ostream>
#include <utility>
#include <vector>

#include "bcz/kernels.hpp"

namespace bcz {

struct ContinuumKernel {
  Params params;
};

struct BoundaryPoint {
  std::vector<double> alpha;
  std::vector<double> beta;
  double delta = 0.0;
};

namespace detail {

// v^al (1-v)^be 2F1(a,b;c;v) and its v-derivative
struct PowHyp {
  cplx value{0.0, 0.0};
  cplx deriv{0.0, 0.0};
};

inline PowHyp pow_hyp(double v, cplx al, cplx be, cplx a, cplx b, cplx c, bool need_d) {
  cplx pre = std::exp(al * std::log(v) + be * std::log1p(-v));
  cplx f = hyp2f1(a, b, c, v);
  PowHyp out{pre * f, 0.0};
  if (need_d) out.deriv = out.value * (al / v - be / (1.0 - v)) + pre * (a * b / c) * hyp2f1(a + 1.0, b + 1.0, c + 1.0, v);
  return out;
}

struct ContinuumPoint {
  double psi = 0.0;
  cplx R{0.0, 0.0}, S{0.0, 0.0}, dR{0.0, 0.0}, dS{0.0, 0.0};
};

inline double psi_gt1_raw(double x, const Params& p) {
  cplx s = sin_pi(p.z) * sin_pi(p.zp);
  if (s == cplx(0.0, 0.0)) return 0.0;
  return (s / (2.0 * kPi * kPi) * std::exp(-p.b * std::log(x) - (p.z + p.zp) * std::log(x - 1.0))).real();
}

inline double psi_lt1_raw(double x, const Params& p) {
  return (2.0 * std::exp(p.b * std::log(x) + (p.z + p.zp) * std::log1p(-x))).real();
}

// R_{>1}, S_{>1} and their x-derivatives, through u = 1/x
inline ContinuumPoint rs_gt1(double x, const Params& p, bool need_d) {
  const cplx z = p.z, zp = p.zp, b = p.b, S = p.sigma();
  const double u = 1.0 / x;
  ContinuumPoint pt;
  auto r = pow_hyp(u, 0.0, zp, zp + b, zp, S, need_d);
  cplx G = gamma_ratio_z({z + 1.0, zp + 1.0, z + b + 1.0, zp + b + 1.0}, {S + 1.0, S + 2.0});
  auto s = pow_hyp(u, 1.0, zp, zp + b + 1.0, zp + 1.0, S + 2.0, need_d);
  pt.R = r.value;
  pt.S = 2.0 * G * s.value;
  pt.dR = -u * u * r.deriv;
  pt.dS = -u * u * 2.0 * G * s.deriv;
  return pt;
}

// R_{<1}, S_{<1} and their x-derivatives, through v = 1 - x
inline ContinuumPoint rs_lt1(double x, const Params& p, bool need_d) {
  const cplx S = p.sigma(), b = p.b;
  const double v = 1.0 - x;
  ContinuumPoint pt;
  for (int t = 0; t < 2; ++t) {
    const cplx z1 = t ? p.zp : p.z, z2 = t ? p.z : p.zp;
    cplx sn = sin_pi(z1);
    if (sn == cplx(0.0, 0.0)) continue;
    cplx cr = -sn / kPi * gamma_ratio_z({z2 - z1, z1 + b + 1.0, z1 + 1.0}, {S + 1.0});
    cplx cs = -sn / (2.0 * kPi) * gamma_ratio_z({z2 - z1, S}, {z2, z2 + b});
    auto r = pow_hyp(v, -z2, 0.0, -z2, z1 + b + 1.0, 1.0 + z1 - z2, need_d);
    auto s = pow_hyp(v, -z2, 0.0, 1.0 - z2, z1 + b, 1.0 + z1 - z2, need_d);
    pt.R += cr * r.value;
    pt.S += cs * s.value;
    pt.dR -= cr * r.deriv;
    pt.dS -= cs * s.deriv;
  }
  return pt;
}

inline void check_domain(double x) {
  if (!(x > 0.0) || x == 1.0) throw DomainError("continuum kernel: x must lie in (0,1) or (1,inf)");
}

}  // namespace detail

inline double psi_gt1(double x, const Params& p) {
  if (!(x > 1.0)) throw DomainError("psi_gt1: need x > 1");
  return detail::psi_gt1_raw(x, p);
}
inline double psi_lt1(double x, const Params& p) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("psi_lt1: need 0 < x < 1");
  return detail::psi_lt1_raw(x, p);
}

class KernelP {
 public:
  explicit KernelP(const Params& p) : p_(p) {
    const cplx d = p.z - p.zp;
    double off = std::abs(d.imag()) + std::abs(d.real() - std::round(d.real()));
    if (off < 1e-8) {
      if (off < 1e-6) warn("NearDegenerateWarning: z - z' is within 1e-6 of an integer; averaging over z +/- 1e-5");
      Params up = p, dn = p;
      up.z += 1e-5;
      dn.z -= 1e-5;
      plus_ = std::make_unique<KernelP>(up);
      minus_ = std::make_unique<KernelP>(dn);
    } else if (std::abs(p.sigma()) < 1e-8) {
      warn("kernel_P: Sigma = 0, averaging over Sigma = +/- 1e-5");
      Params up = p, dn = p;
      up.z += 0.5e-5;
      up.zp += 0.5e-5;
      dn.z -= 0.5e-5;
      dn.zp -= 0.5e-5;
      plus_ = std::make_unique<KernelP>(up);
      minus_ = std::make_unique<KernelP>(dn);
    }
  }

  detail::ContinuumPoint point(double x, bool need_d) const {
    detail::check_domain(x);
    detail::ContinuumPoint pt;
    if (x > 1.0) {
      pt.psi = detail::psi_gt1_raw(x, p_);
      if (pt.psi == 0.0) return pt;
      pt = detail::rs_gt1(x, p_, need_d);
      pt.psi = detail::psi_gt1_raw(x, p_);
    } else {
      pt = detail::rs_lt1(x, p_, need_d);
      pt.psi = detail::psi_lt1_raw(x, p_);
    }
    return pt;
  }

  double operator()(double x, double y) const {
    if (plus_) return 0.5 * ((*plus_)(x, y) + (*minus_)(x, y));
    if (x == y) {
      auto a = point(x, true);
      if (a.psi == 0.0) return 0.0;
      return (a.psi * (a.dR * a.S - a.dS * a.R)).real();
    }
    auto a = point(x, false), b = point(y, false);
    if (a.psi == 0.0 || b.psi == 0.0) return 0.0;
    cplx v = ((x > 1.0) == (y > 1.0)) ? a.R * b.S - a.S * b.R : a.R * b.R - a.S * b.S;
    return (std::sqrt(a.psi * b.psi) * v / (x - y)).real();
  }

 private:
  Params p_;
  std::unique_ptr<KernelP> plus_, minus_;
};

inline cplx r_gt1(double x, const Params& p) {
  if (!(x > 1.0)) throw DomainError("r_gt1: need x > 1");
  return detail::rs_gt1(x, p, false).R;
}
inline cplx s_gt1(double x, const Params& p) {
  if (!(x > 1.0)) throw DomainError("s_gt1: need x > 1");
  return detail::rs_gt1(x, p, false).S;
}
inline cplx r_lt1(double x, const Params& p) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("r_lt1: need 0 < x < 1");
  return detail::rs_lt1(x, p, false).R;
}
inline cplx s_lt1(double x, const Params& p) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("s_lt1: need 0 < x < 1");
  return detail::rs_lt1(x, p, false).S;
}

inline double kernel_P(double x, double y, const ContinuumKernel& ck) { return KernelP(ck.params)(x, y); }

// The x,y > 1 block with psi(x) = sin(pi z) sin(pi z')/(2 pi^2) x^{+b} (x-1)^{-z-z'}.
inline double kernel_P_intro(double x, double y, const Params& p) {
  if (!(x > 1.0 && y > 1.0)) throw DomainError("kernel_P_intro: need x, y > 1");
  auto psi = [&](double t) { return detail::psi_gt1_raw(t, p) * std::pow(t, 2.0 * p.b); };
  auto a = detail::rs_gt1(x, p, x == y);
  if (x == y) return (psi(x) * (a.dR * a.S - a.R * a.dS)).real();
  auto b = detail::rs_gt1(y, p, false);
  return (std::sqrt(psi(x) * psi(y)) * (a.R * b.S - a.S * b.R) / (x - y)).real();
}

// Lattice index n minimizing |(n+eps)^2 - ((N+eps-1/2) x)^2|; ties go down.
inline int nearest_lattice(double x, int N, const Params& p) {
  if (!(x > 0.0)) throw DomainError("nearest_lattice: need x > 0");
  const double e = p.eps();
  const double s = (N + e - 0.5) * x, t = s * s;
  int c = std::max(0, static_cast<int>(std::floor(s - e)) - 1);
  int best = c;
  double bd = std::abs((c + e) * (c + e) - t);
  for (int n = c + 1; n <= c + 3; ++n) {
    double d = std::abs((n + e) * (n + e) - t);
    if (d < bd) {
      bd = d;
      best = n;
    }
  }
  return best;
}

inline std::vector<double> boundary_map_i(const BoundaryPoint& w) {
  std::vector<double> out;
  for (double a : w.alpha) out.push_back((1.0 + a) * (1.0 + a));
  for (double b : w.beta) out.push_back((1.0 - b) * (1.0 - b));
  std::erase_if(out, [](double v) { return v == 0.0 || v == 1.0; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct ConvergenceRow {
  int N = 0;
  double x = 0.0, y = 0.0;
  double scaled_kernel = 0.0, limit_kernel = 0.0, abs_err = 0.0;
};

inline std::vector<double> default_convergence_axis() { return {0.25, 0.5, 0.75, 1.5, 2.0, 4.0}; }

inline std::vector<std::pair<double, double>> default_convergence_grid() {
  std::vector<std::pair<double, double>> g;
  for (double x : default_convergence_axis())
    for (double y : default_convergence_axis()) g.emplace_back(x, y);
  return g;
}

// E_N = |N K^L(x^_N, y^_N) - 2 sqrt(xy) K^P(x^2, y^2)| for each N and grid point
// With aligned = true the limit is taken at the realized coordinates
// (n+eps)/(N+eps-1/2) of the chosen lattice points instead of at (x, y).
inline std::vector<ConvergenceRow> convergence_study(const Params& p, const std::vector<std::pair<double, double>>& grid,
                                                     const std::vector<int>& Ns, bool aligned = false) {
  for (auto [x, y] : grid)
    if (!(x > 0.0) || !(y > 0.0) || x == 1.0 || y == 1.0) throw DomainError("convergence_study: grid points must avoid 0 and 1");
  KernelP KP(p);
  auto limit = [&](double x, double y) { return 2.0 * std::sqrt(x * y) * KP(x * x, y * y); };
  std::vector<double> lim;
  if (!aligned)
    for (auto [x, y] : grid) lim.push_back(limit(x, y));
  const double e = p.eps();
  std::vector<ConvergenceRow> rows;
  for (int N : Ns) {
    KernelL KL(p, N);
    for (size_t i = 0; i < grid.size(); ++i) {
      auto [x, y] = grid[i];
      const int n = nearest_lattice(x, N, p), m = nearest_lattice(y, N, p);
      ConvergenceRow r{N, x, y, 0.0, 0.0, 0.0};
      if (aligned) {
        const double sc = N + e - 0.5, xe = (n + e) / sc, ye = (m + e) / sc;
        if (xe == 1.0 || ye == 1.0) throw DomainError("convergence_study: aligned point lands on 1");
        r.limit_kernel = limit(xe, ye);
      } else {
        r.limit_kernel = lim[i];
      }
      r.scaled_kernel = N * KL(n, m);
      r.abs_err = std::abs(r.scaled_kernel - r.limit_kernel);
      rows.push_back(r);
    }
  }
  return rows;
}

inline void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  auto old = os.precision(17);
  os << "N,x,y,scaled_kernel,limit_kernel,abs_err\n";
  for (const auto& r : rows) os << r.N << ',' << r.x << ',' << r.y << ',' << r.scaled_kernel << ',' << r.limit_kernel << ',' << r.abs_err << '\n';
  os.precision(old);
}

}  // namespace bcz
