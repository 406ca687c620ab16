#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bcz/kernels.hpp"

namespace bcz {

struct TruncatedLMatrix {
  Params params;
  int N = 0;
  int M = 0;
  Eigen::MatrixXd matrix;
};

inline int default_truncation(int N) { return std::max(400, 8 * N); }

// Blocks [0, A; -A^T, 0] on lattice indices 0..M-1, split at N.
inline TruncatedLMatrix build_l_matrix(const Params& p, int N, int M) {
  if (N < 1 || M <= N) throw DomainError("build_l_matrix: need 1 <= N < M");
  if (!(p.sigma().real() > 1.0)) throw DomainError("build_l_matrix: needs Re(Sigma) > 1");
  TruncatedLMatrix L{p, N, M, Eigen::MatrixXd::Zero(M, M)};
  const double e = p.eps();
  std::vector<double> pl(static_cast<size_t>(N));
  for (int y = 0; y < N; ++y) pl[static_cast<size_t>(y)] = psi_less(y, p, N);
  for (int x = N; x < M; ++x) {
    double pg = psi_geq(x, p, N);
    if (pg == 0.0) continue;
    double xh = (x + e) * (x + e);
    for (int y = 0; y < N; ++y) {
      double a = std::sqrt(pg * pl[static_cast<size_t>(y)]) / (xh - (y + e) * (y + e));
      L.matrix(x, y) = a;
      L.matrix(y, x) = -a;
    }
  }
  return L;
}

struct ResolventResult {
  Eigen::MatrixXd K;
  double cond_estimate = 0.0;
};

// K = L(1+L)^{-1} = I - (I+L)^{-1}
inline ResolventResult kernel_via_resolvent(const TruncatedLMatrix& L) {
  const Eigen::Index M = L.matrix.rows();
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(M, M) + L.matrix;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  ResolventResult r;
  double rc = lu.rcond();
  if (!(rc > 0.0) || !std::isfinite(rc)) throw SolveError("kernel_via_resolvent: singular 1+L");
  r.cond_estimate = 1.0 / rc;
  if (r.cond_estimate > 1e10) warn("kernel_via_resolvent: condition estimate above 1e10");
  r.K = Eigen::MatrixXd::Identity(M, M) - lu.inverse();
  if (!r.K.allFinite()) throw SolveError("kernel_via_resolvent: non-finite result");
  return r;
}

struct ResolventComparison {
  int M = 0;
  double max_abs_diff = 0.0;
  double cond_estimate = 0.0;
};

// max |K_resolvent - kernel_L| over lattice indices below `window`
inline ResolventComparison compare_resolvent(const Params& p, int N, int M = 0, int window = 50) {
  if (M <= 0) M = default_truncation(N);
  auto L = build_l_matrix(p, N, M);
  auto R = kernel_via_resolvent(L);
  KernelL KL(p, N);
  ResolventComparison c{M, 0.0, R.cond_estimate};
  const int w = std::min(M, window + 1);
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < w; ++y) c.max_abs_diff = std::max(c.max_abs_diff, std::abs(R.K(x, y) - KL(x, y)));
  return c;
}

inline double det_one_plus_l(const TruncatedLMatrix& L) {
  const Eigen::Index M = L.matrix.rows();
  return (Eigen::MatrixXd::Identity(M, M) + L.matrix).partialPivLu().determinant();
}

inline double principal_minor(const TruncatedLMatrix& L, const PointConfig& X) {
  const Eigen::Index n = static_cast<Eigen::Index>(X.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXd S(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) S(i, j) = L.matrix(X[static_cast<size_t>(i)], X[static_cast<size_t>(j)]);
  return S.partialPivLu().determinant();
}

enum class RSWhich { r_geq, s_geq, r_less, s_less };

inline RSWhich parse_which(const std::string& s) {
  if (s == "R>=" || s == "Rgeq" || s == "r_geq") return RSWhich::r_geq;
  if (s == "S>=" || s == "Sgeq" || s == "s_geq") return RSWhich::s_geq;
  if (s == "R<" || s == "Rless" || s == "r_less") return RSWhich::r_less;
  if (s == "S<" || s == "Sless" || s == "s_less") return RSWhich::s_less;
  throw DomainError("unknown R/S function name: " + s);
}

inline cplx eval_rs(RSWhich w, cplx zeta, const RSBundle& b) {
  switch (w) {
    case RSWhich::r_geq: return b.r_geq(zeta);
    case RSWhich::s_geq: return b.s_geq(zeta);
    case RSWhich::r_less: return b.r_less(zeta);
    default: return b.s_less(zeta);
  }
}

// Relative error between the numerical residue at y and psi~(y) times the
// partner function. Pole sets: y < N for the >= pair, y >= N for the < pair;
// y may also be a mirror pole -y-2eps.
inline double residue_check(RSWhich w, cplx y, const RSBundle& b) {
  const Params& p = b.params();
  const int N = b.N();
  const double e = b.eps();
  double r = std::round(y.real());
  bool mirror = !(std::abs(y - cplx(r, 0.0)) < 1e-9 && r >= 0.0);
  cplx base = mirror ? -y - 2.0 * e : y;
  int j = static_cast<int>(std::round(base.real()));
  bool geq_pair = (w == RSWhich::r_geq || w == RSWhich::s_geq);
  if (geq_pair ? (j >= N || j < 0) : (j < N)) throw DomainError("residue_check: y is not a pole of this function");
  RSWhich partner;
  switch (w) {
    case RSWhich::r_geq: partner = RSWhich::s_less; break;
    case RSWhich::s_geq: partner = RSWhich::r_less; break;
    case RSWhich::r_less: partner = RSWhich::s_geq; break;
    default: partner = RSWhich::r_geq; break;
  }
  cplx res = residue_at([&](cplx u) { return eval_rs(w, u, b); }, y);
  cplx rhs = psi_tilde(y, p, N) * eval_rs(partner, y, b);
  return std::abs(res - rhs) / (rhs == cplx(0.0, 0.0) ? 1.0 : std::abs(rhs));
}

// Max deviation on circles centred at -eps, radius R + 1/2 + eps, 64 angles.
// R functions are compared with 1; S functions are scaled by N^{-2 Sigma}
// (>= pair) or N^{2 Sigma} (< pair) and compared with 0.
inline std::vector<double> asymptotic_check(RSWhich w, const std::vector<double>& radii, const RSBundle& b) {
  const double e = b.eps();
  const cplx S = b.params().sigma();
  const double Nn = b.N();
  cplx norm = 1.0;
  if (w == RSWhich::s_geq) norm = std::exp(-2.0 * S * std::log(Nn));
  if (w == RSWhich::s_less) norm = std::exp(2.0 * S * std::log(Nn));
  const bool is_r = (w == RSWhich::r_geq || w == RSWhich::r_less);
  std::vector<double> out;
  for (double R : radii) {
    double rad = std::floor(R) + 0.5 + e, dev = 0.0;
    for (int k = 0; k < 64; ++k) {
      cplx zeta = -e + rad * std::polar(1.0, 2.0 * kPi * (k + 0.5) / 64.0);
      cplx v = eval_rs(w, zeta, b);
      dev = std::max(dev, is_r ? std::abs(v - 1.0) : std::abs(norm * v));
    }
    out.push_back(dev);
  }
  return out;
}

}  // namespace bcz
