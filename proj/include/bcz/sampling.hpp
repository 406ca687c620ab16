#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>

#include "bcz/kernels.hpp"

namespace bcz {

struct FiniteKernelMatrix {
  std::vector<int> ground;
  Eigen::MatrixXd entries;
};

struct SampleBatch {
  std::uint64_t seed = 0;
  std::vector<PointConfig> configs;
};

// SplitMix64 finalizer driven by (seed, stream, counter).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(seed ^ mix(stream + 0x632BE59BD9B4E019ULL)) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }
  std::uint64_t next() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }
  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct Spectrum {
  Eigen::VectorXd values;   // clamped to [0, 1]
  Eigen::MatrixXd vectors;  // columns
};

inline Spectrum kernel_spectrum(const FiniteKernelMatrix& K) {
  const Eigen::Index n = K.entries.rows();
  if (K.entries.cols() != n || static_cast<Eigen::Index>(K.ground.size()) != n) throw SizeError("kernel matrix shape does not match the ground set");
  if ((K.entries - K.entries.transpose()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, K.entries.cwiseAbs().maxCoeff()))
    throw SpectrumError("kernel matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K.entries);
  Spectrum s{es.eigenvalues(), es.eigenvectors()};
  for (Eigen::Index i = 0; i < n; ++i) {
    double l = s.values(i);
    if (l < -1e-6 || l > 1.0 + 1e-6) throw SpectrumError("kernel eigenvalue outside [0,1]");
    s.values(i) = std::clamp(l, 0.0, 1.0);
  }
  return s;
}

namespace detail {

// Selection probabilities of the next point for an orthonormal basis V.
inline Eigen::VectorXd hkpv_probabilities(const Eigen::MatrixXd& V) {
  Eigen::VectorXd p = V.rowwise().squaredNorm();
  return p / static_cast<double>(V.cols());
}

// Basis of the subspace of span(V) orthogonal to e_i.
inline Eigen::MatrixXd hkpv_condition(const Eigen::MatrixXd& V, Eigen::Index i) {
  Eigen::Index j;
  V.row(i).cwiseAbs().maxCoeff(&j);
  Eigen::MatrixXd W(V.rows(), V.cols() - 1);
  Eigen::Index c = 0;
  for (Eigen::Index k = 0; k < V.cols(); ++k) {
    if (k == j) continue;
    W.col(c++) = V.col(k) - V.col(j) * (V(i, k) / V(i, j));
  }
  if (W.cols() == 0) return W;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(W);
  return qr.householderQ() * Eigen::MatrixXd::Identity(W.rows(), W.cols());
}

inline Eigen::MatrixXd select_columns(const Eigen::MatrixXd& V, const std::vector<Eigen::Index>& cols) {
  Eigen::MatrixXd out(V.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = V.col(cols[c]);
  return out;
}

}  // namespace detail

// Spectral (HKPV) exact sampler; configuration i uses RNG stream i.
inline SampleBatch dpp_sample(const FiniteKernelMatrix& K, std::uint64_t seed, int count) {
  const Spectrum sp = kernel_spectrum(K);
  const Eigen::Index n = sp.values.size();
  SampleBatch batch{seed, {}};
  batch.configs.reserve(static_cast<size_t>(std::max(count, 0)));
  for (int s = 0; s < count; ++s) {
    CounterRng rng(seed, static_cast<std::uint64_t>(s));
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < n; ++j)
      if (rng.uniform() < sp.values(j)) cols.push_back(j);
    Eigen::MatrixXd V = detail::select_columns(sp.vectors, cols);
    PointConfig X;
    while (V.cols() > 0) {
      Eigen::VectorXd p = detail::hkpv_probabilities(V);
      double u = rng.uniform() * p.sum(), acc = 0.0;
      Eigen::Index i = n - 1;
      for (Eigen::Index t = 0; t < n; ++t) {
        acc += p(t);
        if (u < acc && p(t) > 0.0) {
          i = t;
          break;
        }
      }
      X.push_back(K.ground[static_cast<size_t>(i)]);
      V = detail::hkpv_condition(V, i);
    }
    std::sort(X.begin(), X.end());
    batch.configs.push_back(std::move(X));
  }
  return batch;
}

// Probability of every subset (bitmask over ground positions) under the
// target law: inclusion-exclusion over det K_Y.
inline std::vector<double> exact_law_target(const FiniteKernelMatrix& K) {
  const int n = static_cast<int>(K.entries.rows());
  if (n > 20) throw SizeError("exact law: ground set too large");
  const std::uint32_t full = 1u << n;
  std::vector<double> f(full);
  for (std::uint32_t m = 0; m < full; ++m) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) idx.push_back(i);
    Eigen::MatrixXd S(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) S(a, b) = K.entries(idx[a], idx[b]);
    f[m] = idx.empty() ? 1.0 : S.determinant();
  }
  // Moebius inversion over supersets
  for (int i = 0; i < n; ++i)
    for (std::uint32_t m = 0; m < full; ++m)
      if (!(m >> i & 1u)) f[m] -= f[m | (1u << i)];
  return f;
}

// Output law of dpp_sample, traced through the same selection and
// conditioning steps over all eigenvector subsets and all selection orders.
inline std::vector<double> exact_law_sampler(const FiniteKernelMatrix& K) {
  const Spectrum sp = kernel_spectrum(K);
  const int n = static_cast<int>(sp.values.size());
  if (n > 10) throw SizeError("sampler law: ground set too large");
  const std::uint32_t full = 1u << n;
  std::vector<double> law(full, 0.0);
  for (std::uint32_t J = 0; J < full; ++J) {
    double wJ = 1.0;
    std::vector<Eigen::Index> cols;
    for (int j = 0; j < n; ++j) {
      if (J >> j & 1u) {
        wJ *= sp.values(j);
        cols.push_back(j);
      } else {
        wJ *= 1.0 - sp.values(j);
      }
    }
    if (wJ == 0.0) continue;
    std::map<std::uint32_t, std::pair<double, Eigen::MatrixXd>> layer{{0u, {1.0, detail::select_columns(sp.vectors, cols)}}};
    for (size_t step = 0; step < cols.size(); ++step) {
      std::map<std::uint32_t, std::pair<double, Eigen::MatrixXd>> next;
      for (auto& [S, st] : layer) {
        Eigen::VectorXd p = detail::hkpv_probabilities(st.second);
        for (int i = 0; i < n; ++i) {
          if ((S >> i & 1u) || p(i) <= 0.0) continue;
          std::uint32_t T = S | (1u << i);
          auto it = next.find(T);
          if (it == next.end()) it = next.emplace(T, std::make_pair(0.0, detail::hkpv_condition(st.second, i))).first;
          it->second.first += st.first * p(i);
        }
      }
      layer = std::move(next);
    }
    for (auto& [S, st] : layer) law[S] += wJ * st.first;
  }
  return law;
}

// Same law through the mixture of projection processes, det((V_J)_X)^2.
inline std::vector<double> exact_law_mixture(const FiniteKernelMatrix& K) {
  const Spectrum sp = kernel_spectrum(K);
  const int n = static_cast<int>(sp.values.size());
  if (n > 16) throw SizeError("mixture law: ground set too large");
  const std::uint32_t full = 1u << n;
  std::vector<double> law(full, 0.0);
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<size_t>(n) + 1);
  for (std::uint32_t m = 0; m < full; ++m) by_size[static_cast<size_t>(__builtin_popcount(m))].push_back(m);
  for (std::uint32_t J = 0; J < full; ++J) {
    double wJ = 1.0;
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
      if (J >> j & 1u) {
        wJ *= sp.values(j);
        cols.push_back(j);
      } else {
        wJ *= 1.0 - sp.values(j);
      }
    }
    if (wJ == 0.0) continue;
    const Eigen::Index k = static_cast<Eigen::Index>(cols.size());
    for (std::uint32_t X : by_size[cols.size()]) {
      Eigen::MatrixXd S(k, k);
      Eigen::Index r = 0;
      for (int i = 0; i < n; ++i) {
        if (!(X >> i & 1u)) continue;
        for (Eigen::Index c = 0; c < k; ++c) S(r, c) = sp.vectors(i, cols[static_cast<size_t>(c)]);
        ++r;
      }
      double d = k == 0 ? 1.0 : S.determinant();
      law[X] += wJ * d * d;
    }
  }
  return law;
}

// Racah weight with the Gamma(y+alpha+1) factor taken as (-1)^y / Gamma(-alpha-y)
// when alpha is a negative integer and y lies on the support.
inline double racah_weight(int y, double alpha, double beta, double gamma, double delta) {
  if (y < 0) throw DomainError("racah_weight: y must be nonnegative");
  const double yd = y;
  using boost::math::lgamma;
  int sign = 1;
  double l = 0.0;
  auto add = [&](double v, int dir) {
    if (v <= 0.0 && v == std::round(v)) throw PoleError("racah_weight: Gamma pole");
    int s = 1;
    double lg = lgamma(v, &s);
    l += dir * lg;
    sign *= s;
  };
  add(yd + gamma + delta + 1.0, 1);
  add(yd + gamma + 1.0, 1);
  const double top_alpha = yd + alpha + 1.0;
  if (top_alpha <= 0.0 && top_alpha == std::round(top_alpha)) {
    double r = -alpha - yd;
    if (r <= 0.0 && r == std::round(r)) return 0.0;
    if (y % 2) sign = -sign;
    add(r, -1);
  } else {
    add(top_alpha, 1);
  }
  const double bg = beta - gamma - yd;
  if (bg <= 0.0 && bg == std::round(bg)) throw PoleError("racah_weight: Gamma pole");
  add(bg, 1);
  add(yd + 1.0, -1);
  add(yd + delta + 1.0, -1);
  const double d1 = yd - alpha + gamma + delta + 1.0, d2 = -beta - delta - yd;
  if ((d1 <= 0.0 && d1 == std::round(d1)) || (d2 <= 0.0 && d2 == std::round(d2))) return 0.0;
  add(d1, -1);
  add(d2, -1);
  return sign * (yd + 0.5 * (gamma + delta + 1.0)) * std::exp(l);
}

inline PointConfig complement_config(const PointConfig& X, const std::vector<int>& ground) {
  std::vector<int> g = ground, x = X;
  std::sort(g.begin(), g.end());
  std::sort(x.begin(), x.end());
  if (!std::includes(g.begin(), g.end(), x.begin(), x.end())) throw SubsetError("complement_config: X is not a subset of the ground set");
  PointConfig out;
  std::set_difference(g.begin(), g.end(), x.begin(), x.end(), std::back_inserter(out));
  return out;
}

struct CorrelationEstimate {
  double estimate = 1.0;
  double standard_error = 0.0;
};

// Fraction of configurations containing every listed point, with binomial standard error.
inline CorrelationEstimate empirical_correlations(const SampleBatch& batch, const std::vector<int>& points) {
  if (points.size() > 3) throw DomainError("empirical_correlations: order must be at most 3");
  if (points.empty()) return {1.0, 0.0};
  if (batch.configs.empty()) throw DomainError("empirical_correlations: empty batch");
  std::vector<int> pts = points;
  std::sort(pts.begin(), pts.end());
  std::size_t hits = 0;
  for (const auto& c : batch.configs)
    if (std::includes(c.begin(), c.end(), pts.begin(), pts.end())) ++hits;
  const double n = static_cast<double>(batch.configs.size()), p = hits / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

// Complement process of the O-ensemble on {0..N+k-1}: kernel I - K^O.
inline FiniteKernelMatrix racah_complement_kernel(const Params& p, int N, int k) {
  const int n = N + k;
  FiniteKernelMatrix K;
  KernelO KO(p, N);
  K.entries = Eigen::MatrixXd::Identity(n, n);
  for (int x = 0; x < n; ++x) {
    K.ground.push_back(x);
    for (int y = 0; y < n; ++y) K.entries(x, y) -= KO(x, y);
  }
  K.entries = 0.5 * (K.entries + K.entries.transpose()).eval();
  return K;
}

struct RacahParams {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
};

// Racah parameters of the complement process for degenerate z = k.
inline RacahParams racah_parameters(int k, int N, double zp, double a, double b) {
  return {static_cast<double>(-k - N), zp + N + b, b, a};
}

// Projection kernel of the k-point orthogonal polynomial ensemble with the
// Racah weight on {0..N+k-1}, in the variable (y + eps)^2. The weight is
// taken up to an overall sign.
inline FiniteKernelMatrix racah_ope_kernel(const Params& p, int N, int k) {
  const int n = N + k;
  if (k < 1 || N < 1) throw DomainError("racah_ope_kernel: need k, N >= 1");
  const auto r = racah_parameters(k, N, p.zp.real(), p.a, p.b);
  const double e = p.eps();
  Eigen::MatrixXd V(n, k);
  FiniteKernelMatrix K;
  std::vector<double> w(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y) w[static_cast<size_t>(y)] = racah_weight(y, r.alpha, r.beta, r.gamma, r.delta);
  const double sgn = w[0] < 0.0 ? -1.0 : 1.0;
  for (int y = 0; y < n; ++y) {
    K.ground.push_back(y);
    if (sgn * w[static_cast<size_t>(y)] < 0.0) throw SpectrumError("racah_ope_kernel: weight changes sign");
    double s = std::sqrt(sgn * w[static_cast<size_t>(y)]), yh = (y + e) * (y + e), pw = 1.0;
    for (int j = 0; j < k; ++j, pw *= yh) V(y, j) = s * pw;
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(V);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
  K.entries = Q * Q.transpose();
  return K;
}

}  // namespace bcz
