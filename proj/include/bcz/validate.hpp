#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bcz/drhp.hpp"
#include "bcz/identities.hpp"
#include "bcz/sampling.hpp"
#include "bcz/scaling.hpp"

namespace bcz {

struct CheckResult {
  int id = 0;
  std::string name;
  double residual = 0.0;  // worst observed value of the checked quantity
  double threshold = 0.0;
  double seconds = 0.0;
  double time_limit = 0.0;
  bool pass = false;
  std::string note;
};

struct ValidateOptions {
  std::uint64_t seed = 20240607;
  int draws = 100;
};

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// Fixed draws from the three admissible families.
inline std::vector<Params> family_draws() {
  return {Params{cplx(0.8, 0.6), cplx(0.8, -0.6), 0.6, 0.2}, Params{cplx(0.4, 0.0), cplx(0.9, 0.0), 0.5, 0.3},
          Params{cplx(2.0, 0.0), cplx(2.6, 0.0), 0.7, 0.3}};
}

// Admissible principal or complementary draw with Re(Sigma) in (lo, hi).
inline Params random_admissible(CounterRng& rng, double lo, double hi, bool principal) {
  auto u = [&](double l, double h) { return l + (h - l) * rng.uniform(); };
  for (;;) {
    double b = u(-0.5, 1.0), a = u(b, b + 1.5);
    Params p;
    p.a = a;
    p.b = b;
    if (principal) {
      double x = 0.5 * (u(lo, hi) - b), y = u(0.2, 1.5);
      p.z = cplx(x, y);
      p.zp = cplx(x, -y);
    } else {
      double n = std::floor(u(0.0, 2.0));
      p.z = n + u(0.05, 0.95);
      p.zp = n + u(0.05, 0.95);
    }
    double s = p.sigma().real();
    if (s > lo && s < hi && is_admissible(p)) return p;
  }
}

template <class F>
CheckResult timed(int id, std::string name, double threshold, double limit, F&& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.threshold = threshold;
  r.time_limit = limit;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.note = std::string("exception: ") + ex.what();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds >= limit) {
    r.pass = false;
    r.note += (r.note.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  return r;
}

inline double det2(double a, double b, double c, double d) { return a * d - b * c; }

}  // namespace detail

// 1. Total mass of P'_N equals S_N.
inline CheckResult check_total_mass(const ValidateOptions& = {}) {
  return detail::timed(1, "total mass equals S_N", 1e-7, 30.0, [](CheckResult& r) {
    for (const auto& p : detail::family_draws())
      for (int N = 1; N <= 3; ++N) {
        auto t = total_measure(p, N);
        r.residual = std::max(r.residual, relerr(t.total, partition_s_n(p, N)));
      }
    r.pass = r.residual < r.threshold;
  });
}

// 2. Orthogonality of the monic polynomials on the weighted lattice.
inline CheckResult check_orthogonality(const ValidateOptions& = {}) {
  return detail::timed(2, "orthogonality residual", 1e-7, 60.0, [](CheckResult& r) {
    for (const auto& p : detail::family_draws())
      for (int N = 1; N <= 5; ++N) {
        LatticeWeight lw{p, N};
        for (int m = 0; m < N; ++m)
          for (int n = 0; n <= m; ++n) r.residual = std::max(r.residual, orthogonality_residual(m, n, lw));
      }
    r.pass = r.residual < r.threshold;
  });
}

// 3. Three forms of K^O agree.
inline CheckResult check_kernel_forms(const ValidateOptions& opt = {}) {
  return detail::timed(3, "K^O forms agree", 1e-8, 10.0, [&](CheckResult& r) {
    CounterRng rng(opt.seed, 3);
    for (const auto& p : detail::family_draws())
      for (int N : {2, 3}) {
        KernelO KO(p, N);
        for (int i = 0; i < 20; ++i) {
          int x = static_cast<int>(rng.next() % 30), y = static_cast<int>(rng.next() % 30);
          if (x == y) {
            --i;
            continue;
          }
          double c = KO.cd_sum(x, y), t = KO.tilde_form(x, y), q = KO.ratio_form(x, y);
          double s = std::max(1.0, std::abs(c));
          r.residual = std::max({r.residual, std::abs(c - t) / s, std::abs(c - q) / s, std::abs(t - q) / s});
        }
      }
    r.pass = r.residual < r.threshold;
  });
}

// 4. Degenerate enumeration against determinantal correlations of K^O and K^L.
inline CheckResult check_degenerate_enumeration(const ValidateOptions& = {}) {
  return detail::timed(4, "degenerate enumeration", 1e-7, 60.0, [](CheckResult& r) {
    for (int k : {2, 3})
      for (int N = 1; N <= 3; ++N) {
        Params p{cplx(k, 0.0), cplx(k + 0.7, 0.0), 0.5, 0.5};
        const int G = N + k;
        auto sigs = enumerate_degenerate(k, N);
        const cplx S = partition_s_n(p, N);
        std::vector<double> r1O(G, 0.0), r1L(G, 0.0);
        std::vector<std::vector<double>> r2O(G, std::vector<double>(G, 0.0)), r2L = r2O;
        for (const auto& lam : sigs) {
          double pr = (p_prime(lam, p, N) / S).real();
          auto o = map_O(lam), l = map_L(lam);
          for (int x : o) r1O[x] += pr;
          for (int x : l) r1L[x] += pr;
          for (int x : o)
            for (int y : o) r2O[x][y] += pr;
          for (int x : l)
            for (int y : l) r2L[x][y] += pr;
        }
        KernelO KO(p, N);
        KernelL KL(p, N);
        for (int x = 0; x < G; ++x) {
          r.residual = std::max({r.residual, std::abs(r1O[x] - KO(x, x)), std::abs(r1L[x] - KL(x, x))});
          for (int y = 0; y < G; ++y) {
            if (x == y) continue;
            double dO = detail::det2(KO(x, x), KO(x, y), KO(y, x), KO(y, y));
            double dL = detail::det2(KL(x, x), KL(x, y), KL(y, x), KL(y, y));
            r.residual = std::max({r.residual, std::abs(r2O[x][y] - dO), std::abs(r2L[x][y] - dL)});
          }
        }
      }
    r.pass = r.residual < r.threshold;
  });
}

// 5. Truncated resolvent of L against the closed-form K^L.
inline CheckResult check_resolvent(const ValidateOptions& opt = {}) {
  return detail::timed(5, "resolvent vs K^L", 1e-5, 120.0, [&](CheckResult& r) {
    CounterRng rng(opt.seed, 5);
    double cond = 0.0;
    for (int i = 0; i < 5; ++i) {
      Params p = detail::random_admissible(rng, 1.2, 3.0, i % 2 == 0);
      int N = 1 + static_cast<int>(rng.next() % 3);
      auto c = compare_resolvent(p, N);
      r.residual = std::max(r.residual, c.max_abs_diff);
      cond = std::max(cond, c.cond_estimate);
    }
    r.note = "max condition estimate " + detail::fmt(cond);
    r.pass = r.residual < r.threshold;
  });
}

// 6. Residue relations and large-circle asymptotics of R and S.
inline CheckResult check_residues(const ValidateOptions& = {}) {
  return detail::timed(6, "residues and asymptotics", 1e-6, 60.0, [](CheckResult& r) {
    bool monotone = true;
    for (const auto& p : detail::family_draws())
      for (int N = 1; N <= 3; ++N) {
        RSBundle b(p, N);
        const double e = b.eps();
        for (RSWhich w : {RSWhich::r_geq, RSWhich::s_geq, RSWhich::r_less, RSWhich::s_less}) {
          const bool geq = (w == RSWhich::r_geq || w == RSWhich::s_geq);
          const int lo = geq ? 0 : N, hi = geq ? N - 1 : N + 5;
          for (int y = lo; y <= hi; ++y) {
            r.residual = std::max(r.residual, residue_check(w, cplx(y, 0.0), b));
            if (e > 1e-6) r.residual = std::max(r.residual, residue_check(w, cplx(-y - 2.0 * e, 0.0), b));
          }
          auto dev = asymptotic_check(w, {10.0 * N, 30.0 * N, 100.0 * N}, b);
          if (!(dev[1] < dev[0] && dev[2] < dev[1])) monotone = false;
        }
      }
    r.pass = r.residual < r.threshold && monotone;
    r.note = monotone ? "asymptotic deviations decrease" : "asymptotic deviations not decreasing";
  });
}

// 7. Hypergeometric and trigonometric identities on random draws.
inline CheckResult check_identities(const ValidateOptions& opt = {}) {
  return detail::timed(7, "identity suite", 1e-8, 60.0, [&](CheckResult& r) {
    std::string worst;
    for (size_t i = 0; i < identity_names().size(); ++i) {
      const auto& name = identity_names()[i];
      CounterRng rng(opt.seed, 700 + i);
      for (int d = 0; d < opt.draws; ++d) {
        double v = identity_residual(name, draw_identity_params(name, rng));
        if (!(v <= r.residual)) worst = name;
        r.residual = std::max(r.residual, std::isnan(v) ? INFINITY : v);
      }
    }
    r.note = "worst: " + worst;
    r.pass = r.residual < r.threshold;
  });
}

// 8. R and S are invariant under zeta -> -zeta - 2 eps.
inline CheckResult check_involution(const ValidateOptions& opt = {}) {
  return detail::timed(8, "involution invariance", 1e-10, 10.0, [&](CheckResult& r) {
    CounterRng rng(opt.seed, 8);
    for (const auto& p : detail::family_draws()) {
      const int N = 3;
      RSBundle b(p, N);
      const double e = b.eps();
      for (RSWhich w : {RSWhich::r_geq, RSWhich::s_geq, RSWhich::r_less, RSWhich::s_less}) {
        for (int i = 0; i < 50;) {
          cplx zeta(-4.0 + 12.0 * rng.uniform(), -2.0 + 4.0 * rng.uniform());
          double d = INFINITY;
          for (int y = 0; y < 3 * N + 12; ++y)
            d = std::min({d, std::abs(zeta - cplx(y, 0.0)), std::abs(zeta + cplx(y + 2.0 * e, 0.0))});
          if (d < 0.2) continue;
          ++i;
          r.residual = std::max(r.residual, relerr(eval_rs(w, zeta, b), eval_rs(w, -zeta - 2.0 * e, b)));
        }
      }
    }
    r.pass = r.residual < r.threshold;
  });
}

// 9. Halving of the scaling error E_N when N doubles.
inline CheckResult check_convergence(const ValidateOptions& = {}) {
  return detail::timed(9, "scaling limit convergence rate", 0.7, 300.0, [](CheckResult& r) {
    const std::vector<int> Ns{25, 50, 100, 200};
    const auto grid = default_convergence_grid();
    const std::vector<Params> draws{Params{cplx(0.4, 0.7), cplx(0.4, -0.7), 0.25, -0.25}, Params{0.3, 0.6, 0.5, 0.1}};
    int bad = 0, total = 0;
    double aligned_worst = 0.0;
    for (const auto& p : draws)
      for (bool aligned : {false, true}) {
        auto rows = convergence_study(p, grid, Ns, aligned);
        const size_t g = grid.size();
        for (size_t i = 0; i < g; ++i)
          for (size_t k = 0; k + 1 < Ns.size(); ++k) {
            double q = rows[(k + 1) * g + i].abs_err / rows[k * g + i].abs_err;
            if (aligned) {
              aligned_worst = std::max(aligned_worst, q);
            } else {
              r.residual = std::max(r.residual, q);
              ++total;
              if (!(q < r.threshold)) ++bad;
            }
          }
      }
    r.pass = bad == 0;
    r.note = std::to_string(bad) + "/" + std::to_string(total) + " ratios >= 0.7 at fixed (x, y); at realized lattice coordinates worst ratio " +
             detail::fmt(aligned_worst);
  });
}

// 10. Exact law of the sampler on small grounds, and Racah correlations.
inline CheckResult check_sampler(const ValidateOptions& opt = {}) {
  return detail::timed(10, "sampler exactness and Racah moments", 1e-10, 120.0, [&](CheckResult& r) {
    CounterRng rng(opt.seed, 10);
    auto random_kernel = [&](int n) {
      Eigen::MatrixXd A(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.uniform() - 0.5;
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
      Eigen::MatrixXd Q = qr.householderQ();
      Eigen::VectorXd lam(n);
      for (int i = 0; i < n; ++i) lam(i) = rng.uniform();
      FiniteKernelMatrix K;
      for (int i = 0; i < n; ++i) K.ground.push_back(i);
      K.entries = Q * lam.asDiagonal() * Q.transpose();
      return K;
    };
    for (int n : {6, 8}) {
      auto K = random_kernel(n);
      auto t = exact_law_target(K), s = exact_law_sampler(K);
      for (size_t i = 0; i < t.size(); ++i) r.residual = std::max(r.residual, std::abs(t[i] - s[i]));
    }
    for (int n : {10, 12}) {
      auto K = random_kernel(n);
      auto t = exact_law_target(K), s = exact_law_mixture(K);
      for (size_t i = 0; i < t.size(); ++i) r.residual = std::max(r.residual, std::abs(t[i] - s[i]));
    }
    const int k = 2, N = 4;
    Params p{cplx(k, 0.0), cplx(k + 0.7, 0.0), 0.5, 0.5};
    auto target = racah_ope_kernel(p, N, k);
    auto sampled = racah_complement_kernel(p, N, k);
    auto batch = dpp_sample(sampled, opt.seed, 200000);
    const auto& T = target.entries;
    double zmax = 0.0;
    for (int x = 0; x < N + k; ++x)
      for (int y = x; y < N + k; ++y) {
        double want = x == y ? T(x, x) : detail::det2(T(x, x), T(x, y), T(y, x), T(y, y));
        auto est = x == y ? empirical_correlations(batch, {x}) : empirical_correlations(batch, {x, y});
        double se = std::max(est.standard_error, std::sqrt(std::max(want * (1.0 - want), 0.0) / 200000.0));
        if (se > 0.0) zmax = std::max(zmax, std::abs(est.estimate - want) / se);
        else zmax = std::max(zmax, est.estimate == want ? 0.0 : INFINITY);
      }
    r.pass = r.residual < r.threshold && zmax < 4.0;
    r.note = "Racah k=2 N=4 worst |z| " + detail::fmt(zmax) + " over rho1, rho2";
  });
}

// 11. L = O symmetric-difference {0..N-1}, and Frobenius round trip.
inline CheckResult check_combinatorics(const ValidateOptions& = {}) {
  return detail::timed(11, "particle-hole and Frobenius maps", 0.5, 5.0, [](CheckResult& r) {
    int failures = 0;
    for (int N = 1; N <= 4; ++N)
      for (const auto& lam : enumerate_degenerate(4, N)) {
        if (map_L(lam) != symmetric_difference_lower(map_O(lam), N)) ++failures;
        if (from_frobenius(frobenius(lam), N) != lam) ++failures;
      }
    r.residual = failures;
    r.pass = failures == 0;
  });
}

// 12. Nesting of the parameter domains.
inline CheckResult check_domains(const ValidateOptions& opt = {}) {
  return detail::timed(12, "admissible in U0 in U", 0.5, 5.0, [&](CheckResult& r) {
    CounterRng rng(opt.seed, 12);
    auto u = [&](double l, double h) { return l + (h - l) * rng.uniform(); };
    int failures = 0, admissible = 0;
    for (int i = 0; i < 100000; ++i) {
      Params p;
      p.b = rng.next() % 8 == 0 ? -0.5 : u(-0.5, 2.0);
      p.a = rng.next() % 8 == 0 ? p.b : u(p.b, p.b + 2.0);
      switch (rng.next() % 4) {
        case 0: {
          cplx z(u(-3.0, 3.0), u(-2.0, 2.0));
          p.z = z;
          p.zp = std::conj(z);
          break;
        }
        case 1: {
          double n = std::floor(u(-3.0, 3.0));
          p.z = n + u(0.0, 1.0);
          p.zp = n + u(0.0, 1.0);
          break;
        }
        case 2: {
          p.z = std::floor(u(-3.0, 4.0));
          p.zp = u(-4.0, 4.0);
          break;
        }
        default:
          p.z = cplx(u(-4.0, 4.0), rng.next() % 2 ? u(-1.0, 1.0) : 0.0);
          p.zp = cplx(u(-4.0, 4.0), rng.next() % 2 ? u(-1.0, 1.0) : 0.0);
      }
      bool adm = is_admissible(p), u0 = in_U0(p), uu = in_U(p);
      admissible += adm;
      if ((adm && !u0) || (u0 && !uu)) ++failures;
    }
    r.residual = failures;
    r.pass = failures == 0;
    r.note = std::to_string(admissible) + " admissible draws";
  });
}

inline const std::vector<std::function<CheckResult(const ValidateOptions&)>>& all_checks() {
  static const std::vector<std::function<CheckResult(const ValidateOptions&)>> v{
      check_total_mass, check_orthogonality, check_kernel_forms, check_degenerate_enumeration,
      check_resolvent,  check_residues,      check_identities,   check_involution,
      check_convergence, check_sampler,      check_combinatorics, check_domains};
  return v;
}

// Criterion ids run by each validate suite.
inline std::vector<int> suite_checks(const std::string& suite) {
  if (suite == "identities") return {7};
  if (suite == "orthogonality") return {2, 3};
  if (suite == "drhp") return {6, 8};
  if (suite == "oracle") return {1, 4, 5};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  throw DomainError("unknown suite: " + suite);
}

inline std::vector<CheckResult> run_suite(const std::string& suite, const ValidateOptions& opt = {}) {
  std::vector<CheckResult> out;
  for (int id : suite_checks(suite)) out.push_back(all_checks()[static_cast<size_t>(id - 1)](opt));
  return out;
}

}  // namespace bcz
