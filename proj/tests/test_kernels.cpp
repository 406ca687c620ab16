#include "bcz/kernels.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace bcz;

TEST_CASE("K^O against moment-based orthogonal polynomials") {
  for (const auto& c : oracle::kKernelO) {
    CAPTURE(c.z, c.zp, c.N, c.x, c.y);
    KernelO KO(Params{c.z, c.zp, c.a, c.b}, c.N);
    double tol = 1e-10 * std::max(1.0, std::abs(c.value)) + 1e-12 * std::abs(c.value);
    CHECK(std::abs(KO.cd_sum(c.x, c.y) - c.value) < tol);
    CHECK(std::abs(KO(c.x, c.y) - c.value) < tol);
    if (c.x != c.y) CHECK(std::abs(KO.ratio_form(c.x, c.y) - c.value) < tol);
  }
}

TEST_CASE("K^L is the particle-hole transform of K^O") {
  for (const auto& c : oracle::kKernelO) {
    CAPTURE(c.z, c.zp, c.N, c.x, c.y);
    KernelL KL(Params{c.z, c.zp, c.a, c.b}, c.N);
    if (c.x == c.y) {
      double want = c.x < c.N ? 1.0 - c.value : c.value;
      CHECK(std::abs(KL(c.x, c.x) - want) < 1e-8);
    } else {
      CHECK(std::abs(std::abs(KL(c.x, c.y)) - std::abs(c.value)) < 1e-8);
    }
  }
}

TEST_CASE("K^L closed form equals the sign-gauged K^O") {
  Params p{{0.8, 0.6}, {0.8, -0.6}, 0.6, 0.2};
  for (int N : {1, 2, 3}) {
    KernelO KO(p, N);
    KernelL KL(p, N);
    for (int x = 0; x < 12; ++x)
      for (int y = 0; y < 12; ++y) CHECK(std::abs(KL(x, y) - kernel_L_sign_form(x, y, KO, N)) < 1e-8);
  }
}

TEST_CASE("one-point function of a degenerate measure by enumeration") {
  for (const auto& c : oracle::kDegenerateRho1) {
    CAPTURE(c.z, c.zp, c.N, c.x);
    KernelO KO(Params{c.z, c.zp, c.a, c.b}, c.N);
    CHECK(std::abs(KO(c.x, c.x) - c.value) < 1e-8);
  }
}

TEST_CASE("psi functions from their defining relations") {
  for (const auto& c : oracle::kPsi) {
    CAPTURE(c.z, c.zp, c.x);
    Params p{c.z, c.zp, c.a, c.b};
    if (c.x >= c.N) {
      CHECK(std::abs(psi_geq(c.x, p, c.N) - c.geq) <= 1e-8 * c.geq);
      CHECK(std::abs(psi_geq_continuous(c.x, p, c.N).real() - c.geq) <= 1e-8 * c.geq);
    } else {
      CHECK(std::abs(psi_less(c.x, p, c.N) - c.less) <= 1e-8 * c.less);
    }
  }
}

TEST_CASE("expected number of L-points equals twice the expected Durfee size") {
  Params p{2.0, 2.5, 0.0, 0.0};
  const int N = 2;
  double ed = 0.0;
  for (const auto& lam : enumerate_degenerate(2, N)) ed += prob(lam, p, N).real() * frobenius(lam).d();
  KernelL KL(p, N);
  double tr = 0.0;
  for (int x = 0; x < 60; ++x) tr += KL(x, x);
  CHECK(std::abs(tr - 2.0 * ed) < 1e-6);
}

TEST_CASE("R and S forms agree") {
  Params p{{0.8, 0.6}, {0.8, -0.6}, 0.6, 0.2};
  RSBundle b(p, 3);
  for (cplx zeta : {cplx(4.3, 0.7), cplx(-1.2, 2.1), cplx(7.5, -0.4), cplx(0.5, 0.5)}) {
    CHECK(rel_diff(b.r_geq_gamma(zeta).value, b.r_geq_series(zeta).value) < 1e-9);
    CHECK(rel_diff(b.s_geq_gamma(zeta).value, b.s_geq_series(zeta).value) < 1e-9);
  }
  Params q{{1.1, 0.5}, {1.1, -0.5}, 0.6, 0.2};
  RSBundle c(q, 2);
  for (cplx zeta : {cplx(9.0, 5.0), cplx(-11.0, 2.0), cplx(4.5, -3.0)}) {
    CHECK(rel_diff(c.r_less_closed(zeta), c.r_less_sum(zeta)) < 1e-5);
    CHECK(rel_diff(c.s_less_closed(zeta), c.s_less_sum(zeta)) < 1e-5);
  }
  CHECK(c.r_less(cplx(200.0, 40.0)) == c.r_less_sum(cplx(200.0, 40.0)));
}

TEST_CASE("R functions tend to one") {
  Params p{{0.8, 0.6}, {0.8, -0.6}, 0.6, 0.2};
  const int N = 2;
  RSBundle b(p, N);
  double dg = 0.0, dl = 0.0;
  for (int k = 0; k < 16; ++k) {
    cplx u = std::polar(1.0, 2.0 * kPi * (k + 0.5) / 16.0);
    dg = std::max(dg, std::abs(b.r_geq(1e4 * u) - 1.0));
    dl = std::max(dl, std::abs(b.r_less(1e3 * N * u) - 1.0));
  }
  CHECK(dg < 1e-2);
  CHECK(dl < 5e-2);
}

TEST_CASE("kernels at Sigma near zero stay finite") {
  Params p{{-0.1, 0.3}, {-0.1, -0.3}, 0.5, 0.2};
  KernelL KL(p, 2);
  CHECK(std::isfinite(KL(0, 0)));
  CHECK(std::isfinite(KL(3, 1)));
  KernelO KO(p, 2);
  CHECK(std::isfinite(KO(1, 4)));
}
