#include "bcz/drhp.hpp"
#include "test_util.hpp"

using namespace bcz;

namespace {
const Params kP{{0.9, 0.7}, {0.9, -0.7}, 0.6, 0.2};
}

TEST_CASE("L matrix is skew-symmetric with empty diagonal blocks") {
  auto L = build_l_matrix(kP, 3, 60);
  CHECK((L.matrix + L.matrix.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(L.matrix.topLeftCorner(3, 3).cwiseAbs().maxCoeff() == 0.0);
  CHECK(L.matrix.bottomRightCorner(57, 57).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hand-computed L for N=1, M=3") {
  auto L = build_l_matrix(kP, 1, 3);
  const double e = kP.eps();
  for (int x = 1; x < 3; ++x) {
    double a = std::sqrt(psi_geq(x, kP, 1) * psi_less(0, kP, 1)) / ((x + e) * (x + e) - e * e);
    CHECK(std::abs(L.matrix(x, 0) - a) < 1e-15 * std::abs(a));
    CHECK(L.matrix(0, x) == -L.matrix(x, 0));
  }
  CHECK(L.matrix(1, 2) == 0.0);
}

TEST_CASE("zero L gives zero kernel") {
  TruncatedLMatrix L{kP, 1, 4, Eigen::MatrixXd::Zero(4, 4)};
  CHECK(kernel_via_resolvent(L).K.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("determinants of L") {
  auto L = build_l_matrix(kP, 2, 40);
  CHECK(det_one_plus_l(L) > 0.0);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) CHECK(principal_minor(L, x == y ? PointConfig{x} : PointConfig{std::min(x, y), std::max(x, y)}) >= -1e-10);
  CHECK(principal_minor(L, {}) == 1.0);
}

TEST_CASE("L-ensemble probabilities sum to one over balanced configurations") {
  Params p{3.0, 3.4, 0.5, 0.5};
  const int N = 2, k = 3;
  auto L = build_l_matrix(p, N, N + k + 4);
  double tot = 0.0;
  for (const auto& lam : enumerate_degenerate(k, N)) tot += principal_minor(L, map_L(lam));
  CHECK(std::abs(tot / det_one_plus_l(L) - 1.0) < 1e-8);
}

TEST_CASE("resolvent agrees with the closed-form kernel") {
  for (int N : {1, 2, 3}) {
    auto c = compare_resolvent(kP, N);
    CHECK(c.max_abs_diff < 1e-5);
  }
  CHECK_THROWS_AS(build_l_matrix(Params{0.2, 0.3, 0.5, 0.1}, 2, 100), DomainError);
}

TEST_CASE("resolvent entries are Cauchy in the truncation") {
  Params p{{0.7, 0.5}, {0.7, -0.5}, 0.6, 0.2};
  auto k1 = kernel_via_resolvent(build_l_matrix(p, 2, 100)).K;
  auto k2 = kernel_via_resolvent(build_l_matrix(p, 2, 200)).K;
  auto k4 = kernel_via_resolvent(build_l_matrix(p, 2, 400)).K;
  double d1 = (k1.topLeftCorner(20, 20) - k2.topLeftCorner(20, 20)).cwiseAbs().maxCoeff();
  double d2 = (k2.topLeftCorner(20, 20) - k4.topLeftCorner(20, 20)).cwiseAbs().maxCoeff();
  CHECK(d2 < d1);
}

TEST_CASE("residue relations") {
  RSBundle b(kP, 3);
  CHECK(residue_check(RSWhich::r_geq, 0.0, b) < 1e-6);
  CHECK(residue_check(RSWhich::r_less, 3.0, b) < 1e-6);
  for (int y = 0; y < 3; ++y) CHECK(residue_check(parse_which("S>="), double(y), b) < 1e-6);
  for (int y = 3; y < 9; ++y) CHECK(residue_check(parse_which("S<"), double(y), b) < 1e-6);
  CHECK_THROWS_AS(residue_check(RSWhich::r_geq, 5.0, b), DomainError);
  CHECK_THROWS_AS(parse_which("T"), DomainError);
}

TEST_CASE("normalized S functions vanish at infinity") {
  RSBundle b(kP, 2);
  for (RSWhich w : {RSWhich::s_geq, RSWhich::s_less, RSWhich::r_geq, RSWhich::r_less}) {
    auto d = asymptotic_check(w, {20.0, 60.0, 200.0}, b);
    CHECK(d[1] < d[0]);
    CHECK(d[2] < d[1]);
  }
}
