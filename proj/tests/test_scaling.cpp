#include "bcz/scaling.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace bcz;

TEST_CASE("continuum kernel on (1, inf) against direct hypergeometric evaluation") {
  for (const auto& c : oracle::kKernelPIntro) {
    CAPTURE(c.z, c.zp, c.x, c.y);
    Params p{c.z, c.zp, c.a, c.b};
    CHECK(std::abs(kernel_P_intro(c.x, c.y, p) - c.value) < 1e-9 * std::abs(c.value) + 1e-13);
    double scaled = std::pow(c.x * c.y, -p.b) * c.value;
    CHECK(std::abs(kernel_P(c.x, c.y, ContinuumKernel{p}) - scaled) < 1e-8 * std::abs(scaled) + 1e-13);
  }
}

TEST_CASE("psi below one") {
  Params p{0.7, 1.3, 0.0, 0.0};
  CHECK(std::abs(psi_lt1(0.5, p) - 0.5) < 1e-14);
  CHECK(psi_gt1(2.0, Params{2.0, 2.5, 0.5, 0.5}) == 0.0);
  CHECK_THROWS_AS(psi_gt1(1.0, p), DomainError);
}

TEST_CASE("R above one tends to one") {
  Params p{{0.4, 0.7}, {0.4, -0.7}, 0.25, -0.25};
  CHECK(std::abs(r_gt1(1e8, p) - 1.0) < 1e-6);
}

TEST_CASE("continuum kernel does not depend on a") {
  Params p{{0.4, 0.7}, {0.4, -0.7}, 0.5, -0.25}, q = p;
  q.a = 3.5;
  for (auto [x, y] : std::vector<std::pair<double, double>>{{0.3, 0.6}, {2.0, 0.4}, {1.7, 3.1}, {0.5, 0.5}, {2.5, 2.5}})
    CHECK(std::abs(kernel_P(x, y, ContinuumKernel{p}) - kernel_P(x, y, ContinuumKernel{q})) < 1e-10);
}

TEST_CASE("continuum kernel symmetry and domain") {
  KernelP K(Params{0.3, 0.6, 0.5, 0.1});
  CHECK(std::abs(K(0.4, 2.0) + K(2.0, 0.4)) < 1e-12);
  CHECK(std::abs(K(1.4, 2.0) - K(2.0, 1.4)) < 1e-12);
  CHECK(std::abs(K(0.3, 0.7) - K(0.7, 0.3)) < 1e-12);
  CHECK_THROWS_AS(K(1.0, 0.5), DomainError);
}

TEST_CASE("diagonal is the limit of the off-diagonal kernel") {
  KernelP K(Params{{0.4, 0.7}, {0.4, -0.7}, 0.25, -0.25});
  for (double x : {0.3, 0.8, 1.6, 3.0}) CHECK(std::abs(K(x, x) - K(x, x + 1e-6)) < 1e-5 * std::abs(K(x, x)));
}

TEST_CASE("lattice embedding") {
  Params p{0.3, 0.6, 0.0, 0.0};
  CHECK(nearest_lattice(1.0, 5, p) == 4);
  Params q{{0.4, 0.7}, {0.4, -0.7}, 0.25, -0.25};
  CHECK(std::abs(nearest_lattice(0.75, 4000, q) / 4000.0 - 0.75) < 1e-3);
  CHECK(boundary_map_i(BoundaryPoint{{0.0}, {0.0}, 0.0}).empty());
  CHECK(boundary_map_i(BoundaryPoint{{1.0}, {0.5}, 0.0}) == std::vector<double>{0.25, 4.0});
}

TEST_CASE("discrete kernel approaches the continuum kernel") {
  Params p{{0.4, 0.7}, {0.4, -0.7}, 0.25, -0.25};
  auto rows = convergence_study(p, {{1.5, 2.0}, {0.5, 0.75}}, {200}, true);
  for (const auto& r : rows) CHECK(r.abs_err < 0.03 * std::abs(r.limit_kernel));
  CHECK_THROWS_AS(convergence_study(p, {{1.0, 0.5}}, {25}), DomainError);
}

TEST_CASE("psi scaling limit") {
  Params p{{0.4, 0.7}, {0.4, -0.7}, 0.25, -0.25};
  const int N = 200;
  const double x = 1.5, e = p.eps();
  const int n = nearest_lattice(x, N, p);
  const double xe = (n + e) / (N + e - 0.5);
  double lhs = std::pow(double(N), 2.0 * p.sigma().real() - 1.0) * psi_geq(n, p, N);
  double rhs = 2.0 * xe * psi_gt1(xe * xe, p);
  CHECK(std::abs(lhs / rhs - 1.0) < 0.03);
}

TEST_CASE("convergence CSV header") {
  std::ostringstream os;
  write_convergence_csv(os, {ConvergenceRow{25, 0.5, 0.5, 1.0, 1.0, 0.0}});
  CHECK(os.str().rfind("N,x,y,scaled_kernel,limit_kernel,abs_err\n", 0) == 0);
}
