#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcz/validate.hpp"

using namespace bcz;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

// RE, IMi, or RE+IMi / RE-IMi
cplx parse_complex(std::string s) {
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  if (s.empty()) throw UsageError("empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  double imv = (im.empty() || im == "+") ? 1.0 : (im == "-" ? -1.0 : parse_real(im));
  return {re.empty() ? 0.0 : parse_real(re), imv};
}

std::uint64_t parse_seed(const std::string& s) {
  if (s.empty() || s.size() > 20 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError("invalid seed '" + s + "': expected a nonnegative 64-bit integer");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError("invalid seed '" + s + "': expected a nonnegative 64-bit integer");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s) {
  double v = parse_real(s);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw UsageError("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

std::pair<int, int> parse_int_range(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError("expected LO:HI, got '" + s + "'");
  int lo = parse_int(parts[0]), hi = parse_int(parts[1]);
  if (lo < 0 || hi < lo) throw UsageError("bad lattice range '" + s + "'");
  return {lo, hi};
}

struct Options {
  std::string z = "0", zp = "0", a = "0", b = "0", n = "1";
  std::string grid, seed, out, kind, suite = "all";
  int draws = 100, count = 1000;
  bool unsafe = false;
};

Params make_params(const Options& o) {
  Params p{parse_complex(o.z), parse_complex(o.zp), parse_real(o.a), parse_real(o.b)};
  p.check_ab();
  return p;
}

void require_domain(const Params& p, bool unsafe) {
  if (unsafe) {
    if (!in_U0(p)) throw ConstraintError("parameters outside U0");
  } else if (!is_admissible(p)) {
    throw ConstraintError("parameters are not admissible (use --unsafe to allow any pair in U0)");
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
    stream().imbue(std::locale::classic());
    stream() << std::setprecision(17);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json params_json(const Params& p, int N) {
  return {{"z", {p.z.real(), p.z.imag()}}, {"zp", {p.zp.real(), p.zp.imag()}}, {"a", p.a}, {"b", p.b}, {"N", N}};
}

int cmd_classify(const Options& o) {
  Params p{parse_complex(o.z), parse_complex(o.zp), parse_real(o.a), parse_real(o.b)};
  auto c = classify_pair(p.z, p.zp);
  bool adm = false;
  std::string why;
  try {
    adm = is_admissible(p);
  } catch (const PoleError& e) {
    why = e.what();
  }
  Output out(o.out);
  out.stream() << c.name() << ", " << (adm ? "admissible" : "not admissible");
  if (!why.empty()) out.stream() << " (" << why << ")";
  out.stream() << '\n';
  return adm ? 0 : 1;
}

int cmd_kernel(const Options& o) {
  const Params p = make_params(o);
  require_domain(p, o.unsafe);
  const std::string kind = o.kind.empty() ? "O" : o.kind;
  Output out(o.out);
  auto& os = out.stream();
  if (kind == "P") {
    double lo = 0.25, hi = 4.0;
    int cnt = 16;
    if (!o.grid.empty()) {
      auto parts = split(o.grid, ':');
      if (parts.size() != 3) throw UsageError("P grid must be LO:HI:COUNT");
      lo = parse_real(parts[0]);
      hi = parse_real(parts[1]);
      cnt = parse_int(parts[2]);
      if (!(lo > 0.0) || !(hi > lo) || cnt < 2) throw UsageError("bad P grid '" + o.grid + "'");
    }
    std::vector<double> pts;
    for (int i = 0; i < cnt; ++i) {
      double v = lo + (hi - lo) * i / (cnt - 1);
      if (v != 1.0) pts.push_back(v);
    }
    KernelP K(p);
    os << "x,y,value,max_term,block\n";
    for (double x : pts)
      for (double y : pts) {
        double v = K(x, y), mt = 0.0;
        auto a = K.point(x, x == y);
        if (x == y) {
          mt = std::max(std::abs(a.psi * a.dR * a.S), std::abs(a.psi * a.dS * a.R));
        } else {
          auto b = K.point(y, false);
          const bool same = (x > 1.0) == (y > 1.0);
          double s = std::sqrt(std::abs(a.psi * b.psi)) / std::abs(x - y);
          mt = same ? std::max(std::abs(s * a.R * b.S), std::abs(s * a.S * b.R)) : std::max(std::abs(s * a.R * b.R), std::abs(s * a.S * b.S));
        }
        os << x << ',' << y << ',' << v << ',' << mt << ',' << (x > 1.0 ? "gt1" : "lt1") << (y > 1.0 ? "-gt1" : "-lt1") << '\n';
      }
    return 0;
  }
  const int N = parse_int(o.n);
  if (N < 1) throw UsageError("--n must be at least 1");
  auto [lo, hi] = o.grid.empty() ? std::pair<int, int>{0, 19} : parse_int_range(o.grid);
  os << "x,y,value,max_term,block\n";
  auto blk = [N](int v) { return v < N ? "lt" : "geq"; };
  if (kind == "O") {
    KernelO K(p, N);
    LatticeWeight lw{p, N};
    std::vector<cplx> h;
    for (int n = 0; n < N; ++n) h.push_back(norm_h(n, lw));
    for (int x = lo; x <= hi; ++x)
      for (int y = lo; y <= hi; ++y) {
        double v = K(x, y), mt = 0.0;
        const auto &a = K.point(x), &b = K.point(y);
        for (int n = 0; n < N; ++n)
          mt = std::max(mt, std::abs(std::sqrt(a.W * b.W) * a.pn[static_cast<size_t>(n)] * b.pn[static_cast<size_t>(n)] / h[static_cast<size_t>(n)]));
        os << x << ',' << y << ',' << v << ',' << mt << ',' << blk(x) << '-' << blk(y) << '\n';
      }
    return 0;
  }
  if (kind == "L") {
    KernelL K(p, N);
    const double e = p.eps();
    for (int x = lo; x <= hi; ++x)
      for (int y = lo; y <= hi; ++y) {
        double v = K(x, y), mt = std::abs(v);
        if (p.eps() != 0.0 && std::abs(p.sigma()) >= 1e-8) {
          auto& a = K.point(x, x == y);
          if (x == y) {
            mt = std::max(std::abs(a.psi * a.dR * a.S), std::abs(a.psi * a.dS * a.R)) / (2.0 * (x + e));
          } else {
            auto b = K.point(y, false);
            auto a2 = K.point(x, false);
            double s = std::sqrt(std::abs(a2.psi * b.psi)) / std::abs((x + e) * (x + e) - (y + e) * (y + e));
            const bool same = (x >= N) == (y >= N);
            mt = same ? std::max(std::abs(s * a2.R * b.S), std::abs(s * a2.S * b.R)) : std::max(std::abs(s * a2.R * b.R), std::abs(s * a2.S * b.S));
          }
        }
        os << x << ',' << y << ',' << v << ',' << mt << ',' << blk(x) << '-' << blk(y) << '\n';
      }
    return 0;
  }
  throw UsageError("--kind must be O, L or P");
}

int cmd_validate(const Options& o) {
  ValidateOptions vo;
  if (!o.seed.empty()) vo.seed = parse_seed(o.seed);
  vo.draws = o.draws;
  if (vo.draws < 1) throw UsageError("--draws must be positive");
  auto results = run_suite(o.suite, vo);
  json report{{"suite", o.suite}, {"seed", vo.seed}, {"draws", vo.draws}, {"checks", json::array()}};
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass;
    report["checks"].push_back({{"id", r.id},
                                {"name", r.name},
                                {"max_residual", r.residual},
                                {"threshold", r.threshold},
                                {"seconds", r.seconds},
                                {"time_limit", r.time_limit},
                                {"pass", r.pass},
                                {"note", r.note}});
  }
  report["pass"] = ok;
  Output out(o.out);
  out.stream() << report.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_converge(const Options& o) {
  const Params p = make_params(o);
  require_domain(p, o.unsafe);
  std::vector<int> Ns{25, 50, 100, 200};
  if (o.n != "1" && !o.n.empty()) {
    Ns.clear();
    for (const auto& s : split(o.n, ',')) Ns.push_back(parse_int(s));
  }
  for (int N : Ns)
    if (N < 1) throw UsageError("every N must be at least 1");
  auto grid = default_convergence_grid();
  if (!o.grid.empty()) {
    grid.clear();
    for (const auto& pt : split(o.grid, ',')) {
      auto xy = split(pt, ':');
      if (xy.size() != 2) throw UsageError("grid points must be x:y");
      grid.emplace_back(parse_real(xy[0]), parse_real(xy[1]));
    }
  }
  for (auto [x, y] : grid)
    if (x == 1.0 || y == 1.0) throw UsageError("grid points must avoid x = 1 and y = 1");
  auto rows = convergence_study(p, grid, Ns);
  Output out(o.out);
  auto& os = out.stream();
  os << "N,x,y,scaled_kernel,limit_kernel,abs_err,ratio,ratio_below_0.7\n";
  const size_t g = grid.size();
  for (size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    os << r.N << ',' << r.x << ',' << r.y << ',' << r.scaled_kernel << ',' << r.limit_kernel << ',' << r.abs_err << ',';
    size_t j = k / g;
    if (j > 0 && Ns[j] == 2 * Ns[j - 1]) {
      double q = r.abs_err / rows[k - g].abs_err;
      os << q << ',' << (q < 0.7 ? 1 : 0);
    } else {
      os << ',';
    }
    os << '\n';
  }
  return 0;
}

int cmd_sample(const Options& o) {
  const std::uint64_t seed = o.seed.empty() ? 1 : parse_seed(o.seed);
  const Params p = make_params(o);
  require_domain(p, o.unsafe);
  const int N = parse_int(o.n);
  if (N < 1) throw UsageError("--n must be at least 1");
  if (o.count < 0) throw UsageError("--count must be nonnegative");
  const std::string kind = o.kind.empty() ? "O" : o.kind;
  if (kind != "O" && kind != "L") throw UsageError("sample supports --kind O or L");
  auto c = classify_pair(p.z, p.zp);
  int lo = 0, hi = std::max(39, 2 * N + 19);
  if (c.kind == PairKind::degenerate) hi = N + c.n - 1;
  if (!o.grid.empty()) std::tie(lo, hi) = parse_int_range(o.grid);
  if (kind == "L" && lo != 0) throw UsageError("L samples need a window starting at 0");
  if (kind == "L" && hi < N - 1) throw UsageError("L samples need a window containing 0..N-1");

  // O-process restricted to the window; L-configurations by symmetric difference with {0..N-1}.
  FiniteKernelMatrix K;
  KernelO KO(p, N);
  const int m = hi - lo + 1;
  K.entries.resize(m, m);
  for (int i = 0; i < m; ++i) {
    K.ground.push_back(lo + i);
    for (int j = 0; j < m; ++j) K.entries(i, j) = KO(lo + i, lo + j);
  }
  K.entries = 0.5 * (K.entries + K.entries.transpose()).eval();
  auto batch = dpp_sample(K, seed, o.count);
  if (kind == "L")
    for (auto& x : batch.configs) x = symmetric_difference_lower(x, N);

  Output out(o.out);
  auto& os = out.stream();
  json header{{"seed", seed}, {"params", params_json(p, N)}, {"kind", kind}, {"window", {lo, hi}}, {"count", o.count}, {"class", c.name()}};
  os << header.dump() << '\n';
  for (const auto& x : batch.configs) os << json(x).dump() << '\n';
  json rho = json::array();
  if (!batch.configs.empty())
    for (int x = lo; x <= hi; ++x) {
      auto e = empirical_correlations(batch, {x});
      rho.push_back({{"x", x}, {"estimate", e.estimate}, {"standard_error", e.standard_error}});
    }
  os << json{{"empirical_rho1", rho}}.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BC-type z-measures: kernels, validation, scaling limits and sampling"};
  app.require_subcommand(1);
  Options o;
  auto add_params = [&](CLI::App* s) {
    s->add_option("--z", o.z, "z as RE+IMi");
    s->add_option("--zp", o.zp, "z' as RE+IMi");
    s->add_option("--a", o.a, "a (a >= b >= -1/2)");
    s->add_option("--b", o.b, "b");
    s->add_option("--out", o.out, "output file (default stdout)");
  };
  auto* classify = app.add_subcommand("classify", "classify (z, z') and check admissibility");
  add_params(classify);

  auto* kernel = app.add_subcommand("kernel", "tabulate K^O, K^L or K^P on a grid");
  add_params(kernel);
  kernel->add_option("--n", o.n, "N");
  kernel->add_option("--kind", o.kind, "O, L or P")->check(CLI::IsMember({"O", "L", "P"}));
  kernel->add_option("--grid", o.grid, "LO:HI lattice range (O, L) or LO:HI:COUNT (P)");
  kernel->add_flag("--unsafe", o.unsafe, "only require U0 instead of admissibility");

  auto* validate = app.add_subcommand("validate", "run a validation suite and print a JSON report");
  validate->add_option("--suite", o.suite, "identities|orthogonality|drhp|oracle|all")
      ->check(CLI::IsMember({"identities", "orthogonality", "drhp", "oracle", "all"}));
  validate->add_option("--draws", o.draws, "random draws per identity");
  validate->add_option("--seed", o.seed, "64-bit seed");
  validate->add_option("--out", o.out, "output file (default stdout)");

  auto* converge = app.add_subcommand("converge", "scaling-limit convergence study as CSV");
  add_params(converge);
  converge->add_option("--n", o.n, "comma-separated N values (default 25,50,100,200)");
  converge->add_option("--grid", o.grid, "comma-separated x:y points (default 6x6 grid)");
  converge->add_flag("--unsafe", o.unsafe, "only require U0 instead of admissibility");

  auto* sample = app.add_subcommand("sample", "exact samples of the O- or L-process as JSON lines");
  add_params(sample);
  sample->add_option("--n", o.n, "N");
  sample->add_option("--count", o.count, "number of configurations");
  sample->add_option("--seed", o.seed, "64-bit seed");
  sample->add_option("--kind", o.kind, "O or L")->check(CLI::IsMember({"O", "L"}));
  sample->add_option("--grid", o.grid, "LO:HI lattice window");
  sample->add_flag("--unsafe", o.unsafe, "only require U0 instead of admissibility");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    int rc = 0;
    if (*classify) rc = cmd_classify(o);
    if (*kernel) rc = cmd_kernel(o);
    if (*validate) rc = cmd_validate(o);
    if (*converge) rc = cmd_converge(o);
    if (*sample) rc = cmd_sample(o);
    for (const auto& w : Warnings::instance().drain()) std::cerr << "warning: " << w << '\n';
    return rc;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
