#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcz {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kPoleTol = 1e-12;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleError : Error { using Error::Error; };
struct DivergenceError : Error { using Error::Error; };
struct ConstraintError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct SpectrumError : Error { using Error::Error; };
struct SubsetError : Error { using Error::Error; };
struct SolveError : Error { using Error::Error; };

// Non-fatal diagnostics (near-degenerate parameters, poor conditioning).
class Warnings {
 public:
  static Warnings& instance() {
    static Warnings w;
    return w;
  }
  void push(std::string msg) {
    std::lock_guard<std::mutex> lk(mu_);
    if (items_.size() < 256) items_.push_back(std::move(msg));
  }
  std::vector<std::string> drain() {
    std::lock_guard<std::mutex> lk(mu_);
    std::vector<std::string> out;
    out.swap(items_);
    return out;
  }

 private:
  std::mutex mu_;
  std::vector<std::string> items_;
};

inline void warn(std::string msg) { Warnings::instance().push(std::move(msg)); }

// True when z lies within tol of one of 0, -1, -2, ...
inline bool near_nonpos_int(cplx z, double tol = kPoleTol) {
  double r = std::round(z.real());
  double scale = std::max(1.0, std::abs(z.real()));
  return r <= 0.0 && std::abs(z.imag()) <= tol * scale && std::abs(z.real() - r) <= tol * scale;
}

inline bool near_int(cplx z, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

inline double relerr(cplx a, cplx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

// ---------------------------------------------------------------------------
// double-double

struct dd {
  double hi = 0.0, lo = 0.0;
  dd() = default;
  dd(double h) : hi(h), lo(0.0) {}
  dd(double h, double l) : hi(h), lo(l) {}
};

namespace detail {
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}
inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}
}  // namespace detail

inline dd operator+(dd a, dd b) {
  double s, e, t, f;
  detail::two_sum(a.hi, b.hi, s, e);
  detail::two_sum(a.lo, b.lo, t, f);
  e += t;
  detail::quick_two_sum(s, e, s, e);
  e += f;
  detail::quick_two_sum(s, e, s, e);
  return {s, e};
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
  double p, e;
  detail::two_prod(a.hi, b.hi, p, e);
  e += a.hi * b.lo + a.lo * b.hi;
  detail::quick_two_sum(p, e, p, e);
  return {p, e};
}
inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * dd(q1);
  double q2 = r.hi / b.hi;
  r = r - b * dd(q2);
  double q3 = r.hi / b.hi;
  double s, e;
  detail::quick_two_sum(q1, q2, s, e);
  return dd(s, e) + dd(q3);
}

struct cdd {
  dd re, im;
  cdd() = default;
  cdd(cplx z) : re(z.real()), im(z.imag()) {}
  cdd(dd r, dd i) : re(r), im(i) {}
  cplx to_cplx() const { return {re.hi + re.lo, im.hi + im.lo}; }
};

inline cdd operator+(const cdd& a, const cdd& b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(const cdd& a, const cdd& b) { return {a.re - b.re, a.im - b.im}; }
inline cdd operator*(const cdd& a, const cdd& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator/(const cdd& a, const cdd& b) {
  dd den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

// ---------------------------------------------------------------------------
// complex value with an extended binary exponent, value = m * 2^e

struct xc {
  cplx m{0.0, 0.0};
  long e = 0;

  xc() = default;
  xc(cplx v) : m(v), e(0) { norm(); }
  xc(cplx v, long ex) : m(v), e(ex) { norm(); }

  void norm() {
    double s = std::max(std::abs(m.real()), std::abs(m.imag()));
    if (s == 0.0 || !std::isfinite(s)) {
      if (s == 0.0) e = 0;
      return;
    }
    int k;
    std::frexp(s, &k);
    m = cplx(std::ldexp(m.real(), -k), std::ldexp(m.imag(), -k));
    e += k;
  }
  bool zero() const { return m == cplx(0.0, 0.0); }
  cplx value() const {
    if (zero()) return {0.0, 0.0};
    if (e > 2000) return {m.real() * HUGE_VAL, m.imag() * HUGE_VAL};
    if (e < -2000) return {0.0, 0.0};
    return {std::ldexp(m.real(), static_cast<int>(e)), std::ldexp(m.imag(), static_cast<int>(e))};
  }
  double log2abs() const { return zero() ? -HUGE_VAL : std::log2(std::abs(m)) + static_cast<double>(e); }
};

inline xc operator*(const xc& a, const xc& b) { return xc(a.m * b.m, a.e + b.e); }
inline xc operator/(const xc& a, const xc& b) { return xc(a.m / b.m, a.e - b.e); }
inline xc operator*(const xc& a, cplx b) { return xc(a.m * b, a.e); }
inline xc operator/(const xc& a, cplx b) { return xc(a.m / b, a.e); }
inline xc operator+(const xc& a, const xc& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  long e = std::max(a.e, b.e);
  auto shift = [e](const xc& v) {
    long d = v.e - e;
    if (d < -1100) return cplx(0.0, 0.0);
    return cplx(std::ldexp(v.m.real(), static_cast<int>(d)), std::ldexp(v.m.imag(), static_cast<int>(d)));
  };
  return xc(shift(a) + shift(b), e);
}
inline xc operator-(const xc& a) { return xc(-a.m, a.e); }

}  // namespace bcz
