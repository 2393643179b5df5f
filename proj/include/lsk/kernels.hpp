#pragma once

// Modified Bessel function of real order (Laplace-type integral), the
// real/imaginary kernels Re K_{alpha+i tau}(x), Im K_{alpha+i tau}(x), and
// the incomplete variants Re J, Im J with finite upper limit.
//
// Three evaluation routes, all for the same defining integral: the ascending
// power series for small x, a rotated integration path u -> u + i*delta for
// large tau (extracts the e^{-tau*delta} decay analytically, keeping the
// residual oscillatory cancellation within long double resolution), and the
// direct real-axis integral otherwise.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "lsk/quadrature.hpp"

namespace lsk {

// Order alpha + i*tau with |alpha| < 1. Discrete usage sets tau = n.
// Negative tau is normalized by parity (Re even, Im odd in tau).
struct KernelOrder {
  double alpha = 0.5;
  double tau = 0.0;
};

struct KernelPoint {
  KernelOrder order;
  double x = 1.0;
};

namespace detail {

inline constexpr double kRotationTau = 3.0;
inline constexpr double kMaxRotationDelta = 1.1;

// Rotation angle for the shifted path. Larger delta extracts more of the
// e^{-tau*delta} decay but inflates the x*sin(delta)*sinh(v) oscillation
// (and with it the panel count); (pi/2 - delta)*tau <= 7.5 keeps the
// remaining cancellation within ~1e-14 of long double resolution.
inline double rotation_delta(double tau) {
  const double need = std::numbers::pi / 2.0 - 7.5 / tau;
  return std::clamp(need, 0.2, kMaxRotationDelta);
}

inline Tolerance tighten(const Tolerance& tol, double abs_floor,
                         double rel_floor, int min_subdiv) {
  return Tolerance{std::min(tol.abs_tol, abs_floor),
                   std::min(tol.rel_tol, rel_floor),
                   std::max(tol.max_subdivisions, min_subdiv)};
}

inline Tolerance kernel_tolerance(const Tolerance& tol) {
  return tighten(tol, 1e-17, 1e-16, 3000);
}

// Smallest u with x*(cosh(u) - 1) - abs_alpha*u >= lambda, plus margin.
inline long double tail_cutoff(long double x, long double abs_alpha,
                               long double lambda) {
  long double u = std::acosh(1.0L + lambda / x);
  for (int i = 0; i < 64; ++i) {
    const long double next = std::acosh(1.0L + (lambda + abs_alpha * u) / x);
    if (next - u <= 1e-6L) {
      u = next;
      break;
    }
    u = next;
  }
  return u + 0.5L;
}

inline void require_point(double alpha, double x) {
  if (!(std::fabs(alpha) < 1.0)) {
    throw DomainError("kernel order requires |alpha| < 1");
  }
  if (!(x > 0.0)) throw DomainError("kernel argument requires x > 0");
}

inline void check_kernel_accuracy(const IntegralEstimate& est,
                                  const Tolerance& caller_tol,
                                  const char* what) {
  const double target = std::max(caller_tol.abs_tol,
                                 caller_tol.rel_tol * std::fabs(est.value));
  if (!est.converged && est.error_estimate > target) {
    throw NonConvergenceError(std::string(what) +
                              ": quadrature failed to reach tolerance");
  }
}

// Rotated-path evaluation of Re/Im K_{alpha+i tau}(x) for tau above the
// threshold. Returns the requested part only.
inline double kernel_rotated(double alpha, double tau, double x,
                             const Tolerance& caller_tol, bool imaginary) {
  const Tolerance tol = kernel_tolerance(caller_tol);
  const long double delta = rotation_delta(tau);
  const long double xc = static_cast<long double>(x) * std::cos(delta);
  const long double xs = static_cast<long double>(x) * std::sin(delta);
  const long double a = alpha;
  const long double t = tau;
  const long double lambda = std::log(10.0L / tol.abs_tol);
  const long double v_max = tail_cutoff(xc, std::fabs(a), lambda);

  auto width = [&](long double v) {
    return std::numbers::pi_v<long double> /
           (2.0L * std::max(1.0L, t + xs * std::cosh(std::fabs(v))));
  };
  const auto breaks = marching_breaks(-v_max, v_max, width);

  auto integrand = [&](long double v) -> long double {
    const long double envelope = 0.5L * std::exp(-xc * std::cosh(v) + a * v);
    const long double phase = t * v - xs * std::sinh(v) + a * delta;
    return envelope * (imaginary ? std::sin(phase) : std::cos(phase));
  };
  IntegralEstimate est = run_adaptive(integrand, breaks, tol);
  const long double scale = std::exp(-t * delta);
  est.value = static_cast<double>(scale * est.value);
  est.error_estimate = static_cast<double>(scale * est.error_estimate);
  check_kernel_accuracy(est, caller_tol, "kernel (rotated path)");
  return est.value;
}

// Direct evaluation over [0, u_max] of
//   e^{-x cosh u} * {cosh|sinh}(alpha u) * {cos|sin}(tau u).
inline double kernel_direct(double alpha, double tau, double x,
                            const Tolerance& caller_tol, bool imaginary,
                            long double upper_limit /* <=0 means full tail */) {
  const Tolerance tol = kernel_tolerance(caller_tol);
  const long double a = alpha;
  const long double t = tau;
  const long double xl = x;
  const long double lambda = std::log(10.0L / tol.abs_tol);
  long double u_max = tail_cutoff(xl, std::fabs(a), lambda);
  if (upper_limit > 0.0L) u_max = std::min(u_max, upper_limit);

  const long double width =
      std::numbers::pi_v<long double> / (4.0L * std::max(1.0L, std::fabs(t)));
  auto integrand = [&](long double u) -> long double {
    const long double envelope = std::exp(-xl * std::cosh(u));
    if (imaginary) return envelope * std::sinh(a * u) * std::sin(t * u);
    return envelope * std::cosh(a * u) * std::cos(t * u);
  };
  IntegralEstimate est =
      run_adaptive(integrand, uniform_breaks(0.0L, u_max, width), tol);
  check_kernel_accuracy(est, caller_tol, "kernel (direct path)");
  return est.value;
}

// ---- Small-argument power series ----------------------------------------
//
// For x < 1 the defining integral is expensive (the integrand decays only
// past u ~ log(1/x)) while the ascending series
//   K_nu(x) = pi/(2 sin(pi nu)) * (I_{-nu}(x) - I_nu(x)),
//   I_nu(x) = (x/2)^nu  sum_k (x^2/4)^k / (k! Gamma(nu+k+1)),
// converges in a dozen terms. Evaluated in complex long double; the only
// exclusion is |nu| near 0, where the two I terms coincide.

inline constexpr double kSeriesMaxX = 4.0;
inline constexpr double kSeriesMinOrder = 0.05;

using CL = std::complex<long double>;

// Gamma(z) for Re z > 0 via Spouge's approximation (a = 26 keeps the
// relative error well below long double resolution for this use).
inline CL complex_gamma(CL z) {
  constexpr int kA = 26;
  static const std::array<long double, kA> coeff = [] {
    std::array<long double, kA> c{};
    c[0] = std::sqrt(2.0L * std::numbers::pi_v<long double>);
    long double sign = 1.0L;
    long double factorial = 1.0L;  // (k-1)!
    for (int k = 1; k < kA; ++k) {
      const long double ak = static_cast<long double>(kA - k);
      c[k] = sign * std::pow(ak, k - 0.5L) * std::exp(ak) / factorial;
      sign = -sign;
      factorial *= static_cast<long double>(k);
    }
    return c;
  }();
  const CL zm = z - 1.0L;
  CL sum(coeff[0], 0.0L);
  for (int k = 1; k < kA; ++k) {
    sum += coeff[k] / (zm + static_cast<long double>(k));
  }
  const CL base = zm + static_cast<long double>(kA);
  return std::pow(base, zm + 0.5L) * std::exp(-base) * sum;
}

// sum_k (x^2/4)^k / (k! Gamma(nu+k+1)), times (x/2)^nu.
inline CL bessel_i_series(CL nu, long double x) {
  CL term = 1.0L / complex_gamma(nu + 1.0L);
  CL sum = term;
  const long double q = 0.25L * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= q / (static_cast<long double>(k) * (nu + static_cast<long double>(k)));
    sum += term;
    if (std::abs(term) < 1e-24L * std::abs(sum)) break;
  }
  return std::exp(nu * std::log(0.5L * x)) * sum;
}

inline bool series_applies(double alpha, double tau, double x) {
  return x < kSeriesMaxX && std::hypot(alpha, tau) >= kSeriesMinOrder;
}

// K_{alpha+i tau}(x) = Re K + i Im K by the ascending series.
inline CL kernel_series(double alpha, double tau, long double x) {
  const CL nu(static_cast<long double>(alpha), static_cast<long double>(tau));
  const long double pi = std::numbers::pi_v<long double>;
  const CL diff = bessel_i_series(-nu, x) - bessel_i_series(nu, x);
  return 0.5L * pi * diff / std::sin(pi * nu);
}

}  // namespace detail

// K_alpha(x) for real |alpha| < 1 via its Laplace-type integral. For
// alpha = +-1/2 shortcuts to the elementary form sqrt(pi/(2x)) e^{-x}.
inline double bessel_k_real(double alpha, double x, const Tolerance& tol = {}) {
  detail::require_point(alpha, x);
  if (std::fabs(alpha) == 0.5) {
    return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
  }
  if (detail::series_applies(alpha, 0.0, x)) {
    return static_cast<double>(
        detail::kernel_series(std::fabs(alpha), 0.0, x).real());
  }
  return detail::kernel_direct(std::fabs(alpha), 0.0, x, tol, false, 0.0);
}

// Re K_{alpha+i tau}(x). Even in tau and in alpha.
inline double re_k(const KernelPoint& point, const Tolerance& tol = {}) {
  detail::require_point(point.order.alpha, point.x);
  const double tau = std::fabs(point.order.tau);
  if (detail::series_applies(point.order.alpha, tau, point.x)) {
    return static_cast<double>(
        detail::kernel_series(point.order.alpha, tau, point.x).real());
  }
  if (tau >= detail::kRotationTau) {
    return detail::kernel_rotated(point.order.alpha, tau, point.x, tol, false);
  }
  return detail::kernel_direct(point.order.alpha, tau, point.x, tol, false,
                               0.0);
}

// Im K_{alpha+i tau}(x). Odd in tau and in alpha.
inline double im_k(const KernelPoint& point, const Tolerance& tol = {}) {
  detail::require_point(point.order.alpha, point.x);
  if (point.order.tau == 0.0 || point.order.alpha == 0.0) return 0.0;
  const double sign = point.order.tau < 0.0 ? -1.0 : 1.0;
  const double tau = std::fabs(point.order.tau);
  if (detail::series_applies(point.order.alpha, tau, point.x)) {
    return sign * static_cast<double>(
                      detail::kernel_series(point.order.alpha, tau, point.x)
                          .imag());
  }
  if (tau >= detail::kRotationTau) {
    return sign *
           detail::kernel_rotated(point.order.alpha, tau, point.x, tol, true);
  }
  return sign * detail::kernel_direct(point.order.alpha, tau, point.x, tol,
                                      true, 0.0);
}

// Re J(x, alpha+i tau, w): the incomplete kernel with finite upper limit w
// (defaults to pi, the value used by the inversion formulas).
inline double re_j_incomplete(
    const KernelPoint& point, const Tolerance& tol = {},
    long double upper_limit = std::numbers::pi_v<long double>) {
  detail::require_point(point.order.alpha, point.x);
  if (!(upper_limit > 0.0L)) {
    throw DomainError("incomplete kernel requires upper limit w > 0");
  }
  const double tau = std::fabs(point.order.tau);
  return detail::kernel_direct(point.order.alpha, tau, point.x, tol, false,
                               upper_limit);
}

inline double im_j_incomplete(
    const KernelPoint& point, const Tolerance& tol = {},
    long double upper_limit = std::numbers::pi_v<long double>) {
  detail::require_point(point.order.alpha, point.x);
  if (!(upper_limit > 0.0L)) {
    throw DomainError("incomplete kernel requires upper limit w > 0");
  }
  if (point.order.tau == 0.0 || point.order.alpha == 0.0) return 0.0;
  const double sign = point.order.tau < 0.0 ? -1.0 : 1.0;
  const double tau = std::fabs(point.order.tau);
  return sign * detail::kernel_direct(point.order.alpha, tau, point.x, tol,
                                      true, upper_limit);
}

// Upper bound e^{-delta*tau} K_alpha(x cos delta) for both |Re K| and |Im K|,
// valid for delta in [0, pi/2).
inline double kernel_bound(const KernelPoint& point, double delta,
                           const Tolerance& tol = {}) {
  detail::require_point(point.order.alpha, point.x);
  if (!(delta >= 0.0 && delta < std::numbers::pi / 2.0)) {
    throw DomainError("kernel_bound requires delta in [0, pi/2)");
  }
  const double tau = std::fabs(point.order.tau);
  return std::exp(-delta * tau) *
         bessel_k_real(point.order.alpha, point.x * std::cos(delta), tol);
}

}  // namespace lsk
