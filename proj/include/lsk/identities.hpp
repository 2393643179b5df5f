#pragma once

// Closed-form right-hand sides of the Laplace compositions
//   int_0^inf e^{-x cosh u} K_{alpha+i tau}(x) dx            (complex form)
// and its real/imaginary specializations at integer index n, together with
// a residual checker that pits quadrature against the closed forms. These
// are the analytic oracles for everything downstream.

#include <complex>
#include <cmath>
#include <numbers>

#include "lsk/kernels.hpp"
#include "lsk/quadrature.hpp"

namespace lsk {

class SingularIdentityError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class IdentityKind { eq113, eq114, eq115 };

struct IdentityResidual {
  std::complex<double> lhs{0.0, 0.0};  // quadrature value
  std::complex<double> rhs{0.0, 0.0};  // closed form
  double residual = 0.0;
  double rel_residual = 0.0;
  long evaluations = 0;
};

// pi * sinh(nu*u) / (sinh(u) * sin(nu*pi)) with nu = alpha + i*tau.
// At u = 0 the analytic limit pi*nu/sin(nu*pi); the doubly degenerate
// point nu = 0 has the further limit u/sinh(u) (= 1 at u = 0).
inline std::complex<double> laplace_k_closed(double alpha, double tau,
                                             double u) {
  if (!(std::fabs(alpha) < 1.0)) {
    throw DomainError("laplace_k_closed requires |alpha| < 1");
  }
  const std::complex<double> nu(alpha, tau);
  if (alpha == 0.0 && tau == 0.0) {
    return {u == 0.0 ? 1.0 : u / std::sinh(u), 0.0};
  }
  const std::complex<double> denom = std::sin(nu * std::numbers::pi);
  if (u == 0.0) return std::numbers::pi * nu / denom;
  return std::numbers::pi * std::sinh(nu * u) / (std::sinh(u) * denom);
}

namespace detail {

inline double identity_denominator(double alpha, int n) {
  if (!(std::fabs(alpha) < 1.0)) {
    throw DomainError("closed-form identity requires |alpha| < 1");
  }
  if (n < 0) throw DomainError("closed-form identity requires n >= 0");
  const double sh = std::sinh(std::numbers::pi * n);
  const double sn = std::sin(std::numbers::pi * alpha);
  const double denom = sh * sh + sn * sn;
  if (denom == 0.0) {
    throw SingularIdentityError(
        "identity denominator vanishes at alpha = 0, n = 0");
  }
  return denom;
}

}  // namespace detail

// Closed form of int_0^inf e^{-x cosh u} Re K_{alpha+in}(x) dx.
inline double laplace_re_k_closed(double alpha, int n, double u) {
  const double denom = detail::identity_denominator(alpha, n);
  const double sa = std::sin(std::numbers::pi * alpha);
  const double ca = std::cos(std::numbers::pi * alpha);
  const double chn = std::cosh(std::numbers::pi * n);
  const double shn = std::sinh(std::numbers::pi * n);
  if (u == 0.0) {
    return std::numbers::pi * (alpha * sa * chn + n * ca * shn) / denom;
  }
  const double numer = std::sinh(alpha * u) * sa * chn * std::cos(n * u) +
                       std::cosh(alpha * u) * ca * shn * std::sin(n * u);
  return std::numbers::pi * numer / (std::sinh(u) * denom);
}

// Closed form of int_0^inf e^{-x cosh u} Im K_{alpha+in}(x) dx.
inline double laplace_im_k_closed(double alpha, int n, double u) {
  const double denom = detail::identity_denominator(alpha, n);
  const double sa = std::sin(std::numbers::pi * alpha);
  const double ca = std::cos(std::numbers::pi * alpha);
  const double chn = std::cosh(std::numbers::pi * n);
  const double shn = std::sinh(std::numbers::pi * n);
  if (u == 0.0) {
    return std::numbers::pi * (n * sa * chn - alpha * ca * shn) / denom;
  }
  const double numer = std::cosh(alpha * u) * sa * chn * std::sin(n * u) -
                       std::sinh(alpha * u) * ca * shn * std::cos(n * u);
  return std::numbers::pi * numer / (std::sinh(u) * denom);
}

namespace detail {

// int_0^inf e^{-x cosh u} kernel(x) dx by quadrature, where kernel behaves
// like x^{-|alpha|} near zero and is bounded by K_alpha(x) at infinity.
template <class Kernel>
IntegralEstimate laplace_of_kernel(Kernel&& kernel, double alpha, double tau,
                                   double u, const Tolerance& tol) {
  const double gamma_sub = std::max(std::fabs(alpha), 0.3);
  const double rate = std::cosh(u) + 0.6;
  const long double cu = std::cosh(static_cast<long double>(u));
  auto g = [&](long double x) -> long double {
    return std::exp(-x * cu) *
           static_cast<long double>(kernel(static_cast<double>(x)));
  };
  Tolerance eff = tighten(tol, 1e-11, 1e-11, 3000);
  return integrate_zero_inf_split(g, gamma_sub, rate, eff, std::fabs(tau));
}

}  // namespace detail

// Evaluates one of the three Laplace-composition identities by quadrature
// (left side) and closed form (right side); returns the residual record.
// For eq114/eq115 the index is floor(tau); eq113 accepts continuous tau.
inline IdentityResidual check_identity(IdentityKind which, double alpha,
                                       double tau, double u,
                                       const Tolerance& tol = {}) {
  IdentityResidual out;
  const Tolerance kernel_tol = tol;

  if (which == IdentityKind::eq113) {
    out.rhs = laplace_k_closed(alpha, tau, u);
    IntegralEstimate real_part = detail::laplace_of_kernel(
        [&](double x) {
          return re_k(KernelPoint{{alpha, tau}, x}, kernel_tol);
        },
        alpha, tau, u, tol);
    IntegralEstimate imag_part = detail::laplace_of_kernel(
        [&](double x) {
          return im_k(KernelPoint{{alpha, tau}, x}, kernel_tol);
        },
        alpha, tau, u, tol);
    if (!real_part.converged || !imag_part.converged) {
      throw NonConvergenceError("check_identity(eq113): x-integral did not "
                                "converge");
    }
    out.lhs = {real_part.value, imag_part.value};
    out.evaluations = real_part.evaluations + imag_part.evaluations;
  } else {
    const int n = static_cast<int>(tau);
    const bool re_flavor = which == IdentityKind::eq114;
    out.rhs = re_flavor ? laplace_re_k_closed(alpha, n, u)
                        : laplace_im_k_closed(alpha, n, u);
    IntegralEstimate est = detail::laplace_of_kernel(
        [&](double x) {
          const KernelPoint p{{alpha, static_cast<double>(n)}, x};
          return re_flavor ? re_k(p, kernel_tol) : im_k(p, kernel_tol);
        },
        alpha, static_cast<double>(n), u, tol);
    if (!est.converged) {
      throw NonConvergenceError("check_identity: x-integral did not converge");
    }
    out.lhs = est.value;
    out.evaluations = est.evaluations;
  }

  out.residual = std::abs(out.lhs - out.rhs);
  out.rel_residual = out.residual / std::max(std::abs(out.rhs), 1e-300);
  return out;
}

}  // namespace lsk
