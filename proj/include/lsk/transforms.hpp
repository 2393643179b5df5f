#pragma once

// Discrete forward transforms over the kernels Re/Im K_{alpha+in}(x), their
// inversions through the incomplete kernels (and the reciprocal pipeline),
// the Lipschitz-profile representation with its series reconstruction, and
// the desk-scale continuous transform pair.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lsk/kernels.hpp"
#include "lsk/quadrature.hpp"

namespace lsk {

// Witness for sum |a_n| e^{-delta n} < infinity. Finite sequences satisfy
// it trivially; delta is kept for diagnostics.
struct DecayCertificate {
  double delta = 0.0;  // in [0, pi/2)
  double bound = 1.0;
};

struct CoefficientSequence {
  std::vector<double> values;  // a_0 .. a_N
  DecayCertificate decay{};
};

// A function of x > 0 with declared behavior at both ends: a power
// singularity x^{-singularity_exponent} near zero (exponent < 1) and an
// exponential decay rate at infinity. The declarations drive the split
// x-integral rules.
struct FunctionEvaluator {
  std::function<double(double)> evaluate;
  double singularity_exponent = 0.0;
  double decay_rate = 1.0;
};

enum class ProfileFlavor { cosh_half, sinh_half };

// 2*pi-periodic Lipschitz profile psi; the represented function integrates
// psi(u) * cosh(u/2) or psi(u) * sinh(u/2) against e^{-x cosh u} over
// [-pi, pi].
struct PeriodicProfile {
  std::function<double(double)> psi;
  double lipschitz_constant = 1.0;
  ProfileFlavor flavor = ProfileFlavor::cosh_half;
};

struct CoefficientEntry {
  int index = 0;
  double value = 0.0;
  double error_estimate = 0.0;
  double amplification = 1.0;  // cosh(pi*n) factor applied
  bool precision_warning = false;
};

struct TransformReport {
  std::vector<CoefficientEntry> entries;
  std::vector<std::string> warnings;
};

// Double precision supports coefficient recovery up to about n = 12;
// cosh(12*pi) ~ 1.2e16 reaches the resolution boundary. Overridable via the
// LS_MAX_N environment variable. Requests beyond produce warnings, not
// errors.
inline int max_coefficient_index() {
  if (const char* env = std::getenv("LS_MAX_N")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

namespace detail {

inline constexpr double kCoefficientTarget = 1e-6;

inline double cosh_pi_n(int n) { return std::cosh(std::numbers::pi * n); }

inline void validate_sequence(const CoefficientSequence& seq) {
  if (!(seq.decay.delta >= 0.0 && seq.decay.delta < std::numbers::pi / 2.0)) {
    throw DomainError("decay certificate requires delta in [0, pi/2)");
  }
}

inline void note_precision(int n, const Tolerance& tol, CoefficientEntry& entry,
                           TransformReport* report) {
  const double amp = cosh_pi_n(n);
  entry.amplification = amp;
  if (amp * tol.abs_tol > kCoefficientTarget) {
    entry.precision_warning = true;
    if (report) {
      report->warnings.push_back(
          "n=" + std::to_string(n) + ": cosh(pi n) ~ " + std::to_string(amp) +
          " amplifies the quadrature tolerance beyond the coefficient target");
    }
  }
  if (n > max_coefficient_index()) {
    entry.precision_warning = true;
    if (report) {
      report->warnings.push_back(
          "n=" + std::to_string(n) +
          " exceeds the double-precision index ceiling N_max=" +
          std::to_string(max_coefficient_index()));
    }
  }
}

// Shared x-integral for (kernel * f) pairings. kernel is evaluated in long
// double internally and bridged here; combined decay is 1 (kernel) plus the
// declared rate of f.
template <class Kernel>
IntegralEstimate pair_integral(Kernel&& kernel, const FunctionEvaluator& f,
                               double kernel_singularity, double target_abs,
                               const Tolerance& tol, double osc_freq = 0.0) {
  const double gamma_sub =
      std::max(kernel_singularity + f.singularity_exponent, 0.3);
  if (gamma_sub >= 1.0) {
    throw DomainError("combined x-singularity exponent must be < 1");
  }
  Tolerance eff = tighten(tol, std::max(target_abs, 1e-18), 1e-13, 4000);
  auto g = [&](long double x) -> long double {
    const double xd = static_cast<double>(x);
    return static_cast<long double>(kernel(xd)) *
           static_cast<long double>(f.evaluate(xd));
  };
  IntegralEstimate est =
      integrate_zero_inf_split(g, gamma_sub, 1.0 + f.decay_rate, eff,
                               osc_freq);
  if (est.error_estimate > std::max(tol.abs_tol,
                                    tol.rel_tol * std::fabs(est.value))) {
    throw NonConvergenceError(
        "transform x-integral failed to reach the requested tolerance");
  }
  return est;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Forward series transforms
// ---------------------------------------------------------------------------

// f(x) = sum a_n Re K_{alpha+in}(x).
inline double forward_re(const CoefficientSequence& seq, double alpha,
                         double x, const Tolerance& tol = {}) {
  detail::validate_sequence(seq);
  double sum = 0.0;
  for (std::size_t n = 0; n < seq.values.size(); ++n) {
    if (seq.values[n] == 0.0) continue;
    sum += seq.values[n] *
           re_k(KernelPoint{{alpha, static_cast<double>(n)}, x}, tol);
  }
  return sum;
}

// f(x) = sum a_n Im K_{alpha+in}(x); the n = 0 term vanishes identically.
inline double forward_im(const CoefficientSequence& seq, double alpha,
                         double x, const Tolerance& tol = {}) {
  detail::validate_sequence(seq);
  double sum = 0.0;
  for (std::size_t n = 1; n < seq.values.size(); ++n) {
    if (seq.values[n] == 0.0) continue;
    sum += seq.values[n] *
           im_k(KernelPoint{{alpha, static_cast<double>(n)}, x}, tol);
  }
  return sum;
}

// f(x) = sum a_n Re J(x, 1/2+in, pi).
inline double forward_incomplete_re(const CoefficientSequence& seq, double x,
                                    const Tolerance& tol = {}) {
  detail::validate_sequence(seq);
  double sum = 0.0;
  for (std::size_t n = 0; n < seq.values.size(); ++n) {
    if (seq.values[n] == 0.0) continue;
    sum += seq.values[n] *
           re_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  }
  return sum;
}

inline double forward_incomplete_im(const CoefficientSequence& seq, double x,
                                    const Tolerance& tol = {}) {
  detail::validate_sequence(seq);
  double sum = 0.0;
  for (std::size_t n = 1; n < seq.values.size(); ++n) {
    if (seq.values[n] == 0.0) continue;
    sum += seq.values[n] *
           im_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Coefficient transforms (complete kernels, no cosh weight)
// ---------------------------------------------------------------------------

// a_n = (4/pi^2) int_0^inf Re K_{alpha+in}(x) f(x) dx.
inline double coeff_re(const FunctionEvaluator& f, double alpha, int n,
                       const Tolerance& tol = {}) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  auto kernel = [&](double x) {
    return re_k(KernelPoint{{alpha, static_cast<double>(n)}, x}, tol);
  };
  // Coefficients feed cosh(pi n)-weighted reconstructions, so the integral
  // target scales down with that amplification.
  const double target =
      detail::kCoefficientTarget / (10.0 * detail::cosh_pi_n(n));
  IntegralEstimate est = detail::pair_integral(
      kernel, f, std::fabs(alpha), target, tol, static_cast<double>(n));
  return 4.0 / (std::numbers::pi * std::numbers::pi) * est.value;
}

inline double coeff_im(const FunctionEvaluator& f, double alpha, int n,
                       const Tolerance& tol = {}) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  if (alpha == 0.0 || n == 0) return 0.0;
  auto kernel = [&](double x) {
    return im_k(KernelPoint{{alpha, static_cast<double>(n)}, x}, tol);
  };
  const double target =
      detail::kCoefficientTarget / (10.0 * detail::cosh_pi_n(n));
  IntegralEstimate est = detail::pair_integral(
      kernel, f, std::fabs(alpha), target, tol, static_cast<double>(n));
  return 4.0 / (std::numbers::pi * std::numbers::pi) * est.value;
}

// ---------------------------------------------------------------------------
// Inversions with the incomplete kernels (series -> coefficients)
// ---------------------------------------------------------------------------

namespace detail {

template <class Kernel>
double weighted_inversion(Kernel&& kernel, const FunctionEvaluator& f, int n,
                          double kernel_singularity, const Tolerance& tol,
                          TransformReport* report) {
  const double four_over_pi2 = 4.0 / (std::numbers::pi * std::numbers::pi);
  double amp = four_over_pi2 * cosh_pi_n(n);
  if (n == 0) amp *= 0.5;  // constant-mode halving, see README

  const double target_abs = kCoefficientTarget / (10.0 * std::max(amp, 1.0));
  IntegralEstimate est = pair_integral(kernel, f, kernel_singularity,
                                       target_abs, tol,
                                       static_cast<double>(n));

  CoefficientEntry entry;
  entry.index = n;
  entry.value = amp * est.value;
  entry.error_estimate = amp * est.error_estimate;
  note_precision(n, tol, entry, report);
  if (report) report->entries.push_back(entry);
  return entry.value;
}

}  // namespace detail

// a_n = (4/pi^2) cosh(pi n) int_0^inf Re J(x, 1/2+in, pi) f(x) dx,
// halved at n = 0 so recovered coefficients equal inputs uniformly.
inline double invert_re(const FunctionEvaluator& f, int n,
                        const Tolerance& tol = {},
                        TransformReport* report = nullptr) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  auto kernel = [&](double x) {
    return re_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  };
  return detail::weighted_inversion(kernel, f, n, 0.0, tol, report);
}

// Im companion; n = 0 is excluded by the a_0 = 0 convention of the Im series.
inline double invert_im(const FunctionEvaluator& f, int n,
                        const Tolerance& tol = {},
                        TransformReport* report = nullptr) {
  if (n < 1) {
    throw DomainError(
        "invert_im requires n >= 1: the Im series fixes a_0 = 0");
  }
  auto kernel = [&](double x) {
    return im_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  };
  return detail::weighted_inversion(kernel, f, n, 0.0, tol, report);
}

// Inversion of the incomplete-kernel series: pairs with the complete kernel.
inline double invert_incomplete_re(const FunctionEvaluator& f, int n,
                                   const Tolerance& tol = {},
                                   TransformReport* report = nullptr) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  auto kernel = [&](double x) {
    return re_k(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  };
  return detail::weighted_inversion(kernel, f, n, 0.5, tol, report);
}

inline double invert_incomplete_im(const FunctionEvaluator& f, int n,
                                   const Tolerance& tol = {},
                                   TransformReport* report = nullptr) {
  if (n < 1) {
    throw DomainError(
        "invert_incomplete_im requires n >= 1: the Im series fixes a_0 = 0");
  }
  auto kernel = [&](double x) {
    return im_k(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  };
  return detail::weighted_inversion(kernel, f, n, 0.5, tol, report);
}

// ---------------------------------------------------------------------------
// Profile representation and reconstruction
// ---------------------------------------------------------------------------

namespace detail {

inline void validate_profile(const PeriodicProfile& profile) {
  if (!(profile.lipschitz_constant > 0)) {
    throw DomainError("profile requires a positive Lipschitz constant");
  }
  const double seam =
      std::fabs(profile.psi(-std::numbers::pi) - profile.psi(std::numbers::pi));
  if (seam > 1e-9) {
    throw DomainError("profile is not 2*pi-periodic at the seam u = +-pi");
  }
  // Spot-check the Lipschitz bound on a coarse grid.
  const int grid = 17;
  for (int i = 0; i + 1 < grid; ++i) {
    const double u = -std::numbers::pi + 2.0 * std::numbers::pi * i / (grid - 1);
    const double v = u + 2.0 * std::numbers::pi / (grid - 1);
    if (std::fabs(profile.psi(u) - profile.psi(v)) >
        profile.lipschitz_constant * std::fabs(u - v) + 1e-12) {
      throw DomainError("profile violates its declared Lipschitz bound");
    }
  }
}

}  // namespace detail

// f(x) = int_{-pi}^{pi} e^{-x cosh u} psi(u) * {cosh|sinh}(u/2) du.
inline double represent_from_profile(const PeriodicProfile& profile, double x,
                                     const Tolerance& tol = {}) {
  if (!(x > 0)) throw DomainError("represent_from_profile requires x > 0");
  detail::validate_profile(profile);
  const bool even_factor = profile.flavor == ProfileFlavor::cosh_half;
  auto integrand = [&](long double u) -> long double {
    const long double factor =
        even_factor ? std::cosh(u / 2.0L) : std::sinh(u / 2.0L);
    return std::exp(-static_cast<long double>(x) * std::cosh(u)) * factor *
           static_cast<long double>(profile.psi(static_cast<double>(u)));
  };
  Tolerance eff = detail::tighten(tol, 1e-16, 1e-15, 3000);
  IntegralEstimate est = detail::run_adaptive(
      integrand,
      detail::uniform_breaks(-std::numbers::pi_v<long double>,
                             std::numbers::pi_v<long double>,
                             std::numbers::pi_v<long double> / 8.0L),
      eff);
  return est.value;
}

// Partial sum (a_0/2) Re J(x, 1/2, pi) + sum_{n=1}^{N} cosh(pi n)
// Re J(x, 1/2+in, pi) a_n.
inline double reconstruct_re(const CoefficientSequence& coeffs, double x,
                             int partial_sum_order, const Tolerance& tol = {},
                             TransformReport* report = nullptr) {
  detail::validate_sequence(coeffs);
  if (partial_sum_order < 0) throw DomainError("partial-sum order must be >= 0");
  double sum = 0.0;
  const int top = std::min<int>(partial_sum_order,
                                static_cast<int>(coeffs.values.size()) - 1);
  for (int n = 0; n <= top; ++n) {
    const double a = coeffs.values[n];
    if (a == 0.0) continue;
    const double j =
        re_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
    const double weight = n == 0 ? 0.5 : detail::cosh_pi_n(n);
    sum += weight * j * a;
    if (report) {
      CoefficientEntry entry;
      entry.index = n;
      entry.value = weight * j * a;
      detail::note_precision(n, tol, entry, report);
      report->entries.push_back(entry);
    }
  }
  return sum;
}

// Im companion: sum_{n=1}^{N} cosh(pi n) Im J(x, 1/2+in, pi) a_n.
inline double reconstruct_im(const CoefficientSequence& coeffs, double x,
                             int partial_sum_order, const Tolerance& tol = {},
                             TransformReport* report = nullptr) {
  detail::validate_sequence(coeffs);
  if (partial_sum_order < 0) throw DomainError("partial-sum order must be >= 0");
  double sum = 0.0;
  const int top = std::min<int>(partial_sum_order,
                                static_cast<int>(coeffs.values.size()) - 1);
  for (int n = 1; n <= top; ++n) {
    const double a = coeffs.values[n];
    if (a == 0.0) continue;
    const double j =
        im_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
    sum += detail::cosh_pi_n(n) * j * a;
    if (report) {
      CoefficientEntry entry;
      entry.index = n;
      entry.value = detail::cosh_pi_n(n) * j * a;
      detail::note_precision(n, tol, entry, report);
      report->entries.push_back(entry);
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Reciprocal pipeline (incomplete-kernel coefficients of a complete series)
// ---------------------------------------------------------------------------

namespace detail {

inline void require_half_alpha(double alpha, const char* what) {
  if (alpha != 0.5) {
    throw DomainError(std::string(what) +
                      " is implemented for alpha = 1/2 only: the inversion "
                      "rests on the trigonometric orthogonality available at "
                      "that order");
  }
}

}  // namespace detail

// a_n = (4/pi^2) int_0^inf Re J(x, 1/2+in, pi) f(x) dx with
// f = forward_re(b, 1/2, .); n = 0 halved as in invert_re.
inline double theorem5_forward_re(const CoefficientSequence& b, int n,
                                  const Tolerance& tol = {},
                                  double alpha = 0.5,
                                  TransformReport* report = nullptr) {
  detail::require_half_alpha(alpha, "theorem5_forward_re");
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  FunctionEvaluator f{
      [&b, &tol](double x) { return forward_re(b, 0.5, x, tol); }, 0.5, 1.0};
  auto kernel = [&](double x) {
    return re_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  };
  const double four_over_pi2 = 4.0 / (std::numbers::pi * std::numbers::pi);
  const double amp = n == 0 ? 0.5 * four_over_pi2 : four_over_pi2;
  const double target =
      detail::kCoefficientTarget / (10.0 * detail::cosh_pi_n(n));
  IntegralEstimate est = detail::pair_integral(kernel, f, 0.0, target, tol,
                                               static_cast<double>(n));
  CoefficientEntry entry;
  entry.index = n;
  entry.value = amp * est.value;
  entry.error_estimate = amp * est.error_estimate;
  detail::note_precision(n, tol, entry, report);
  if (report) report->entries.push_back(entry);
  return entry.value;
}

// Im variant with f = forward_im(c, 1/2, .); n >= 1.
inline double theorem5_forward_im(const CoefficientSequence& c, int n,
                                  const Tolerance& tol = {},
                                  double alpha = 0.5,
                                  TransformReport* report = nullptr) {
  detail::require_half_alpha(alpha, "theorem5_forward_im");
  if (n < 1) {
    throw DomainError("theorem5_forward_im requires n >= 1 (a_0 = 0)");
  }
  FunctionEvaluator f{
      [&c, &tol](double x) { return forward_im(c, 0.5, x, tol); }, 0.5, 1.0};
  auto kernel = [&](double x) {
    return im_j_incomplete(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  };
  const double four_over_pi2 = 4.0 / (std::numbers::pi * std::numbers::pi);
  const double target =
      detail::kCoefficientTarget / (10.0 * detail::cosh_pi_n(n));
  IntegralEstimate est = detail::pair_integral(kernel, f, 0.0, target, tol,
                                               static_cast<double>(n));
  CoefficientEntry entry;
  entry.index = n;
  entry.value = four_over_pi2 * est.value;
  entry.error_estimate = four_over_pi2 * est.error_estimate;
  detail::note_precision(n, tol, entry, report);
  if (report) report->entries.push_back(entry);
  return entry.value;
}

// f(x) = sum a_n cosh(pi n) Re K_{1/2+in}(x).
inline double theorem5_reconstruct_re(const CoefficientSequence& a, double x,
                                      const Tolerance& tol = {},
                                      double alpha = 0.5) {
  detail::require_half_alpha(alpha, "theorem5_reconstruct_re");
  detail::validate_sequence(a);
  double sum = 0.0;
  for (std::size_t n = 0; n < a.values.size(); ++n) {
    if (a.values[n] == 0.0) continue;
    sum += a.values[n] * detail::cosh_pi_n(static_cast<int>(n)) *
           re_k(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  }
  return sum;
}

inline double theorem5_reconstruct_im(const CoefficientSequence& a, double x,
                                      const Tolerance& tol = {},
                                      double alpha = 0.5) {
  detail::require_half_alpha(alpha, "theorem5_reconstruct_im");
  detail::validate_sequence(a);
  double sum = 0.0;
  for (std::size_t n = 1; n < a.values.size(); ++n) {
    if (a.values[n] == 0.0) continue;
    sum += a.values[n] * detail::cosh_pi_n(static_cast<int>(n)) *
           im_k(KernelPoint{{0.5, static_cast<double>(n)}, x}, tol);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Continuous transform pair (desk scale)
// ---------------------------------------------------------------------------

// F(tau) = int_0^inf Re K_{1/2+i tau}(x) f(x) dx.
inline double ls_forward_re(const FunctionEvaluator& f, double tau,
                            const Tolerance& tol = {}) {
  auto kernel = [&](double x) {
    return re_k(KernelPoint{{0.5, tau}, x}, tol);
  };
  const double target = detail::kCoefficientTarget /
                        (10.0 * std::cosh(std::numbers::pi * tau));
  IntegralEstimate est =
      detail::pair_integral(kernel, f, 0.5, target, tol, tau);
  return est.value;
}

inline double ls_forward_im(const FunctionEvaluator& f, double tau,
                            const Tolerance& tol = {}) {
  if (tau == 0.0) return 0.0;
  auto kernel = [&](double x) {
    return im_k(KernelPoint{{0.5, tau}, x}, tol);
  };
  const double target = detail::kCoefficientTarget /
                        (10.0 * std::cosh(std::numbers::pi * tau));
  IntegralEstimate est =
      detail::pair_integral(kernel, f, 0.5, target, tol, tau);
  return est.value;
}

struct ContinuousInverseResult {
  double value = 0.0;
  double tail_bound = 0.0;  // from the caller's decay statement
  IntegralEstimate estimate{};
};

namespace detail {

template <class Kernel>
ContinuousInverseResult ls_inverse_impl(Kernel&& kernel,
                                        const std::function<double(double)>& F,
                                        double x, double tau_max,
                                        const std::optional<DecayHint>& decay,
                                        const Tolerance& tol) {
  if (!(x > 0)) throw DomainError("continuous inversion requires x > 0");
  if (!(tau_max > 0)) throw DomainError("tau_max must be > 0");
  if (!decay.has_value() || !(decay->rate > 0)) {
    throw DomainError(
        "continuous inversion refused: the cosh(pi tau)-weighted integrand "
        "needs a positive decay statement to certify the truncation at "
        "tau_max");
  }
  const double four_over_pi2 = 4.0 / (std::numbers::pi * std::numbers::pi);
  auto integrand = [&](long double tau) -> long double {
    const double t = static_cast<double>(tau);
    return std::cosh(std::numbers::pi_v<long double> * tau) *
           static_cast<long double>(kernel(t)) *
           static_cast<long double>(F(t));
  };
  // Kernel oscillation in tau has slowly varying log-frequency; quarter
  // oscillation panels sized from ln(2(tau+1)/x).
  auto width = [&](long double tau) {
    const long double freq = std::max(
        1.0L, std::log(2.0L * (tau + 1.0L) / static_cast<long double>(x)));
    return std::numbers::pi_v<long double> / (4.0L * freq);
  };
  Tolerance eff = tighten(tol, 1e-12, 1e-12, 4000);
  IntegralEstimate est = run_adaptive(
      integrand,
      marching_breaks(0.0L, static_cast<long double>(tau_max), width), eff);
  if (!est.converged) {
    throw NonConvergenceError("continuous inversion integral did not converge");
  }
  ContinuousInverseResult out;
  out.estimate = est;
  out.value = four_over_pi2 * est.value;
  out.tail_bound = four_over_pi2 *
                   std::exp(-decay->rate * tau_max) / decay->rate;
  return out;
}

}  // namespace detail

// f(x) = (4/pi^2) int_0^{tau_max} cosh(pi tau) Re K_{1/2+i tau}(x) F(tau)
// dtau. The decay statement describes the full weighted integrand
// cosh(pi tau) * kernel * F = O(e^{-rate*tau}); the reported tail bound
// comes from it.
inline ContinuousInverseResult ls_inverse_re(
    const std::function<double(double)>& F, double x, double tau_max,
    const std::optional<DecayHint>& decay, const Tolerance& tol = {}) {
  auto kernel = [&](double tau) {
    return re_k(KernelPoint{{0.5, tau}, x}, tol);
  };
  return detail::ls_inverse_impl(kernel, F, x, tau_max, decay, tol);
}

inline ContinuousInverseResult ls_inverse_im(
    const std::function<double(double)>& F, double x, double tau_max,
    const std::optional<DecayHint>& decay, const Tolerance& tol = {}) {
  auto kernel = [&](double tau) {
    return im_k(KernelPoint{{0.5, tau}, x}, tol);
  };
  return detail::ls_inverse_impl(kernel, F, x, tau_max, decay, tol);
}

}  // namespace lsk
