#pragma once

// Adaptive Gauss-Kronrod quadrature on long double panels.
// Serves every kernel and transform evaluation in the library; the public
// surface speaks double, panel sums are accumulated in long double so that
// downstream cosh(pi*n) amplification does not eat the whole budget.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsk {

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

struct IntegralEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Asymptotic exponential decay rate of a semi-infinite integrand:
// integrand = O(e^{-rate*u}) as u -> infinity.
struct DecayHint {
  double rate = 1.0;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Integrand returned a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double node)
      : std::runtime_error(what), node_(node) {}
  double node() const { return node_; }

 private:
  double node_;
};

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss-Legendre.
// abscissa[0] is the midpoint; even indices are the embedded Gauss nodes.
inline constexpr long double kGk15Abscissa[8] = {
    0.00000000000000000000000000000000000e+00L,
    2.07784955007898467600689403773244913e-01L,
    4.05845151377397166906606412076961463e-01L,
    5.86087235467691130294144838258729598e-01L,
    7.41531185599394439863864773280788407e-01L,
    8.64864423359769072789712788640926201e-01L,
    9.49107912342758524526189684047851262e-01L,
    9.91455371120812639206854697526328517e-01L,
};

inline constexpr long double kGk15Weight[8] = {
    2.09482141084727828012999174891714264e-01L,
    2.04432940075298892414161999234649085e-01L,
    1.90350578064785409913256402421013683e-01L,
    1.69004726639267902826583426598550284e-01L,
    1.40653259715525918745189590510237920e-01L,
    1.04790010322250183839876322541518017e-01L,
    6.30920926299785532907006631892042867e-02L,
    2.29353220105292249637320080589695920e-02L,
};

inline constexpr long double kGauss7Weight[4] = {
    4.17959183673469387755102040816326531e-01L,
    3.81830050505118944950369775488975134e-01L,
    2.79705391489276667901467771423779582e-01L,
    1.29484966168869693270611432679082018e-01L,
};

inline constexpr long double kEps = std::numeric_limits<long double>::epsilon();

struct Panel {
  long double a = 0, b = 0;
  long double value = 0;
  long double err = 0;
  long double resabs = 0;
  bool refinable = true;

  bool operator<(const Panel& other) const { return err < other.err; }
};

inline void check_finite(long double v, long double node) {
  if (!std::isfinite(v)) {
    throw EvaluationError(
        "non-finite integrand value at quadrature node u=" +
            std::to_string(static_cast<double>(node)),
        static_cast<double>(node));
  }
}

template <class F>
Panel evaluate_panel(F& f, long double a, long double b, long& evals) {
  const long double center = 0.5L * (a + b);
  const long double half = 0.5L * (b - a);

  long double fv_lo[8];
  long double fv_hi[8];
  const long double fc = f(center);
  check_finite(fc, center);
  fv_lo[0] = fc;
  fv_hi[0] = fc;

  long double resk = kGk15Weight[0] * fc;
  long double resg = kGauss7Weight[0] * fc;
  long double resabs = kGk15Weight[0] * std::fabs(fc);
  for (int i = 1; i < 8; ++i) {
    const long double dx = half * kGk15Abscissa[i];
    const long double f1 = f(center - dx);
    check_finite(f1, center - dx);
    const long double f2 = f(center + dx);
    check_finite(f2, center + dx);
    fv_lo[i] = f1;
    fv_hi[i] = f2;
    resk += kGk15Weight[i] * (f1 + f2);
    resabs += kGk15Weight[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 0) resg += kGauss7Weight[i / 2] * (f1 + f2);
  }
  evals += 15;

  const long double mean = 0.5L * resk;
  long double resasc = kGk15Weight[0] * std::fabs(fc - mean);
  for (int i = 1; i < 8; ++i) {
    resasc += kGk15Weight[i] *
              (std::fabs(fv_lo[i] - mean) + std::fabs(fv_hi[i] - mean));
  }
  resasc *= half;

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * half;
  p.resabs = resabs * half;

  // QUADPACK-style scaled error indicator; conservative for smooth panels.
  long double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0L && err != 0.0L) {
    err = resasc * std::min(1.0L, std::pow(200.0L * err / resasc, 1.5L));
  }
  const long double floor = 50.0L * kEps * p.resabs;
  err = std::max(err, floor);

  const long double tiny_width =
      100.0L * kEps * std::max(std::fabs(a), std::fabs(b));
  if (err <= floor || (b - a) <= tiny_width) p.refinable = false;
  p.err = err;
  return p;
}

// Global adaptive bisection over an initial panel list. Stops when the
// summed error indicator meets max(abs_tol, rel_tol*|value|), when every
// panel sits at its roundoff floor, or when the subdivision budget runs out.
template <class F>
IntegralEstimate run_adaptive(F&& f, const std::vector<long double>& breaks,
                              const Tolerance& tol) {
  if (tol.abs_tol <= 0 || tol.rel_tol <= 0 || tol.max_subdivisions < 1) {
    throw DomainError("invalid tolerance: abs_tol and rel_tol must be > 0, "
                      "max_subdivisions >= 1");
  }

  long evals = 0;
  std::priority_queue<Panel> active;
  long double done_value = 0, done_err = 0;
  long double total_value = 0, total_err = 0;

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Panel p = evaluate_panel(f, breaks[i], breaks[i + 1], evals);
    total_value += p.value;
    total_err += p.err;
    if (p.refinable) {
      active.push(p);
    } else {
      done_value += p.value;
      done_err += p.err;
    }
  }

  int splits = 0;
  bool converged = false;
  while (true) {
    const long double target =
        std::max(static_cast<long double>(tol.abs_tol),
                 static_cast<long double>(tol.rel_tol) * std::fabs(total_value));
    if (total_err <= target) {
      converged = true;
      break;
    }
    if (active.empty() || splits >= tol.max_subdivisions) break;

    Panel worst = active.top();
    active.pop();
    const long double mid = 0.5L * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid, evals);
    Panel right = evaluate_panel(f, mid, worst.b, evals);
    ++splits;

    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    for (const Panel& child : {left, right}) {
      if (child.refinable) {
        active.push(child);
      } else {
        done_value += child.value;
        done_err += child.err;
      }
    }
  }

  IntegralEstimate est;
  est.value = static_cast<double>(total_value);
  est.error_estimate = static_cast<double>(total_err);
  est.evaluations = evals;
  est.converged = converged;
  return est;
}

inline std::vector<long double> uniform_breaks(long double a, long double b,
                                               long double max_width) {
  std::vector<long double> breaks;
  if (max_width <= 0 || max_width >= b - a) {
    breaks = {a, b};
    return breaks;
  }
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / max_width));
  breaks.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    breaks.push_back(a + (b - a) * static_cast<long double>(i) /
                             static_cast<long double>(n));
  }
  breaks.back() = b;
  return breaks;
}

// Marching breakpoints with locally chosen width, for integrands whose
// oscillation frequency varies across the interval. width_fn(u) must be
// positive and bounded away from zero.
template <class WidthFn>
std::vector<long double> marching_breaks(long double a, long double b,
                                         WidthFn&& width_fn) {
  std::vector<long double> breaks{a};
  long double u = a;
  while (u < b) {
    long double w = width_fn(u);
    if (!(w > 0)) throw DomainError("panel width rule produced w <= 0");
    u = std::min(b, u + w);
    breaks.push_back(u);
    if (breaks.size() > 2'000'000) {
      throw DomainError("panel width rule produced too many panels");
    }
  }
  return breaks;
}

// Integral of g over (0, inf), split at x = 1: a log-substituted rule on
// (0, 1] for the declared power singularity x^{-gamma_sub}, and a truncated
// decaying rule on [1, inf) with the declared exponential rate. osc_freq is
// the frequency of any x^{i*freq}-type oscillation carried by g; it sets the
// initial panel width on both pieces. Every x-integral of (kernel * function)
// products goes through here.
template <class G>
IntegralEstimate integrate_zero_inf_split(G&& g, double gamma_sub,
                                          double decay_rate,
                                          const Tolerance& tol,
                                          double osc_freq = 0.0) {
  if (gamma_sub >= 1.0) {
    throw DomainError("x-integral: combined singularity exponent must be < 1");
  }
  if (!(decay_rate > 0)) {
    throw DomainError("x-integral: decay rate must be > 0");
  }
  Tolerance half = tol;
  half.abs_tol = 0.5 * tol.abs_tol;
  // Rounding the frequency up to a power of two keeps the node grid shared
  // between nearby frequencies, so memoized integrand values get reused.
  const double freq = std::exp2(std::ceil(std::log2(std::max(1.0, osc_freq))));
  const long double panel =
      std::numbers::pi_v<long double> / (2.0L * static_cast<long double>(freq));

  // (0, 1] under x = e^{-s}: the integrand decays like e^{-(1-gamma)s} and
  // any log-periodic oscillation x^{i freq} becomes uniform in s.
  const long double margin = 1.0L - static_cast<long double>(gamma_sub);
  const long double s_max = std::max(
      1.0L, std::log(10.0L / (margin * half.abs_tol)) / margin);
  auto singular_part = [&g](long double s) -> long double {
    const long double x = std::exp(-s);
    return g(x) * x;
  };
  IntegralEstimate lower =
      run_adaptive(singular_part, uniform_breaks(0.0L, s_max, panel), half);

  long double upper_limit = static_cast<long double>(
      std::log(10.0 / (decay_rate * half.abs_tol)) / decay_rate);
  upper_limit = std::max(upper_limit, 1.0L);
  auto tail_part = [&g](long double t) -> long double { return g(1.0L + t); };
  IntegralEstimate upper = run_adaptive(
      tail_part, uniform_breaks(0.0L, upper_limit, panel), half);

  IntegralEstimate est;
  est.value = lower.value + upper.value;
  est.error_estimate = lower.error_estimate + upper.error_estimate;
  est.evaluations = lower.evaluations + upper.evaluations;
  est.converged = lower.converged && upper.converged;
  return est;
}

}  // namespace detail

// Integrates f over [a, b]. max_panel_width (optional) caps the initial
// panel size, used by callers with oscillatory integrands so each starting
// panel sees less than a quarter oscillation.
template <class F>
IntegralEstimate integrate_finite(F&& f, double a, double b,
                                  const Tolerance& tol = {},
                                  double max_panel_width = 0.0) {
  if (!(a < b)) throw DomainError("integrate_finite requires a < b");
  auto wrapped = [&f](long double u) -> long double {
    return static_cast<long double>(f(static_cast<double>(u)));
  };
  return detail::run_adaptive(
      wrapped, detail::uniform_breaks(a, b, max_panel_width), tol);
}

// Integrates f over [0, inf) for integrands that decay like e^{-rate*u}.
// The truncation point U satisfies e^{-rate*U}/rate < abs_tol/10, leaving
// most of the budget to the panel error.
template <class F>
IntegralEstimate integrate_semi_infinite(F&& f, DecayHint decay,
                                         const Tolerance& tol = {},
                                         double max_panel_width = 0.0) {
  if (!(decay.rate > 0)) {
    throw DomainError("integrate_semi_infinite: decay rate must be > 0");
  }
  double upper = std::log(10.0 / (decay.rate * tol.abs_tol)) / decay.rate;
  upper = std::max(upper, 1.0);
  return integrate_finite(std::forward<F>(f), 0.0, upper, tol,
                          max_panel_width);
}

// Integrates f over [a, b] where f has an integrable power singularity
// u^{-gamma}, gamma < 1, at the left endpoint. Substitutes u = a + t^p with
// p = 1/(1-gamma), which removes the singularity.
template <class F>
IntegralEstimate integrate_endpoint_singular(F&& f, double gamma, double a,
                                             double b,
                                             const Tolerance& tol = {}) {
  if (gamma >= 1.0) {
    throw DomainError(
        "integrate_endpoint_singular: gamma >= 1 makes the integral diverge");
  }
  if (!(a < b)) throw DomainError("integrate_endpoint_singular requires a < b");
  if (gamma == 0.0) return integrate_finite(std::forward<F>(f), a, b, tol);

  const long double p = 1.0L / (1.0L - static_cast<long double>(gamma));
  const long double t_max =
      std::pow(static_cast<long double>(b) - static_cast<long double>(a),
               1.0L - static_cast<long double>(gamma));
  auto transformed = [&f, p, a](long double t) -> long double {
    const long double u = static_cast<long double>(a) + std::pow(t, p);
    return static_cast<long double>(f(static_cast<double>(u))) * p *
           std::pow(t, p - 1.0L);
  };
  return detail::run_adaptive(transformed, {0.0L, t_max}, tol);
}

}  // namespace lsk
