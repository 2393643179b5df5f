#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "lsk/kernels.hpp"

using lsk::DomainError;
using lsk::KernelPoint;
using lsk::Tolerance;

namespace {
constexpr double kPi = std::numbers::pi;

KernelPoint at(double alpha, double tau, double x) {
  return KernelPoint{{alpha, tau}, x};
}
}  // namespace

TEST_CASE("half order reduces to the elementary closed form") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double closed = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    CHECK(lsk::re_k(at(0.5, 0.0, x)) == Catch::Approx(closed).epsilon(1e-10));
    CHECK(lsk::bessel_k_real(0.5, x) == Catch::Approx(closed).epsilon(1e-13));
    CHECK(lsk::bessel_k_real(-0.5, x) == Catch::Approx(closed).epsilon(1e-13));
  }
}

TEST_CASE("order-zero value matches the reference") {
  // K_0(1), 18 significant digits.
  CHECK(lsk::bessel_k_real(0.0, 1.0) ==
        Catch::Approx(0.421024438240708333).epsilon(1e-12));
}

TEST_CASE("unit-order reference values at x = 1") {
  CHECK(lsk::re_k(at(0.5, 1.0, 1.0)) ==
        Catch::Approx(0.298824989087391348).epsilon(1e-12));
  CHECK(lsk::im_k(at(0.5, 1.0, 1.0)) ==
        Catch::Approx(0.118944694301359094).epsilon(1e-12));
  CHECK(lsk::re_k(at(0.5, 3.0, 1.0)) ==
        Catch::Approx(-0.0106178959831512758).epsilon(1e-11));
}

TEST_CASE("reference values across all three evaluation regimes") {
  struct Ref {
    double alpha, tau, x, re, im;
  };
  // 40-digit-arithmetic reference values, spanning the series route
  // (small x), the rotated path (large tau), and the direct integral.
  const Ref refs[] = {
      {0.5, 8, 2, -0.00000311459498018184305857, 0.00000227889746353158149599},
      {0.5, 12, 3.9, -5.12247066925157916608e-9, -4.62002682667722304636e-9},
      {0.5, 16, 2, -1.52107966988118288151e-11, -3.26705079156967911213e-12},
      {0.3, 5, 1.5, -0.000286465693310746766659, -0.000338610319214689762786},
      {-0.5, 3, 3, 0.00812818565344120135473, -0.00428831483030802823909},
      {0.5, 3, 5, 0.00156460284800465906956, 0.000461495275471453867997},
      {0.5, 8, 5, -6.44615774292660493734e-7, 0.00000204756133985787702093},
      {0.5, 16, 5, 1.93758085307454288374e-12, 9.87324833799065880372e-12},
      {0.5, 12, 21, 6.36831743805807994743e-12, 1.93393482748180458812e-12},
      {0.3, 4, 10, 0.00000819539571941204904948, 9.64397292027684789217e-7},
      {0, 6, 2.5, -0.0000832719017477689618103, 0.0},
      {0.5, 0.06, 3.9, 0.0128407331729561897872, 0.0000885145734210598035614},
      {0.05, 0, 0.5, 0.925833241623740575108, 0.0},
      {0.5, 4, 4, 0.0015024400872384735881, 0.000840526870172766824356},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.alpha, r.tau, r.x);
    const double re = lsk::re_k(at(r.alpha, r.tau, r.x));
    const double im = lsk::im_k(at(r.alpha, r.tau, r.x));
    CHECK(std::fabs(re - r.re) <=
          1e-10 * std::max(std::fabs(r.re), 1e-12) + 1e-21);
    CHECK(std::fabs(im - r.im) <=
          1e-10 * std::max(std::fabs(r.im), 1e-12) + 1e-21);
  }
}

TEST_CASE("incomplete kernel reference values at w = pi") {
  CHECK(lsk::re_j_incomplete(at(0.5, 1.0, 1.0)) ==
        Catch::Approx(0.298826902199945166).epsilon(1e-12));
  CHECK(lsk::im_j_incomplete(at(0.5, 1.0, 1.0)) ==
        Catch::Approx(0.118944831402153849).epsilon(1e-12));
  CHECK(lsk::re_j_incomplete(at(0.5, 0.0, 1.0)) ==
        Catch::Approx(0.461066580623368616).epsilon(1e-12));
}

TEST_CASE("parity in tau and alpha") {
  const Tolerance tol{};
  for (double x : {0.3, 1.0, 4.0}) {
    for (double tau : {0.5, 2.0, 6.0}) {
      CAPTURE(x, tau);
      const double re = lsk::re_k(at(0.4, tau, x));
      const double im = lsk::im_k(at(0.4, tau, x));
      const double scale = 2.0 * std::max({std::fabs(re), std::fabs(im),
                                           tol.abs_tol});
      CHECK(std::fabs(lsk::re_k(at(0.4, -tau, x)) - re) <=
            scale * tol.rel_tol + 2.0 * tol.abs_tol);
      CHECK(std::fabs(lsk::im_k(at(0.4, -tau, x)) + im) <=
            scale * tol.rel_tol + 2.0 * tol.abs_tol);
      CHECK(std::fabs(lsk::re_k(at(-0.4, tau, x)) - re) <=
            scale * tol.rel_tol + 2.0 * tol.abs_tol);
      CHECK(std::fabs(lsk::im_k(at(-0.4, tau, x)) + im) <=
            scale * tol.rel_tol + 2.0 * tol.abs_tol);
    }
  }
}

TEST_CASE("degenerate imaginary part vanishes") {
  CHECK(lsk::im_k(at(0.5, 0.0, 1.0)) == 0.0);
  CHECK(lsk::im_k(at(0.0, 3.0, 1.0)) == 0.0);
  CHECK(lsk::im_j_incomplete(at(0.0, 3.0, 1.0)) == 0.0);
}

TEST_CASE("envelope bound holds across the module grid") {
  for (double alpha : {-0.5, 0.0, 0.5}) {
    for (int tau = 0; tau <= 8; tau += 2) {
      for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        for (double delta : {0.0, 0.5, 1.0, 1.4}) {
          CAPTURE(alpha, tau, x, delta);
          const auto p = at(alpha, tau, x);
          const double bound = lsk::kernel_bound(p, delta) + 1e-10;
          CHECK(std::fabs(lsk::re_k(p)) <= bound);
          CHECK(std::fabs(lsk::im_k(p)) <= bound);
        }
      }
    }
  }
}

TEST_CASE("incomplete kernel is dominated by the complete one at tau = 0") {
  // At tau = 0 the integrand is positive, so truncation can only reduce it.
  for (double alpha : {-0.5, 0.0, 0.3, 0.5}) {
    for (double x : {0.2, 1.0, 3.0}) {
      CAPTURE(alpha, x);
      CHECK(lsk::re_j_incomplete(at(alpha, 0.0, x)) <=
            lsk::bessel_k_real(alpha, x) + 1e-12);
    }
  }
}

TEST_CASE("incomplete kernel converges to the complete one as w grows") {
  for (double x : {0.8, 2.0}) {
    for (double tau : {0.0, 1.0, 2.5}) {
      CAPTURE(x, tau);
      const double complete = lsk::re_k(at(0.5, tau, x));
      const double wide = lsk::re_j_incomplete(at(0.5, tau, x), {}, 14.0L);
      CHECK(wide == Catch::Approx(complete).margin(1e-12));
    }
  }
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(lsk::re_k(at(0.5, 1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(lsk::re_k(at(0.5, 1.0, -2.0)), DomainError);
  CHECK_THROWS_AS(lsk::re_k(at(1.0, 1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(lsk::bessel_k_real(-1.2, 1.0), DomainError);
  CHECK_THROWS_AS(lsk::re_j_incomplete(at(0.5, 1.0, 1.0), {}, 0.0L),
                  DomainError);
  CHECK_THROWS_AS(lsk::kernel_bound(at(0.5, 1.0, 1.0), kPi / 2.0),
                  DomainError);
  CHECK_THROWS_AS(lsk::kernel_bound(at(0.5, 1.0, 1.0), -0.1), DomainError);
}

TEST_CASE("tau decay after removing the exponential envelope") {
  // e^{delta*tau} |Re K| stays below K_alpha(x cos delta) uniformly in tau.
  const double delta = 1.0;
  const double x = 1.5;
  const double cap = lsk::bessel_k_real(0.5, x * std::cos(delta));
  for (double tau : {1.0, 2.0, 4.0, 8.0, 12.0}) {
    CAPTURE(tau);
    CHECK(std::exp(delta * tau) * std::fabs(lsk::re_k(at(0.5, tau, x))) <=
          cap + 1e-10);
  }
}
