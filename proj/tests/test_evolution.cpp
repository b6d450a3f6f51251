#include <cmath>
#include <random>

#include "doctest.h"
#include "fw/evolution.hpp"
#include "fw/kernel.hpp"
#include "fw/norms.hpp"
#include "fw/transforms.hpp"

using namespace fw;

namespace {

constexpr double tau = 2.0 * M_PI;

template <class F>
Field sample(const GridSpec& g, F&& fn) {
  Field f = zero_field(g);
  for (int j = 0; j < g.size(); ++j) f.values[j] = fn(double(j) / g.size());
  return f;
}

Field two_mode(const GridSpec& g) {
  return sample(g, [](double x) {
    return -0.5 * std::sin(tau * x) - 0.25 * std::sin(2.0 * tau * x);
  });
}

double dispersion(int k) { return tau * k * multiplier(k); }

}  // namespace

TEST_CASE("initial projection truncates to the dealiased band") {
  const GridSpec g(256);
  CHECK(dealias_cutoff(g) == 85);

  Spectrum s = zero_spectrum(g);
  s.coeff(3) = {0.0, -0.5};
  s.coeff(-3) = {0.0, 0.5};
  s.coeff(100) = {0.2, 0.1};
  s.coeff(-100) = {0.2, -0.1};
  const SimState st = make_state(to_field(s));
  CHECK(st.t == 0.0);
  CHECK(std::abs(st.u_hat.coeff(3) - std::complex<double>(0.0, -0.5)) < 1e-14);
  CHECK(std::abs(st.u_hat.coeff(100)) == 0.0);
  CHECK((st.u.values - to_field(st.u_hat).values).abs().maxCoeff() == 0.0);
}

TEST_CASE("tail fraction measures the top octave of the band") {
  const GridSpec g(256);  // cutoff 85, octave (42, 85]
  Spectrum low = zero_spectrum(g);
  low.coeff(3) = 0.5;
  low.coeff(-3) = 0.5;
  CHECK(tail_fraction(low) == 0.0);

  Spectrum high = zero_spectrum(g);
  high.coeff(60) = 0.5;
  high.coeff(-60) = 0.5;
  CHECK(tail_fraction(high) == 1.0);

  Spectrum mix = zero_spectrum(g);
  mix.coeff(3) = 1.0;
  mix.coeff(-3) = 1.0;
  mix.coeff(60) = 0.5;
  mix.coeff(-60) = 0.5;
  CHECK(tail_fraction(mix) == doctest::Approx(0.5 / 2.5).epsilon(1e-15));

  CHECK(tail_fraction(zero_spectrum(g)) == 0.0);
}

TEST_CASE("rhs of a single sine matches the closed form") {
  const GridSpec g(64);
  const Spectrum s = to_spectrum(sample(g, [](double x) { return std::sin(tau * x); }));
  const Field r = to_field(rhs(s, 1.5));
  // u u_x = pi sin(4 pi x), Q u_x = 2 pi cos(2 pi x)/(1 + 4 pi^2)
  for (int j = 0; j < g.size(); ++j) {
    const double x = double(j) / g.size();
    const double expected =
        -1.5 * M_PI * std::sin(2.0 * tau * x) + tau * multiplier(1) * std::cos(tau * x);
    CHECK(std::abs(r.values[j] - expected) < 1e-12);
  }

  const Spectrum lin = rhs(s, 1.5, true);
  CHECK((lin.coeffs - apply_q_dx(s).coeffs).abs().maxCoeff() < 1e-15);
}

TEST_CASE("rhs of the two-mode profile matches quadrature") {
  const GridSpec g(64);
  auto u = [](double x) { return -0.5 * std::sin(tau * x) - 0.25 * std::sin(2.0 * tau * x); };
  auto up = [](double x) {
    return -M_PI * (std::cos(tau * x) + std::cos(2.0 * tau * x));
  };
  const Spectrum s = to_spectrum(sample(g, u));
  const Field r = to_field(rhs(s, 1.5));

  const int m = 16384;
  for (int j = 0; j < g.size(); j += 4) {
    const double x = double(j) / g.size();
    double conv = 0.0;
    for (int i = 0; i < m; ++i) {
      const double y = (i + 0.5) / m;
      conv += kernel_closed_form(y).value * up(x - y);
    }
    conv /= m;
    CHECK(std::abs(r.values[j] - (-1.5 * u(x) * up(x) + conv)) < 1e-7);
  }
}

TEST_CASE("dealiasing removes products beyond the band") {
  const GridSpec g(128);  // cutoff 42
  Spectrum s = zero_spectrum(g);
  s.coeff(30) = 0.5;
  s.coeff(-30) = 0.5;
  // the quadratic product lives at |k| = 60 > 42, so only Q u_x remains
  // up to FFT noise from forming the product on the grid
  const Spectrum r = rhs(s, 1.5);
  CHECK((r.coeffs - apply_q_dx(s).coeffs).abs().maxCoeff() < 1e-13);

  // a mode outside the band contributes nothing at all
  Spectrum hi = zero_spectrum(g);
  hi.coeff(50) = 0.5;
  hi.coeff(-50) = 0.5;
  CHECK(rhs(hi, 1.5).coeffs.abs().maxCoeff() == 0.0);
}

TEST_CASE("linear flow matches the dispersive closed form") {
  const GridSpec g(64);
  const Field u0 = sample(g, [](double x) {
    return std::sin(tau * x) + 0.3 * std::cos(5.0 * tau * x);
  });
  StepControl ctl;
  ctl.linear_only = true;
  ctl.dt_max = 1e-2;

  Spectrum last = zero_spectrum(g);
  const Observer obs = [&](const StepEvent& ev) { last = ev.state.u_hat; };
  const RunOutcome out = integrate(u0, 1.0, ctl, {obs});
  CHECK(out.status == RunStatus::ReachedFinalTime);
  CHECK(out.t == 1.0);

  const Spectrum s0 = to_spectrum(u0);
  for (int k : {1, 5}) {
    const std::complex<double> expected =
        s0.coeff(k) * std::polar(1.0, dispersion(k) * 1.0);
    CHECK(std::abs(last.coeff(k) - expected) < 1e-12);
    CHECK(std::abs(last.coeff(-k) - std::conj(expected)) < 1e-12);
  }
}

TEST_CASE("mean and energy are conserved while smooth") {
  const GridSpec g(256);
  const Field u0 = sample(g, [](double x) { return 0.1 * std::sin(tau * x) + 0.05; });
  StepControl ctl;

  std::vector<double> l2s, means;
  const Observer obs = [&](const StepEvent& ev) {
    l2s.push_back(norm_l2(ev.state.u_hat));
    means.push_back(ev.state.u_hat.coeff(0).real());
  };
  const RunOutcome out = integrate(u0, 1.0, ctl, {obs});
  CHECK(out.status == RunStatus::ReachedFinalTime);
  REQUIRE(l2s.size() > 100);
  for (const double v : l2s) CHECK(std::abs(v - l2s.front()) < 1e-12 * l2s.front());
  for (const double v : means) CHECK(std::abs(v - means.front()) < 1e-14);
}

TEST_CASE("transport coefficient realizes the rescaled flow") {
  // v = (3/2) u turns the 3/2-transport equation into the unit-transport one.
  const GridSpec g(128);
  const Field u0 = two_mode(g);
  Field v0 = u0;
  v0.values *= 1.5;

  StepControl a;
  a.transport_coefficient = 1.5;
  StepControl b;
  b.transport_coefficient = 1.0;

  Spectrum ua = zero_spectrum(g), ub = zero_spectrum(g);
  const Observer oa = [&](const StepEvent& ev) { ua = ev.state.u_hat; };
  const Observer ob = [&](const StepEvent& ev) { ub = ev.state.u_hat; };
  const RunOutcome ra = integrate(u0, 0.05, a, {oa});
  const RunOutcome rb = integrate(v0, 0.05, b, {ob});
  CHECK(ra.status == RunStatus::ReachedFinalTime);
  CHECK(rb.status == RunStatus::ReachedFinalTime);
  CHECK((ub.coeffs - 1.5 * ua.coeffs).abs().maxCoeff() < 1e-12);
}

TEST_CASE("rk4 converges at fourth order") {
  const GridSpec g(64);
  const Field u0 = sample(g, [](double x) { return 0.3 * std::sin(tau * x); });

  const auto run_with = [&](double h) {
    StepControl ctl;
    ctl.dt_max = h;
    ctl.cfl = 100.0;  // let dt_max govern
    Spectrum last = zero_spectrum(g);
    const Observer obs = [&](const StepEvent& ev) { last = ev.state.u_hat; };
    integrate(u0, 0.2, ctl, {obs});
    return last;
  };

  const Spectrum y1 = run_with(0.02);
  const Spectrum y2 = run_with(0.01);
  const Spectrum y3 = run_with(0.005);
  const double a = (y1.coeffs - y2.coeffs).abs().maxCoeff();
  const double b = (y2.coeffs - y3.coeffs).abs().maxCoeff();
  CHECK(b > 1e-15);  // above rounding, so the ratio is meaningful
  CHECK(a / b > 12.0);
  CHECK(a / b < 20.0);
}

TEST_CASE("hermitian symmetry survives many steps") {
  const GridSpec g(128);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  Spectrum s = zero_spectrum(g);
  for (int k = 1; k <= 12; ++k) {
    const std::complex<double> c{u(rng), u(rng)};
    s.coeff(k) = c;
    s.coeff(-k) = std::conj(c);
  }
  SimState st = make_state(to_field(s));
  for (int i = 0; i < 50; ++i) st = step_rk4(st, 1e-3, 1.5, false);
  for (int k = 1; k < 64; ++k)
    CHECK(std::abs(st.u_hat.coeff(k) - std::conj(st.u_hat.coeff(-k))) == 0.0);
  CHECK(st.u_hat.coeff(0).imag() == 0.0);
  CHECK(st.t == doctest::Approx(0.05).epsilon(1e-13));
}

TEST_CASE("integrate lands exactly on the final time and reports events") {
  const GridSpec g(64);
  const Field u0 = sample(g, [](double x) { return 0.4 * std::sin(tau * x); });
  StepControl ctl;
  ctl.dt_max = 3e-3;

  std::vector<double> ts;
  std::vector<double> dts;
  const Observer obs = [&](const StepEvent& ev) {
    ts.push_back(ev.state.t);
    dts.push_back(ev.dt);
  };
  const RunOutcome out = integrate(u0, 0.05, ctl, {obs});
  CHECK(out.status == RunStatus::ReachedFinalTime);
  CHECK(out.t == 0.05);
  REQUIRE(ts.size() >= 3);
  CHECK(ts.front() == 0.0);
  CHECK(dts.front() == 0.0);
  CHECK(ts.back() == 0.05);
  for (size_t i = 1; i < ts.size(); ++i) {
    CHECK(ts[i] > ts[i - 1]);
    CHECK(ts[i] == doctest::Approx(ts[i - 1] + dts[i]).epsilon(1e-13));
  }
}

TEST_CASE("slope cap stops a breaking run") {
  const GridSpec g(512);
  StepControl ctl;
  ctl.slope_cap = 50.0;
  const RunOutcome out = integrate(two_mode(g), 1.0, ctl);
  CHECK(out.status == RunStatus::SlopeCapHit);
  CHECK(out.min_slope <= -50.0);
  CHECK(out.t > 0.05);
  CHECK(out.t < 0.15);
}

TEST_CASE("tail cap stops an underresolved run") {
  const GridSpec g(128);
  StepControl ctl;
  ctl.tail_fraction_cap = 1e-6;
  const RunOutcome out = integrate(two_mode(g), 1.0, ctl);
  CHECK(out.status == RunStatus::ResolutionExhausted);
  CHECK(out.tail_fraction >= 1e-6);
  CHECK(out.t < 0.2);
}

TEST_CASE("integrate rejects a negative horizon and handles zero") {
  const GridSpec g(64);
  const Field u0 = sample(g, [](double x) { return std::sin(tau * x); });
  CHECK_THROWS_AS(integrate(u0, -1.0, StepControl{}), std::invalid_argument);
  const RunOutcome out = integrate(u0, 0.0, StepControl{});
  CHECK(out.status == RunStatus::ReachedFinalTime);
  CHECK(out.t == 0.0);
}
