#include <doctest.h>

#include <cmath>

#include "negbeta/measure.hpp"
#include "negbeta/transforms.hpp"

using namespace negbeta;

namespace {
double plastic() {
  double b = 1.3;
  for (int i = 0; i < 60; ++i) b -= (b * b * b - b - 1) / (3 * b * b - 1);
  return b;
}
}  // namespace

TEST_CASE("invariant window cases") {
  auto w = invariant_window(make_params(1.5, -0.3));
  CHECK(w.lo == doctest::Approx(-0.675));
  CHECK(w.hi == doctest::Approx(0.45));
  w = invariant_window(make_params(1.5, -0.22));
  CHECK(w.lo == doctest::Approx(-0.67));
  CHECK(w.hi == doctest::Approx(0.33));
  w = invariant_window(make_params(1.5, -0.15));
  CHECK(w.lo == doctest::Approx(-0.775));
  CHECK(w.hi == doctest::Approx(0.225));
}

TEST_CASE("invariant window is forward invariant") {
  for (double beta : {1.2, 1.5, 1.9}) {
    const auto base = NegativeBase::make(beta);
    for (int i = 0; i <= 20; ++i) {
      const auto p = make_params(beta, base.s_lo() + (base.s_hi() - base.s_lo()) * i / 20.0);
      const auto w = invariant_window(p);
      for (const auto& iv : image_R(p, w)) CHECK(w.contains(iv, 1e-12));
    }
  }
}

TEST_CASE("image_R splits at alpha") {
  const auto p = make_params(1.5, AlphaPreset::Midpoint);
  const auto parts = image_R(p, Interval(-0.4, 0.2));
  REQUIRE(parts.size() == 2);
  const IntervalSet img(parts);
  CHECK(img.contains(-0.3));  // from 0.2
  CHECK(img.contains(0.3));   // from alpha
  CHECK(img.contains(-0.7));  // from alpha on the 1 branch
  CHECK(img.contains(-0.4));  // fixed point
}

TEST_CASE("support at beta = 1.5, alpha = -0.2 is one interval") {
  const auto r = support(make_params(1.5, AlphaPreset::Midpoint));
  CHECK(r.status == SupportStatus::Stabilized);
  REQUIRE(r.support.size() == 1);
  CHECK(r.support.parts()[0].lo == doctest::Approx(-0.7));
  CHECK(r.support.parts()[0].hi == doctest::Approx(0.3));
  CHECK(r.invariance_residual <= 1e-12);
}

TEST_CASE("plastic number gives three components") {
  const double b = plastic();
  const double a = -0.215;
  const auto r = support(make_params(b, a));
  REQUIRE(r.support.size() == 3);
  const IntervalSet expected({{-b * a - 1, -b * b * b * a - 1},
                              {b * b * a, b * b * a + b - 1},
                              {-b * b * b * a - b * b + b, -b * a}});
  CHECK(expected.excess(r.support) <= 1e-9);
  CHECK(r.invariance_residual <= 1e-9);
}

TEST_CASE("support stays inside the invariant window") {
  for (double beta : {1.15, 1.4, 1.7, 1.95}) {
    const auto base = NegativeBase::make(beta);
    for (int i = 0; i <= 10; ++i) {
      const auto p = make_params(beta, base.s_lo() + (base.s_hi() - base.s_lo()) * i / 10.0);
      const auto r = support(p);
      INFO("beta=" << beta << " alpha=" << p.alpha());
      CHECK(r.status == SupportStatus::Stabilized);
      CHECK(IntervalSet({invariant_window(p)}).excess(r.support) <= 1e-9);
      CHECK(r.invariance_residual <= 1e-9);
    }
  }
}

TEST_CASE("piecewise R matches step_R") {
  const auto p = make_params(1.7, -0.3);
  const auto f = piecewise_R(p);
  for (int i = 0; i <= 100; ++i) {
    const double x = p.m_minus() + (p.m_plus() - p.m_minus()) * i / 100.0;
    CHECK(f(x) == doctest::Approx(step_R(p, x).next).epsilon(1e-12));
  }
}

TEST_CASE("factor maps") {
  const auto p = make_params(1.5, AlphaPreset::Midpoint);
  const FactorMaps f(p);
  CHECK(f.W(f.phi(0.5)) == doctest::Approx(0.45));
  CHECK(f.half() == doctest::Approx(2.0));
  CHECK(f.phi_inverse(f.phi(0.3)) == doctest::Approx(0.3));
  const auto T = f.T_map();
  for (const auto& br : T.branches) CHECK(br.slope == doctest::Approx(1.5));
  for (int i = 1; i < 1000; ++i) {
    const double x = f.full() * i / 1000.0;
    bool near = false;
    for (double b : f.t_breakpoints()) near = near || std::abs(x - b) < 1e-8;
    if (near) continue;
    CHECK(f.W(f.tau(x)) == doctest::Approx(f.tau(f.T(x))).epsilon(1e-12));
    CHECK((x < f.half()) != (f.T(x) < f.half()));
  }
}

TEST_CASE("Ulam method recovers the uniform density of the doubling map") {
  PiecewiseAffineMap doubling{{{{0.0, 0.5}, 2.0, 0.0}, {{0.5, 1.0}, 2.0, -1.0}}};
  const auto d = ulam_density(doubling, {0.0, 1.0}, 64);
  CHECK(d.bins() == 64);
  CHECK(d.mass.sum() == doctest::Approx(1.0));
  CHECK(d.density().minCoeff() == doctest::Approx(1.0));
  CHECK(d.density().maxCoeff() == doctest::Approx(1.0));
  const auto P = ulam_matrix(doubling, {0.0, 1.0}, 8);
  for (int i = 0; i < 8; ++i) CHECK(P.row(i).sum() == doctest::Approx(1.0));
}

TEST_CASE("R density, direct and via the factor") {
  const auto p = make_params(1.5, AlphaPreset::Midpoint);
  const auto direct = ulam_density(piecewise_R(p), p.base().domain(), 512);
  const auto factor = density_R_via_factor(p, 512);
  CHECK(direct.stationarity_residual <= 1e-10);
  CHECK(l1_distance(direct, factor) <= 0.05);
  const auto supp = support(p).support;
  CHECK(mass_outside(direct, supp) <= 1e-3);
  CHECK(mass_outside(factor, supp) <= 1e-3);
  CHECK(factor.mass.sum() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ulam_density(piecewise_R(p), p.base().domain(), 64, 1e-300, 3), Error);
}

TEST_CASE("two components at the left end of S for small beta") {
  for (double beta : {1.3, 1.35}) {
    const auto base = NegativeBase::make(beta);
    const double a = base.s_lo();
    const auto r = support(make_params(beta, a));
    const IntervalSet expected({{base.m_minus(), beta * beta * a + beta},
                                {-beta * a - 1, base.m_plus()}});
    INFO("beta=" << beta);
    REQUIRE(expected.size() == 2);
    REQUIRE(r.support.size() == 2);
    CHECK(symmetric_difference_measure(r.support, expected) <= 1e-9);
  }
}

TEST_CASE("full support at the left end of S for beta = 1.5") {
  const auto base = NegativeBase::make(1.5);
  const auto r = support(make_params(1.5, base.s_lo()));
  REQUIRE(r.support.size() == 1);
  CHECK(r.support.parts()[0].lo == doctest::Approx(base.m_minus()).epsilon(1e-12));
  CHECK(r.support.parts()[0].hi == doctest::Approx(base.m_plus()).epsilon(1e-12));
}
