#include "negbeta/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace negbeta {

StepResult step_R(const ExpansionParams& p, double x) {
  p.base().require_in_domain(x);
  const int d = x < p.alpha() ? 1 : 0;
  return {d, p.base().apply_digit(d, x)};
}

StepResult step_L(const ExpansionParams& p, double x) {
  p.base().require_in_domain(x);
  const int d = x <= p.alpha() ? 1 : 0;
  return {d, p.base().apply_digit(d, x)};
}

OrbitRecord digits_R(const ExpansionParams& p, double x, std::size_t n) {
  p.base().require_in_domain(x);
  OrbitRecord rec;
  rec.points.reserve(n + 1);
  rec.points.push_back(x);
  for (std::size_t k = 0; k < n; ++k) {
    const auto s = step_R(p, rec.points.back());
    rec.digits.push_back(s.digit);
    rec.points.push_back(s.next);
  }
  return rec;
}

OrbitRecord digits_alt(const ExpansionParams& p, double x, std::size_t n) {
  p.base().require_in_domain(x);
  OrbitRecord rec;
  rec.points.reserve(n + 1);
  rec.points.push_back(x);
  for (std::size_t k = 1; k <= n; ++k) {
    const double cur = rec.points.back();
    const auto s = (k % 2 == 1) ? step_L(p, cur) : step_R(p, cur);
    rec.digits.push_back(s.digit);
    rec.points.push_back(s.next);
  }
  return rec;
}

Interval ito_sadahiro_domain(double beta) {
  return {-beta / (beta + 1.0), 1.0 / (beta + 1.0)};
}

StepResult ito_sadahiro_step(double beta, double x) {
  const auto p = make_params(beta, AlphaPreset::ItoSadahiro);
  const auto dom = ito_sadahiro_domain(beta);
  if (x < dom.lo - kDomainSlack || x > dom.hi + kDomainSlack) {
    throw Error(Errc::XOutOfDomain, "x outside the Ito-Sadahiro interval");
  }
  auto s = step_L(p, x);
  s.next = std::clamp(s.next, dom.lo, dom.hi);
  return s;
}

double theta(const NegativeBase& base, double x) {
  return base.t1_fixed_point() - x;
}

Conjugate conjugate_alpha(const ExpansionParams& p) {
  const double at = theta(p.base(), p.alpha());
  return {at, make_params(p.beta(), at)};
}

DigitWord odd_greedy_digits(double beta, double x, std::size_t n) {
  const auto base = NegativeBase::make(beta);
  base.require_in_domain(x);
  // sum_k (-1)^k l_k / beta^k for l = (01)^inf is M+.
  const double tail = base.m_plus();
  DigitWord out;
  double partial = 0.0;
  double scale = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    scale /= beta;
    int b;
    if (k % 2 == 1) {
      b = (partial - tail * scale <= x) ? 0 : 1;
      partial -= b * scale;
    } else {
      b = (partial + tail * scale >= x) ? 0 : 1;
      partial += b * scale;
    }
    out.push_back(b);
  }
  return out;
}

namespace {

struct Bound {
  double value;
  bool open;
};

}  // namespace

std::optional<Interval> cylinder(const ExpansionParams& p, const DigitWord& w) {
  const double beta = p.beta();
  const double alpha = p.alpha();
  Bound lo{p.m_minus(), false};
  Bound hi{p.m_plus(), false};
  // y = a x + c is R^k x on the current cylinder
  double a = 1.0;
  double c = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int d = w[k];
    Bound ylo = d == 0 ? Bound{alpha, false} : Bound{p.m_minus(), false};
    Bound yhi = d == 0 ? Bound{p.m_plus(), false} : Bound{alpha, true};
    Bound xlo{(ylo.value - c) / a, ylo.open};
    Bound xhi{(yhi.value - c) / a, yhi.open};
    if (a < 0) std::swap(xlo, xhi);

    if (xlo.value > lo.value || (xlo.value == lo.value && xlo.open)) lo = xlo;
    if (xhi.value < hi.value || (xhi.value == hi.value && xhi.open)) hi = xhi;
    if (lo.value > hi.value || (lo.value == hi.value && (lo.open || hi.open))) {
      return std::nullopt;
    }
    a = -beta * a;
    c = -beta * c - d;
  }
  return Interval{lo.value, hi.value};
}

}  // namespace negbeta
