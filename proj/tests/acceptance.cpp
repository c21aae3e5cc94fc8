// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "negbeta/core.hpp"
#include "negbeta/measure.hpp"
#include "negbeta/ordering.hpp"
#include "negbeta/random_expansion.hpp"
#include "negbeta/transforms.hpp"
#include "oracles.hpp"

using namespace negbeta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double lerp(const Interval& iv, double t) { return iv.lo + t * iv.length(); }

Outcome round_trip() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ub(1.05, 1.95), u01(0.0, 1.0);
  int ok = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto base = NegativeBase::make(ub(rng));
    const auto p = make_params(base.beta(), lerp({base.s_lo(), base.s_hi()}, u01(rng)));
    const double x = lerp(base.domain(), u01(rng));
    const auto w = digits_R(p, x, 48).digits;
    const double err = std::abs(x - evaluate(base.beta(), w).value);
    const double bound = base.remainder_scale() * std::pow(base.beta(), -48.0) + 1e-9;
    ok += err <= bound;
    worst = std::max(worst, err / bound);
  }
  return {ok == 200, fmt("%d/200 within bound, worst err/bound %.3g", ok, worst)};
}

Outcome golden() {
  const double beta = (1.0 + std::sqrt(5.0)) / 2.0;
  const auto p = make_params(beta, -1.0 / (beta * beta));
  const auto b = digits_R(p, p.alpha(), 12).digits.str();
  const auto d = digits_alt(p, p.alpha(), 12).digits.str();
  return {b == "001010101010" && d == "100101010101",
          "digits_R=" + b + " digits_alt=" + d};
}

Outcome order_preservation() {
  const auto p = make_params(1.5, -0.2);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(p.m_minus(), p.m_plus());
  int compared = 0, ok = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = ux(rng), y = ux(rng);
    const auto v = alt_compare(digits_R(p, x, 60).digits, digits_R(p, y, 60).digits);
    if (v.relation == AltRelation::EqualPrefix) continue;
    ++compared;
    ok += (x < y) == (v.relation == AltRelation::Less);
  }
  return {compared > 0 && ok == compared, fmt("%d/%d differing pairs ordered correctly", ok, compared)};
}

Outcome admissibility() {
  const auto p = make_params(1.5, -0.2);
  const auto refs = reference_sequences(p, 160);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ux(p.m_minus(), p.m_plus());
  std::uniform_int_distribution<std::size_t> upos(0, 39);

  int admissible = 0;
  std::vector<DigitWord> words;
  for (int i = 0; i < 1000; ++i) {
    words.push_back(digits_R(p, ux(rng), 40).digits);
    admissible += is_admissible(refs, words.back()).verdict == Verdict::Admissible;
  }

  // single-digit flips whose result no point realises (oracle: an empty tail
  // cylinder); the expected index is the last position with an empty tail
  int mutations = 0, caught = 0, attempts = 0;
  std::size_t next_word = 0;
  while (mutations < 1000 && attempts < 200000) {
    ++attempts;
    const auto& w = words[next_word++ % words.size()];
    const std::size_t pos = upos(rng);
    std::vector<std::uint8_t> digits = w.digits();
    digits[pos] ^= 1;
    const DigitWord m(std::move(digits));
    const auto expected = oracle::last_empty_tail(p, m);
    if (!expected) continue;
    ++mutations;
    const auto r = is_admissible(refs, m);
    caught += r.verdict == Verdict::Inadmissible && r.failing_index == expected;
  }
  return {admissible == 1000 && mutations == 1000 && caught == 1000,
          fmt("%d/1000 generated admissible, %d/%d mutations rejected at the expected index",
              admissible, caught, mutations)};
}

double plastic() {
  double b = 1.3;
  for (int i = 0; i < 60; ++i) b -= (b * b * b - b - 1) / (3 * b * b - 1);
  return b;
}

Outcome plastic_support() {
  const double b = plastic();
  const double a = -0.215;
  const auto r = support(make_params(b, a));
  const IntervalSet expected({{-b * a - 1, -b * b * b * a - 1},
                              {b * b * a, b * b * a + b - 1},
                              {-b * b * b * a - b * b + b, -b * a}});
  const double outside = expected.excess(r.support);
  bool meets_all = expected.size() == 3;
  for (const auto& part : expected.parts()) meets_all = meets_all && r.support.overlap(part) > 0.0;
  return {outside <= 1e-9 && meets_all && r.invariance_residual <= 1e-9,
          fmt("%zu components, excess %.2g, meets all three: %s, residual %.2g",
              r.support.size(), outside, meets_all ? "yes" : "no", r.invariance_residual)};
}

Outcome example_supports() {
  const auto base15 = NegativeBase::make(1.5);
  const auto full = support(make_params(1.5, base15.s_lo())).support;
  const bool full_ok = full.size() == 1 &&
                       std::abs(full.parts()[0].lo - base15.m_minus()) <= 1e-9 &&
                       std::abs(full.parts()[0].hi - base15.m_plus()) <= 1e-9;

  const double beta = 1.8;
  const auto base18 = NegativeBase::make(beta);
  const double a = -1.0 / (beta * (beta * beta - 1));
  const auto two = support(make_params(beta, a)).support;
  const IntervalSet expected({{base18.m_minus(), beta * beta * a + beta},
                              {-beta * a - 1, base18.m_plus()}});
  const bool two_ok = two.size() == 2 && expected.size() == 2 &&
                      symmetric_difference_measure(two, expected) <= 2e-9 &&
                      expected.excess(two) <= 1e-9 && two.excess(expected) <= 1e-9;
  std::ostringstream parts;
  for (const auto& iv : two.parts()) parts << " [" << iv.lo << ", " << iv.hi << "]";
  return {full_ok && two_ok,
          fmt("beta=1.5 full support: %s; beta=1.8: %zu component(s)", full_ok ? "yes" : "no",
              two.size()) + parts.str() +
              fmt(" vs expected %zu component(s)", expected.size())};
}

Outcome factor() {
  const auto p = make_params(1.5, -0.2);
  const FactorMaps f(p);
  const auto breaks = f.t_breakpoints();
  double worst = 0.0;
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = f.full() * (i + 0.5) / 10000.0;
    if (std::any_of(breaks.begin(), breaks.end(), [&](double b) { return std::abs(x - b) < 1e-8; }))
      continue;
    ++checked;
    worst = std::max(worst, std::abs(f.W(f.tau(x)) - f.tau(f.T(x))));
  }
  int alternating = 0;
  for (int i = 0; i < 1000; ++i) {
    double x = f.full() * (i + 0.5) / 1000.0;
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      const double y = f.T(x);
      ok = ok && ((x < f.half()) != (y < f.half()));
      x = y;
    }
    alternating += ok;
  }
  return {worst <= 1e-10 && alternating == 1000,
          fmt("max defect %.2g over %d points, %d/1000 orbits alternate", worst, checked,
              alternating)};
}

Outcome density() {
  const auto p = make_params(1.5, -0.2);
  const auto supp = support(p).support;
  const auto on_hull = ulam_density(piecewise_R(p), supp.hull(), 4096);
  const auto direct = ulam_density(piecewise_R(p), p.base().domain(), 4096);
  const auto factor = density_R_via_factor(p, 4096);
  const double l1 = l1_distance(direct, factor);
  const double outside = std::max(mass_outside(direct, supp), mass_outside(factor, supp));
  return {on_hull.stationarity_residual <= 0.02 && l1 <= 0.05 && outside <= 1e-3,
          fmt("residual %.2g, L1(direct, factor) %.3g, mass outside support %.2g",
              on_hull.stationarity_residual, l1, outside)};
}

Outcome greedy_max() {
  const auto base = NegativeBase::make(1.8);
  int ok = 0;
  for (int i = 1; i <= 100; ++i) {
    const double x = lerp(base.domain(), i / 101.0);
    const auto words = enumerate_expansions(base, x, 14, std::size_t{1} << 14).words;
    const auto best = *std::max_element(words.begin(), words.end(), [](const auto& a, const auto& b) {
      return alt_compare(a, b).relation == AltRelation::Less;
    });
    ok += greedy_digits(base, x, 14).digits == best;
  }
  return {ok == 100, fmt("%d/100 grid points", ok)};
}

Outcome no_single_alpha() {
  std::string detail;
  bool pass = true;
  for (double beta : {1.3, 1.5, 1.8}) {
    std::size_t n = 0;
    try {
      n = refute_single_alpha_greedy(NegativeBase::make(beta), 100).size();
    } catch (const Error&) {
    }
    pass = pass && n == 100;
    detail += fmt("beta=%.1f: %zu/100 witnesses  ", beta, n);
  }
  return {pass, detail};
}

Outcome odd_greedy() {
  const auto base = NegativeBase::make(1.5);
  const auto p = make_params(1.5, -1.0 / (1.5 * (1.5 * 1.5 - 1)));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(base.m_minus(), base.m_plus());
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = ux(rng);
    ok += odd_greedy_digits(1.5, x, 40) == digits_R(p, x, 40).digits;
  }
  return {ok == 1000, fmt("%d/1000 exact matches", ok)};
}

Outcome uniqueness() {
  const auto base = NegativeBase::make(1.5);
  int not_unique = 0;
  for (int i = 1; i <= 1000; ++i) {
    const double x = lerp(base.domain(), i / 1001.0);
    not_unique += classify_uniqueness(base, x, 10000).verdict == Uniqueness::NotUnique;
  }
  const bool lo = classify_uniqueness(base, base.m_minus(), 10000).verdict == Uniqueness::Unique;
  const bool hi = classify_uniqueness(base, base.m_plus(), 10000).verdict == Uniqueness::Unique;
  return {not_unique == 1000 && lo && hi,
          fmt("%d/1000 NotUnique, M- %s, M+ %s", not_unique, lo ? "Unique" : "not certified",
              hi ? "Unique" : "not certified")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"round-trip bound", round_trip},
      {"golden-ratio regression", golden},
      {"order preservation", order_preservation},
      {"admissibility", admissibility},
      {"three-interval support", plastic_support},
      {"full and two-component supports", example_supports},
      {"factor construction", factor},
      {"invariant density", density},
      {"greedy maximality", greedy_max},
      {"no single-alpha greedy", no_single_alpha},
      {"odd-greedy recursion", odd_greedy},
      {"uniqueness", uniqueness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
