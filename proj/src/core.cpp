#include "negbeta/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace negbeta {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::BetaOutOfRange: return "BetaOutOfRange";
    case Errc::AlphaOutsideSwitch: return "AlphaOutsideSwitch";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::XOutOfDomain: return "XOutOfDomain";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::CoinsExhausted: return "CoinsExhausted";
    case Errc::WitnessNotFound: return "WitnessNotFound";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// --- DigitWord -------------------------------------------------------------

DigitWord::DigitWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d > 1) throw Error(Errc::InvalidArgument, "digit outside {0,1}");
  }
}

DigitWord DigitWord::parse(std::string_view text) {
  std::vector<std::uint8_t> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(Errc::InvalidArgument,
                  "digit word may only contain '0' and '1': " + std::string(text));
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return DigitWord(std::move(out));
}

DigitWord DigitWord::repeat(std::string_view pattern, std::size_t times) {
  std::string s;
  s.reserve(pattern.size() * times);
  for (std::size_t i = 0; i < times; ++i) s += pattern;
  return parse(s);
}

void DigitWord::push_back(int digit) {
  if (digit != 0 && digit != 1) throw Error(Errc::InvalidArgument, "digit outside {0,1}");
  digits_.push_back(static_cast<std::uint8_t>(digit));
}

DigitWord DigitWord::prefix(std::size_t n) const {
  n = std::min(n, digits_.size());
  return DigitWord(std::vector<std::uint8_t>(digits_.begin(), digits_.begin() + n));
}

DigitWord DigitWord::suffix_from(std::size_t pos) const {
  pos = std::min(pos, digits_.size());
  return DigitWord(std::vector<std::uint8_t>(digits_.begin() + pos, digits_.end()));
}

DigitWord DigitWord::concat(const DigitWord& tail) const {
  auto out = digits_;
  out.insert(out.end(), tail.digits_.begin(), tail.digits_.end());
  return DigitWord(std::move(out));
}

std::string DigitWord::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
  return s;
}

// --- Interval / IntervalSet ------------------------------------------------

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo <= hi)) throw Error(Errc::InvalidArgument, "interval with lo > hi");
}

IntervalSet::IntervalSet(std::vector<Interval> parts, double merge_tol) {
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& iv : parts) {
    if (!parts_.empty() && iv.lo <= parts_.back().hi + merge_tol) {
      parts_.back().hi = std::max(parts_.back().hi, iv.hi);
    } else {
      parts_.push_back(iv);
    }
  }
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& iv : parts_) m += iv.length();
  return m;
}

bool IntervalSet::contains(double x, double slack) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& iv) {
    return iv.lo - slack <= x && x <= iv.hi + slack;
  });
}

Interval IntervalSet::hull() const {
  if (parts_.empty()) throw Error(Errc::InvalidArgument, "hull of empty set");
  return {parts_.front().lo, parts_.back().hi};
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  auto all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

double IntervalSet::overlap(const Interval& iv) const {
  double m = 0.0;
  for (const auto& p : parts_) {
    const double lo = std::max(p.lo, iv.lo);
    const double hi = std::min(p.hi, iv.hi);
    if (hi > lo) m += hi - lo;
  }
  return m;
}

std::vector<Interval> IntervalSet::uncovered(const Interval& iv) const {
  std::vector<Interval> out;
  double cursor = iv.lo;
  for (const auto& p : parts_) {
    if (p.hi < cursor) continue;
    if (p.lo > iv.hi) break;
    if (p.lo > cursor) out.push_back({cursor, std::min(p.lo, iv.hi)});
    cursor = std::max(cursor, p.hi);
    if (cursor >= iv.hi) break;
  }
  if (cursor < iv.hi) out.push_back({cursor, iv.hi});
  return out;
}

double IntervalSet::excess(const IntervalSet& other) const {
  if (other.empty()) return 0.0;
  if (parts_.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& iv : other.parts()) {
    for (const auto& gap : uncovered(iv)) {
      // nearest covered points on either side of the gap
      double left = -std::numeric_limits<double>::infinity();
      double right = std::numeric_limits<double>::infinity();
      for (const auto& p : parts_) {
        if (p.hi <= gap.lo) left = std::max(left, p.hi);
        if (p.lo >= gap.hi) right = std::min(right, p.lo);
      }
      double d;
      if (std::isfinite(left) && std::isfinite(right)) {
        const double mid = std::clamp(0.5 * (left + right), gap.lo, gap.hi);
        d = std::min(mid - left, right - mid);
      } else if (std::isfinite(left)) {
        d = gap.hi - left;
      } else {
        d = right - gap.lo;
      }
      worst = std::max(worst, d);
    }
  }
  return worst;
}

double symmetric_difference_measure(const IntervalSet& a, const IntervalSet& b) {
  double m = 0.0;
  for (const auto& iv : a.parts())
    for (const auto& g : b.uncovered(iv)) m += g.length();
  for (const auto& iv : b.parts())
    for (const auto& g : a.uncovered(iv)) m += g.length();
  return m;
}

// --- NegativeBase -----------------------------------------------------------

const char* to_string(Region r) {
  switch (r) {
    case Region::U1: return "U1";
    case Region::S: return "S";
    case Region::U0: return "U0";
  }
  return "?";
}

NegativeBase::NegativeBase(double beta) : beta_(beta) {
  const double q = beta * beta - 1.0;
  m_minus_ = -beta / q;
  m_plus_ = 1.0 / q;
  s_lo_ = -1.0 / (beta * q);
  s_hi_ = 1.0 / q - 1.0 / beta;
  t1_fixed_ = -1.0 / (beta + 1.0);
}

NegativeBase NegativeBase::make(double beta) {
  if (!std::isfinite(beta) || !(beta > 1.0) || !(beta < 2.0)) {
    std::ostringstream os;
    os << "beta must satisfy 1 < beta < 2, got " << beta;
    throw Error(Errc::BetaOutOfRange, os.str());
  }
  NegativeBase b(beta);
  if (!(b.m_minus_ < b.s_lo_ && b.s_lo_ <= b.s_hi_ && b.s_hi_ < b.m_plus_)) {
    throw Error(Errc::BetaOutOfRange, "switch region degenerates for this beta");
  }
  return b;
}

void NegativeBase::require_in_domain(double x) const {
  if (!in_domain(x)) {
    std::ostringstream os;
    os.precision(17);
    os << "x = " << x << " outside [" << m_minus_ << ", " << m_plus_ << "]";
    throw Error(Errc::XOutOfDomain, os.str());
  }
}

double NegativeBase::apply_digit(int digit, double x) const {
  require_in_domain(x);
  double y;
  if (digit == 0) {
    // anchors: fixed point 0, and M+ -> M-
    y = std::abs(x - m_plus_) < std::abs(x) ? m_minus_ - beta_ * (x - m_plus_)
                                            : -beta_ * x;
  } else if (digit == 1) {
    // anchors: fixed point -1/(beta+1), and M- -> M+
    y = std::abs(x - m_minus_) < std::abs(x - t1_fixed_)
            ? m_plus_ - beta_ * (x - m_minus_)
            : t1_fixed_ - beta_ * (x - t1_fixed_);
  } else {
    throw Error(Errc::InvalidArgument, "digit outside {0,1}");
  }
  if (!in_domain(y)) {
    std::ostringstream os;
    os.precision(17);
    os << "orbit left the domain: T_" << digit << "(" << x << ") = " << y;
    throw Error(Errc::XOutOfDomain, os.str());
  }
  return std::clamp(y, m_minus_, m_plus_);
}

// --- Params -----------------------------------------------------------------

std::optional<AlphaPreset> parse_preset(std::string_view name) {
  if (name == "ito-sadahiro") return AlphaPreset::ItoSadahiro;
  if (name == "odd-greedy") return AlphaPreset::OddGreedy;
  if (name == "midpoint") return AlphaPreset::Midpoint;
  if (name == "s-left") return AlphaPreset::SLeft;
  if (name == "s-right") return AlphaPreset::SRight;
  return std::nullopt;
}

const char* to_string(AlphaPreset p) {
  switch (p) {
    case AlphaPreset::ItoSadahiro: return "ito-sadahiro";
    case AlphaPreset::OddGreedy: return "odd-greedy";
    case AlphaPreset::Midpoint: return "midpoint";
    case AlphaPreset::SLeft: return "s-left";
    case AlphaPreset::SRight: return "s-right";
  }
  return "?";
}

double preset_alpha(const NegativeBase& base, AlphaPreset preset) {
  const double b = base.beta();
  switch (preset) {
    case AlphaPreset::ItoSadahiro: return 1.0 / (b + 1.0) - 1.0 / b;
    case AlphaPreset::OddGreedy:
    case AlphaPreset::SLeft: return base.s_lo();
    case AlphaPreset::Midpoint: return -1.0 / (2.0 * (b + 1.0));
    case AlphaPreset::SRight: return base.s_hi();
  }
  return base.s_lo();
}

ExpansionParams make_params(double beta, double alpha) {
  const auto base = NegativeBase::make(beta);
  constexpr double snap = 1e-12;
  if (!std::isfinite(alpha) || alpha < base.s_lo() - snap || alpha > base.s_hi() + snap) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha = " << alpha << " outside switch region [" << base.s_lo() << ", "
       << base.s_hi() << "]";
    throw Error(Errc::AlphaOutsideSwitch, os.str());
  }
  return ExpansionParams(base, std::clamp(alpha, base.s_lo(), base.s_hi()));
}

ExpansionParams make_params(double beta, AlphaPreset preset) {
  const auto base = NegativeBase::make(beta);
  const double a = std::clamp(preset_alpha(base, preset), base.s_lo(), base.s_hi());
  return ExpansionParams(base, a);
}

ExpansionParams make_params(double beta, std::string_view alpha_spec) {
  if (auto preset = parse_preset(alpha_spec)) return make_params(beta, *preset);
  double value = 0.0;
  const char* first = alpha_spec.data();
  const char* last = first + alpha_spec.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || alpha_spec.empty()) {
    throw Error(Errc::UnknownPreset,
                "alpha is neither a number nor a known preset: " + std::string(alpha_spec));
  }
  return make_params(beta, value);
}

Regions regions(const NegativeBase& base) {
  return {{base.m_minus(), base.s_lo()},
          {base.s_lo(), base.s_hi()},
          {base.s_hi(), base.m_plus()}};
}

Evaluation evaluate(double beta, const DigitWord& w) {
  const auto base = NegativeBase::make(beta);
  // Horner from the tail: x_{k-1} = -(b_k + x_k) / beta with x_n = 0.
  double v = 0.0;
  for (std::size_t k = w.size(); k-- > 0;) v = -(static_cast<double>(w[k]) + v) / beta;
  return {v, base.remainder_scale() / std::pow(beta, static_cast<double>(w.size()))};
}

bool digit_feasible(const NegativeBase& base, int digit, double x) {
  base.require_in_domain(x);
  if (digit == 0) return x >= base.s_lo();
  if (digit == 1) return x <= base.s_hi();
  throw Error(Errc::InvalidArgument, "digit outside {0,1}");
}

}  // namespace negbeta
