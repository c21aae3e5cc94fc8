#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace negbeta {

/// Tolerance used when checking that orbit points stay inside [M-, M+].
inline constexpr double kDomainSlack = 1e-9;
/// Gaps narrower than this are merged by IntervalSet.
inline constexpr double kMergeTolerance = 1e-12;

enum class Errc {
  BetaOutOfRange,
  AlphaOutsideSwitch,
  UnknownPreset,
  XOutOfDomain,
  NonConvergence,
  CoinsExhausted,
  WitnessNotFound,
  InvalidArgument,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// ---------------------------------------------------------------------------
// Digit words
// ---------------------------------------------------------------------------

/// Finite word over {0,1}. Positions are 0-based in code; reports that talk
/// about digit indices use the 1-based convention b_1 b_2 ...
class DigitWord {
 public:
  DigitWord() = default;
  explicit DigitWord(std::vector<std::uint8_t> digits);
  /// Parses a string of '0'/'1' characters.
  static DigitWord parse(std::string_view text);
  /// `pattern` repeated `times` times.
  static DigitWord repeat(std::string_view pattern, std::size_t times);

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }
  std::span<const std::uint8_t> view() const noexcept { return digits_; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }

  void push_back(int digit);
  DigitWord prefix(std::size_t n) const;
  DigitWord suffix_from(std::size_t pos) const;
  DigitWord concat(const DigitWord& tail) const;

  std::string str() const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
  friend auto operator<=>(const DigitWord&, const DigitWord&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_);

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Interval& other, double slack = 0.0) const noexcept {
    return lo - slack <= other.lo && other.hi <= hi + slack;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals kept sorted; parts closer than
/// kMergeTolerance are merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts,
                       double merge_tol = kMergeTolerance);

  const std::vector<Interval>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  double measure() const;
  bool contains(double x, double slack = 0.0) const;
  Interval hull() const;

  IntervalSet unite(const IntervalSet& other) const;
  /// Lebesgue measure of the intersection with [lo, hi].
  double overlap(const Interval& iv) const;
  /// Pieces of `iv` not covered by this set.
  std::vector<Interval> uncovered(const Interval& iv) const;
  /// sup over y in `other` of dist(y, *this).
  double excess(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

double symmetric_difference_measure(const IntervalSet& a, const IntervalSet& b);

// ---------------------------------------------------------------------------
// Base constants and parameters
// ---------------------------------------------------------------------------

enum class Region { U1, S, U0 };
const char* to_string(Region r);

/// Constants that depend on beta alone: the domain [M-, M+] and the switch
/// region S = [s_lo, s_hi].
class NegativeBase {
 public:
  /// Throws Error(BetaOutOfRange) unless 1 < beta < 2.
  static NegativeBase make(double beta);

  double beta() const noexcept { return beta_; }
  double m_minus() const noexcept { return m_minus_; }
  double m_plus() const noexcept { return m_plus_; }
  double s_lo() const noexcept { return s_lo_; }
  double s_hi() const noexcept { return s_hi_; }
  /// Fixed point -1/(beta+1) of x -> -beta x - 1.
  double t1_fixed_point() const noexcept { return t1_fixed_; }
  Interval domain() const noexcept { return {m_minus_, m_plus_}; }
  /// max(|M-|, M+) = |M-|, the constant in the remainder bound.
  double remainder_scale() const noexcept { return -m_minus_; }

  bool in_domain(double x) const noexcept {
    return x >= m_minus_ - kDomainSlack && x <= m_plus_ + kDomainSlack;
  }
  /// Throws Error(XOutOfDomain) when x is not in [M-, M+] (within slack).
  void require_in_domain(double x) const;

  Region region_of(double x) const noexcept {
    if (x < s_lo_) return Region::U1;
    if (x > s_hi_) return Region::U0;
    return Region::S;
  }

  /// -beta x - digit, clamped into [M-, M+] when it lands within slack
  /// outside. Evaluated about the nearest of the branch's distinguished
  /// points (its fixed point, or the endpoint it maps to the other endpoint)
  /// so those orbits are reproduced exactly in floating point.
  double apply_digit(int digit, double x) const;

 private:
  NegativeBase(double beta);

  double beta_ = 0.0;
  double m_minus_ = 0.0;
  double m_plus_ = 0.0;
  double s_lo_ = 0.0;
  double s_hi_ = 0.0;
  double t1_fixed_ = 0.0;
};

enum class AlphaPreset { ItoSadahiro, OddGreedy, Midpoint, SLeft, SRight };

std::optional<AlphaPreset> parse_preset(std::string_view name);
const char* to_string(AlphaPreset p);
double preset_alpha(const NegativeBase& base, AlphaPreset preset);

/// (beta, alpha) with alpha in the switch region.
class ExpansionParams {
 public:
  const NegativeBase& base() const noexcept { return base_; }
  double beta() const noexcept { return base_.beta(); }
  double alpha() const noexcept { return alpha_; }
  double m_minus() const noexcept { return base_.m_minus(); }
  double m_plus() const noexcept { return base_.m_plus(); }
  double s_lo() const noexcept { return base_.s_lo(); }
  double s_hi() const noexcept { return base_.s_hi(); }

 private:
  friend ExpansionParams make_params(double beta, double alpha);
  friend ExpansionParams make_params(double beta, AlphaPreset preset);
  ExpansionParams(NegativeBase base, double alpha) : base_(base), alpha_(alpha) {}

  NegativeBase base_;
  double alpha_;
};

/// Throws BetaOutOfRange or AlphaOutsideSwitch. A numeric alpha within 1e-12
/// outside S is snapped to the nearest endpoint.
ExpansionParams make_params(double beta, double alpha);
ExpansionParams make_params(double beta, AlphaPreset preset);
/// `alpha_spec` is either a number or a preset name; throws UnknownPreset.
ExpansionParams make_params(double beta, std::string_view alpha_spec);

/// Partition of [M-, M+]: U1 = [M-, s_lo), S = [s_lo, s_hi], U0 = (s_hi, M+].
/// The half-open ends are implied by the roles; Interval stores closures.
struct Regions {
  Interval u1;
  Interval s;
  Interval u0;
};

Regions regions(const NegativeBase& base);
inline Regions regions(const ExpansionParams& p) { return regions(p.base()); }

struct Evaluation {
  double value = 0.0;
  double error_bound = 0.0;
};

/// sum_{k=1..n} (-1)^k w_k / beta^k, with the bound |M-|/beta^n on the
/// distance to the value of any infinite extension.
Evaluation evaluate(double beta, const DigitWord& w);

/// Digit 0 is feasible iff x >= s_lo, digit 1 iff x <= s_hi.
bool digit_feasible(const NegativeBase& base, int digit, double x);
inline bool digit_feasible(const ExpansionParams& p, int digit, double x) {
  return digit_feasible(p.base(), digit, x);
}

}  // namespace negbeta
