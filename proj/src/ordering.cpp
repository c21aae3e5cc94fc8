#include "negbeta/ordering.hpp"

#include <algorithm>

#include "negbeta/transforms.hpp"

namespace negbeta {

const char* to_string(AltRelation r) {
  switch (r) {
    case AltRelation::Less: return "LT";
    case AltRelation::Greater: return "GT";
    case AltRelation::EqualPrefix: return "EQ_PREFIX";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Admissible: return "Admissible";
    case Verdict::Inadmissible: return "Inadmissible";
    case Verdict::UndecidedAtDepth: return "UndecidedAtDepth";
  }
  return "?";
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::Lower1: return "lower-1";
    case Condition::Upper1: return "upper-1";
    case Condition::Lower0: return "lower-0";
    case Condition::Upper0: return "upper-0";
  }
  return "?";
}

AltVerdict alt_compare(std::span<const std::uint8_t> b, std::span<const std::uint8_t> d) {
  const std::size_t n = std::min(b.size(), d.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] == d[i]) continue;
    const std::size_t pos = i + 1;
    const int diff = static_cast<int>(b[i]) - static_cast<int>(d[i]);
    const int signed_diff = (pos % 2 == 0) ? diff : -diff;
    return {signed_diff < 0 ? AltRelation::Less : AltRelation::Greater, pos};
  }
  return {AltRelation::EqualPrefix, std::nullopt};
}

ReferenceSequences reference_sequences(const ExpansionParams& p, std::size_t depth) {
  if (depth == 0) throw Error(Errc::InvalidArgument, "reference depth must be >= 1");
  return {digits_R(p, p.m_minus(), depth).digits, digits_R(p, p.m_plus(), depth).digits,
          digits_R(p, p.alpha(), depth).digits, digits_alt(p, p.alpha(), depth).digits};
}

namespace {

enum class Check { Pass, Fail, Undecided };

// lower <= tail (strict = false) or lower < tail (strict = true)
Check at_least(std::span<const std::uint8_t> lower, std::span<const std::uint8_t> tail) {
  const auto v = alt_compare(lower, tail);
  if (v.relation == AltRelation::Less) return Check::Pass;
  if (v.relation == AltRelation::Greater) return Check::Fail;
  return tail.size() < lower.size() ? Check::Pass : Check::Undecided;
}

// tail <= upper or tail < upper
Check at_most(std::span<const std::uint8_t> tail, std::span<const std::uint8_t> upper) {
  const auto v = alt_compare(tail, upper);
  if (v.relation == AltRelation::Less) return Check::Pass;
  if (v.relation == AltRelation::Greater) return Check::Fail;
  return tail.size() < upper.size() ? Check::Pass : Check::Undecided;
}

}  // namespace

AdmissibilityReport is_admissible(const ReferenceSequences& refs, const DigitWord& w) {
  const auto word = w.view();
  bool undecided = false;
  for (std::size_t i = word.size(); i-- > 0;) {
    const auto tail = word.subspan(i);
    Check lower, upper;
    Condition lower_tag, upper_tag;
    if (word[i] == 1) {
      lower = at_least(refs.b_m_minus.view(), tail);
      upper = at_most(tail, refs.d_alpha.view());
      lower_tag = Condition::Lower1;
      upper_tag = Condition::Upper1;
    } else {
      lower = at_least(refs.b_alpha.view(), tail);
      upper = at_most(tail, refs.b_m_plus.view());
      lower_tag = Condition::Lower0;
      upper_tag = Condition::Upper0;
    }
    if (lower == Check::Fail) return {Verdict::Inadmissible, i + 1, lower_tag};
    if (upper == Check::Fail) return {Verdict::Inadmissible, i + 1, upper_tag};
    undecided = undecided || lower == Check::Undecided || upper == Check::Undecided;
  }
  if (undecided) return {Verdict::UndecidedAtDepth, std::nullopt, std::nullopt};
  return {Verdict::Admissible, std::nullopt, std::nullopt};
}

AdmissibilityReport is_admissible(const ExpansionParams& p, const DigitWord& w,
                                  std::size_t depth) {
  if (w.empty()) return {};
  if (depth == 0) depth = 4 * w.size();
  return is_admissible(reference_sequences(p, depth), w);
}

}  // namespace negbeta
