#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "negbeta/core.hpp"

namespace negbeta {

enum class AltRelation { Less, Greater, EqualPrefix };
const char* to_string(AltRelation r);

/// Outcome of an alternate-order comparison. first_diff is the 1-based index
/// of the first differing digit, absent for EqualPrefix.
struct AltVerdict {
  AltRelation relation = AltRelation::EqualPrefix;
  std::optional<std::size_t> first_diff;
};

/// b < d iff at the first difference n, (-1)^n (b_n - d_n) < 0. Only the
/// common prefix is inspected.
AltVerdict alt_compare(std::span<const std::uint8_t> b, std::span<const std::uint8_t> d);
inline AltVerdict alt_compare(const DigitWord& b, const DigitWord& d) {
  return alt_compare(b.view(), d.view());
}

struct ReferenceSequences {
  DigitWord b_m_minus;  // b(M-)
  DigitWord b_m_plus;   // b(M+)
  DigitWord b_alpha;    // b(alpha)
  DigitWord d_alpha;    // d(alpha), the left limit of b at alpha
};

ReferenceSequences reference_sequences(const ExpansionParams& p, std::size_t depth);

enum class Verdict { Admissible, Inadmissible, UndecidedAtDepth };
enum class Condition { Lower1, Upper1, Lower0, Upper0 };
const char* to_string(Verdict v);
const char* to_string(Condition c);

struct AdmissibilityReport {
  Verdict verdict = Verdict::Admissible;
  std::optional<std::size_t> failing_index;  // 1-based
  std::optional<Condition> failing_condition;
};

/// Checks every tail w_n w_{n+1} ... of a finite word against the reference
/// sequences:
///   w_n = 1:  b(M-) <= tail < d(alpha)
///   w_n = 0:  b(alpha) <= tail <= b(M+)
/// A tail that agrees with a reference on the whole of its length can still
/// be extended either way, so it passes; only when the reference runs out
/// first is the comparison undecided. When several tails fail, the largest
/// failing index is reported: that is the position from which the word
/// stops being realisable.
///
/// depth == 0 selects the default reference depth 4 * |w|.
AdmissibilityReport is_admissible(const ExpansionParams& p, const DigitWord& w,
                                  std::size_t depth = 0);
AdmissibilityReport is_admissible(const ReferenceSequences& refs, const DigitWord& w);

}  // namespace negbeta
