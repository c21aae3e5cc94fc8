#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "negbeta/core.hpp"

namespace negbeta {

/// Source of coin tosses for the random map; one coin is consumed per visit
/// to the switch region. Either an explicit word (optionally continued by a
/// constant default digit) or a seeded Mersenne twister.
class CoinStream {
 public:
  static CoinStream explicit_word(DigitWord word,
                                  std::optional<int> default_digit = std::nullopt);
  static CoinStream seeded(std::uint64_t seed);
  /// Every toss gives `digit`.
  static CoinStream constant(int digit);

  /// Throws Error(CoinsExhausted) past the end of an explicit word without a
  /// default digit.
  int next();
  std::size_t consumed() const noexcept { return consumed_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

 private:
  CoinStream() = default;

  DigitWord word_;
  std::optional<int> default_digit_;
  std::optional<std::uint64_t> seed_;
  std::mt19937_64 engine_;
  std::size_t consumed_ = 0;
};

struct RandomState {
  double x = 0.0;
  std::size_t coins_consumed = 0;
};

struct KStep {
  int digit = 0;
  RandomState next;
};

/// One step of the skew product: forced digit on U0/U1, a coin on S (closed).
KStep k_step(const NegativeBase& base, const RandomState& state, CoinStream& coins);

/// n steps of k_step from x.
DigitWord random_digits(const NegativeBase& base, double x, CoinStream& coins, std::size_t n);

struct EnumerationResult {
  std::vector<DigitWord> words;  // sorted lexicographically
  bool truncated = false;        // cap reached
};

/// Every length-n prefix of a negative beta-expansion of x: branch on both
/// digits exactly where both are feasible.
EnumerationResult enumerate_expansions(const NegativeBase& base, double x, std::size_t n,
                                       std::size_t cap = 4096);

struct SwitchVisit {
  std::size_t step = 0;         // 0-based step n
  std::size_t digit_index = 0;  // n + 1
  int coin = 0;
};

/// Record of the greedy run: each switch visit fixes the next unused coin,
/// coin 0 on even steps and coin 1 on odd steps. ell[n] is the number of
/// coins fixed after n + 1 steps.
struct GreedyTrace {
  DigitWord digits;
  std::vector<SwitchVisit> switches;
  std::vector<std::size_t> ell;

  /// The coins fixed by the run, in order: any continuation of this word
  /// drives random_digits to the greedy expansion.
  DigitWord coin_word() const;
};

GreedyTrace greedy_digits(const NegativeBase& base, double x, std::size_t n);

struct GreedyWitness {
  double alpha = 0.0;
  double x = 0.0;
  DigitWord r_digits;
  DigitWord greedy;
  std::size_t mismatch_index = 0;  // 1-based
};

/// For each alpha on an evenly spaced grid over S (endpoints included), a
/// point x whose R_{beta,alpha}-digits differ from the greedy digits within
/// `depth` digits. Throws WitnessNotFound if some alpha has none.
std::vector<GreedyWitness> refute_single_alpha_greedy(const NegativeBase& base,
                                                      std::size_t grid,
                                                      std::size_t depth = 2);

enum class Uniqueness { Unique, NotUnique, UndecidedAtHorizon };
const char* to_string(Uniqueness u);

struct UniquenessResult {
  Uniqueness verdict = Uniqueness::UndecidedAtHorizon;
  /// NotUnique: step at which the orbit is in S. Unique: step at which a
  /// point repeats.
  std::size_t step = 0;
  std::size_t cycle_length = 0;  // Unique only
};

/// Follows the forced orbit of x. The first visit to S gives NotUnique; an
/// exact repetition of an earlier point before that certifies Unique.
UniquenessResult classify_uniqueness(const NegativeBase& base, double x, std::size_t horizon);

}  // namespace negbeta
