#include "negbeta/random_expansion.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "negbeta/transforms.hpp"

namespace negbeta {

CoinStream CoinStream::explicit_word(DigitWord word, std::optional<int> default_digit) {
  if (default_digit && *default_digit != 0 && *default_digit != 1) {
    throw Error(Errc::InvalidArgument, "default coin must be 0 or 1");
  }
  CoinStream c;
  c.word_ = std::move(word);
  c.default_digit_ = default_digit;
  return c;
}

CoinStream CoinStream::seeded(std::uint64_t seed) {
  CoinStream c;
  c.seed_ = seed;
  c.engine_.seed(seed);
  return c;
}

CoinStream CoinStream::constant(int digit) { return explicit_word({}, digit); }

int CoinStream::next() {
  int coin;
  if (seed_) {
    coin = static_cast<int>(engine_() >> 63);
  } else if (consumed_ < word_.size()) {
    coin = word_[consumed_];
  } else if (default_digit_) {
    coin = *default_digit_;
  } else {
    throw Error(Errc::CoinsExhausted,
                "coin word of length " + std::to_string(word_.size()) + " exhausted");
  }
  ++consumed_;
  return coin;
}

KStep k_step(const NegativeBase& base, const RandomState& state, CoinStream& coins) {
  base.require_in_domain(state.x);
  KStep out;
  out.next.coins_consumed = state.coins_consumed;
  switch (base.region_of(state.x)) {
    case Region::U1: out.digit = 1; break;
    case Region::U0: out.digit = 0; break;
    case Region::S:
      out.digit = coins.next();
      ++out.next.coins_consumed;
      break;
  }
  out.next.x = base.apply_digit(out.digit, state.x);
  return out;
}

DigitWord random_digits(const NegativeBase& base, double x, CoinStream& coins, std::size_t n) {
  DigitWord out;
  RandomState st{x, 0};
  for (std::size_t k = 0; k < n; ++k) {
    const auto s = k_step(base, st, coins);
    out.push_back(s.digit);
    st = s.next;
  }
  return out;
}

EnumerationResult enumerate_expansions(const NegativeBase& base, double x, std::size_t n,
                                       std::size_t cap) {
  base.require_in_domain(x);
  EnumerationResult res;
  std::vector<std::uint8_t> prefix;
  prefix.reserve(n);

  std::function<bool(double)> walk = [&](double y) {
    if (prefix.size() == n) {
      if (res.words.size() == cap) {
        res.truncated = true;
        return false;
      }
      res.words.emplace_back(prefix);
      return true;
    }
    for (int d = 0; d <= 1; ++d) {
      if (!digit_feasible(base, d, y)) continue;
      prefix.push_back(static_cast<std::uint8_t>(d));
      const bool go_on = walk(base.apply_digit(d, y));
      prefix.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  walk(x);
  std::sort(res.words.begin(), res.words.end());
  return res;
}

DigitWord GreedyTrace::coin_word() const {
  DigitWord w;
  for (const auto& s : switches) w.push_back(s.coin);
  return w;
}

GreedyTrace greedy_digits(const NegativeBase& base, double x, std::size_t n) {
  base.require_in_domain(x);
  GreedyTrace tr;
  tr.ell.reserve(n);
  double y = x;
  std::size_t ell = 0;
  for (std::size_t step = 0; step < n; ++step) {
    int d;
    switch (base.region_of(y)) {
      case Region::U1: d = 1; break;
      case Region::U0: d = 0; break;
      case Region::S:
      default:
        // maximise in the alternate order: 0 at odd digit positions,
        // 1 at even ones
        d = (step % 2 == 0) ? 0 : 1;
        tr.switches.push_back({step, step + 1, d});
        ++ell;
        break;
    }
    tr.digits.push_back(d);
    tr.ell.push_back(ell);
    y = base.apply_digit(d, y);
  }
  return tr;
}

std::vector<GreedyWitness> refute_single_alpha_greedy(const NegativeBase& base,
                                                      std::size_t grid, std::size_t depth) {
  if (grid == 0) throw Error(Errc::InvalidArgument, "grid must be >= 1");
  if (depth == 0) throw Error(Errc::InvalidArgument, "depth must be >= 1");
  const double beta = base.beta();
  const double s_lo = base.s_lo();
  const double s_hi = base.s_hi();

  std::vector<GreedyWitness> out;
  out.reserve(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = grid == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(grid - 1);
    const auto p = make_params(beta, s_lo + t * (s_hi - s_lo));
    const double alpha = p.alpha();

    // S itself (mismatch at the first digit when x < alpha) and the two
    // branch preimages of S (mismatch at the second digit).
    std::vector<Interval> pieces;
    auto add = [&](double lo, double hi) {
      if (hi > lo) pieces.push_back({lo, hi});
    };
    add(s_lo, std::min(alpha, s_hi));
    add(std::max(alpha, -s_hi / beta), std::min(base.m_plus(), -s_lo / beta));
    add(std::max(base.m_minus(), -(s_hi + 1.0) / beta), std::min(alpha, -(s_lo + 1.0) / beta));
    add(alpha, s_hi);
    pieces.push_back(base.domain());

    std::optional<GreedyWitness> found;
    for (const auto& piece : pieces) {
      constexpr int samples = 64;
      for (int j = 1; j <= samples && !found; ++j) {
        const double x = piece.lo + piece.length() * j / (samples + 1.0);
        const auto r = digits_R(p, x, depth).digits;
        const auto g = greedy_digits(base, x, depth).digits;
        for (std::size_t k = 0; k < depth; ++k) {
          if (r[k] != g[k]) {
            found = GreedyWitness{alpha, x, r, g, k + 1};
            break;
          }
        }
      }
      if (found) break;
    }
    if (!found) {
      throw Error(Errc::WitnessNotFound,
                  "no greedy mismatch found for alpha = " + std::to_string(alpha));
    }
    out.push_back(std::move(*found));
  }
  return out;
}

const char* to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::Unique: return "Unique";
    case Uniqueness::NotUnique: return "NotUnique";
    case Uniqueness::UndecidedAtHorizon: return "UndecidedAtHorizon";
  }
  return "?";
}

UniquenessResult classify_uniqueness(const NegativeBase& base, double x, std::size_t horizon) {
  base.require_in_domain(x);
  std::unordered_map<double, std::size_t> seen;
  double y = x;
  for (std::size_t step = 0; step < horizon; ++step) {
    const auto region = base.region_of(y);
    if (region == Region::S) return {Uniqueness::NotUnique, step, 0};
    const double key = y + 0.0;  // folds -0.0 onto 0.0
    if (auto it = seen.find(key); it != seen.end()) {
      return {Uniqueness::Unique, step, step - it->second};
    }
    seen.emplace(key, step);
    y = base.apply_digit(region == Region::U1 ? 1 : 0, y);
  }
  return {Uniqueness::UndecidedAtHorizon, horizon, 0};
}

}  // namespace negbeta
