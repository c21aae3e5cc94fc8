#pragma once

#include <optional>
#include <vector>

#include "negbeta/core.hpp"

namespace negbeta {

struct StepResult {
  int digit = 0;
  double next = 0.0;
};

/// R: digit 1 iff x < alpha.
StepResult step_R(const ExpansionParams& p, double x);
/// L: digit 1 iff x <= alpha. Agrees with step_R everywhere except at alpha.
StepResult step_L(const ExpansionParams& p, double x);

/// x, Tx, T^2x, ... together with the digits emitted along the way;
/// points.size() == digits.size() + 1.
struct OrbitRecord {
  std::vector<double> points;
  DigitWord digits;
};

/// n applications of R starting at x.
OrbitRecord digits_R(const ExpansionParams& p, double x, std::size_t n);

/// The alternating sequence L_1 = L, L_2 = R∘L, L_3 = L∘R∘L, ...: odd digit
/// positions use L's rule (<= alpha), even positions use R's (< alpha).
/// points[k] is L_k x.
OrbitRecord digits_alt(const ExpansionParams& p, double x, std::size_t n);

/// The two-digit Ito–Sadahiro map on [-beta/(beta+1), 1/(beta+1)]; equals L
/// with alpha = 1/(beta+1) - 1/beta.
StepResult ito_sadahiro_step(double beta, double x);
Interval ito_sadahiro_domain(double beta);

/// theta(x) = -1/(beta+1) - x conjugates L_{beta,alpha} to R_{beta,alpha~}.
double theta(const NegativeBase& base, double x);

struct Conjugate {
  double alpha_tilde = 0.0;
  ExpansionParams params;  // (beta, alpha_tilde)
};

Conjugate conjugate_alpha(const ExpansionParams& p);

/// Digits of the odd-greedy map built from the partial-sum inequalities
/// rather than by iterating the map: at each position pick the smallest
/// digit for which the extreme admissible tail (01)^inf still brackets x.
DigitWord odd_greedy_digits(double beta, double x, std::size_t n);

/// Closure of { x : the first |w| R-digits of x are w }, or nullopt when no
/// point generates w.
std::optional<Interval> cylinder(const ExpansionParams& p, const DigitWord& w);

}  // namespace negbeta
