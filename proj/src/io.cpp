#include "negbeta/io.hpp"

#include <cstdio>
#include <ostream>

namespace negbeta {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void to_json(nlohmann::json& j, const DigitWord& w) {
  j = nlohmann::json::array();
  for (auto d : w.digits()) j.push_back(static_cast<int>(d));
}

void to_json(nlohmann::json& j, const Interval& iv) { j = {iv.lo, iv.hi}; }

void to_json(nlohmann::json& j, const IntervalSet& set) {
  j = nlohmann::json::array();
  for (const auto& iv : set.parts()) j.push_back(iv);
}

void to_json(nlohmann::json& j, const AltVerdict& v) {
  j = {{"relation", to_string(v.relation)}, {"first_diff", nullptr}};
  if (v.first_diff) j["first_diff"] = *v.first_diff;
}

void to_json(nlohmann::json& j, const AdmissibilityReport& r) {
  j = {{"verdict", to_string(r.verdict)},
       {"failing_index", nullptr},
       {"failing_condition", nullptr}};
  if (r.failing_index) j["failing_index"] = *r.failing_index;
  if (r.failing_condition) j["failing_condition"] = to_string(*r.failing_condition);
}

void to_json(nlohmann::json& j, const SupportResult& r) {
  j = {{"support", r.support},
       {"components", r.support.size()},
       {"measure", r.support.measure()},
       {"iterations", r.iterations},
       {"status", to_string(r.status)},
       {"invariance_residual", r.invariance_residual}};
}

void to_json(nlohmann::json& j, const DensityEstimate& d) {
  const auto dens = d.density();
  nlohmann::json bins = nlohmann::json::array();
  for (Eigen::Index i = 0; i < d.bins(); ++i) {
    bins.push_back({d.bin_edges[i], d.bin_edges[i + 1], dens[i]});
  }
  j = {{"domain", d.domain},
       {"normalization", "Probability"},
       {"bins", d.bins()},
       {"stationarity_residual", d.stationarity_residual},
       {"iterations", d.iterations},
       {"columns", {"bin_lo", "bin_hi", "density"}},
       {"data", std::move(bins)}};
}

void to_json(nlohmann::json& j, const GreedyTrace& t) {
  nlohmann::json sw = nlohmann::json::array();
  for (const auto& s : t.switches) {
    sw.push_back({{"step", s.step}, {"digit_index", s.digit_index}, {"coin", s.coin}});
  }
  j = {{"digits", t.digits},
       {"digits_str", t.digits.str()},
       {"switch_times", std::move(sw)},
       {"ell", t.ell},
       {"coin_word", t.coin_word().str()}};
}

void to_json(nlohmann::json& j, const GreedyWitness& w) {
  j = {{"alpha", w.alpha},
       {"x", w.x},
       {"r_digits", w.r_digits.str()},
       {"greedy_digits", w.greedy.str()},
       {"mismatch_index", w.mismatch_index}};
}

void to_json(nlohmann::json& j, const UniquenessResult& u) {
  j = {{"verdict", to_string(u.verdict)}, {"step", u.step}};
  if (u.verdict == Uniqueness::Unique) j["cycle_length"] = u.cycle_length;
}

void from_json(const nlohmann::json& j, DigitWord& w) {
  std::vector<std::uint8_t> digits;
  for (const auto& d : j) digits.push_back(d.get<std::uint8_t>());
  w = DigitWord(std::move(digits));
}

void from_json(const nlohmann::json& j, Interval& iv) {
  iv = Interval(j.at(0).get<double>(), j.at(1).get<double>());
}

void from_json(const nlohmann::json& j, IntervalSet& set) {
  set = IntervalSet(j.get<std::vector<Interval>>());
}

void write_density_csv(std::ostream& os, const DensityEstimate& d) {
  const auto dens = d.density();
  os << "bin_lo,bin_hi,density\n";
  for (Eigen::Index i = 0; i < d.bins(); ++i) {
    os << format_real(d.bin_edges[i]) << ',' << format_real(d.bin_edges[i + 1]) << ','
       << format_real(dens[i]) << '\n';
  }
}

}  // namespace negbeta
