#include "negbeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "negbeta/core.hpp"
#include "negbeta/io.hpp"
#include "negbeta/measure.hpp"
#include "negbeta/ordering.hpp"
#include "negbeta/random_expansion.hpp"
#include "negbeta/transforms.hpp"

#ifndef NEGBETA_VERSION
#define NEGBETA_VERSION "0.0.0"
#endif

namespace negbeta::cli {

using nlohmann::json;

const std::vector<SubcommandInfo>& subcommands() {
  static const std::vector<SubcommandInfo> table = {
      {"regions", "switch region, uniqueness regions, feasibility of x, conjugate cut point",
       {"make_params", "regions", "digit_feasible", "conjugate_alpha"}},
      {"expand", "digits of x under R (or L, or the Ito-Sadahiro map) and their value",
       {"step_R", "step_L", "ito_sadahiro_step", "digits_R", "evaluate"}},
      {"expand-alt", "digits d(x) of the alternating sequence L_n", {"digits_alt"}},
      {"odd-greedy", "odd-greedy digits from the partial-sum recursion", {"odd_greedy_digits"}},
      {"compare", "alternate-order comparison of --word and --other", {"alt_compare"}},
      {"admissible", "admissibility of --word for R", {"is_admissible", "reference_sequences"}},
      {"cylinder", "fundamental interval of --word", {"cylinder"}},
      {"support", "support of the acim of R", {"support", "invariant_window"}},
      {"density", "invariant density (Ulam, direct or via the factor map)",
       {"ulam_density", "density_R_via_factor"}},
      {"factor-check", "checks W∘tau = tau∘T and the half-interval swap of T", {"factor_maps"}},
      {"random", "random expansion driven by --coins or --seed", {"random_digits", "k_step"}},
      {"enumerate", "all length-depth expansion prefixes of x", {"enumerate_expansions"}},
      {"greedy", "greedy expansion via coin choices, with trace", {"greedy_digits"}},
      {"refute-greedy", "per-alpha witnesses that R never yields greedy expansions",
       {"refute_single_alpha_greedy"}},
      {"unique", "uniqueness of the expansion of x", {"classify_uniqueness"}},
      {"unique-scan", "uniqueness on a grid over (M-, M+) (batch form of unique)", {}},
  };
  return table;
}

const std::vector<std::string_view>& library_operations() {
  static const std::vector<std::string_view> ops = {
      "make_params",     "regions",          "evaluate",
      "digit_feasible",  "step_R",           "step_L",
      "digits_R",        "digits_alt",       "ito_sadahiro_step",
      "conjugate_alpha", "odd_greedy_digits", "cylinder",
      "alt_compare",     "reference_sequences", "is_admissible",
      "invariant_window", "support",         "factor_maps",
      "ulam_density",    "density_R_via_factor", "k_step",
      "random_digits",   "enumerate_expansions", "greedy_digits",
      "refute_single_alpha_greedy", "classify_uniqueness",
  };
  return ops;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  double beta = 0.0;
  std::string alpha;
  double x = 0.0;
  std::size_t depth = 0;
  std::size_t bins = 4096;
  std::uint64_t seed = 0;
  std::string coins;
  int default_coin = -1;
  std::size_t grid = 0;
  std::size_t horizon = 10000;
  double tol = 0.0;
  std::string format = "json";
  std::size_t max_iter = 0;
  std::size_t cap = 4096;
  std::string word;
  std::string other;
  std::string map = "R";
  std::string method = "direct";

  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& name) const { return opts.at(name)->count() > 0; }
  void need(const std::string& name) const {
    if (!given(name)) throw UsageError("missing required flag --" + name);
  }
};

struct Context {
  std::string command;
  const Flags& flags;
  std::ostream& out;

  NegativeBase base() const {
    flags.need("beta");
    return NegativeBase::make(flags.beta);
  }
  ExpansionParams params() const {
    flags.need("beta");
    flags.need("alpha");
    return make_params(flags.beta, flags.alpha);
  }

  json envelope(const json& result, std::optional<double> alpha) const {
    json j;
    j["command"] = command;
    j["version"] = NEGBETA_VERSION;
    j["beta"] = flags.given("beta") ? json(flags.beta) : json(nullptr);
    j["alpha"] = alpha ? json(*alpha) : json(nullptr);
    j["seed"] = flags.seed;
    j["result"] = result;
    return j;
  }
  void emit(const json& result, std::optional<double> alpha = std::nullopt) const {
    out << envelope(result, alpha).dump(2) << '\n';
  }
};

json orbit_json(const NegativeBase& base, double x, const DigitWord& digits,
                const std::vector<double>* points) {
  const auto ev = evaluate(base.beta(), digits);
  json j = {{"x", x},
            {"digits", digits},
            {"digits_str", digits.str()},
            {"value", ev.value},
            {"residual", std::abs(x - ev.value)},
            {"error_bound", ev.error_bound}};
  if (points) j["orbit"] = *points;
  return j;
}

std::string interval_text(const Interval& iv, char open, char close) {
  return std::string(1, open) + format_real(iv.lo) + ", " + format_real(iv.hi) + close;
}

void cmd_regions(const Context& c) {
  const auto base = c.base();
  const auto r = regions(base);
  json j = {{"m_minus", base.m_minus()},
            {"m_plus", base.m_plus()},
            {"U1", r.u1},
            {"S", r.s},
            {"U0", r.u0},
            {"U1_text", interval_text(r.u1, '[', ')')},
            {"S_text", interval_text(r.s, '[', ']')},
            {"U0_text", interval_text(r.u0, '(', ']')}};
  std::optional<double> alpha;
  if (c.flags.given("alpha")) {
    const auto p = c.params();
    alpha = p.alpha();
    j["alpha_tilde"] = conjugate_alpha(p).alpha_tilde;
  }
  if (c.flags.given("x")) {
    const double x = c.flags.x;
    j["x"] = x;
    j["region"] = to_string(base.region_of(x));
    j["feasible"] = {{"0", digit_feasible(base, 0, x)}, {"1", digit_feasible(base, 1, x)}};
  }
  c.emit(j, alpha);
}

void cmd_expand(const Context& c) {
  c.flags.need("x");
  c.flags.need("depth");
  const auto base = c.base();
  const double x = c.flags.x;
  const std::size_t n = c.flags.depth;
  if (c.flags.map == "ito-sadahiro") {
    DigitWord digits;
    std::vector<double> pts{x};
    for (std::size_t k = 0; k < n; ++k) {
      const auto s = ito_sadahiro_step(base.beta(), pts.back());
      digits.push_back(s.digit);
      pts.push_back(s.next);
    }
    auto j = orbit_json(base, x, digits, &pts);
    j["map"] = "ito-sadahiro";
    c.emit(j, preset_alpha(base, AlphaPreset::ItoSadahiro));
    return;
  }
  const auto p = c.params();
  OrbitRecord rec;
  if (c.flags.map == "R") {
    rec = digits_R(p, x, n);
  } else if (c.flags.map == "L") {
    rec.points.push_back(x);
    for (std::size_t k = 0; k < n; ++k) {
      const auto s = step_L(p, rec.points.back());
      rec.digits.push_back(s.digit);
      rec.points.push_back(s.next);
    }
  } else {
    throw UsageError("--map must be R, L or ito-sadahiro, got '" + c.flags.map + "'");
  }
  auto j = orbit_json(base, x, rec.digits, &rec.points);
  j["map"] = c.flags.map;
  c.emit(j, p.alpha());
}

void cmd_expand_alt(const Context& c) {
  c.flags.need("x");
  c.flags.need("depth");
  const auto p = c.params();
  const auto rec = digits_alt(p, c.flags.x, c.flags.depth);
  c.emit(orbit_json(p.base(), c.flags.x, rec.digits, &rec.points), p.alpha());
}

void cmd_odd_greedy(const Context& c) {
  c.flags.need("x");
  c.flags.need("depth");
  const auto base = c.base();
  const auto w = odd_greedy_digits(base.beta(), c.flags.x, c.flags.depth);
  c.emit(orbit_json(base, c.flags.x, w, nullptr), base.s_lo());
}

void cmd_compare(const Context& c) {
  c.flags.need("word");
  c.flags.need("other");
  const auto v = alt_compare(DigitWord::parse(c.flags.word), DigitWord::parse(c.flags.other));
  c.emit({{"word", c.flags.word}, {"other", c.flags.other}, {"verdict", v}});
}

void cmd_admissible(const Context& c) {
  c.flags.need("word");
  const auto p = c.params();
  const auto w = DigitWord::parse(c.flags.word);
  const std::size_t depth = c.flags.given("depth") ? c.flags.depth : 4 * std::max<std::size_t>(w.size(), 1);
  const auto refs = reference_sequences(p, depth);
  c.emit({{"word", c.flags.word},
          {"report", is_admissible(refs, w)},
          {"reference_depth", depth},
          {"references",
           {{"b_m_minus", refs.b_m_minus.str()},
            {"b_m_plus", refs.b_m_plus.str()},
            {"b_alpha", refs.b_alpha.str()},
            {"d_alpha", refs.d_alpha.str()}}}},
         p.alpha());
}

void cmd_cylinder(const Context& c) {
  c.flags.need("word");
  const auto p = c.params();
  const auto cyl = cylinder(p, DigitWord::parse(c.flags.word));
  json j = {{"word", c.flags.word}, {"empty", !cyl.has_value()}, {"interval", nullptr}};
  if (cyl) {
    j["interval"] = *cyl;
    j["width"] = cyl->length();
  }
  c.emit(j, p.alpha());
}

void cmd_support(const Context& c) {
  const auto p = c.params();
  const std::size_t max_iter = c.flags.given("max-iter") ? c.flags.max_iter : 1000;
  const double tol = c.flags.given("tol") ? c.flags.tol : 1e-10;
  json j = support(p, max_iter, tol);
  j["invariant_window"] = invariant_window(p);
  c.emit(j, p.alpha());
}

void cmd_density(const Context& c) {
  const auto p = c.params();
  const double tol = c.flags.given("tol") ? c.flags.tol : 1e-12;
  const std::size_t max_iter = c.flags.given("max-iter") ? c.flags.max_iter : 100000;
  DensityEstimate d;
  if (c.flags.method == "direct") {
    const auto hull = support(p).support.hull();
    d = ulam_density(piecewise_R(p), hull, c.flags.bins, tol, max_iter);
  } else if (c.flags.method == "factor") {
    d = density_R_via_factor(p, c.flags.bins);
  } else {
    throw UsageError("--method must be direct or factor, got '" + c.flags.method + "'");
  }
  if (c.flags.format == "csv") {
    write_density_csv(c.out, d);
    return;
  }
  json j = d;
  j["method"] = c.flags.method;
  c.emit(j, p.alpha());
}

void cmd_factor_check(const Context& c) {
  const auto p = c.params();
  const std::size_t grid = c.flags.given("grid") ? c.flags.grid : 10000;
  if (grid < 2) throw UsageError("--grid must be at least 2");
  const FactorMaps f(p);
  const auto breaks = f.t_breakpoints();
  constexpr double exclusion = 1e-8;
  double worst = 0.0;
  std::size_t checked = 0;
  std::size_t alternation_failures = 0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = f.full() * (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
    const bool near_break = std::any_of(breaks.begin(), breaks.end(), [&](double b) {
      return std::abs(x - b) < exclusion;
    });
    if (near_break) continue;
    ++checked;
    worst = std::max(worst, std::abs(f.W(f.tau(x)) - f.tau(f.T(x))));
    const double tx = f.T(x);
    const bool left = x < f.half();
    const bool swapped = left ? (tx > f.half()) : (tx < f.half());
    if (!swapped && tx != f.half()) ++alternation_failures;
  }
  c.emit({{"phi_shift", f.phi(0.0)},
          {"half", f.half()},
          {"w_break", f.w_break()},
          {"t_breakpoints", breaks},
          {"grid", grid},
          {"points_checked", checked},
          {"max_factor_defect", worst},
          {"alternation_failures", alternation_failures}},
         p.alpha());
}

CoinStream coin_stream(const Flags& flags) {
  if (flags.given("coins")) {
    std::optional<int> fallback;
    if (flags.default_coin >= 0) fallback = flags.default_coin;
    return CoinStream::explicit_word(DigitWord::parse(flags.coins), fallback);
  }
  return CoinStream::seeded(flags.seed);
}

void cmd_random(const Context& c) {
  c.flags.need("x");
  c.flags.need("depth");
  const auto base = c.base();
  auto coins = coin_stream(c.flags);
  const auto w = random_digits(base, c.flags.x, coins, c.flags.depth);
  auto j = orbit_json(base, c.flags.x, w, nullptr);
  j["coins_consumed"] = coins.consumed();
  j["coin_source"] = c.flags.given("coins") ? "explicit" : "seeded";
  c.emit(j);
}

void cmd_enumerate(const Context& c) {
  c.flags.need("x");
  c.flags.need("depth");
  const auto base = c.base();
  const auto r = enumerate_expansions(base, c.flags.x, c.flags.depth, c.flags.cap);
  json words = json::array();
  for (const auto& w : r.words) words.push_back(w.str());
  c.emit({{"x", c.flags.x},
          {"count", r.words.size()},
          {"truncated", r.truncated},
          {"words", std::move(words)}});
}

void cmd_greedy(const Context& c) {
  c.flags.need("x");
  c.flags.need("depth");
  const auto base = c.base();
  json j = greedy_digits(base, c.flags.x, c.flags.depth);
  j["x"] = c.flags.x;
  c.emit(j);
}

void cmd_refute(const Context& c) {
  const auto base = c.base();
  const std::size_t grid = c.flags.given("grid") ? c.flags.grid : 100;
  const std::size_t depth = c.flags.given("depth") ? c.flags.depth : 2;
  const auto witnesses = refute_single_alpha_greedy(base, grid, depth);
  c.emit({{"grid", grid}, {"count", witnesses.size()}, {"witnesses", witnesses}});
}

void cmd_unique(const Context& c) {
  c.flags.need("x");
  const auto base = c.base();
  json j = classify_uniqueness(base, c.flags.x, c.flags.horizon);
  j["x"] = c.flags.x;
  c.emit(j);
}

void cmd_unique_scan(const Context& c) {
  const auto base = c.base();
  const std::size_t grid = c.flags.given("grid") ? c.flags.grid : 1000;
  if (grid == 0) throw UsageError("--grid must be positive");
  std::vector<std::pair<double, UniquenessResult>> rows;
  rows.reserve(grid);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid + 1);
    const double x = base.m_minus() + t * (base.m_plus() - base.m_minus());
    rows.emplace_back(x, classify_uniqueness(base, x, c.flags.horizon));
  }
  if (c.flags.format == "csv") {
    c.out << "x,verdict,step\n";
    for (const auto& [x, r] : rows) {
      c.out << format_real(x) << ',' << to_string(r.verdict) << ',' << r.step << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& [x, r] : rows) {
    json e = r;
    e["x"] = x;
    arr.push_back(std::move(e));
  }
  c.emit({{"grid", grid}, {"horizon", c.flags.horizon}, {"points", std::move(arr)}});
}

using Handler = void (*)(const Context&);

const std::map<std::string_view, Handler>& handlers() {
  static const std::map<std::string_view, Handler> h = {
      {"regions", cmd_regions},       {"expand", cmd_expand},
      {"expand-alt", cmd_expand_alt}, {"odd-greedy", cmd_odd_greedy},
      {"compare", cmd_compare},       {"admissible", cmd_admissible},
      {"cylinder", cmd_cylinder},     {"support", cmd_support},
      {"density", cmd_density},       {"factor-check", cmd_factor_check},
      {"random", cmd_random},         {"enumerate", cmd_enumerate},
      {"greedy", cmd_greedy},         {"refute-greedy", cmd_refute},
      {"unique", cmd_unique},         {"unique-scan", cmd_unique_scan},
  };
  return h;
}

void add_flags(CLI::App& app, Flags& f) {
  auto add = [&](const std::string& name, auto& target, const std::string& help) {
    auto* opt = app.add_option("--" + name, target, help);
    std::string env = "NEGBETA_" + name;
    std::transform(env.begin(), env.end(), env.begin(), [](unsigned char ch) {
      return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
    });
    opt->envname(env);
    f.opts[name] = opt;
    return opt;
  };
  add("beta", f.beta, "base, 1 < beta < 2");
  add("alpha", f.alpha,
      "cut point: a number in S or one of ito-sadahiro, odd-greedy, midpoint, s-left, s-right");
  add("x", f.x, "point in [M-, M+]");
  add("depth", f.depth, "number of digits");
  add("bins", f.bins, "density bins")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  add("seed", f.seed, "PRNG seed for coin tosses");
  add("coins", f.coins, "explicit coin word over {0,1}");
  add("default-coin", f.default_coin, "coin used after --coins runs out")
      ->check(CLI::Range(0, 1));
  add("grid", f.grid, "grid size");
  add("horizon", f.horizon, "maximum orbit length for uniqueness");
  add("tol", f.tol, "tolerance")->check(CLI::PositiveNumber);
  add("format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add("max-iter", f.max_iter, "iteration limit");
  add("cap", f.cap, "maximum number of enumerated words");
  add("word", f.word, "digit word");
  add("other", f.other, "second digit word for compare");
  add("map", f.map, "R, L or ito-sadahiro (expand)");
  add("method", f.method, "direct or factor (density)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"negative beta-expansions with digits {0,1}", "negbeta"};
  app.set_version_flag("--version", std::string(NEGBETA_VERSION));
  app.require_subcommand(1);
  Flags flags;
  add_flags(app, flags);
  for (const auto& info : subcommands()) {
    auto* sub = app.add_subcommand(std::string(info.name), std::string(info.summary));
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto chosen = app.get_subcommands();
  const std::string name = chosen.front()->get_name();
  if (flags.format == "csv" && name != "density" && name != "unique-scan") {
    err << "error: --format csv is only available for density and unique-scan\n";
    return kExitUsage;
  }
  try {
    handlers().at(name)(Context{name, flags, out});
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace negbeta::cli
