#include "negbeta/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace negbeta {

Interval invariant_window(const ExpansionParams& p) {
  const double b = p.beta();
  const double a = p.alpha();
  if (a <= -1.0 / (b * (b + 1.0))) return {b * b * a, -b * a};
  if (a <= -(b - 1.0) / (b * (b + 1.0))) return {-b * a - 1.0, -b * a};
  return {-b * a - 1.0, b * b * a + b - 1.0};
}

std::vector<Interval> image_R(const ExpansionParams& p, const Interval& iv) {
  const auto& base = p.base();
  const double alpha = p.alpha();
  std::vector<Interval> out;
  if (iv.lo < alpha) {
    const double hi = std::min(iv.hi, alpha);
    out.push_back({base.apply_digit(1, hi), base.apply_digit(1, iv.lo)});
  }
  if (iv.hi >= alpha) {
    const double lo = std::max(iv.lo, alpha);
    out.push_back({base.apply_digit(0, iv.hi), base.apply_digit(0, lo)});
  }
  return out;
}

IntervalSet image_R(const ExpansionParams& p, const IntervalSet& set) {
  std::vector<Interval> out;
  for (const auto& iv : set.parts()) {
    auto img = image_R(p, iv);
    out.insert(out.end(), img.begin(), img.end());
  }
  return IntervalSet(std::move(out));
}

const char* to_string(SupportStatus s) {
  return s == SupportStatus::Stabilized ? "Stabilized" : "MaxIterReached";
}

SupportResult support(const ExpansionParams& p, std::size_t max_iter, double tol) {
  if (max_iter == 0) throw Error(Errc::InvalidArgument, "max_iter must be >= 1");
  if (!(tol > 0)) throw Error(Errc::InvalidArgument, "tol must be positive");

  const auto dom = p.base().domain();
  const double delta = 1e-6 * dom.length();
  const Interval seed{std::max(dom.lo, p.alpha() - delta), std::min(dom.hi, p.alpha() + delta)};

  SupportResult res;
  IntervalSet current(image_R(p, seed));
  for (std::size_t it = 1; it <= max_iter; ++it) {
    IntervalSet next = current.unite(image_R(p, current));
    const double change = symmetric_difference_measure(current, next);
    const bool same_shape = next.size() == current.size();
    current = std::move(next);
    res.iterations = it;
    if (change < tol && same_shape) {
      res.status = SupportStatus::Stabilized;
      break;
    }
  }
  res.support = current;
  res.invariance_residual = current.excess(image_R(p, current));
  return res;
}

// --- piecewise affine maps ---------------------------------------------------

double PiecewiseAffineMap::operator()(double x) const {
  for (const auto& br : branches) {
    if (br.domain.contains(x)) return br(x);
  }
  throw Error(Errc::XOutOfDomain, "point outside every branch");
}

Interval PiecewiseAffineMap::domain() const {
  if (branches.empty()) throw Error(Errc::InvalidArgument, "map without branches");
  double lo = branches.front().domain.lo;
  double hi = branches.front().domain.hi;
  for (const auto& br : branches) {
    lo = std::min(lo, br.domain.lo);
    hi = std::max(hi, br.domain.hi);
  }
  return {lo, hi};
}

PiecewiseAffineMap piecewise_R(const ExpansionParams& p) {
  const double b = p.beta();
  return {{{{p.m_minus(), p.alpha()}, -b, -1.0}, {{p.alpha(), p.m_plus()}, -b, 0.0}}};
}

FactorMaps::FactorMaps(const ExpansionParams& p, BreakConvention convention)
    : beta_(p.beta()),
      shift_(p.beta() / (p.beta() * p.beta() - 1.0)),
      half_(1.0 / (p.beta() - 1.0)),
      cut_(p.alpha() + p.beta() / (p.beta() * p.beta() - 1.0)),
      convention_(convention) {}

double FactorMaps::W(double u) const {
  const bool lower = convention_ == BreakConvention::R ? u < cut_ : u <= cut_;
  return lower ? -beta_ * u + half_ : -beta_ * u + beta_ * half_;
}

double FactorMaps::T(double x) const {
  return x <= half_ ? full() - W(x) : W(full() - x);
}

double FactorMaps::tau(double x) const { return x <= half_ ? x : full() - x; }

std::vector<double> FactorMaps::t_breakpoints() const {
  return {cut_, half_, full() - cut_};
}

PiecewiseAffineMap FactorMaps::W_map() const {
  return {{{{0.0, cut_}, -beta_, half_}, {{cut_, half_}, -beta_, beta_ * half_}}};
}

PiecewiseAffineMap FactorMaps::T_map() const {
  const double f = full();
  return {{
      {{0.0, cut_}, beta_, f - half_},
      {{cut_, half_}, beta_, f - beta_ * half_},
      {{half_, f - cut_}, beta_, -beta_ * f + beta_ * half_},
      {{f - cut_, f}, beta_, -beta_ * f + half_},
  }};
}

// --- Ulam --------------------------------------------------------------------

Eigen::SparseMatrix<double, Eigen::RowMajor> ulam_matrix(const PiecewiseAffineMap& map,
                                                         const Interval& domain,
                                                         std::size_t bins) {
  if (bins < 2) throw Error(Errc::InvalidArgument, "need at least 2 bins");
  const auto n = static_cast<Eigen::Index>(bins);
  const double a = domain.lo;
  const double h = domain.length() / static_cast<double>(bins);
  if (!(h > 0)) throw Error(Errc::InvalidArgument, "empty density domain");

  auto bin_of = [&](double y) {
    const auto j = static_cast<Eigen::Index>(std::floor((y - a) / h));
    return std::clamp<Eigen::Index>(j, 0, n - 1);
  };

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(bins * 4);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lo = a + h * static_cast<double>(i);
    const double hi = (i + 1 == n) ? domain.hi : lo + h;
    for (const auto& br : map.branches) {
      const double jl = std::max(lo, br.domain.lo);
      const double jh = std::min(hi, br.domain.hi);
      if (!(jh > jl)) continue;
      const double weight = (jh - jl) / h;
      double u = br(jl);
      double v = br(jh);
      if (u > v) std::swap(u, v);
      const double span = v - u;
      const double cu = std::max(u, domain.lo);
      const double cv = std::min(v, domain.hi);
      if (!(cv > cu)) continue;
      for (Eigen::Index j = bin_of(cu); j <= bin_of(cv); ++j) {
        const double blo = a + h * static_cast<double>(j);
        const double bhi = (j + 1 == n) ? domain.hi : blo + h;
        const double ov = std::min(cv, bhi) - std::max(cu, blo);
        if (ov > 0) triplets.emplace_back(i, j, weight * ov / span);
      }
    }
  }
  Eigen::SparseMatrix<double, Eigen::RowMajor> P(n, n);
  P.setFromTriplets(triplets.begin(), triplets.end());
  return P;
}

DensityEstimate ulam_density(const PiecewiseAffineMap& map, const Interval& domain,
                             std::size_t bins, double tol, std::size_t max_power_iters) {
  const auto P = ulam_matrix(map, domain, bins);
  const auto n = P.rows();

  Eigen::RowVectorXd p = Eigen::RowVectorXd::Constant(n, 1.0 / static_cast<double>(n));
  double residual = 0.0;
  std::size_t it = 0;
  for (; it < max_power_iters; ++it) {
    Eigen::RowVectorXd q = p * P;
    const double total = q.sum();
    if (!(total > 0)) throw Error(Errc::NonConvergence, "all mass left the domain");
    q /= total;
    residual = (q - p).lpNorm<1>();
    if (residual <= tol) break;
    // half-step damping removes the oscillation of period-2 components
    p = 0.5 * (p + q);
  }
  if (residual > tol) {
    std::ostringstream os;
    os << "power iteration residual " << residual << " > " << tol << " after "
       << max_power_iters << " iterations";
    throw Error(Errc::NonConvergence, os.str());
  }

  DensityEstimate est;
  est.domain = domain;
  est.bin_edges = Eigen::VectorXd::LinSpaced(n + 1, domain.lo, domain.hi);
  est.mass = p.transpose() / p.sum();
  est.stationarity_residual = residual;
  est.iterations = it + 1;
  return est;
}

DensityEstimate density_T(const ExpansionParams& p, std::size_t bins) {
  const FactorMaps f(p);
  return ulam_density(f.T_map(), {0.0, f.full()}, bins);
}

DensityEstimate density_R_via_factor(const ExpansionParams& p, std::size_t bins) {
  if (bins < 2) throw Error(Errc::InvalidArgument, "need at least 2 bins");
  const auto h = density_T(p, 2 * bins);
  const auto n = static_cast<Eigen::Index>(bins);

  DensityEstimate k;
  k.domain = p.base().domain();
  k.bin_edges = Eigen::VectorXd::LinSpaced(n + 1, k.domain.lo, k.domain.hi);
  k.mass = 2.0 * h.mass.head(n);
  k.mass /= k.mass.sum();
  k.stationarity_residual = h.stationarity_residual;
  k.iterations = h.iterations;
  return k;
}

double l1_distance(const DensityEstimate& a, const DensityEstimate& b) {
  if (a.bins() != b.bins()) throw Error(Errc::InvalidArgument, "bin counts differ");
  return (a.mass - b.mass).lpNorm<1>();
}

double mass_outside(const DensityEstimate& d, const IntervalSet& set) {
  double out = 0.0;
  const double w = d.bin_width();
  for (Eigen::Index i = 0; i < d.bins(); ++i) {
    const Interval bin{d.bin_edges[i], d.bin_edges[i + 1]};
    const double inside = set.overlap(bin) / w;
    out += d.mass[i] * std::max(0.0, 1.0 - inside);
  }
  return out;
}

}  // namespace negbeta
