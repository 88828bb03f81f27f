#include "sdf/experiments/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sdf/core/distances.hpp"
#include "sdf/experiments/csv.hpp"
#include "sdf/experiments/errors.hpp"

namespace sdf::experiments {

double quintic_G(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * (10.0 - 15.0 * x + 6.0 * x * x);
}

double limit_g_eval(double x) {
  if (x < 0.0 || x > 1.0) return 0.0;
  const double y = x * (1.0 - x);
  return 30.0 * y * y;
}

double limit_F_eval(double x) {
  if (!(x > 0.0)) return 0.0;
  if (x >= QuinticLimit::kUpper) return 1.0;
  const double s = std::sqrt(8.0 * x / 15.0);
  return std::clamp(1.0 - std::sqrt(std::max(0.0, 1.0 - s)), 0.0, 1.0);
}

double QuinticLimit::quantile(double level) const {
  const double c = std::clamp(level, 0.0, 1.0);
  const double s = 1.0 - (1.0 - c) * (1.0 - c);
  return kUpper * s * s;
}

double QuinticLimit::cdf_integral(double x) const {
  // With s = sqrt(8u/15): integral_0^x sqrt(1 - s(u)) du = (15/4)(H(s(x)) - H(0)),
  // H(s) = -(2/3)(1 - s)^{3/2} + (2/5)(1 - s)^{5/2}.
  const double xc = std::clamp(x, 0.0, kUpper);
  const double t = std::max(0.0, 1.0 - std::sqrt(8.0 * xc / 15.0));
  const double rt = std::sqrt(t);
  const double h = -(2.0 / 3.0) * t * rt + 0.4 * t * t * rt;
  const double h0 = -4.0 / 15.0;
  return xc - 3.75 * (h - h0);
}

double l1_to_limit(const StepCdf& f, const LimitTarget& limit) {
  return std::visit([&](const auto& target) { return l1_distance(f, target); }, limit);
}

double sup_to_limit(const StepCdf& f, const LimitTarget& limit) {
  return std::visit([&](const auto& target) { return sup_distance(f, target); }, limit);
}

Parent Parent::paper_quintic() { return Parent{}; }

Parent Parent::uniform() {
  Parent p;
  p.kind_ = ParentKind::uniform;
  return p;
}

Parent Parent::tabulated(std::vector<double> xs, std::vector<double> gs, std::string source) {
  if (xs.size() != gs.size() || xs.size() < 2) {
    throw ConfigError("parent", "tabulated G needs at least two (x, G) points");
  }
  if (xs.front() != 0.0 || xs.back() != 1.0) {
    throw ConfigError("parent", "tabulated x must run from 0 to 1");
  }
  if (gs.front() != 0.0 || gs.back() != 1.0) {
    throw ConfigError("parent", "tabulated G must run from 0 to 1");
  }
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (!(xs[k] > xs[k - 1])) throw ConfigError("parent", "tabulated x must be strictly increasing");
    if (!(gs[k] >= gs[k - 1])) throw ConfigError("parent", "tabulated G must be nondecreasing");
  }
  Parent p;
  p.kind_ = ParentKind::tabulated;
  p.xs_ = std::move(xs);
  p.gs_ = std::move(gs);
  p.source_ = std::move(source);
  return p;
}

Parent Parent::from_csv(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  std::vector<double> xs;
  std::vector<double> gs;
  try {
    const std::size_t cx = table.column("x");
    const std::size_t cg = table.column("G");
    for (const auto& row : table.rows) {
      if (row.size() != table.header.size()) throw std::invalid_argument("ragged row");
      xs.push_back(parse_double(row[cx]));
      gs.push_back(parse_double(row[cg]));
    }
  } catch (const std::exception& e) {
    throw ConfigError("parent", path.string() + ": " + e.what());
  }
  return tabulated(std::move(xs), std::move(gs), path.string());
}

std::string Parent::name() const {
  switch (kind_) {
    case ParentKind::paper_quintic: return "paper-quintic";
    case ParentKind::uniform: return "uniform";
    case ParentKind::tabulated: return "tabulated";
  }
  return "unknown";
}

double Parent::cdf(double u) const {
  switch (kind_) {
    case ParentKind::paper_quintic: return quintic_G(u);
    case ParentKind::uniform: return std::clamp(u, 0.0, 1.0);
    case ParentKind::tabulated: {
      if (u <= 0.0) return 0.0;
      if (u >= 1.0) return 1.0;
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), u);
      const std::size_t k = static_cast<std::size_t>(it - xs_.begin());
      const double w = (u - xs_[k - 1]) / (xs_[k] - xs_[k - 1]);
      return gs_[k - 1] + w * (gs_[k] - gs_[k - 1]);
    }
  }
  return 0.0;
}

CellProbabilities<double> Parent::cell_probs(Index cells) const {
  if (kind_ == ParentKind::uniform) return CellProbabilities<double>::uniform(cells);
  return make_cell_probs_from_cdf([this](double u) { return cdf(u); }, cells);
}

LimitTarget Parent::limit() const {
  switch (kind_) {
    case ParentKind::paper_quintic: return QuinticLimit{};
    case ParentKind::uniform: return StepCdf::point_mass(1.0);
    case ParentKind::tabulated: {
      // g is the piecewise-constant slope of G; g(U) puts mass equal to each
      // segment's length on that segment's slope.
      const Index segments = static_cast<Index>(xs_.size()) - 1;
      Vector<double> slopes(segments);
      Vector<double> widths(segments);
      for (Index k = 0; k < segments; ++k) {
        const auto j = static_cast<std::size_t>(k);
        widths(k) = xs_[j + 1] - xs_[j];
        slopes(k) = (gs_[j + 1] - gs_[j]) / widths(k);
      }
      return StepCdf::from_masses(slopes, widths);
    }
  }
  return QuinticLimit{};
}

}  // namespace sdf::experiments
