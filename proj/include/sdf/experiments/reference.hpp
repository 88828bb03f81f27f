#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "sdf/core/cell_probabilities.hpp"
#include "sdf/core/step_cdf.hpp"

namespace sdf::experiments {

// The quintic parent used in the reference simulation:
// G(x) = 10x^3 - 15x^4 + 6x^5, g(x) = 30 x^2 (1 - x)^2 on [0, 1].
double quintic_G(double x);
double limit_g_eval(double x);

/// Limit structural distribution function of the quintic parent, the law of
/// g(U): F(x) = 1 - sqrt(1 - sqrt(8x/15)) on [0, 15/8], clamped outside.
double limit_F_eval(double x);

/// Closed-form F of the quintic parent as a continuous reference for the
/// exact distance routines in sdf/core/distances.hpp.
struct QuinticLimit {
  static constexpr double kUpper = 15.0 / 8.0;
  double cdf(double x) const { return limit_F_eval(x); }
  double quantile(double level) const;
  /// Integral of F over [0, x], x in [0, 15/8].
  double cdf_integral(double x) const;
  double lower() const { return 0.0; }
  double upper() const { return kUpper; }
};

/// Limit target of a scenario: continuous closed form or an exact step CDF.
using LimitTarget = std::variant<QuinticLimit, StepCdf>;

double l1_to_limit(const StepCdf& f, const LimitTarget& limit);
double sup_to_limit(const StepCdf& f, const LimitTarget& limit);

enum class ParentKind { paper_quintic, uniform, tabulated };

/// Distribution function G on [0, 1] generating the cell probabilities,
/// together with the limit F of its structural distribution functions.
class Parent {
 public:
  static Parent paper_quintic();
  static Parent uniform();
  /// Piecewise-linear G through (xs[k], gs[k]); xs runs strictly from 0 to 1
  /// and gs nondecreasingly from 0 to 1.
  static Parent tabulated(std::vector<double> xs, std::vector<double> gs,
                          std::string source = {});
  /// Reads a two-column CSV with header `x,G`.
  static Parent from_csv(const std::filesystem::path& path);

  ParentKind kind() const { return kind_; }
  std::string name() const;
  const std::string& source() const { return source_; }

  double cdf(double u) const;
  CellProbabilities<double> cell_probs(Index cells) const;
  LimitTarget limit() const;

 private:
  ParentKind kind_ = ParentKind::paper_quintic;
  std::vector<double> xs_;
  std::vector<double> gs_;
  std::string source_;
};

}  // namespace sdf::experiments
