#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adm/solver.hpp"

namespace adm {

/// u = alpha e^t / (1 - alpha + alpha e^t). Throws Errc::pole where the
/// denominator vanishes.
double exact_fisher(double alpha, double t);
/// u = 1 / (1 + e^(x/sqrt6 - 5t/6))^2.
double exact_case2(double x, double t);
/// u = sqrt(3/4) e^(sqrt6 x) / (e^(sqrt6 x) + e^(sqrt6 x/2 - 9t/2)).
double exact_case3(double x, double t);

enum class ExactKind { fisher, case2, case3 };

struct ExactSolution {
  ExactKind kind;
  double alpha = 0.0;

  double operator()(double x, double t) const;
  std::string name() const;
};

/// Closed form matching a preset, if there is one.
std::optional<ExactSolution> reference_for(const NwsProblem& problem);

using Field = std::function<double(double x, double t)>;

inline constexpr double kDefaultFdStep = 1e-4;

/// Central-difference estimate of f_t - k f_xx - a f + b f^q at (x, t).
double fd_residual(double k, double a, double b, unsigned q, const Field& f, double x, double t,
                   double h_x = kDefaultFdStep, double h_t = kDefaultFdStep);
/// The same, with coefficients taken from the problem.
double fd_residual(const NwsProblem& problem, const Field& f, double x, double t,
                   double h_x = kDefaultFdStep, double h_t = kDefaultFdStep);

struct ErrorRow {
  double x = 0.0;
  double t = 0.0;
  unsigned order = 0;
  double approx = 0.0;
  double exact = 0.0;
  double abs_err = 0.0;
  /// Set when either evaluation failed; the numeric fields are then NaN.
  bool flagged = false;
  std::string error;
};

/// Rows ordered x outer, t middle, order inner.
std::vector<ErrorRow> error_table(const AdmSolution& sol, const ExactSolution& exact,
                                  std::span<const double> xs, std::span<const double> ts,
                                  std::span<const unsigned> orders);

}  // namespace adm
