#ifndef LACVER_HARNESS_HPP
#define LACVER_HARNESS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lacver/identities.hpp"
#include "lacver/series.hpp"

namespace lacver {

/// One LHS-vs-RHS comparison.
///
/// abs_err = |lhs.value - rhs.value|, rel_err = abs_err / max(1, |rhs.value|),
/// pass iff rel_err <= tol and both sides converged. Records for points that
/// could not be evaluated carry `error` and never pass. `check` names the
/// consistency relation for records produced by cross_checks().
struct VerificationRecord {
  IdentityId id = IdentityId::eq1;
  EvalParams params;
  SeriesResult lhs;
  SeriesResult rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string check;
  std::optional<std::string> error;
};

struct ParamGrid {
  std::vector<double> x_values;
  std::vector<double> t_values;
  std::optional<std::vector<double>> alpha_values;
  std::optional<std::vector<int>> k_values;
  std::optional<std::vector<int>> m_values;
};

inline constexpr double kDefaultVerifyTol = 1e-9;

/// Builds a record from two evaluated sides, applying the record invariants.
VerificationRecord make_record(IdentityId id, const EvalParams& params, const SeriesResult& lhs,
                               const SeriesResult& rhs, double tol, std::string check = {});

/// Evaluates both sides of `id` at `p`. Throws DomainError outside the
/// validity domain and NumericError if a term overflows.
VerificationRecord verify(IdentityId id, const EvalParams& p, double tol = kDefaultVerifyTol,
                          const TruncationPolicy& policy = {}, const DomainLimits& limits = {});

/// Cartesian sweep over `grid`, ordered by identity, then x, t, alpha, k, m in
/// grid order. With a single target, points outside the domain become error
/// records; with `target` empty (all identities) such points are skipped.
/// Throws DomainError if the grid lacks a list some targeted identity needs;
/// eq12 alone falls back to alpha = 0 when no alpha values are given.
std::vector<VerificationRecord> sweep(std::optional<IdentityId> target, const ParamGrid& grid,
                                      double tol = kDefaultVerifyTol,
                                      const TruncationPolicy& policy = {},
                                      const DomainLimits& limits = {});

/// The fixed (x, t) sample used by the reduction checks.
std::vector<std::pair<double, double>> reduction_points();

/// Coefficients c_0..c_{count-1} of the closed form of eq12 as a power series
/// in t, by the trapezoidal rule on a circle of radius 1/2.
std::vector<double> eq12_taylor_coefficients(double x, double alpha, int count);

/// Fixed consistency suite:
///   eq4 at k=0 against eq1 (worst term r <= 40, and summed),
///   summed RHS of eq7 at alpha=0 against closed_form_eq8 at m=0,
///   closed_form_eq12 at alpha=0 against cosh(sqrt(t) x),
///   Taylor coefficients of closed_form_eq12 through t^3 against
///   L_{2n}^{(alpha-2n)}(x).
std::vector<VerificationRecord> cross_checks(const TruncationPolicy& policy = {});

}  // namespace lacver

#endif  // LACVER_HARNESS_HPP
