#include "lacver/harness.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "lacver/error.hpp"
#include "lacver/specfun.hpp"

namespace lacver {
namespace {

constexpr int kTermwiseCount = 41;
constexpr double kTermwiseTol = 1e-12;
constexpr double kBesselReductionTol = 1e-9;
constexpr double kCoshTol = 1e-12;
constexpr double kTaylorTol = 1e-8;
constexpr int kTaylorOrders = 4;
constexpr double kCauchyRadius = 0.5;
constexpr int kCauchyNodes = 64;

SeriesResult exact_value(double v) { return {v, 1, 0.0, true}; }

std::string describe(const char* what, double x, double t) {
  std::ostringstream os;
  os << what << " at x=" << x << " t=" << t;
  return os.str();
}

VerificationRecord error_record(IdentityId id, const EvalParams& p, double tol,
                                std::string message) {
  VerificationRecord rec;
  rec.id = id;
  rec.params = p;
  rec.tol = tol;
  rec.pass = false;
  rec.error = std::move(message);
  return rec;
}

// eq12 at alpha = 0 is the plain cosh case, so a sweep without alpha values
// still has a natural point to evaluate.
bool has_alpha_fallback(IdentityId id) { return id == IdentityId::eq12; }

bool lacks(const auto& values) { return !values || values->empty(); }

void require_grid(IdentityId id, const ParamGrid& grid) {
  const RequiredParams& req = descriptor(id).required;
  const std::string name = to_string(id);
  if (grid.x_values.empty()) throw DomainError("grid has no x values");
  if (grid.t_values.empty()) throw DomainError("grid has no t values");
  if (req.alpha && lacks(grid.alpha_values) && !has_alpha_fallback(id)) {
    throw DomainError("grid is missing alpha values required by " + name);
  }
  if (req.k && lacks(grid.k_values)) {
    throw DomainError("grid is missing k values required by " + name);
  }
  if (req.m && lacks(grid.m_values)) {
    throw DomainError("grid is missing m values required by " + name);
  }
}

// Points for one identity in lexicographic (x, t, alpha, k, m) order; unused
// parameters are left empty.
std::vector<EvalParams> expand(IdentityId id, const ParamGrid& grid) {
  const RequiredParams& req = descriptor(id).required;
  std::vector<std::optional<double>> alphas{std::nullopt};
  if (req.alpha && lacks(grid.alpha_values)) {
    alphas = {0.0};
  } else if (req.alpha) {
    alphas.assign(grid.alpha_values->begin(), grid.alpha_values->end());
  }
  const std::vector<std::optional<int>> ks =
      req.k ? std::vector<std::optional<int>>(grid.k_values->begin(), grid.k_values->end())
            : std::vector<std::optional<int>>{std::nullopt};
  const std::vector<std::optional<int>> ms =
      req.m ? std::vector<std::optional<int>>(grid.m_values->begin(), grid.m_values->end())
            : std::vector<std::optional<int>>{std::nullopt};

  std::vector<EvalParams> points;
  for (double x : grid.x_values)
    for (double t : grid.t_values)
      for (const auto& a : alphas)
        for (const auto& k : ks)
          for (const auto& m : ms) points.push_back({x, t, a, k, m});
  return points;
}

}  // namespace

VerificationRecord make_record(IdentityId id, const EvalParams& params, const SeriesResult& lhs,
                               const SeriesResult& rhs, double tol, std::string check) {
  VerificationRecord rec;
  rec.id = id;
  rec.params = params;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.tol = tol;
  rec.check = std::move(check);
  rec.abs_err = std::abs(lhs.value - rhs.value);
  rec.rel_err = rec.abs_err / std::max(1.0, std::abs(rhs.value));
  rec.pass = rec.rel_err <= tol && lhs.converged && rhs.converged;
  return rec;
}

VerificationRecord verify(IdentityId id, const EvalParams& p, double tol,
                          const TruncationPolicy& policy, const DomainLimits& limits) {
  if (!(tol > 0.0)) throw DomainError("verification tolerance must be positive");
  policy.validate();
  require_valid(id, p, limits);

  const SeriesResult lhs = sum_adaptive(lhs_terms(id, p, limits), policy);
  SeriesResult rhs;
  if (id == IdentityId::eq8) {
    rhs = exact_value(closed_form_eq8(p));
  } else if (id == IdentityId::eq12) {
    rhs = exact_value(closed_form_eq12(p));
  } else {
    rhs = sum_adaptive(rhs_terms(id, p, limits), policy);
  }
  return make_record(id, p, lhs, rhs, tol);
}

std::vector<VerificationRecord> sweep(std::optional<IdentityId> target, const ParamGrid& grid,
                                      double tol, const TruncationPolicy& policy,
                                      const DomainLimits& limits) {
  policy.validate();
  std::vector<IdentityId> ids;
  if (target) {
    ids.push_back(*target);
  } else {
    ids.assign(kAllIdentities.begin(), kAllIdentities.end());
  }
  for (IdentityId id : ids) require_grid(id, grid);

  std::vector<VerificationRecord> records;
  for (IdentityId id : ids) {
    for (const EvalParams& p : expand(id, grid)) {
      if (auto why = domain_violation(id, p, limits)) {
        if (target) records.push_back(error_record(id, p, tol, *why));
        continue;
      }
      try {
        records.push_back(verify(id, p, tol, policy, limits));
      } catch (const std::exception& e) {
        records.push_back(error_record(id, p, tol, e.what()));
      }
    }
  }
  return records;
}

std::vector<std::pair<double, double>> reduction_points() {
  return {{0.25, 0.05}, {0.5, 0.1},  {1.0, 0.15}, {1.5, 0.25}, {2.0, 0.2},
          {2.5, 0.3},   {3.0, 0.35}, {3.5, 0.4},  {4.0, 0.45}, {0.75, 0.45}};
}

std::vector<double> eq12_taylor_coefficients(double x, double alpha, int count) {
  std::vector<std::complex<double>> samples(kCauchyNodes);
  for (int j = 0; j < kCauchyNodes; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / kCauchyNodes;
    samples[j] = closed_form_eq12(std::polar(kCauchyRadius, theta), x, alpha);
  }
  std::vector<double> coeffs(count);
  for (int n = 0; n < count; ++n) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < kCauchyNodes; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / kCauchyNodes;
      acc += samples[j] * std::polar(1.0, -n * theta);
    }
    coeffs[n] = acc.real() / kCauchyNodes / std::pow(kCauchyRadius, n);
  }
  return coeffs;
}

std::vector<VerificationRecord> cross_checks(const TruncationPolicy& policy) {
  policy.validate();
  std::vector<VerificationRecord> out;

  for (const auto& [x, t] : reduction_points()) {
    // eq4 at k = 0 against eq1, term by term: keep the worst pair.
    const EvalParams p4{x, t, std::nullopt, 0, std::nullopt};
    const EvalParams p1{x, t, std::nullopt, std::nullopt, std::nullopt};
    TermSequence shifted = rhs_terms(IdentityId::eq4, p4);
    TermSequence plain = rhs_terms(IdentityId::eq1, p1);
    double worst = -1.0;
    SeriesResult worst_lhs;
    SeriesResult worst_rhs;
    for (int r = 0; r < kTermwiseCount; ++r) {
      const double a = shifted();
      const double b = plain();
      const double rel = std::abs(a - b) / std::max(1.0, std::abs(b));
      if (rel > worst) {
        worst = rel;
        worst_lhs = {a, static_cast<std::size_t>(r + 1), std::abs(a), true};
        worst_rhs = {b, static_cast<std::size_t>(r + 1), std::abs(b), true};
      }
    }
    out.push_back(make_record(IdentityId::eq4, p4, worst_lhs, worst_rhs, kTermwiseTol,
                              describe("eq4(k=0) vs eq1 RHS, worst term", x, t)));

    const SeriesResult sum4 = sum_adaptive(rhs_terms(IdentityId::eq4, p4), policy);
    const SeriesResult sum1 = sum_adaptive(rhs_terms(IdentityId::eq1, p1), policy);
    out.push_back(make_record(IdentityId::eq4, p4, sum4, sum1, kTermwiseTol,
                              describe("eq4(k=0) vs eq1 RHS, summed", x, t)));

    const EvalParams p7{x, t, 0.0, std::nullopt, std::nullopt};
    const EvalParams p8{x, t, std::nullopt, std::nullopt, 0};
    out.push_back(make_record(IdentityId::eq7, p7,
                              sum_adaptive(rhs_terms(IdentityId::eq7, p7), policy),
                              exact_value(closed_form_eq8(p8)), kBesselReductionTol,
                              describe("eq7(alpha=0) RHS vs eq8(m=0) closed form", x, t)));

    const EvalParams p12{x, t, 0.0, std::nullopt, std::nullopt};
    out.push_back(make_record(IdentityId::eq12, p12, exact_value(closed_form_eq12(p12)),
                              exact_value(std::cosh(std::sqrt(t) * x)), kCoshTol,
                              describe("eq12(alpha=0) closed form vs cosh(sqrt(t) x)", x, t)));
  }

  for (double alpha : {0.0, 1.0, 2.5}) {
    for (double x : {0.5, 1.0, 3.0}) {
      const std::vector<double> c = eq12_taylor_coefficients(x, alpha, kTaylorOrders);
      for (int n = 0; n < kTaylorOrders; ++n) {
        std::ostringstream label;
        label << "eq12 closed form t^" << n << " coefficient vs L_" << 2 * n << "^(" << alpha
              << "-" << 2 * n << ")(" << x << ")";
        const EvalParams p{x, 0.0, alpha, std::nullopt, std::nullopt};
        out.push_back(make_record(IdentityId::eq12, p, exact_value(c[n]),
                                  exact_value(laguerre(2 * n, alpha - 2.0 * n, x)), kTaylorTol,
                                  label.str()));
      }
    }
  }
  return out;
}

}  // namespace lacver
