#include "lacver/identities.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "lacver/error.hpp"
#include "lacver/specfun.hpp"

namespace lacver {
namespace {

constexpr IdentityDescriptor make(IdentityId id, GeneratingKind kind, int lacunarity,
                                  RequiredParams required) {
  const bool egf = kind == GeneratingKind::exponential;
  return {id,
          static_cast<int>(id),
          kind,
          lacunarity,
          required,
          egf ? TDomain{0.0, kDefaultEgfTMax, false} : TDomain{0.0, 1.0, true}};
}

constexpr auto E = GeneratingKind::exponential;
constexpr auto O = GeneratingKind::ordinary;
constexpr RequiredParams kNone{};
constexpr RequiredParams kAlpha{true, false, false};
constexpr RequiredParams kShift{false, true, false};
constexpr RequiredParams kOrder{false, false, true};

constexpr std::array<IdentityDescriptor, 12> kRegistry = {
    make(IdentityId::eq1, E, 2, kNone),    make(IdentityId::eq2, E, 2, kNone),
    make(IdentityId::eq3, E, 2, kNone),    make(IdentityId::eq4, E, 2, kShift),
    make(IdentityId::eq5, E, 3, kShift),   make(IdentityId::eq6, E, 3, kNone),
    make(IdentityId::eq7, O, 2, kAlpha),   make(IdentityId::eq8, O, 2, kOrder),
    make(IdentityId::eq9, O, 3, kAlpha),   make(IdentityId::eq10, O, 2, kNone),
    make(IdentityId::eq11, O, 3, kNone),   make(IdentityId::eq12, O, 2, kAlpha),
};

SignedLog log_fact(int n) { return SignedLog::from_log(log_factorial(n)); }

// (1 - t)^power as a SignedLog; t < 1.
SignedLog one_minus_t_pow(double t, double power) {
  return SignedLog::from_log(power * std::log1p(-t));
}

// Everything an LHS term needs: weight ratio w_{n+1}/w_n, and the degree and
// order of the Laguerre factor at step n.
struct LhsShape {
  int step = 2;
  int shift = 0;
  double order = 0.0;
  bool order_falls = false;  // order(n) = alpha - 2n
};

double lhs_weight_ratio(IdentityId id, const EvalParams& p, int n) {
  const double t = p.t;
  switch (id) {
    case IdentityId::eq1:
    case IdentityId::eq2:
    case IdentityId::eq3:
    case IdentityId::eq4:
    case IdentityId::eq5:
    case IdentityId::eq6:
      return t / (n + 1);
    case IdentityId::eq7:
      return t * (0.5 + n) / (1.0 + *p.alpha / 2.0 + n);
    case IdentityId::eq8:
      return t * (0.5 + n) / (1.0 + *p.m + n);
    case IdentityId::eq9: {
      const double a = *p.alpha;
      return t * (1.0 / 3.0 + n) * (2.0 / 3.0 + n) /
             ((1.0 + a / 3.0 + n) * (2.0 / 3.0 + a / 3.0 + n));
    }
    case IdentityId::eq10:
    case IdentityId::eq11:
    case IdentityId::eq12:
      return t;
  }
  return 0.0;
}

LhsShape lhs_shape(IdentityId id, const EvalParams& p) {
  LhsShape s;
  s.step = descriptor(id).lacunarity;
  switch (id) {
    case IdentityId::eq2:
    case IdentityId::eq6:
      s.order = 1.0;
      break;
    case IdentityId::eq3:
      s.order = 2.0;
      break;
    case IdentityId::eq4:
    case IdentityId::eq5:
      s.shift = *p.k;
      break;
    case IdentityId::eq7:
    case IdentityId::eq9:
      s.order = *p.alpha;
      break;
    case IdentityId::eq8:
      s.order = 2.0 * *p.m;
      break;
    case IdentityId::eq12:
      s.order = *p.alpha;
      s.order_falls = true;
      break;
    default:
      break;
  }
  return s;
}

// Adds the inner-sum contributions (outer * inner_s) one by one, exponentiating
// each, so no partial product has to fit in double on its own.
class InnerSum {
 public:
  explicit InnerSum(SignedLog outer) : outer_(outer) {}
  void add(SignedLog inner) { acc_.add((outer_ * inner).to_double()); }
  double value() const { return acc_.value(); }

 private:
  SignedLog outer_;
  CompensatedSum acc_;
};

// sum_{s=0}^{floor(r/3)} (-t x^3)^s / s! * (-x sqrt(3t))^j G_j(sqrt(3t)/2) / j!,
// j = r - 3s; the Hermite-side factor of eq5 and eq6.
double floor_third_sum(int r, double x, double t, SignedLog outer, HermiteImagTable& g) {
  const SignedLog cubic = SignedLog::from(-t * x * x * x);
  const SignedLog lin = SignedLog::from(-x * std::sqrt(3.0 * t));
  InnerSum sum(outer);
  for (int s = 0; s <= r / 3; ++s) {
    const int j = r - 3 * s;
    sum.add(cubic.pow(s) / log_fact(s) * lin.pow(j) * g.at(j) / log_fact(j));
  }
  return sum.value();
}

TermSequence closed_form_sequence(double value) {
  return [value, first = true]() mutable {
    if (!first) return 0.0;
    first = false;
    return value;
  };
}

template <class T>
T eq12_expression(T t, double x, double alpha) {
  // asinh(sqrt(t/(1-t))) == atanh(sqrt(t)) on [0, 1); the atanh form is the
  // one that continues analytically into the complex disc.
  const T s = std::sqrt(t);
  return std::pow(T(1.0) - t, alpha / 2.0) * std::cosh(s * x - alpha * std::atanh(s));
}

}  // namespace

std::string to_string(IdentityId id) { return "eq" + std::to_string(static_cast<int>(id)); }

std::optional<IdentityId> parse_identity_id(std::string_view text) {
  for (IdentityId id : kAllIdentities) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

std::string TDomain::to_string() const {
  std::ostringstream os;
  os << '[' << lo << ", " << hi << (hi_open ? ')' : ']');
  return os.str();
}

std::span<const IdentityDescriptor> registry() { return kRegistry; }

const IdentityDescriptor& descriptor(IdentityId id) {
  return kRegistry[static_cast<std::size_t>(id) - 1];
}

std::optional<std::string> domain_violation(IdentityId id, const EvalParams& p,
                                            const DomainLimits& limits) {
  const IdentityDescriptor& d = descriptor(id);
  const std::string name = to_string(id);

  auto check_presence = [&](bool required, bool present,
                            const char* param) -> std::optional<std::string> {
    if (required && !present) {
      return "missing required parameter '" + std::string(param) + "' for " + name;
    }
    if (!required && present) {
      return "parameter '" + std::string(param) + "' is not used by " + name;
    }
    return std::nullopt;
  };
  if (auto e = check_presence(d.required.alpha, p.alpha.has_value(), "alpha")) return e;
  if (auto e = check_presence(d.required.k, p.k.has_value(), "k")) return e;
  if (auto e = check_presence(d.required.m, p.m.has_value(), "m")) return e;

  if (!std::isfinite(p.x)) return "x must be finite";
  if (!std::isfinite(p.t)) return "t must be finite";
  if (p.alpha && !std::isfinite(*p.alpha)) return "alpha must be finite";
  if (p.k && *p.k < 0) return "k must be a nonnegative integer";
  if (p.m && *p.m < 0) return "m must be a nonnegative integer";

  TDomain dom = d.t_domain;
  if (d.kind == GeneratingKind::exponential) dom.hi = limits.egf_t_max;
  if (!dom.contains(p.t)) {
    std::ostringstream os;
    os << "t = " << p.t << " outside " << dom.to_string() << " for " << name;
    return os.str();
  }

  const bool nonnegative_x = id == IdentityId::eq7 || id == IdentityId::eq8 ||
                             id == IdentityId::eq9 || id == IdentityId::eq10 ||
                             id == IdentityId::eq11;
  if (nonnegative_x && p.x < 0.0) return "x must be nonnegative for " + name;

  if ((id == IdentityId::eq7 || id == IdentityId::eq9) && !(*p.alpha > -1.0)) {
    return "alpha must exceed -1 for " + name;
  }
  return std::nullopt;
}

bool validity_domain(IdentityId id, const EvalParams& p, const DomainLimits& limits) {
  return !domain_violation(id, p, limits).has_value();
}

void require_valid(IdentityId id, const EvalParams& p, const DomainLimits& limits) {
  if (auto e = domain_violation(id, p, limits)) throw DomainError(*e);
}

double p2(int r, double x, double t) {
  return (1 + 2 * t) * r * r + (5 - 4 * x * t + 10 * t) * r + (6 + 12 * t - 12 * x * t + 2 * t * x * x);
}

double p4(int r, double x, double t) {
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x4 = x3 * x;
  const double t2 = t * t;
  const double r2 = static_cast<double>(r) * r;
  const double r3 = r2 * r;
  const double r4 = r3 * r;
  return (2 + 10 * t + 4 * t2) * r4 +
         (36 + (180 - 20 * x) * t + (72 - 16 * x) * t2) * r3 +
         (238 + (1190 - 300 * x + 10 * x2) * t + (476 - 240 * x + 24 * x2) * t2) * r2 +
         (684 + (3420 - 1480 * x + 110 * x2) * t + (1368 - 1184 * x + 264 * x2 - 16 * x3) * t2) * r +
         720 + (3600 - 2400 * x + 300 * x2) * t +
         (1440 - 1920 * x + 720 * x2 - 96 * x3 + 4 * x4) * t2;
}

double q3(int r, double x, double t) {
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double r2 = static_cast<double>(r) * r;
  const double r3 = r2 * r;
  return (1 + 3 * t) * r3 + (9 + 27 * t - 9 * t * x) * r2 +
         (26 + 78 * t - 63 * t * x + 9 * t * x2) * r +
         (24 + 72 * t - 108 * t * x + 36 * t * x2 - 3 * t * x3);
}

TermSequence lhs_terms(IdentityId id, const EvalParams& p, const DomainLimits& limits) {
  require_valid(id, p, limits);
  const LhsShape shape = lhs_shape(id, p);
  return [id, p, shape, n = 0, weight = 1.0]() mutable {
    const int degree = shape.step * n + shape.shift;
    const double order = shape.order_falls ? shape.order - 2.0 * n : shape.order;
    // Forward recurrence loses everything for order alpha - 2n at large n.
    const SignedLog poly = shape.order_falls
                               ? SignedLog::from(laguerre_descending(degree, order, p.x))
                               : log_laguerre(degree, order, p.x);
    const double term = weight == 0.0 ? 0.0 : (SignedLog::from(weight) * poly).to_double();
    weight *= lhs_weight_ratio(id, p, n);
    ++n;
    return term;
  };
}

TermSequence rhs_terms(IdentityId id, const EvalParams& p, const DomainLimits& limits) {
  require_valid(id, p, limits);
  const double x = p.x;
  const double t = p.t;

  switch (id) {
    case IdentityId::eq1:
    case IdentityId::eq2:
    case IdentityId::eq3:
    case IdentityId::eq4: {
      // (i x sqrt t)^r H_r(i sqrt t) = (-x sqrt t)^r G_r(sqrt t).
      const SignedLog hermite_arg = SignedLog::from(-x * std::sqrt(t));
      const int k = p.k.value_or(0);
      const SignedLog k_fact = log_fact(k);
      return [id, x, t, k, k_fact, hermite_arg, g = HermiteImagTable(std::sqrt(t)),
              r = 0]() mutable {
        SignedLog term = SignedLog::from_log(t) * hermite_arg.pow(r) * g.at(r);
        switch (id) {
          case IdentityId::eq1:
            term /= log_fact(r) * log_fact(r);
            break;
          case IdentityId::eq2:
            term *= SignedLog::from(p2(r, x, t)) / (log_fact(r) * log_fact(r + 3));
            break;
          case IdentityId::eq3:
            term *= SignedLog::from(p4(r, x, t)) / (log_fact(r) * log_fact(r + 6));
            break;
          default:
            term *= k_fact * SignedLog::from(laguerre(k, r, x)) / (log_fact(r) * log_fact(r + k));
            break;
        }
        ++r;
        return term.to_double();
      };
    }

    case IdentityId::eq5:
    case IdentityId::eq6: {
      const int k = p.k.value_or(0);
      return [id, x, t, k, g = HermiteImagTable(std::sqrt(3.0 * t) / 2.0), r = 0]() mutable {
        SignedLog outer = SignedLog::from_log(t);
        if (id == IdentityId::eq5) {
          outer *= log_fact(k) * SignedLog::from(laguerre(k, r, x)) / log_fact(r + k);
        } else {
          outer *= SignedLog::from(q3(r, x, t)) / log_fact(r + 4);
        }
        const double term = floor_third_sum(r, x, t, outer, g);
        ++r;
        return term;
      };
    }

    case IdentityId::eq7:
    case IdentityId::eq10: {
      // eq10 is eq7's pattern at alpha = 0 with (1/2)_r in place of (1+alpha/2)_r.
      const bool plain = id == IdentityId::eq10;
      const double alpha = plain ? 0.0 : *p.alpha;
      const double poch_base = plain ? 0.5 : 1.0 + alpha / 2.0;
      const SignedLog prefactor =
          plain ? one_minus_t_pow(t, -1.0) : one_minus_t_pow(t, -(1.0 + alpha) / 2.0);
      const SignedLog ratio = SignedLog::from(-t * x / (2.0 * (1.0 - t)));
      return [x, alpha, poch_base, prefactor, ratio, poch = SignedLog::from(1.0),
              r = 0]() mutable {
        const SignedLog term =
            prefactor * log_laguerre(r, r + alpha, x / 2.0) / poch * ratio.pow(r);
        poch *= SignedLog::from(poch_base + r);
        ++r;
        return term.to_double();
      };
    }

    case IdentityId::eq8:
      return closed_form_sequence(closed_form_eq8(p));

    case IdentityId::eq9: {
      const double alpha = *p.alpha;
      const SignedLog prefactor = one_minus_t_pow(t, -(1.0 + alpha) / 3.0);
      const SignedLog ratio = SignedLog::from(-t * x / (9.0 * (1.0 - t)));
      const SignedLog minus_x = SignedLog::from(-x);
      return [x, alpha, prefactor, ratio, minus_x, poch = SignedLog::from(1.0),
              r = 0]() mutable {
        const SignedLog outer = prefactor * SignedLog::from_log(log_gamma(3.0 * r + alpha + 1.0)) /
                                poch * ratio.pow(r);
        InnerSum sum(outer);
        for (int s = 0; s <= r; ++s) {
          sum.add(minus_x.pow(s) * log_laguerre(s, s + alpha + r, x / 3.0) /
                  (log_fact(r - s) * SignedLog::from_log(log_gamma(2.0 * s + alpha + r + 1.0))));
        }
        poch *= SignedLog::from(1.0 + alpha / 3.0 + r) * SignedLog::from(2.0 / 3.0 + alpha / 3.0 + r);
        ++r;
        return sum.value();
      };
    }

    case IdentityId::eq11: {
      const SignedLog prefactor = one_minus_t_pow(t, -1.0);
      const SignedLog ratio = SignedLog::from(-3.0 * t * x / (1.0 - t));
      const SignedLog minus_x = SignedLog::from(-x);
      return [x, prefactor, ratio, minus_x, r = 0]() mutable {
        InnerSum sum(prefactor * ratio.pow(r) * log_fact(r));
        for (int s = 0; s <= r; ++s) {
          sum.add(minus_x.pow(s) * log_laguerre(s, s + r, x / 3.0) /
                  (log_fact(r - s) * log_fact(r + 2 * s)));
        }
        ++r;
        return sum.value();
      };
    }

    case IdentityId::eq12:
      return closed_form_sequence(closed_form_eq12(p));
  }
  throw DomainError("unknown identity");
}

double closed_form_eq8(const EvalParams& p) {
  if (!p.m || *p.m < 0) throw DomainError("closed_form_eq8: m must be a nonnegative integer");
  if (!(p.t >= 0.0 && p.t < 1.0)) throw DomainError("closed_form_eq8: t must lie in [0, 1)");
  if (!(p.x >= 0.0) || !std::isfinite(p.x)) {
    throw DomainError("closed_form_eq8: x must be finite and nonnegative");
  }
  const int m = *p.m;
  const double t = p.t;
  const double x = p.x;
  const double log_one_minus_t = std::log1p(-t);

  const double half_arg = x * std::sqrt(t) / 2.0;
  const double bessel = half_arg > 0.0 ? bessel_i(m, x * std::sqrt(t) / (1.0 - t)) : 0.0;
  if (bessel == 0.0) {
    // I_m(z) ~ (z/2)^m / m! cancels (x sqrt(t)/2)^{-m} m!.
    return std::exp((-0.5 - m) * log_one_minus_t - t * x / (1.0 - t));
  }
  return std::exp(-0.5 * log_one_minus_t - t * x / (1.0 - t) + log_factorial(m) -
                  m * std::log(half_arg) + std::log(bessel));
}

double closed_form_eq12(const EvalParams& p) {
  if (!p.alpha) throw DomainError("closed_form_eq12: alpha is required");
  if (!(p.t >= 0.0 && p.t < 1.0)) throw DomainError("closed_form_eq12: t must lie in [0, 1)");
  return eq12_expression(p.t, p.x, *p.alpha);
}

std::complex<double> closed_form_eq12(std::complex<double> t, double x, double alpha) {
  if (!(std::abs(t) < 1.0)) throw DomainError("closed_form_eq12: need |t| < 1");
  return eq12_expression(t, x, alpha);
}

}  // namespace lacver
