#ifndef LACVER_IDENTITIES_HPP
#define LACVER_IDENTITIES_HPP

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lacver/series.hpp"

namespace lacver {

// Lacunary generating-function identities for Laguerre polynomials.
//
//   eq1..eq6   exponential generating functions sum_n t^n/n! L_{2n or 3n(+k)}^{(.)}(x),
//              right-hand sides built from imaginary-argument Hermite terms;
//   eq7..eq11  ordinary generating functions (plain or Pochhammer-weighted),
//              right-hand sides in powers of -tx/(1-t);
//   eq12       sum_n t^n L_{2n}^{(alpha-2n)}(x) in closed form.
//
// Eq8 also has a closed form, in terms of I_m.

enum class IdentityId { eq1 = 1, eq2, eq3, eq4, eq5, eq6, eq7, eq8, eq9, eq10, eq11, eq12 };

inline constexpr std::array<IdentityId, 12> kAllIdentities = {
    IdentityId::eq1, IdentityId::eq2, IdentityId::eq3,  IdentityId::eq4,
    IdentityId::eq5, IdentityId::eq6, IdentityId::eq7,  IdentityId::eq8,
    IdentityId::eq9, IdentityId::eq10, IdentityId::eq11, IdentityId::eq12};

std::string to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view text);

enum class GeneratingKind { exponential, ordinary };

struct RequiredParams {
  bool alpha = false;
  bool k = false;
  bool m = false;
};

/// Interval of admissible t. The upper end is open for ordinary GFs.
struct TDomain {
  double lo = 0.0;
  double hi = 0.0;
  bool hi_open = false;

  bool contains(double t) const noexcept {
    return t >= lo && (hi_open ? t < hi : t <= hi);
  }
  std::string to_string() const;
};

inline constexpr double kDefaultEgfTMax = 4.0;

struct IdentityDescriptor {
  IdentityId id;
  int equation;
  GeneratingKind kind;
  int lacunarity;
  RequiredParams required;
  TDomain t_domain;
};

/// Immutable descriptors, ordered eq1..eq12.
std::span<const IdentityDescriptor> registry();
const IdentityDescriptor& descriptor(IdentityId id);

/// Point at which an identity is evaluated.
struct EvalParams {
  double x = 0.0;
  double t = 0.0;
  std::optional<double> alpha;
  std::optional<int> k;
  std::optional<int> m;
};

struct DomainLimits {
  double egf_t_max = kDefaultEgfTMax;
};

/// Reason `p` is outside the implemented domain of `id`, or nullopt.
std::optional<std::string> domain_violation(IdentityId id, const EvalParams& p,
                                            const DomainLimits& limits = {});

bool validity_domain(IdentityId id, const EvalParams& p, const DomainLimits& limits = {});

/// Throws DomainError carrying domain_violation's message.
void require_valid(IdentityId id, const EvalParams& p, const DomainLimits& limits = {});

// Coefficient polynomials, evaluated with the grouping in which they are
// usually printed.
double p2(int r, double x, double t);
double p4(int r, double x, double t);
double q3(int r, double x, double t);

/// n-th term of the left-hand side, n = 0, 1, ...
TermSequence lhs_terms(IdentityId id, const EvalParams& p, const DomainLimits& limits = {});

/// r-th term of the right-hand side with the outer prefactor folded in.
/// Finite inner sums are completed inside each term. For eq8 and eq12 the
/// closed form is the first term and every later term is zero.
TermSequence rhs_terms(IdentityId id, const EvalParams& p, const DomainLimits& limits = {});

/// m! (1-t)^{-1/2} (x sqrt(t)/2)^{-m} exp(-tx/(1-t)) I_m(x sqrt(t)/(1-t)),
/// with the removable singularity at x sqrt(t) = 0 filled by its limit
/// (1-t)^{-m-1/2}. Needs 0 <= t < 1, x >= 0, m present.
double closed_form_eq8(const EvalParams& p);

/// (1-t)^{alpha/2} cosh(sqrt(t) x - alpha asinh(sqrt(t/(1-t)))). Needs
/// 0 <= t < 1 and alpha present.
double closed_form_eq12(const EvalParams& p);

/// The same expression continued to complex t (|t| < 1). The function is
/// even in sqrt(t), so no branch choice is involved.
std::complex<double> closed_form_eq12(std::complex<double> t, double x, double alpha);

}  // namespace lacver

#endif  // LACVER_IDENTITIES_HPP
