#ifndef LACVER_SPECFUN_HPP
#define LACVER_SPECFUN_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "lacver/series.hpp"

namespace lacver {

/// A real number stored as sign * exp(log_abs). Zero has sign 0 and
/// log_abs = -inf. Used to assemble products of factorials, Gammas and
/// powers whose intermediate factors overflow double.
struct SignedLog {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static SignedLog from(double v) noexcept {
    if (v == 0.0) return {};
    return {std::log(std::abs(v)), v < 0.0 ? -1 : 1};
  }
  static SignedLog from_log(double log_abs, int sign = 1) noexcept {
    return {log_abs, sign};
  }

  bool is_zero() const noexcept { return sign == 0; }
  double to_double() const noexcept {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
  }

  /// v^e for integer e >= 0 with 0^0 = 1.
  SignedLog pow(int e) const noexcept {
    if (e == 0) return {0.0, 1};
    if (sign == 0) return {};
    return {log_abs * e, (sign < 0 && (e % 2 != 0)) ? -1 : 1};
  }

  friend SignedLog operator*(SignedLog a, SignedLog b) noexcept {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }
  friend SignedLog operator/(SignedLog a, SignedLog b) noexcept {
    // Callers never divide by zero; b.sign == 0 yields a NaN magnitude.
    if (a.sign == 0) return {};
    return {a.log_abs - b.log_abs, a.sign * b.sign};
  }
  SignedLog& operator*=(SignedLog b) noexcept { return *this = *this * b; }
  SignedLog& operator/=(SignedLog b) noexcept { return *this = *this / b; }
};

/// Rising factorial a (a+1) ... (a+n-1), as an explicit product.
double pochhammer(double a, int n);

/// Same product accumulated as a SignedLog; exact zero if any factor is zero.
SignedLog log_pochhammer(double a, int n);

/// C(n + alpha, n - k) = (alpha+k+1)_{n-k} / (n-k)!, as a running product
/// of ratios. Total in alpha.
/// Throws DomainError unless 0 <= k <= n.
double generalized_binomial(double alpha, int n, int k);

/// Associated Laguerre polynomial L_n^{(alpha)}(x) by three-term recurrence.
/// Valid for any real alpha, including negative integers.
double laguerre(int n, double alpha, double x);

/// L_n^{(alpha)}(x) by the recurrence with power-of-two rescaling, so
/// degrees where the value exceeds double range are still representable.
SignedLog log_laguerre(int n, double alpha, double x);

/// L_n^{(alpha)}(x) = sum_j (-1)^{n-j} C(n+alpha, j) x^{n-j} / (n-j)!, with
/// C(n+alpha, j) built upward from C(n+alpha, 0) = 1. Stable where the
/// recurrence is not: large degree with order near -n (e.g. order alpha - n).
double laguerre_descending(int n, double alpha, double x);

/// L_n^{(alpha)}(x) from the explicit finite sum
///   sum_k (-1)^k C(n+alpha, n-k) x^k / k!,
/// accumulated in double-double. Independent cross-check for laguerre().
double laguerre_sum(int n, double alpha, double x);

/// G_r(y) = i^{-r} H_r(i y), the physicists' Hermite polynomial at an
/// imaginary argument rotated onto the real axis:
///   G_0 = 1, G_1 = 2y, G_{j+1} = 2y G_j + 2j G_{j-1}.
double hermite_imag(int r, double y);

/// Incremental table of G_0(y), G_1(y), ... in SignedLog form.
class HermiteImagTable {
 public:
  explicit HermiteImagTable(double y);

  /// G_r(y); extends the recurrence as needed.
  SignedLog at(int r);

 private:
  double y_;
  double prev_ = 0.0;  // scaled G_{j-1}
  double cur_ = 1.0;   // scaled G_j
  double log_scale_ = 0.0;
  std::vector<SignedLog> values_;
};

/// Modified Bessel function I_m(z) from its ascending power series.
/// Throws DomainError for m < 0 or z < 0.
double bessel_i(int m, double z, const TruncationPolicy& policy = {});

/// ln(n!). Table lookup for n <= 170, log_gamma(n + 1) beyond.
double log_factorial(int n);

/// ln Gamma(x) for x > 0; throws DomainError otherwise.
double log_gamma(double x);

}  // namespace lacver

#endif  // LACVER_SPECFUN_HPP
