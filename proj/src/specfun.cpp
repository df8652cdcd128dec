#include "lacver/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lacver/double_double.hpp"
#include "lacver/error.hpp"

namespace lacver {
namespace {

constexpr int kRescaleExponent = 500;
constexpr double kRescaleHigh = 0x1p500;
constexpr double kRescaleLow = 0x1p-500;
constexpr int kFactorialTableMax = 170;

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + " must be nonnegative, got " + std::to_string(n));
  }
}

// Keeps a pair of consecutive recurrence values inside double range by
// moving powers of two into a shared exponent. Scaling by 2^k is exact.
void rescale(double& prev, double& cur, int& exponent) {
  const double mag = std::max(std::abs(prev), std::abs(cur));
  if (mag > kRescaleHigh) {
    prev = std::ldexp(prev, -kRescaleExponent);
    cur = std::ldexp(cur, -kRescaleExponent);
    exponent += kRescaleExponent;
  } else if (mag != 0.0 && mag < kRescaleLow) {
    prev = std::ldexp(prev, kRescaleExponent);
    cur = std::ldexp(cur, kRescaleExponent);
    exponent -= kRescaleExponent;
  }
}

SignedLog with_exponent(double scaled, int exponent) {
  SignedLog v = SignedLog::from(scaled);
  if (!v.is_zero()) v.log_abs += exponent * std::numbers::ln2;
  return v;
}

const std::array<double, kFactorialTableMax + 1>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialTableMax + 1> t{};
    DoubleDouble f(1.0);
    t[0] = 0.0;
    for (int n = 1; n <= kFactorialTableMax; ++n) {
      f *= DoubleDouble(static_cast<double>(n));
      t[n] = std::log(f.hi) + f.lo / f.hi;
    }
    return t;
  }();
  return table;
}

// C(n + alpha, n - k) in double-double. The factors alpha + k + 1 + i are
// formed exactly as unevaluated sums.
DoubleDouble generalized_binomial_dd(double alpha, int n, int k) {
  DoubleDouble num(1.0);
  DoubleDouble den(1.0);
  for (int i = 0; i < n - k; ++i) {
    num *= dd_detail::two_sum(alpha, static_cast<double>(k + 1 + i));
    den *= DoubleDouble(static_cast<double>(i + 1));
  }
  return num / den;
}

}  // namespace

double pochhammer(double a, int n) {
  require_nonnegative(n, "pochhammer: n");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

SignedLog log_pochhammer(double a, int n) {
  require_nonnegative(n, "log_pochhammer: n");
  SignedLog p = SignedLog::from(1.0);
  for (int i = 0; i < n; ++i) p *= SignedLog::from(a + i);
  return p;
}

double generalized_binomial(double alpha, int n, int k) {
  require_nonnegative(n, "generalized_binomial: n");
  if (k < 0 || k > n) {
    throw DomainError("generalized_binomial: need 0 <= k <= n, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
  double c = 1.0;
  for (int i = 0; i < n - k; ++i) c *= (alpha + k + 1 + i) / (i + 1);
  return c;
}

double laguerre(int n, double alpha, double x) {
  require_nonnegative(n, "laguerre: n");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2 * j + alpha + 1 - x) * cur - (j + alpha) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

SignedLog log_laguerre(int n, double alpha, double x) {
  require_nonnegative(n, "log_laguerre: n");
  if (n == 0) return SignedLog::from(1.0);
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  int exponent = 0;
  for (int j = 1; j < n; ++j) {
    const double next = ((2 * j + alpha + 1 - x) * cur - (j + alpha) * prev) / (j + 1);
    prev = cur;
    cur = next;
    rescale(prev, cur, exponent);
  }
  return with_exponent(cur, exponent);
}

double laguerre_descending(int n, double alpha, double x) {
  require_nonnegative(n, "laguerre_descending: n");
  // x^k / k! for k = 0..n, then walk j = n - k upward.
  std::vector<double> power(n + 1);
  power[0] = 1.0;
  for (int k = 1; k <= n; ++k) power[k] = power[k - 1] * x / k;

  CompensatedSum acc;
  double binom = 1.0;  // C(n + alpha, j)
  for (int j = 0; j <= n; ++j) {
    const int k = n - j;
    acc.add((k % 2 == 0 ? 1.0 : -1.0) * binom * power[k]);
    binom *= (n + alpha - j) / (j + 1);
  }
  return acc.value();
}

double laguerre_sum(int n, double alpha, double x) {
  require_nonnegative(n, "laguerre_sum: n");
  DoubleDouble total(0.0);
  DoubleDouble power(1.0);  // (-x)^k / k!
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      power *= DoubleDouble(-x);
      power /= DoubleDouble(static_cast<double>(k));
    }
    total += generalized_binomial_dd(alpha, n, k) * power;
  }
  return total.to_double();
}

double hermite_imag(int r, double y) {
  require_nonnegative(r, "hermite_imag: r");
  if (r == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * y;
  for (int j = 1; j < r; ++j) {
    const double next = 2.0 * y * cur + 2.0 * j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

HermiteImagTable::HermiteImagTable(double y) : y_(y) {
  values_.push_back(SignedLog::from(1.0));
}

SignedLog HermiteImagTable::at(int r) {
  require_nonnegative(r, "HermiteImagTable: r");
  int exponent = 0;
  while (static_cast<int>(values_.size()) <= r) {
    const int j = static_cast<int>(values_.size()) - 1;
    const double next = 2.0 * y_ * cur_ + 2.0 * j * prev_;
    prev_ = cur_;
    cur_ = next;
    exponent = 0;
    rescale(prev_, cur_, exponent);
    log_scale_ += exponent * std::numbers::ln2;
    SignedLog v = SignedLog::from(cur_);
    if (!v.is_zero()) v.log_abs += log_scale_;
    values_.push_back(v);
  }
  return values_[r];
}

double bessel_i(int m, double z, const TruncationPolicy& policy) {
  require_nonnegative(m, "bessel_i: m");
  if (!(z >= 0.0)) {
    throw DomainError("bessel_i: z must be nonnegative, got " + std::to_string(z));
  }
  if (z == 0.0) return m == 0 ? 1.0 : 0.0;

  const double half = 0.5 * z;
  const double ratio_num = half * half;
  double term = std::exp(m * std::log(half) - log_factorial(m));
  int k = 0;
  auto terms = [&]() {
    const double out = term;
    term *= ratio_num / ((k + 1.0) * (k + 1.0 + m));
    ++k;
    return out;
  };
  return sum_adaptive(terms, policy).value;
}

double log_factorial(int n) {
  require_nonnegative(n, "log_factorial: n");
  if (n <= kFactorialTableMax) return log_factorial_table()[n];
  return log_gamma(n + 1.0);
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  if (x <= kFactorialTableMax + 1 && x == std::floor(x)) {
    return log_factorial_table()[static_cast<int>(x) - 1];
  }
  // Lanczos approximation, g = 671/128, 14 coefficients.
  static constexpr std::array<double, 14> kCoef = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  double y = x;
  for (double c : kCoef) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

}  // namespace lacver
