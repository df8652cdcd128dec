#ifndef LACVER_SERIES_HPP
#define LACVER_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <functional>

namespace lacver {

/// Stopping rule for an infinite series.
///
/// Summation stops once `streak` consecutive terms each satisfy
/// |term| <= rel_tol * max(1, |partial sum|), or after `max_terms` terms.
struct TruncationPolicy {
  double rel_tol = 1e-12;
  int streak = 3;
  int max_terms = 400;

  /// Throws DomainError unless rel_tol > 0, streak >= 1, max_terms >= streak.
  void validate() const;
};

struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  double last_term_mag = 0.0;
  bool converged = false;
};

/// Stateful producer of successive series terms; each call yields the next one.
using TermSequence = std::function<double()>;

/// Per-term hook: index, term, running sum, running compensation.
using SumObserver =
    std::function<void(std::size_t, double, double, double)>;

/// Neumaier's variant of Kahan summation. `compensation` holds the
/// accumulated low-order part not yet folded into `sum`.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      compensation_ += (sum_ - t) + v;
    } else {
      compensation_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + compensation_; }
  double compensation() const noexcept { return compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Sums `terms` until the policy's stopping rule fires or the cap is hit.
/// Throws NumericError on a non-finite term and DomainError on a bad policy.
SeriesResult sum_adaptive(const TermSequence& terms,
                          const TruncationPolicy& policy,
                          const SumObserver& observer = {});

}  // namespace lacver

#endif  // LACVER_SERIES_HPP
