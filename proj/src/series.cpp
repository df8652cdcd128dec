#include "lacver/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lacver/error.hpp"

namespace lacver {

void TruncationPolicy::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw DomainError("truncation policy: rel_tol must be a positive finite number");
  }
  if (streak < 1) {
    throw DomainError("truncation policy: streak must be at least 1");
  }
  if (max_terms < streak) {
    throw DomainError("truncation policy: max_terms must be at least streak");
  }
}

SeriesResult sum_adaptive(const TermSequence& terms,
                          const TruncationPolicy& policy,
                          const SumObserver& observer) {
  policy.validate();

  CompensatedSum acc;
  SeriesResult result;
  int run = 0;
  const auto cap = static_cast<std::size_t>(policy.max_terms);

  for (std::size_t i = 0; i < cap; ++i) {
    const double term = terms();
    if (!std::isfinite(term)) {
      throw NumericError("non-finite series term at index " + std::to_string(i), i);
    }
    acc.add(term);
    const double partial = acc.value();
    if (observer) observer(i, term, partial, acc.compensation());

    result.terms_used = i + 1;
    result.last_term_mag = std::abs(term);
    if (std::abs(term) <= policy.rel_tol * std::max(1.0, std::abs(partial))) {
      ++run;
    } else {
      run = 0;
    }
    if (run >= policy.streak) {
      result.converged = true;
      break;
    }
  }
  result.value = acc.value();
  return result;
}

}  // namespace lacver
