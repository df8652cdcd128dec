#ifndef LACVER_ERROR_HPP
#define LACVER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lacver {

/// Argument outside the domain of a function or identity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series produced an overflowed or NaN term.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::size_t term_index)
      : std::runtime_error(what), term_index_(term_index) {}

  std::size_t term_index() const noexcept { return term_index_; }

 private:
  std::size_t term_index_;
};

}  // namespace lacver

#endif  // LACVER_ERROR_HPP
