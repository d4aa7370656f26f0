#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include <gmpxx.h>

namespace rigged {

/// A polynomial in q with arbitrary-precision integer coefficients, or a
/// power series known only through degree `order()`. Coefficients above the
/// order are unknown rather than zero, so sums and products of series keep
/// the smaller of the two orders.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(mpz_class constant);
  static QPolynomial monomial(std::int64_t degree, mpz_class coefficient = 1);

  /// Throws InputError on a negative degree.
  void add_term(std::int64_t degree, const mpz_class& coefficient);

  mpz_class coefficient(std::int64_t degree) const;
  const std::map<std::int64_t, mpz_class>& terms() const noexcept { return terms_; }
  std::optional<std::int64_t> order() const noexcept { return order_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest stored degree, or -1 for zero.
  std::int64_t degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  /// Drops every term above `order` and marks the result as a series.
  QPolynomial truncated(std::int64_t order) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  /// Exact polynomial division. Throws InternalError unless the remainder is
  /// zero; both operands must be untruncated and the divisor nonzero with
  /// leading coefficient +-1.
  QPolynomial divided_exactly_by(const QPolynomial& divisor) const;

  /// Smallest degree at which the two disagree, considering only degrees
  /// known in both. Empty if they agree there.
  std::optional<std::int64_t> first_difference(const QPolynomial& other) const;

  /// Equality of coefficients and of truncation order.
  bool operator==(const QPolynomial&) const = default;

  /// "1 + q^2 + 3*q^5"; series end with "+ O(q^n)". Zero prints as "0".
  std::string to_string() const;

 private:
  void clip();

  std::map<std::int64_t, mpz_class> terms_;
  std::optional<std::int64_t> order_;
};

/// Gaussian binomial [m over n]; zero unless 0 <= n <= m.
QPolynomial q_binomial(std::int64_t m, std::int64_t n);

/// 1/(q)_m = 1/prod_{i=1}^m (1-q^i) through degree `order`.
QPolynomial inv_pochhammer(std::int64_t m, std::int64_t order);

/// Q(m) = (Am,m)/2 - sum_l A_{l,l} m_l / 2 with m indexed from weight 1.
/// Throws InputError unless m has exactly k non-negative entries.
std::int64_t quadratic_form_Q(std::span<const int> m, int k);

}  // namespace rigged
