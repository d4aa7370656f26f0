#include "rigged/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "rigged/error.hpp"
#include "rigged/phase.hpp"

namespace rigged {

QPolynomial::QPolynomial(mpz_class constant) { add_term(0, constant); }

QPolynomial QPolynomial::monomial(std::int64_t degree, mpz_class coefficient) {
  QPolynomial p;
  p.add_term(degree, coefficient);
  return p;
}

void QPolynomial::add_term(std::int64_t degree, const mpz_class& coefficient) {
  if (degree < 0) throw InputError("q-polynomials have no negative powers");
  if (order_ && degree > *order_) return;
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class QPolynomial::coefficient(std::int64_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void QPolynomial::clip() {
  if (!order_) return;
  terms_.erase(terms_.upper_bound(*order_), terms_.end());
}

QPolynomial QPolynomial::truncated(std::int64_t order) const {
  QPolynomial out = *this;
  out.order_ = out.order_ ? std::min(*out.order_, order) : order;
  out.clip();
  return out;
}

namespace {

std::optional<std::int64_t> min_order(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  order_ = min_order(order_, other.order_);
  clip();
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  order_ = min_order(order_, other.order_);
  clip();
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  out.order_ = min_order(a.order_, b.order_);
  for (const auto& [da, ca] : a.terms_) {
    if (out.order_ && da > *out.order_) break;
    for (const auto& [db, cb] : b.terms_) {
      if (out.order_ && da + db > *out.order_) break;
      out.add_term(da + db, ca * cb);
    }
  }
  return out;
}

QPolynomial QPolynomial::divided_exactly_by(const QPolynomial& divisor) const {
  if (order_ || divisor.order_) throw InternalError("exact division of truncated series");
  if (divisor.is_zero()) throw InternalError("division by the zero polynomial");
  const std::int64_t dd = divisor.degree();
  const mpz_class lead = divisor.terms_.rbegin()->second;
  if (lead != 1 && lead != -1) throw InternalError("divisor must have a unit leading coefficient");

  QPolynomial remainder = *this;
  QPolynomial quotient;
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    const std::int64_t shift = remainder.degree() - dd;
    const mpz_class factor = remainder.terms_.rbegin()->second * lead;
    quotient.add_term(shift, factor);
    for (const auto& [d, c] : divisor.terms_) remainder.add_term(d + shift, -factor * c);
  }
  if (!remainder.is_zero()) throw InternalError("polynomial division left a remainder");
  return quotient;
}

std::optional<std::int64_t> QPolynomial::first_difference(const QPolynomial& other) const {
  const auto limit = min_order(order_, other.order_);
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  std::optional<std::int64_t> found;
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      found = a->first;
    } else if (a == terms_.end() || b->first < a->first) {
      found = b->first;
    } else if (a->second != b->second) {
      found = a->first;
    } else {
      ++a;
      ++b;
      continue;
    }
    break;
  }
  if (found && limit && *found > *limit) return std::nullopt;
  return found;
}

std::string QPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    mpz_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << 'q';
    if (d != 1) out << '^' << d;
  }
  if (first) out << '0';
  if (order_) out << " + O(q^" << (*order_ + 1) << ')';
  return out.str();
}

QPolynomial q_binomial(std::int64_t m, std::int64_t n) {
  if (n < 0 || n > m) return {};
  n = std::min(n, m - n);
  // After step i the running value is [m-n+i over i].
  QPolynomial value(1);
  for (std::int64_t i = 1; i <= n; ++i) {
    QPolynomial numerator(1);
    numerator.add_term(m - n + i, -1);
    QPolynomial denominator(1);
    denominator.add_term(i, -1);
    value = (value * numerator).divided_exactly_by(denominator);
  }
  return value;
}

QPolynomial inv_pochhammer(std::int64_t m, std::int64_t order) {
  if (m < 0) throw InputError("q-Pochhammer index must be non-negative");
  if (order < 0) throw InputError("series order must be non-negative");
  std::vector<mpz_class> c(static_cast<std::size_t>(order + 1), 0);
  c[0] = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    for (std::int64_t d = i; d <= order; ++d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - i)];
  }
  QPolynomial out = QPolynomial().truncated(order);
  for (std::int64_t d = 0; d <= order; ++d) out.add_term(d, c[static_cast<std::size_t>(d)]);
  return out;
}

std::int64_t quadratic_form_Q(std::span<const int> m, int k) {
  if (static_cast<std::int64_t>(m.size()) != k) {
    throw InputError("multiplicity vector must have length k");
  }
  const PhaseTable a(k);
  std::int64_t twice = 0;
  for (int l = 1; l <= k; ++l) {
    const std::int64_t ml = m[static_cast<std::size_t>(l - 1)];
    if (ml < 0) throw InputError("multiplicities must be non-negative");
    for (int lp = 1; lp <= k; ++lp) twice += a(l, lp) * ml * m[static_cast<std::size_t>(lp - 1)];
    twice -= a(l, l) * ml;
  }
  return twice / 2;
}

}  // namespace rigged
