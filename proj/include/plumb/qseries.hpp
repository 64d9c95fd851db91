#pragma once

#include "plumb/rational.hpp"

#include <cstdint>
#include <map>

namespace plumb {

/// Finitely supported sum of c * q^e with rational e and integer c, known exactly for e <= order.
/// Terms above the order are never stored and zero coefficients are dropped.
class QSeries {
 public:
  using Terms = std::map<Rational, std::int64_t>;

  explicit QSeries(Rational order = 0) : order_(std::move(order)) {}

  const Rational& order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const Rational& exponent) const;

  /// Adds c * q^e; ignored when e > order.
  void add_term(const Rational& exponent, std::int64_t coefficient);

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Rational order_;
  Terms terms_;
};

/// Coefficientwise sum truncated to min(a.order, b.order).
QSeries add(const QSeries& a, const QSeries& b);

/// (e, k) -> (e + shift, scale * k); the order moves with the shift.
QSeries scale_shift(const QSeries& a, std::int64_t scale, const Rational& shift);

/// Exact comparison of all coefficients with exponent <= n.
/// Throws Error(insufficient_truncation) if either order is below n.
bool equal_to_order(const QSeries& a, const QSeries& b, const Rational& n);

}  // namespace plumb
