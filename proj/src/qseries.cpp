#include "plumb/qseries.hpp"

#include "plumb/error.hpp"

namespace plumb {

std::int64_t QSeries::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void QSeries::add_term(const Rational& exponent, std::int64_t c) {
  if (c == 0 || exponent > order_) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

QSeries add(const QSeries& a, const QSeries& b) {
  QSeries out(a.order() < b.order() ? a.order() : b.order());
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

QSeries scale_shift(const QSeries& a, std::int64_t scale, const Rational& shift) {
  QSeries out(a.order() + shift);
  for (const auto& [e, c] : a.terms()) out.add_term(e + shift, checked_mul(scale, c));
  return out;
}

bool equal_to_order(const QSeries& a, const QSeries& b, const Rational& n) {
  if (a.order() < n || b.order() < n)
    throw Error(ErrorCode::insufficient_truncation,
                "insufficient truncation: comparing to order " + to_fraction_string(n));
  auto ia = a.terms().begin(), ib = b.terms().begin();
  auto end_a = a.terms().upper_bound(n), end_b = b.terms().upper_bound(n);
  for (; ia != end_a && ib != end_b; ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return ia == end_a && ib == end_b;
}

}  // namespace plumb
