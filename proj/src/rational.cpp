#include "plumb/rational.hpp"

#include "plumb/error.hpp"

#include <cctype>

namespace plumb {

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_signed(std::string_view s, bool& ok) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  ok = all_digits(s);
  if (!ok) return 0;
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::invalid_argument, "not a rational number: '" + std::string(text) + "'");
  };
  bool ok = false;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt p = parse_signed(text.substr(0, slash), ok);
    if (!ok) return fail();
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) return fail();
    BigInt q(std::string{den});
    if (q == 0) return fail();
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    std::string_view whole = text.substr(0, dot);
    bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) return fail();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(BigInt(std::string(whole)) * scale + BigInt(std::string(frac)), scale);
    return neg ? Rational(-r) : r;
  }
  BigInt p = parse_signed(text, ok);
  if (!ok) return fail();
  return Rational(p);
}

std::int64_t ceil_sqrt(const Rational& r) {
  if (r <= 0) return 0;
  // B*B >= p/q  <=>  B*B*q >= p
  const BigInt p = numerator(r);
  const BigInt q = denominator(r);
  BigInt b = boost::multiprecision::sqrt(BigInt(p / q));
  while (b * b * q < p) ++b;
  while (b > 0 && (b - 1) * (b - 1) * q >= p) --b;
  return b.convert_to<std::int64_t>();
}

std::int64_t floor_to_int(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (r < 0 && Rational(q) != r) q -= 1;
  return q.convert_to<std::int64_t>();
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::internal, "integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::internal, "integer overflow in multiplication");
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i after the multiplication
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

}  // namespace plumb
