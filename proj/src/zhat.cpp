#include "plumb/zhat.hpp"

#include "plumb/error.hpp"
#include "plumb/parallel.hpp"

#include <numeric>

namespace plumb {

std::vector<std::int64_t> enumeration_bound(const QuadraticForm& form, const Rational& order) {
  const RationalMatrix inv = inverse(form.matrix);
  Rational r = 0;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < inv.size(); ++j) row += abs(inv(i, j));
    r = std::max(r, row);
  }
  const Rational radius2 = order > 0 ? Rational(order * r) : Rational(0);
  return std::vector<std::int64_t>(form.dimension(), ceil_sqrt(radius2));
}

int bosonic_prefactor(const Tree& tree, const std::vector<int>& signs) {
  int sign = 1;
  for (VertexId v = 0; v < tree.size(); ++v) {
    const std::size_t deg = tree.degree(v);
    if (deg <= 1) {
      sign *= signs.at(v);
    } else if (deg >= 3) {
      if ((deg - leaf_neighbors(tree, v).size()) % 2 == 1) sign *= signs.at(v);
    }
  }
  return sign;
}

namespace {

using Wide = __int128;

Wide mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::unsupported, "exponent numerator exceeds the 128-bit range");
  return out;
}

Wide plus(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::unsupported, "exponent numerator exceeds the 128-bit range");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt to_big(Wide w) {
  const bool neg = w < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(w) : static_cast<unsigned __int128>(w);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

// x^T S x with x = y / scale and S = s_int / s_den, all integer.
struct ScaledForm {
  std::vector<std::vector<std::int64_t>> s_int;
  BigInt denominator;  // scale^2 * s_den
  BigInt limit_num;    // y^T s_int y <= limit_num / limit_den  <=>  Q <= order
  BigInt limit_den;

  ScaledForm(const QuadraticForm& form, std::int64_t scale, const Rational& order) {
    const std::size_t d = form.dimension();
    BigInt s_den = 1;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) s_den = boost::multiprecision::lcm(s_den, BigInt(denominator_of(form.matrix(i, j))));
    s_int.assign(d, std::vector<std::int64_t>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Rational v = form.matrix(i, j) * s_den;
        const BigInt num = boost::multiprecision::numerator(v);
        if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
          throw Error(ErrorCode::unsupported, "quadratic form entries exceed the 64-bit range");
        s_int[i][j] = num.convert_to<std::int64_t>();
      }
    denominator = BigInt(scale) * scale * s_den;
    limit_num = boost::multiprecision::numerator(order) * denominator;
    limit_den = boost::multiprecision::denominator(order);
  }

  static BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

  Wide value(const std::vector<std::int64_t>& y) const {
    Wide total = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      Wide row = 0;
      for (std::size_t j = 0; j < y.size(); ++j) row = plus(row, mul(s_int[i][j], y[j]));
      total = plus(total, mul(row, y[i]));
    }
    return total;
  }

  bool within(Wide v) const { return to_big(v) * limit_den <= limit_num; }
  Rational exponent(Wide v) const { return Rational(to_big(v), denominator); }
};

}  // namespace

QSeries zhat_bosonic(const PlumbedGraph& pg, const Rational& order, const ZhatOptions& options) {
  validate(pg);
  if (order < 0) throw Error(ErrorCode::invalid_argument, "order must be non-negative");
  const QuadraticForm form = theta_form(pg);
  const Tree& tree = pg.tree;
  const DegreePartition part = degree_partition(tree);
  const std::size_t d = form.dimension();

  // common denominator of every coordinate: 2 * lcm |w_leaf|
  std::int64_t lcm_leaf = 1;
  for (VertexId i : part.leaves) {
    if (pg.weight(i) == 0) throw Error(ErrorCode::invalid_argument, "leaf '" + tree.id(i) + "' has weight 0");
    lcm_leaf = std::lcm(lcm_leaf, std::abs(pg.weight(i)));
  }
  const std::int64_t scale = 2 * lcm_leaf;
  const ScaledForm sf(form, scale, order);

  std::vector<std::int64_t> bound = enumeration_bound(form, order);
  for (auto& b : bound) b += options.slack;

  // sign slots: nodes first, then leaves
  std::vector<VertexId> slots = part.nodes;
  slots.insert(slots.end(), part.leaves.begin(), part.leaves.end());
  if (slots.size() > 40) throw Error(ErrorCode::unsupported, "too many sign assignments to enumerate");

  struct Coordinate {
    VertexId v;
    bool node;
    std::int64_t binom_top;  // deg - 3
    std::vector<VertexId> leaves;
  };
  std::vector<Coordinate> coords;
  for (VertexId v : form.index) {
    const std::size_t deg = tree.degree(v);
    coords.push_back({v, deg >= 3, static_cast<std::int64_t>(deg) - 3, leaf_neighbors(tree, v)});
  }

  const std::size_t combos = std::size_t{1} << slots.size();
  return parallel_series_sum(combos, options.threads, order, [&](std::size_t mask, QSeries& sink) {
    std::vector<int> sign(tree.size(), 1);
    for (std::size_t k = 0; k < slots.size(); ++k) sign[slots[k]] = (mask >> k) & 1U ? -1 : 1;
    const int prefactor = bosonic_prefactor(tree, sign);

    // scaled offset of every coordinate and the largest n allowed at nodes
    std::vector<std::int64_t> offset(d), cap(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      const Coordinate& c = coords[i];
      std::int64_t off = c.node ? scale / 2 * (static_cast<std::int64_t>(tree.degree(c.v)) - 2) : 0;
      for (VertexId leaf : c.leaves) off += sign[leaf] * (lcm_leaf / pg.weight(leaf));
      offset[i] = off;
      if (c.node) {
        cap[i] = floor_div(scale * bound[i] - off, scale);
        if (cap[i] < 0) return;
      }
    }

    std::vector<std::int64_t> n(d, 0), y(d);
    while (true) {
      std::int64_t mult = 1;
      for (std::size_t i = 0; i < d; ++i) {
        const Coordinate& c = coords[i];
        if (c.node) {
          y[i] = sign[c.v] * (scale * n[i] + offset[i]);
          mult = checked_mul(mult, binomial(n[i] + c.binom_top, n[i]));
        } else {
          y[i] = offset[i];
        }
      }
      const Wide value = sf.value(y);
      if (sf.within(value)) sink.add_term(sf.exponent(value), checked_mul(prefactor, mult));

      std::size_t i = 0;
      for (; i < d; ++i) {
        if (!coords[i].node) continue;
        if (n[i] < cap[i]) {
          ++n[i];
          break;
        }
        n[i] = 0;
      }
      if (i == d) break;
    }
  });
}

}  // namespace plumb
