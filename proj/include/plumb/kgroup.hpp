#pragma once

// Characters of colored DAGs (formal sums of colors) and the closed forms of the nested
// character formulas for stars and trees, checked against explicitly built DAGs.

#include "plumb/dagcat.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plumb::kgroup {

using dag::Bits;
using dag::Color;
using dag::ColoredDag;
using dag::Sign;

/// Integer combination of colors, exact for depths <= truncation().
class KElement {
 public:
  using Terms = std::map<Color, std::int64_t>;

  KElement(std::size_t bit_length = 0, int truncation = dag::kUnbounded)
      : bit_length_(bit_length), truncation_(truncation) {}

  /// The class of the single color (empty bits, depth 0).
  static KElement unit();

  std::size_t bit_length() const noexcept { return bit_length_; }
  int truncation() const noexcept { return truncation_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const Color& c) const;
  /// Lowest depth any term (known or beyond the truncation) can have.
  int valuation() const;

  /// Ignored when the depth exceeds the truncation.
  void add(const Color& c, std::int64_t coefficient);
  KElement truncated(int t) const;

  KElement& operator+=(const KElement& other);
  KElement& operator-=(const KElement& other);

  friend bool operator==(const KElement&, const KElement&) = default;

 private:
  std::size_t bit_length_;
  int truncation_;
  Terms terms_;
};

KElement operator+(KElement a, const KElement& b);
KElement operator-(KElement a, const KElement& b);
KElement scaled(const KElement& a, std::int64_t c);

/// Sum of the colors of all nodes with depth <= n. Throws if the DAG is truncated below n.
KElement character(const ColoredDag& q, int n);

/// Bilinear product: bits concatenate, depths add.
KElement kmul(const KElement& a, const KElement& b);

/// (b, d) -> (λ * b, d + depth).
KElement shift(const KElement& a, const Bits& lambda, int depth);

/// Coordinate i of the result is coordinate perm[i] of the input.
KElement permute_bits(const KElement& a, std::span<const std::size_t> perm);

/// Exact equality of all terms of depth <= n; throws if either truncation is below n.
bool equal_to_depth(const KElement& a, const KElement& b, int n);

/// Every coefficient of `big` is >= the matching coefficient of `small` up to depth n.
bool dominates(const KElement& big, const KElement& small, int n);

/// [+|±)*[+^{m-1}|±^{m-1}), materialized to at least `depth`.
ColoredDag star_block(std::size_t m, int depth);

/// [λ1|+)*[+^{m-1}|-^{m-1}) (or the [-^{m-1}|+^{m-1}) slice when `swapped`).
ColoredDag star_lhs_dag(Sign lambda1, std::size_t m, int depth, bool swapped = false);

struct SignedParts {
  KElement positive;  // terms with (-1)^{|ν|} = +1
  KElement negative;  // absolute value of the terms with (-1)^{|ν|} = -1
  KElement total() const { return positive - negative; }
};

/// Right-hand side of the star formula: signed ν-sum of binomially weighted shifted blocks.
SignedParts star_rhs_parts(Sign lambda1, std::size_t m, int n);
KElement star_rhs(Sign lambda1, std::size_t m, int n);

struct IdentityCheck {
  KElement lhs;
  KElement rhs;
  bool holds = false;
};

IdentityCheck verify_star_identity(Sign lambda1, std::size_t m, int n);

/// One summand of the tree formula: per-node ν_v, n_v and the resulting shift data.
struct TreeTerm {
  std::vector<Bits> nu;
  std::vector<int> n;
  int sign = 1;                   // (-1)^{Σ|ν_v|}
  std::int64_t multiplicity = 1;  // ∏ binom(n_v + m_v - 1, n_v)
  std::vector<int> depth_shift;   // 2 n_v + m_v + |ν_v|
};

struct TermBounds {
  std::optional<int> total_depth;       // Σ depth_shift <= total_depth
  std::vector<int> max_n;               // per-node cap on n_v (empty: none)
  std::optional<std::vector<Bits>> nu;  // fix ν_v per node
};

/// Streams the summands of the tree formula for recursion numbers m (canonical node order).
/// Either a depth budget or per-node n caps must be supplied.
void for_each_tree_term(std::span<const std::size_t> m, const TermBounds& bounds,
                        const std::function<void(const TreeTerm&)>& visit);

KElement tree_rhs(std::span<const std::size_t> m, int n);
IdentityCheck verify_tree_identity(std::span<const std::size_t> m, int n);

struct FelderCheck {
  int h = 0;
  KElement whole;       // [λ1|±]^h
  KElement sub;         // [λ1|+]^h
  KElement quotient;    // [λ̄1|+]^{h+1}
  bool holds = false;
};

std::vector<FelderCheck> verify_felder(Sign lambda1, int h_min, int h_max, int n);

/// Character of Q(±^I|±^I)[±^{m-I}|±^{m-I}) over Q = [ | ), bits in natural coordinate order.
/// `coords` are 0-based coordinate indices.
KElement defragmented_character(std::size_t m, const std::vector<std::size_t>& coords, int n);

/// Same object built by defragmenting `first`, then `second` (disjoint coordinate sets).
KElement defragmented_character_sequential(std::size_t m, const std::vector<std::size_t>& first,
                                           const std::vector<std::size_t>& second, int n);

struct DefragCheck {
  bool invariant = false;  // char(∫_I) = char([±^m|±^m))
  bool fubini = true;      // sequential splits of I agree with the joint one
};

DefragCheck verify_defrag(std::size_t m, const std::vector<std::size_t>& coords, int n);

}  // namespace plumb::kgroup
