#pragma once

// C_m-colored DAGs: hypercubes (D|E), Cartesian products, slim DAGs, left/right fragments,
// bit/depth shifts, reversal, the H^0 and quotient operations and the bilateral objects.
//
// Node identities are structural: a node of Q[λ|±^m) is the key of its base node in Q followed
// by the pairs (λ_i, μ_i). Isomorphisms asserted below therefore come with an explicit node
// bijection (usually the identity on keys) and are checked by comparing keys, colors and edges.

#include <climits>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plumb::dag {

enum class Sign : std::uint8_t { plus = 0, minus = 1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }
inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Word in Z_2^m (m <= 64). Coordinate 0 is the leftmost character.
class Bits {
 public:
  Bits() = default;
  static Bits all_plus(std::size_t m);
  static Bits all_minus(std::size_t m);
  /// "+-+" style; "" is the empty word.
  static Bits parse(std::string_view text);
  static Bits single(Sign s) { return parse(s == Sign::plus ? "+" : "-"); }

  std::size_t size() const noexcept { return len_; }
  Sign operator[](std::size_t i) const;
  Bits with(std::size_t i, Sign s) const;

  /// |λ|: number of '-' entries.
  std::size_t weight() const;
  /// λ̄ = -^m * λ.
  Bits conj() const;
  Bits concat(const Bits& other) const;
  Bits slice(std::size_t pos, std::size_t count) const;
  /// λ <= μ iff every '+' of λ is '+' in μ.
  bool leq(const Bits& mu) const;

  std::string str() const;

  friend Bits operator*(const Bits& a, const Bits& b);
  friend bool operator==(const Bits&, const Bits&) = default;
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  // coordinate i lives at bit (len - 1 - i), so integer order is lexicographic order
  std::uint64_t mask_ = 0;
  std::uint8_t len_ = 0;
};

/// |μ - λ| := #{i : λ_i = '-' and μ_i = '+'}.
std::size_t up_distance(const Bits& mu, const Bits& lambda);

/// All of Z_2^m in lexicographic order ('+' < '-').
std::vector<Bits> all_bits(std::size_t m);

/// Expands a pattern over {+, -, ±} ('*' is accepted for ±) into the subset it denotes.
std::vector<Bits> expand_pattern(std::string_view pattern);

struct Color {
  Bits bits;
  int depth = 0;

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;
};

std::string to_string(const Color& c);

using NodeKey = std::vector<std::int32_t>;

/// Marks a DAG that is complete at every depth (finite objects).
inline constexpr int kUnbounded = INT_MAX / 4;

/// Saturating depth arithmetic around kUnbounded.
int depth_add(int a, int b);

/// Colored DAG whose node set is complete for all depths <= truncation(). Nodes are kept in
/// ascending key order and edges as sorted (source, target) index pairs.
class ColoredDag {
 public:
  struct Node {
    NodeKey key;
    Color color;
  };
  using Edge = std::pair<std::size_t, std::size_t>;

  class Builder;

  ColoredDag() = default;

  std::size_t bit_length() const noexcept { return bit_length_; }
  int truncation() const noexcept { return truncation_; }
  bool bounded() const noexcept { return truncation_ < kUnbounded; }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find(const NodeKey& key) const;
  bool has_edge(std::size_t from, std::size_t to) const;

  /// Minimal depth over all nodes (0 for the empty DAG).
  int min_depth() const;
  /// Injective coloring.
  bool is_labeled() const;
  bool is_acyclic() const;

  /// Sub-DAG on nodes of depth <= t.
  ColoredDag restricted(int t) const;

  template <class Pred>
  ColoredDag induced(Pred keep) const;

 private:
  std::size_t bit_length_ = 0;
  int truncation_ = kUnbounded;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

/// Collects nodes/edges by key, then sorts into canonical form.
class ColoredDag::Builder {
 public:
  Builder(std::size_t bit_length, int truncation) : bit_length_(bit_length), truncation_(truncation) {}

  /// Nodes deeper than the truncation are silently dropped. Returns false in that case.
  bool add_node(NodeKey key, Color color);
  /// Both endpoints must have been added; otherwise the edge is dropped.
  void add_edge(const NodeKey& from, const NodeKey& to);
  bool contains(const NodeKey& key) const { return nodes_.count(key) != 0; }

  ColoredDag build() &&;

 private:
  std::size_t bit_length_;
  int truncation_;
  std::map<NodeKey, Color> nodes_;
  std::vector<std::pair<NodeKey, NodeKey>> edges_;
};

template <class Pred>
ColoredDag ColoredDag::induced(Pred keep) const {
  Builder b(bit_length_, truncation_);
  for (const Node& n : nodes_)
    if (keep(n)) b.add_node(n.key, n.color);
  for (auto [s, t] : edges_) b.add_edge(nodes_[s].key, nodes_[t].key);
  return std::move(b).build();
}

/// The C_0-labeled DAG [ | ) = 2Z>=0 (semisimple, no arrows), materialized to max_depth.
ColoredDag base_chain(int max_depth);

/// Single node of color (empty bits, 0); neutral element of product().
ColoredDag unit();

/// Induced subgraph (D|E) of the 2m-cube DAG (±^m|±^m).
ColoredDag hypercube(std::span<const Bits> d, std::span<const Bits> e, int max_depth = kUnbounded);

/// Cartesian product; bits concatenate, depths add, keys concatenate.
ColoredDag product(const ColoredDag& q, const ColoredDag& r);

/// Disjoint union; node keys must not collide.
ColoredDag disjoint_union(std::span<const ColoredDag> parts);

/// Labeled and (b, d) in Q => (b, d + 2) in Q, checked up to the truncation.
bool is_slim(const ColoredDag& q);

enum class Side { left, right };

/// Q[λ|±^m) (left) or Q(±^m|λ̄] (right, param = λ̄). The effective truncation is
/// min(max_depth, truncation(Q) - 2m). Throws Error(not_slim) if Q is not slim.
ColoredDag fragment(const ColoredDag& q, Side side, const Bits& param, int max_depth);
ColoredDag fragment_left(const ColoredDag& q, const Bits& lambda, int max_depth);
ColoredDag fragment_right(const ColoredDag& q, const Bits& lambda_bar, int max_depth);

/// Q[D|E): disjoint union over λ in D of Q[λ|±^m) restricted to μ in E.
ColoredDag fragment_family(const ColoredDag& q, std::span<const Bits> d, std::span<const Bits> e,
                           int max_depth);
/// Q(D|E]: disjoint union over λ̄ in E of Q(±^m|λ̄] restricted to κ in D.
ColoredDag fragment_family_right(const ColoredDag& q, std::span<const Bits> d, std::span<const Bits> e,
                                 int max_depth);

/// (b, k) -> (λ * b, k + d).
ColoredDag shift(const ColoredDag& q, const Bits& lambda, int d);
ColoredDag shift_depth(const ColoredDag& q, int d);

/// Q*: all arrows reversed.
ColoredDag reverse(const ColoredDag& q);

/// Equal keys, colors and edges up to the common truncation.
bool same_structure(const ColoredDag& a, const ColoredDag& b);

/// H^0(Q[λ1 ±^m | ±^{m+1})) = Q[λ1 ±^m | + ±^m): keeps nodes whose first right coordinate is '+'.
/// F must be a fragment family over m + 1 trailing coordinates with first left coordinate λ1.
ColoredDag op_h0(const ColoredDag& family, Sign lambda1, std::size_t m);

/// Q[±^m|±^m)/~ = Q[- ±^{m-1} | ±^m). Throws for m = 0.
ColoredDag op_quot(const ColoredDag& family, std::size_t m);

struct OperationCheck {
  ColoredDag result;    // output of op_h0 / op_quot on the fragment family
  ColoredDag expected;  // Q(λ1|+)[±^m|±^m) resp. Q[-|±)[±^{m-1}|±^{m-1})
  bool isomorphic = false;
};

/// Builds Q[λ1 ±^m | ±^{m+1}), applies op_h0 and compares with Q(λ1|+)[±^m|±^m).
OperationCheck check_h0(const ColoredDag& q, Sign lambda1, std::size_t m, int max_depth);
/// Builds Q[±^m|±^m), applies op_quot and compares with Q[-|±)[±^{m-1}|±^{m-1}).
OperationCheck check_quot(const ColoredDag& q, std::size_t m, int max_depth);

/// [λ1|±] split by Cartan weight h over [ | ).
struct BilateralObject {
  Sign base = Sign::plus;
  std::map<int, ColoredDag> components;  // [λ1|±]^h
  std::map<int, ColoredDag> plus_part;   // [λ1|+]^h
};

/// h ranges over [h_min, h_max] with h ≡ |λ1| (mod 2); throws if the endpoints violate parity.
BilateralObject bilateral(Sign lambda1, int h_min, int h_max, int max_depth);

/// Single weight component [λ1|±]^h (plus_only selects [λ1|+]^h).
ColoredDag bilateral_component(Sign lambda1, int h, int max_depth, bool plus_only);

}  // namespace plumb::dag
