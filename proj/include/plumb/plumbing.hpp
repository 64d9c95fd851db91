#pragma once

// Trees, rooted trees, plumbed graphs and the positive definite form S = (-W^{-1}) restricted
// to the vertices of degree >= 2.

#include "plumb/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plumb {

using VertexId = std::size_t;

/// Dense square matrix, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T{}) : n_(n), a_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = SquareMatrix<std::int64_t>;
using RationalMatrix = SquareMatrix<Rational>;

/// Finite undirected tree. Vertices are stored in ascending id order, so VertexId doubles as
/// the canonical ordering used everywhere else.
class Tree {
 public:
  /// Validates: unique nonempty ids, known endpoints, no loops or duplicate edges, connected,
  /// acyclic. Throws Error(invalid_argument) otherwise.
  static Tree from_edges(std::vector<std::string> ids,
                         const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(VertexId v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<VertexId> find(std::string_view id) const;

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<VertexId>> adj_;
};

struct DegreePartition {
  std::vector<VertexId> leaves;   // degree <= 1
  std::vector<VertexId> degree2;  // degree == 2
  std::vector<VertexId> nodes;    // degree >= 3
};

DegreePartition degree_partition(const Tree& tree);

/// Length of a longest path from v to a leaf.
std::size_t vertex_height(const Tree& tree, VertexId v);

/// The one or two (adjacent) vertices of minimal height, ascending.
std::vector<VertexId> centers(const Tree& tree);

/// Leaf neighbours of v.
std::vector<VertexId> leaf_neighbors(const Tree& tree, VertexId v);

class RootedTree {
 public:
  RootedTree(Tree tree, VertexId root);

  const Tree& tree() const noexcept { return tree_; }
  VertexId root() const noexcept { return root_; }
  std::optional<VertexId> parent(VertexId v) const { return parent_.at(v); }
  const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
  std::size_t depth(VertexId v) const { return depth_.at(v); }
  std::size_t height() const { return vertex_height(tree_, root_); }
  bool is_ancestor(VertexId a, VertexId v) const;
  std::vector<VertexId> siblings(VertexId v) const;
  /// Vertices with every descendant listed before its ancestors.
  std::vector<VertexId> postorder() const;

 private:
  Tree tree_;
  VertexId root_;
  std::vector<std::optional<VertexId>> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::size_t> depth_;
};

bool is_centered(const RootedTree& rt);

/// Attaches max(0, 3 - deg(v)) fresh leaves to every non-leaf vertex (deg >= 2). New ids are
/// "<v>_g<k>", made unique. Throws for a single-vertex tree.
RootedTree grow_leaves(const RootedTree& rt);

struct PlumbedGraph {
  Tree tree;
  std::vector<std::int64_t> weights;  // indexed by VertexId
  std::optional<VertexId> root;

  std::int64_t weight(VertexId v) const { return weights.at(v); }
};

/// Checks weights cover the tree and the root (if any) is a vertex.
void validate(const PlumbedGraph& pg);

/// W_vv = w_v, W_uv = 1 for edges, 0 otherwise.
IntMatrix linking_matrix(const PlumbedGraph& pg);

/// Determinants of the leading principal k x k blocks (k = 1..n) by fraction-free elimination.
std::vector<BigInt> leading_minors(const IntMatrix& m);

/// True iff -W is positive definite, decided by exact leading minors.
/// Throws Error(invalid_argument) for non-symmetric input.
bool is_negative_definite(const IntMatrix& w);

BigInt determinant(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan over the rationals. Throws for singular input.
RationalMatrix inverse(const RationalMatrix& m);
RationalMatrix to_rational(const IntMatrix& m);

struct QuadraticForm {
  std::vector<VertexId> index;  // vertices of degree >= 2, ascending
  RationalMatrix matrix;        // S

  std::size_t dimension() const noexcept { return index.size(); }
};

/// S = (-W^{-1}) restricted to V>=2.
QuadraticForm theta_form(const PlumbedGraph& pg);

/// x^T S x; x is indexed like form.index.
Rational quad_eval(const QuadraticForm& form, std::span<const Rational> x);

}  // namespace plumb
