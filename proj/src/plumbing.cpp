#include "plumb/plumbing.hpp"

#include "plumb/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plumb {

Tree Tree::from_edges(std::vector<std::string> ids,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  if (ids.empty()) throw Error(ErrorCode::invalid_argument, "tree has no vertices");
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].empty()) throw Error(ErrorCode::invalid_argument, "empty vertex id");
    if (i > 0 && ids[i] == ids[i - 1])
      throw Error(ErrorCode::invalid_argument, "duplicate vertex '" + ids[i] + "'");
  }
  Tree t;
  t.ids_ = std::move(ids);
  t.adj_.assign(t.ids_.size(), {});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [a, b] : edges) {
    auto u = t.find(a), v = t.find(b);
    if (!u) throw Error(ErrorCode::invalid_argument, "unknown vertex '" + a + "'");
    if (!v) throw Error(ErrorCode::invalid_argument, "unknown vertex '" + b + "'");
    if (*u == *v) throw Error(ErrorCode::invalid_argument, "self-loop at '" + a + "'");
    if (!seen.emplace(std::min(*u, *v), std::max(*u, *v)).second)
      throw Error(ErrorCode::invalid_argument, "duplicate edge " + a + " " + b);
    t.adj_[*u].push_back(*v);
    t.adj_[*v].push_back(*u);
  }
  for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());

  // connectivity by DFS; with |E| = |V| - 1 this also rules out cycles
  std::vector<bool> visited(t.size(), false);
  std::vector<VertexId> stack{0};
  visited[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : t.adj_[v])
      if (!visited[u]) {
        visited[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != t.size()) throw Error(ErrorCode::invalid_argument, "graph is disconnected");
  if (seen.size() != t.size() - 1) throw Error(ErrorCode::invalid_argument, "graph has a cycle");
  return t;
}

std::optional<VertexId> Tree::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<VertexId>(it - ids_.begin());
}

bool Tree::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Tree::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

DegreePartition degree_partition(const Tree& tree) {
  DegreePartition p;
  for (VertexId v = 0; v < tree.size(); ++v) {
    const std::size_t d = tree.degree(v);
    if (d <= 1)
      p.leaves.push_back(v);
    else if (d == 2)
      p.degree2.push_back(v);
    else
      p.nodes.push_back(v);
  }
  return p;
}

std::size_t vertex_height(const Tree& tree, VertexId v) {
  // farthest vertex from v is always a leaf, so this is the eccentricity
  std::vector<std::size_t> dist(tree.size(), SIZE_MAX);
  std::vector<VertexId> queue{v};
  dist[v] = 0;
  std::size_t best = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    best = std::max(best, dist[x]);
    for (VertexId y : tree.neighbors(x))
      if (dist[y] == SIZE_MAX) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return best;
}

std::vector<VertexId> centers(const Tree& tree) {
  std::vector<std::size_t> h(tree.size());
  for (VertexId v = 0; v < tree.size(); ++v) h[v] = vertex_height(tree, v);
  const std::size_t best = *std::min_element(h.begin(), h.end());
  std::vector<VertexId> out;
  for (VertexId v = 0; v < tree.size(); ++v)
    if (h[v] == best) out.push_back(v);
  return out;
}

std::vector<VertexId> leaf_neighbors(const Tree& tree, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId u : tree.neighbors(v))
    if (tree.degree(u) <= 1) out.push_back(u);
  return out;
}

RootedTree::RootedTree(Tree tree, VertexId root) : tree_(std::move(tree)), root_(root) {
  if (root_ >= tree_.size()) throw Error(ErrorCode::invalid_argument, "root is not a vertex");
  const std::size_t n = tree_.size();
  parent_.assign(n, std::nullopt);
  children_.assign(n, {});
  depth_.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> queue{root_};
  seen[root_] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    for (VertexId u : tree_.neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        parent_[u] = v;
        depth_[u] = depth_[v] + 1;
        children_[v].push_back(u);
        queue.push_back(u);
      }
  }
}

bool RootedTree::is_ancestor(VertexId a, VertexId v) const {
  for (auto p = parent_.at(v); p; p = parent_[*p])
    if (*p == a) return true;
  return false;
}

std::vector<VertexId> RootedTree::siblings(VertexId v) const {
  std::vector<VertexId> out;
  if (auto p = parent_.at(v))
    for (VertexId c : children_[*p])
      if (c != v) out.push_back(c);
  return out;
}

std::vector<VertexId> RootedTree::postorder() const {
  std::vector<VertexId> out;
  std::vector<std::pair<VertexId, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      out.push_back(v);
      continue;
    }
    stack.emplace_back(v, true);
    const auto& ch = children_[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
  }
  return out;
}

bool is_centered(const RootedTree& rt) {
  auto c = centers(rt.tree());
  return std::find(c.begin(), c.end(), rt.root()) != c.end();
}

RootedTree grow_leaves(const RootedTree& rt) {
  const Tree& t = rt.tree();
  if (t.size() < 2) throw Error(ErrorCode::invalid_argument, "cannot grow leaves on a single-vertex tree");
  std::vector<std::string> ids = t.ids();
  std::set<std::string> taken(ids.begin(), ids.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(t.id(u), t.id(v));
  for (VertexId v = 0; v < t.size(); ++v) {
    const std::size_t d = t.degree(v);
    if (d < 2) continue;
    for (std::size_t k = 1, added = 0; added + d < 3; ++k) {
      std::string fresh = t.id(v) + "_g" + std::to_string(k);
      if (!taken.insert(fresh).second) continue;
      ids.push_back(fresh);
      edges.emplace_back(t.id(v), fresh);
      ++added;
    }
  }
  Tree grown = Tree::from_edges(std::move(ids), edges);
  VertexId root = *grown.find(t.id(rt.root()));
  return RootedTree(std::move(grown), root);
}

void validate(const PlumbedGraph& pg) {
  if (pg.weights.size() != pg.tree.size())
    throw Error(ErrorCode::invalid_argument, "every vertex needs a weight");
  if (pg.root && *pg.root >= pg.tree.size())
    throw Error(ErrorCode::invalid_argument, "root is not a vertex");
}

IntMatrix linking_matrix(const PlumbedGraph& pg) {
  validate(pg);
  IntMatrix w(pg.tree.size(), 0);
  for (VertexId v = 0; v < pg.tree.size(); ++v) w(v, v) = pg.weights[v];
  for (auto [u, v] : pg.tree.edges()) w(u, v) = w(v, u) = 1;
  return w;
}

namespace {

// Bareiss elimination without pivoting; after step k the (k,k) entry is the (k+1)-th leading
// minor. Returns false on overflow. A zero pivot makes all later minors meaningless, so the
// remaining entries are computed from a pivoted copy by the caller when needed.
template <class Int>
std::vector<BigInt> bareiss_minors(const IntMatrix& m, bool& zero_pivot) {
  const std::size_t n = m.size();
  std::vector<Int> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Int(m(i, j));
  std::vector<BigInt> minors;
  Int prev = 1;
  zero_pivot = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Int pivot = a[k * n + k];
    minors.push_back(BigInt(pivot));
    if (pivot == 0) {
      zero_pivot = true;
      return minors;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int x = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        a[i * n + j] = x / prev;
      }
    prev = pivot;
  }
  return minors;
}

// Same elimination in __int128; nullopt on overflow.
std::optional<bool> positive_minors_int128(const IntMatrix& m) {
  using i128 = __int128;
  const std::size_t n = m.size();
  std::vector<i128> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = m(i / n, i % n);
  i128 prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const i128 pivot = a[k * n + k];
    if (pivot <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        i128 x, y, z;
        if (__builtin_mul_overflow(a[i * n + j], pivot, &x) ||
            __builtin_mul_overflow(a[i * n + k], a[k * n + j], &y) || __builtin_sub_overflow(x, y, &z))
          return std::nullopt;
        a[i * n + j] = z / prev;
      }
    prev = pivot;
  }
  return true;
}

BigInt det_bigint(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = to_rational(m);
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return numerator(det);
}

}  // namespace

std::vector<BigInt> leading_minors(const IntMatrix& m) {
  bool zero_pivot = false;
  std::vector<BigInt> minors = bareiss_minors<BigInt>(m, zero_pivot);
  if (zero_pivot) {
    // Bareiss without pivoting stalls; finish the remaining minors directly.
    for (std::size_t k = minors.size() + 1; k <= m.size(); ++k) {
      IntMatrix sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
      minors.push_back(det_bigint(sub));
    }
  }
  return minors;
}

bool is_negative_definite(const IntMatrix& w) {
  if (!w.is_symmetric()) throw Error(ErrorCode::invalid_argument, "matrix is not symmetric");
  IntMatrix neg(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) neg(i, j) = -w(i, j);
  // Positive leading minors never produce a zero pivot, so stopping at the first
  // non-positive pivot is enough.
  if (auto fast = positive_minors_int128(neg)) return *fast;
  bool zero_pivot = false;
  for (const BigInt& d : bareiss_minors<BigInt>(neg, zero_pivot))
    if (d <= 0) return false;
  return true;
}

BigInt determinant(const IntMatrix& m) {
  if (m.size() == 0) return 1;
  return det_bigint(m);
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorCode::invalid_argument, "matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

QuadraticForm theta_form(const PlumbedGraph& pg) {
  const IntMatrix w = linking_matrix(pg);
  if (!is_negative_definite(w))
    throw Error(ErrorCode::not_negative_definite, "linking matrix is not negative definite");
  QuadraticForm form;
  for (VertexId v = 0; v < pg.tree.size(); ++v)
    if (pg.tree.degree(v) >= 2) form.index.push_back(v);
  if (form.index.empty())
    throw Error(ErrorCode::no_internal_vertices, "no internal vertices (V>=2 is empty)");
  const RationalMatrix winv = inverse(to_rational(w));
  form.matrix = RationalMatrix(form.index.size());
  for (std::size_t i = 0; i < form.index.size(); ++i)
    for (std::size_t j = 0; j < form.index.size(); ++j)
      form.matrix(i, j) = -winv(form.index[i], form.index[j]);
  return form;
}

Rational quad_eval(const QuadraticForm& form, std::span<const Rational> x) {
  const std::size_t n = form.dimension();
  if (x.size() != n)
    throw Error(ErrorCode::invalid_argument, "vector length " + std::to_string(x.size()) +
                                                 " does not match form dimension " + std::to_string(n));
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += form.matrix(i, j) * x[j];
    acc += x[i] * row;
  }
  return acc;
}

}  // namespace plumb
