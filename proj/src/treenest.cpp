#include "plumb/treenest.hpp"

#include "plumb/error.hpp"
#include "plumb/kgroup.hpp"
#include "plumb/parallel.hpp"
#include "plumb/zhat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plumb::nest {

RootedTree centered_rooting(const PlumbedGraph& pg) {
  const std::vector<VertexId> c = centers(pg.tree);
  if (!pg.root) return RootedTree(pg.tree, c.front());
  RootedTree rt(pg.tree, *pg.root);
  if (!is_centered(rt))
    throw Error(ErrorCode::unsupported, "root '" + pg.tree.id(*pg.root) + "' is not a center of the tree; re-root at '" +
                                            pg.tree.id(c.front()) + "'");
  return rt;
}

void require_node_version(const RootedTree& rt) {
  const Tree& t = rt.tree();
  if (!is_centered(rt))
    throw Error(ErrorCode::unsupported, "root '" + t.id(rt.root()) + "' is not a center; re-root at '" +
                                            t.id(centers(t).front()) + "'");
  const DegreePartition part = degree_partition(t);
  if (!part.degree2.empty())
    throw Error(ErrorCode::unsupported, "vertex '" + t.id(part.degree2.front()) +
                                            "' has degree 2; the nested path needs a tree without degree-2 "
                                            "vertices (use the direct method, or grow_leaves for tree-level work)");
  if (part.nodes.empty()) throw Error(ErrorCode::no_internal_vertices, "tree has no vertex of degree >= 3");
  if (t.degree(rt.root()) < 3) throw Error(ErrorCode::internal, "centered root is not a node");
}

namespace {

std::vector<VertexId> sorted_children(const RootedTree& rt, VertexId v) {
  std::vector<VertexId> c = rt.children(v);
  std::sort(c.begin(), c.end());
  return c;
}

ParameterStructure empty_structure(const RootedTree& rt) {
  ParameterStructure ps{rt, degree_partition(rt.tree()).nodes, {}, {}};
  ps.delta.assign(rt.tree().size(), std::nullopt);
  ps.one_params.assign(rt.tree().size(), {});
  return ps;
}

// Writes Δ(v) from the chosen bottom children; everything else becomes a 1-parameter.
void assign(ParameterStructure& ps, VertexId v, const std::vector<VertexId>& bottoms) {
  const RootedTree& rt = ps.tree;
  std::array<VertexId, 3> d{};
  if (v == rt.root()) {
    std::copy(bottoms.begin(), bottoms.end(), d.begin());
  } else {
    d = {*rt.parent(v), bottoms[0], bottoms[1]};
  }
  ps.delta[v] = d;
  ps.one_params[v].clear();
  for (VertexId c : sorted_children(rt, v))
    if (std::find(bottoms.begin(), bottoms.end(), c) == bottoms.end()) ps.one_params[v].push_back(c);
}

void subsets(const std::vector<VertexId>& pool, std::size_t k, std::size_t from, std::vector<VertexId>& cur,
             std::vector<std::vector<VertexId>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ParameterStructure default_parameter_structure(const RootedTree& rt) {
  require_node_version(rt);
  ParameterStructure ps = empty_structure(rt);
  for (VertexId v : ps.nodes) {
    const std::vector<VertexId> c = sorted_children(rt, v);
    const std::size_t k = v == rt.root() ? 3 : 2;
    assign(ps, v, std::vector<VertexId>(c.begin(), c.begin() + k));
  }
  return ps;
}

std::vector<ParameterStructure> all_parameter_structures(const RootedTree& rt) {
  require_node_version(rt);
  std::vector<ParameterStructure> out{empty_structure(rt)};
  const std::vector<VertexId> nodes = out.front().nodes;
  for (VertexId v : nodes) {
    std::vector<std::vector<VertexId>> choices;
    std::vector<VertexId> cur;
    subsets(sorted_children(rt, v), v == rt.root() ? 3 : 2, 0, cur, choices);
    std::vector<ParameterStructure> next;
    for (const auto& ps : out)
      for (const auto& bottoms : choices) {
        next.push_back(ps);
        assign(next.back(), v, bottoms);
      }
    out = std::move(next);
  }
  return out;
}

void validate(const ParameterStructure& ps) {
  const RootedTree& rt = ps.tree;
  const Tree& t = rt.tree();
  auto bad = [&](VertexId v, const std::string& msg) {
    throw Error(ErrorCode::invalid_argument, "parameter structure at '" + t.id(v) + "': " + msg);
  };
  if (ps.delta.size() != t.size() || ps.one_params.size() != t.size())
    throw Error(ErrorCode::invalid_argument, "parameter structure does not match the tree");
  if (ps.nodes != degree_partition(t).nodes) throw Error(ErrorCode::invalid_argument, "parameter structure node list is wrong");
  for (VertexId v = 0; v < t.size(); ++v) {
    const bool node = t.degree(v) >= 3;
    if (!node) {
      if (ps.delta[v] || !ps.one_params[v].empty()) bad(v, "only nodes carry parameters");
      continue;
    }
    if (!ps.delta[v]) bad(v, "missing 3-parameter");
    const auto& d = *ps.delta[v];
    if (v != rt.root() && d[0] != *rt.parent(v)) bad(v, "the top of the 3-parameter must be the parent");
    for (VertexId p : ps.one_params[v])
      if (rt.parent(v) == p) bad(v, "the parent cannot be a 1-parameter");
    std::vector<VertexId> used(d.begin(), d.end());
    used.insert(used.end(), ps.one_params[v].begin(), ps.one_params[v].end());
    std::sort(used.begin(), used.end());
    std::vector<VertexId> nbrs = t.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    if (used != nbrs) bad(v, "every neighbour must be used exactly once");
    if (!std::is_sorted(ps.one_params[v].begin(), ps.one_params[v].end())) bad(v, "1-parameters must be sorted");
  }
}

std::vector<Component> connected_components(const ParameterStructure& ps) {
  const RootedTree& rt = ps.tree;
  const std::size_t k = ps.nodes.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<VertexId, std::size_t> owner;  // non-root vertex -> first member index seen
  for (std::size_t i = 0; i < k; ++i)
    for (VertexId x : *ps.delta[ps.nodes[i]]) {
      if (x == rt.root()) continue;
      auto [it, fresh] = owner.emplace(x, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }

  std::map<std::size_t, Component> groups;
  for (std::size_t i = 0; i < k; ++i) groups[find(i)].members.push_back(ps.nodes[i]);

  std::vector<Component> out;
  for (auto& [rep, c] : groups) {
    std::set<VertexId> verts, tops, bottoms;
    bool has_root = false;
    for (VertexId v : c.members) {
      const auto& d = *ps.delta[v];
      verts.insert(d.begin(), d.end());
      if (v == rt.root()) {
        has_root = true;
        bottoms.insert(d.begin(), d.end());
      } else {
        tops.insert(d[0]);
        bottoms.insert(d[1]);
        bottoms.insert(d[2]);
      }
    }
    c.vertices.assign(verts.begin(), verts.end());
    for (VertexId x : verts)
      if (!tops.count(x)) c.bottoms.push_back(x);
    if (has_root) {
      c.kind = ComponentKind::contains_root_delta;
    } else {
      std::vector<VertexId> highest;
      for (VertexId x : tops)
        if (!bottoms.count(x)) highest.push_back(x);
      if (highest.size() != 1) throw Error(ErrorCode::internal, "component without a unique top");
      c.top = highest.front();
      if (*c.top == rt.root()) {
        c.kind = ComponentKind::top_is_root;
      } else {
        const VertexId p = *rt.parent(*c.top);
        const auto& ones = ps.one_params[p];
        if (std::find(ones.begin(), ones.end(), *c.top) == ones.end())
          throw Error(ErrorCode::internal, "component top is neither the root nor a 1-parameter");
        c.kind = ComponentKind::top_is_one_param;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

Schedule evaluation_order(const ParameterStructure& ps) {
  const RootedTree& rt = ps.tree;
  const Tree& t = rt.tree();
  Schedule s;
  std::map<std::pair<VertexId, VertexId>, std::size_t> one_step;
  std::vector<std::size_t> delta_step(t.size(), 0);
  for (VertexId v : rt.postorder()) {
    if (!ps.delta[v]) continue;
    for (VertexId p : ps.one_params[v]) {
      s.steps.push_back({v, p});
      one_step[{v, p}] = s.steps.size();
    }
    s.steps.push_back({v, std::nullopt});
    delta_step[v] = s.steps.size();
  }

  // a component's 3-parameters are finalized once all its Δ's ran and its top is evaluated
  std::vector<std::size_t> finalize(t.size(), 0);  // by member node
  for (const Component& c : connected_components(ps)) {
    std::size_t when = 0;
    for (VertexId v : c.members) when = std::max(when, delta_step[v]);
    if (c.kind == ComponentKind::top_is_one_param) when = std::max(when, one_step.at({*rt.parent(*c.top), *c.top}));
    for (VertexId v : c.members) finalize[v] = when;
  }

  const std::size_t unset = static_cast<std::size_t>(-1);
  s.evaluated_at.assign(t.size(), unset);
  s.evaluated_at[rt.root()] = 0;
  for (VertexId x = 0; x < t.size(); ++x) {
    if (x == rt.root()) continue;
    const VertexId p = *rt.parent(x);
    auto it = one_step.find({p, x});
    s.evaluated_at[x] = it != one_step.end() ? it->second : finalize[p];
  }
  for (VertexId x = 0; x < t.size(); ++x)
    if (s.evaluated_at[x] == unset || (x != rt.root() && s.evaluated_at[x] == 0))
      throw Error(ErrorCode::internal, "vertex '" + t.id(x) + "' is never evaluated");
  return s;
}

dag::Bits nu_bits(const ParameterStructure& ps, const std::vector<int>& signs, VertexId v) {
  if (!ps.delta.at(v)) throw Error(ErrorCode::invalid_argument, "nu is only defined at nodes");
  auto sign_of = [](int s) { return s < 0 ? dag::Sign::minus : dag::Sign::plus; };
  int first = 1;
  for (VertexId x : *ps.delta[v]) first *= signs.at(x);
  dag::Bits nu = dag::Bits::single(sign_of(first));
  for (VertexId p : ps.one_params[v]) nu = nu.concat(dag::Bits::single(sign_of(signs.at(p))));
  return nu;
}

QSeries zhat_nested(const PlumbedGraph& pg, const ParameterStructure& ps, const Rational& order,
                    const NestedOptions& options) {
  validate(pg);
  if (order < 0) throw Error(ErrorCode::invalid_argument, "order must be non-negative");
  const Tree& tree = pg.tree;
  if (ps.tree.tree().ids() != tree.ids() || ps.tree.tree().edges() != tree.edges())
    throw Error(ErrorCode::invalid_argument, "parameter structure belongs to a different tree");
  require_node_version(ps.tree);
  validate(ps);
  const QuadraticForm form = theta_form(pg);
  if (form.index != ps.nodes) throw Error(ErrorCode::internal, "form index differs from the node list");

  const std::size_t d = ps.nodes.size();
  std::vector<std::int64_t> bound = enumeration_bound(form, order);
  for (auto& b : bound) b += options.slack;

  const std::vector<VertexId> leaves = degree_partition(tree).leaves;
  for (VertexId i : leaves)
    if (pg.weight(i) == 0) throw Error(ErrorCode::invalid_argument, "leaf '" + tree.id(i) + "' has weight 0");
  std::vector<std::size_t> m(d);
  for (std::size_t k = 0; k < d; ++k) m[k] = ps.recursion_number(ps.nodes[k]);

  std::vector<VertexId> slots = ps.nodes;
  slots.insert(slots.end(), leaves.begin(), leaves.end());
  if (slots.size() > 40) throw Error(ErrorCode::unsupported, "too many sign assignments to enumerate");

  return parallel_series_sum(std::size_t{1} << slots.size(), options.threads, order,
                             [&](std::size_t mask, QSeries& sink) {
    std::vector<int> sign(tree.size(), 1);
    for (std::size_t k = 0; k < slots.size(); ++k) sign[slots[k]] = (mask >> k) & 1U ? -1 : 1;

    kgroup::TermBounds tb;
    tb.nu.emplace();
    int nu_sign = 1;
    std::vector<Rational> offset(d);
    tb.max_n.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
      const VertexId v = ps.nodes[k];
      const dag::Bits nu = nu_bits(ps, sign, v);
      if (nu.weight() % 2 == 1) nu_sign = -nu_sign;
      tb.nu->push_back(nu);
      Rational c(static_cast<std::int64_t>(m[k]), 2);
      for (VertexId leaf : leaf_neighbors(tree, v)) c += Rational(sign[leaf]) / (2 * pg.weight(leaf));
      offset[k] = c;
      const std::int64_t cap = floor_to_int(Rational(bound[k]) - c);
      if (cap < 0) return;
      tb.max_n[k] = static_cast<int>(cap);
    }
    if (nu_sign != bosonic_prefactor(tree, sign))
      throw Error(ErrorCode::internal, "sign of the nested terms disagrees with the bosonic prefactor");

    std::vector<Rational> y(d);
    kgroup::for_each_tree_term(m, tb, [&](const kgroup::TreeTerm& term) {
      if (term.sign != nu_sign) throw Error(ErrorCode::internal, "tree term sign is inconsistent with nu");
      for (std::size_t k = 0; k < d; ++k) y[k] = sign[ps.nodes[k]] * (term.n[k] + offset[k]);
      const Rational q = quad_eval(form, y);
      if (q <= order) sink.add_term(q, checked_mul(term.sign, term.multiplicity));
    });
  });
}

QSeries zhat_nested(const PlumbedGraph& pg, const Rational& order, const NestedOptions& options) {
  validate(pg);
  const RootedTree rt = centered_rooting(pg);
  return zhat_nested(pg, default_parameter_structure(rt), order, options);
}

}  // namespace plumb::nest
