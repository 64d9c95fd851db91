#pragma once

// Parameter structures on centered node-version trees, the evaluation schedule, and the nested
// evaluation of the bosonic series: per sign assignment, the tree-formula term stream followed
// by the lattice substitution n -> e_v (n_v + m_v / 2 + sum eps_i / 2w_i).

#include "plumb/dagcat.hpp"
#include "plumb/plumbing.hpp"
#include "plumb/qseries.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace plumb::nest {

struct ParameterStructure {
  RootedTree tree;
  std::vector<VertexId> nodes;  // degree >= 3, ascending
  // per vertex; set exactly for nodes. Non-root: {parent, bottom, bottom}; root: three children.
  std::vector<std::optional<std::array<VertexId, 3>>> delta;
  std::vector<std::vector<VertexId>> one_params;  // per vertex, ascending

  /// deg(v) - 2
  std::size_t recursion_number(VertexId v) const { return 1 + one_params.at(v).size(); }
};

/// Root from the graph if given (must be a center), else the smallest-id center.
RootedTree centered_rooting(const PlumbedGraph& pg);

/// Throws Error(unsupported) with a hint if the tree is not centered or has degree-2 vertices.
void require_node_version(const RootedTree& rt);

/// Smallest-id children as Δ bottoms (three at the root); the rest are 1-parameters.
ParameterStructure default_parameter_structure(const RootedTree& rt);

/// Every valid choice of Δ(v) for every node.
std::vector<ParameterStructure> all_parameter_structures(const RootedTree& rt);

/// Checks the structural invariants; throws Error(invalid_argument).
void validate(const ParameterStructure& ps);

enum class ComponentKind { contains_root_delta, top_is_root, top_is_one_param };

struct Component {
  std::vector<VertexId> members;   // nodes v whose Δ(v) belong to the component
  std::vector<VertexId> vertices;  // union of those Δ(v)
  ComponentKind kind;
  std::optional<VertexId> top;     // unset for the component of Δ(root)
  std::vector<VertexId> bottoms;   // vertices never serving as a Δ top inside the component
};

/// Δ(v), Δ(w) are connected when they share a non-root vertex.
std::vector<Component> connected_components(const ParameterStructure& ps);

struct Step {
  VertexId node;
  std::optional<VertexId> one_param;  // unset: the 3-parameter Δ(node)
};

struct Schedule {
  std::vector<Step> steps;  // postorder over nodes; per node its 1-parameters, then Δ
  // step count after which each vertex is evaluated; the root is evaluated at 0
  std::vector<std::size_t> evaluated_at;
};

Schedule evaluation_order(const ParameterStructure& ps);

/// signs[v] in {+1, -1}: e on nodes, eps on leaves. Returns ν(v) of length m_v.
dag::Bits nu_bits(const ParameterStructure& ps, const std::vector<int>& signs, VertexId v);

struct NestedOptions {
  unsigned threads = 0;
  std::int64_t slack = 0;
};

/// Throws Error(unsupported) when the graph has degree-2 vertices.
QSeries zhat_nested(const PlumbedGraph& pg, const ParameterStructure& ps, const Rational& order,
                    const NestedOptions& options = {});
QSeries zhat_nested(const PlumbedGraph& pg, const Rational& order, const NestedOptions& options = {});

}  // namespace plumb::nest
