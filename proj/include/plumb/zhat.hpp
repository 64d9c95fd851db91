#pragma once

// Direct evaluation of the bosonic form: a signed, binomially weighted theta sum over the
// orthants e in {±1}^{nodes}, leaf signs eps and n in Z>=0^{nodes}.

#include "plumb/plumbing.hpp"
#include "plumb/qseries.hpp"

#include <cstdint>
#include <vector>

namespace plumb {

/// Per-coordinate bounds B with: |x_v| > B for some v  =>  x^T S x > N.
/// Uses x^T S x >= |x|^2 / r, r = max absolute row sum of S^{-1}.
std::vector<std::int64_t> enumeration_bound(const QuadraticForm& form, const Rational& order);

struct ZhatOptions {
  unsigned threads = 0;    // 0: hardware concurrency
  std::int64_t slack = 0;  // added to every enumeration bound
};

/// Throws Error(not_negative_definite) / Error(no_internal_vertices).
QSeries zhat_bosonic(const PlumbedGraph& pg, const Rational& order, const ZhatOptions& options = {});

/// Sign of the summand for orthant e (indexed by vertex; only nodes read) and leaf signs eps
/// (indexed by vertex; only leaves read): prod_v e_v^{deg v - |leaf nbrs|} * prod_i eps_i.
int bosonic_prefactor(const Tree& tree, const std::vector<int>& signs);

}  // namespace plumb
