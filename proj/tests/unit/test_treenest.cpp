#include "plumb/error.hpp"
#include "plumb/graphio.hpp"
#include "plumb/treenest.hpp"
#include "plumb/zhat.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace plumb;
using namespace plumb::nest;

namespace {

PlumbedGraph corpus(const std::string& name) { return load_plumbing(std::string(PLUMB_CORPUS_DIR) + "/" + name + ".plumb"); }

QSeries golden(const std::string& name, int order) {
  std::ifstream in(std::string(PLUMB_GOLDEN_DIR) + "/" + name + ".N" + std::to_string(order) + ".json");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize_series(ss.str(), Rational(order));
}

VertexId id(const PlumbedGraph& pg, const char* name) { return *pg.tree.find(name); }

// random node-version tree rooted at a center, with diagonally dominant weights
PlumbedGraph random_node_tree(std::mt19937& rng, std::size_t core) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < core; ++i) {
    ids.push_back("t" + std::to_string(i));
    if (i > 0) edges.emplace_back(ids[rng() % i], ids[i]);
  }
  // every core vertex gets a pendant leaf so that the grown tree has no degree-2 vertex
  for (std::size_t i = 0; i < core; ++i) {
    ids.push_back("p" + std::to_string(i));
    edges.emplace_back(ids[i], ids.back());
  }
  Tree t = Tree::from_edges(ids, edges);
  RootedTree rt = grow_leaves(RootedTree(t, centers(t).front()));
  PlumbedGraph pg{rt.tree(), {}, rt.root()};
  for (VertexId v = 0; v < pg.tree.size(); ++v)
    pg.weights.push_back(-static_cast<std::int64_t>(pg.tree.degree(v)) - 1 - static_cast<std::int64_t>(rng() % 3));
  return pg;
}

}  // namespace

TEST_CASE("default structure on a three-legged star") {
  const PlumbedGraph pg = corpus("sigma_2_3_7");
  const RootedTree rt = centered_rooting(pg);
  const ParameterStructure ps = default_parameter_structure(rt);
  const VertexId c = id(pg, "c");
  CHECK(ps.nodes == std::vector<VertexId>{c});
  REQUIRE(ps.delta[c]);
  CHECK(*ps.delta[c] == std::array<VertexId, 3>{id(pg, "a"), id(pg, "b"), id(pg, "d")});
  CHECK(ps.one_params[c].empty());
  CHECK(ps.recursion_number(c) == 1);
  CHECK_NOTHROW(validate(ps));
  CHECK(all_parameter_structures(rt).size() == 1);
}

TEST_CASE("default structure on a four-legged star") {
  const PlumbedGraph pg = corpus("star4");
  const ParameterStructure ps = default_parameter_structure(centered_rooting(pg));
  const VertexId hub = id(pg, "hub");
  CHECK(*ps.delta[hub] == std::array<VertexId, 3>{id(pg, "l1"), id(pg, "l2"), id(pg, "l3")});
  CHECK(ps.one_params[hub] == std::vector<VertexId>{id(pg, "l4")});
  CHECK(ps.recursion_number(hub) == 2);
  CHECK(all_parameter_structures(ps.tree).size() == 4);
  CHECK(all_parameter_structures(centered_rooting(corpus("star5"))).size() == 10);
}

TEST_CASE("default structure on the H-tree") {
  const PlumbedGraph pg = corpus("htree");
  const RootedTree rt = centered_rooting(pg);
  CHECK(rt.root() == id(pg, "u"));
  const ParameterStructure ps = default_parameter_structure(rt);
  const VertexId u = id(pg, "u"), v = id(pg, "v");
  CHECK(*ps.delta[u] == std::array<VertexId, 3>{id(pg, "a"), id(pg, "b"), v});
  CHECK(*ps.delta[v] == std::array<VertexId, 3>{u, id(pg, "c"), id(pg, "d")});
  CHECK(ps.recursion_number(u) == 1);
  CHECK(ps.recursion_number(v) == 1);
  const auto comps = connected_components(ps);
  REQUIRE(comps.size() == 2);
  std::set<ComponentKind> kinds;
  for (const Component& c : comps) kinds.insert(c.kind);
  CHECK(kinds == std::set<ComponentKind>{ComponentKind::contains_root_delta, ComponentKind::top_is_root});
  CHECK(all_parameter_structures(rt).size() == 1);
}

TEST_CASE("rooting errors") {
  try {
    centered_rooting(corpus("root_leaf"));
    FAIL("a leaf root was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
    CHECK(std::string(e.what()).find("root") != std::string::npos);
  }
  try {
    require_node_version(centered_rooting(corpus("leg_with_v2")));
    FAIL("a degree-2 vertex was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
  CHECK_THROWS_AS(zhat_nested(corpus("path3"), Rational(5)), Error);
  try {
    zhat_nested(corpus("edge"), Rational(5));
    FAIL("a graph without nodes was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_internal_vertices);
  }
}

TEST_CASE("invalid structures are rejected") {
  ParameterStructure ps = default_parameter_structure(centered_rooting(corpus("star4")));
  const VertexId hub = ps.nodes.front();
  ps.one_params[hub].clear();
  CHECK_THROWS_AS(validate(ps), Error);
}

TEST_CASE("schedule visits every parameter once") {
  for (const char* name : {"star4", "htree", "caterpillar", "double_star", "star5"}) {
    const PlumbedGraph pg = corpus(name);
    for (const ParameterStructure& ps : all_parameter_structures(centered_rooting(pg))) {
      const Schedule s = evaluation_order(ps);
      std::size_t expected = 0;
      for (VertexId v : ps.nodes) expected += ps.recursion_number(v);
      CHECK(s.steps.size() == expected);
      CHECK(s.evaluated_at.size() == pg.tree.size());
      CHECK(s.evaluated_at[ps.tree.root()] == 0);
      for (VertexId v = 0; v < pg.tree.size(); ++v) {
        CHECK(s.evaluated_at[v] <= s.steps.size());
        if (v != ps.tree.root()) CHECK(s.evaluated_at[v] >= 1);
      }
      // children are finished before their parents
      for (VertexId v : ps.nodes)
        if (auto p = ps.tree.parent(v); p && *p != ps.tree.root())
          CHECK(s.evaluated_at[v] <= s.evaluated_at[*p]);
    }
  }
}

TEST_CASE("nu bits") {
  const PlumbedGraph pg = corpus("star4");
  const ParameterStructure ps = default_parameter_structure(centered_rooting(pg));
  const VertexId hub = id(pg, "hub");
  std::vector<int> signs(pg.tree.size(), 1);
  CHECK(nu_bits(ps, signs, hub) == dag::Bits::parse("++"));
  signs[id(pg, "l1")] = -1;
  CHECK(nu_bits(ps, signs, hub) == dag::Bits::parse("-+"));
  signs[id(pg, "l4")] = -1;
  CHECK(nu_bits(ps, signs, hub) == dag::Bits::parse("--"));
  signs[hub] = -1;  // the node sign does not enter Δ of the root
  CHECK(nu_bits(ps, signs, hub) == dag::Bits::parse("--"));
  CHECK_THROWS_AS(nu_bits(ps, signs, id(pg, "l1")), Error);
}

TEST_CASE("sign of the nested terms matches the bosonic prefactor") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PlumbedGraph pg = random_node_tree(rng, 2 + rng() % 4);
    const auto all = all_parameter_structures(centered_rooting(pg));
    REQUIRE_FALSE(all.empty());
    const ParameterStructure& ps = all[rng() % all.size()];
    std::vector<int> signs(pg.tree.size());
    for (int& s : signs) s = rng() % 2 ? 1 : -1;
    int product = 1;
    for (VertexId v : ps.nodes)
      if (nu_bits(ps, signs, v).weight() % 2) product = -product;
    CHECK(product == bosonic_prefactor(pg.tree, signs));
  }
}

TEST_CASE("nested evaluation agrees with the direct sum") {
  for (const char* name : {"sigma_2_3_7", "star_2_333", "star4", "htree", "sigma_2_3_11", "star5", "double_star"}) {
    const PlumbedGraph pg = corpus(name);
    CHECK_MESSAGE(zhat_nested(pg, Rational(12)) == zhat_bosonic(pg, Rational(12)), name);
  }
  CHECK(zhat_nested(corpus("sigma_2_3_7"), Rational(10)) == golden("sigma_2_3_7", 10));
  CHECK(zhat_nested(corpus("star4"), Rational(20)) == golden("star4", 20));
  CHECK(zhat_nested(corpus("htree"), Rational(20)) == golden("htree", 20));
}

TEST_CASE("every parameter structure gives the same series") {
  for (const char* name : {"star4", "htree", "double_star"}) {
    const PlumbedGraph pg = corpus(name);
    const QSeries direct = zhat_bosonic(pg, Rational(10));
    for (VertexId c : centers(pg.tree)) {
      PlumbedGraph rerooted = pg;
      rerooted.root = c;
      for (const ParameterStructure& ps : all_parameter_structures(centered_rooting(rerooted)))
        CHECK(zhat_nested(rerooted, ps, Rational(10)) == direct);
    }
  }
}

TEST_CASE("random node-version trees") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const PlumbedGraph pg = random_node_tree(rng, 2 + rng() % 2);
    const auto all = all_parameter_structures(centered_rooting(pg));
    const ParameterStructure& ps = all[rng() % all.size()];
    CHECK(zhat_nested(pg, ps, Rational(6)) == zhat_bosonic(pg, Rational(6)));
  }
}

TEST_CASE("thread count does not change the result") {
  const PlumbedGraph pg = corpus("double_star");
  NestedOptions one;
  one.threads = 1;
  NestedOptions many;
  many.threads = 4;
  CHECK(zhat_nested(pg, Rational(12), one) == zhat_nested(pg, Rational(12), many));
}
