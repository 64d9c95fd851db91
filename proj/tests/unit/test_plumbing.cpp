#include "plumb/error.hpp"
#include "plumb/graphio.hpp"
#include "plumb/plumbing.hpp"

#include "../oracles/nd_oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

using namespace plumb;

namespace {

Tree tree_of(std::vector<std::string> ids, std::vector<std::pair<std::string, std::string>> edges) {
  return Tree::from_edges(std::move(ids), edges);
}

std::set<std::string> names(const Tree& t, const std::vector<VertexId>& vs) {
  std::set<std::string> out;
  for (auto v : vs) out.insert(t.id(v));
  return out;
}

IntMatrix int_matrix(const oracle::Mat& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return out;
}

const Tree path3 = tree_of({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
const Tree star3 = tree_of({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});

}  // namespace

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(tree_of({"a", "b"}, {{"a", "q"}}), Error);
  CHECK_THROWS_AS(tree_of({"a", "a"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(tree_of({"a", "b", "c"}, {{"a", "b"}}), Error);
  CHECK_THROWS_AS(tree_of({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}), Error);
  CHECK_THROWS_AS(tree_of({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_NOTHROW(tree_of({"solo"}, {}));
}

TEST_CASE("degree partition") {
  auto p = degree_partition(path3);
  CHECK(names(path3, p.leaves) == std::set<std::string>{"a", "c"});
  CHECK(names(path3, p.degree2) == std::set<std::string>{"b"});
  CHECK(p.nodes.empty());

  p = degree_partition(star3);
  CHECK(p.leaves.size() == 3);
  CHECK(names(star3, p.nodes) == std::set<std::string>{"c"});

  const Tree edge = tree_of({"a", "b"}, {{"a", "b"}});
  p = degree_partition(edge);
  CHECK(p.leaves.size() == 2);
  CHECK(p.degree2.empty());

  p = degree_partition(tree_of({"a"}, {}));
  CHECK(p.leaves.size() == 1);
}

TEST_CASE("centers") {
  CHECK(names(path3, centers(path3)) == std::set<std::string>{"b"});
  const Tree p4 = tree_of({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  const auto c = centers(p4);
  CHECK(names(p4, c) == std::set<std::string>{"b", "c"});
  CHECK(p4.adjacent(c[0], c[1]));
  CHECK(centers(tree_of({"a"}, {})).size() == 1);
}

TEST_CASE("is_centered") {
  CHECK(is_centered(RootedTree(path3, *path3.find("b"))));
  CHECK_FALSE(is_centered(RootedTree(path3, *path3.find("a"))));
  CHECK(is_centered(RootedTree(star3, *star3.find("c"))));
}

TEST_CASE("rooted tree relations") {
  const Tree t = tree_of({"r", "a", "b", "a1", "a2"}, {{"r", "a"}, {"r", "b"}, {"a", "a1"}, {"a", "a2"}});
  const RootedTree rt(t, *t.find("r"));
  const VertexId a = *t.find("a"), a1 = *t.find("a1"), b = *t.find("b");
  CHECK(rt.parent(a1) == a);
  CHECK_FALSE(rt.parent(rt.root()).has_value());
  CHECK(rt.depth(a1) == 2);
  CHECK(rt.height() == 2);
  CHECK(rt.is_ancestor(rt.root(), a1));
  CHECK_FALSE(rt.is_ancestor(b, a1));
  CHECK(names(t, rt.siblings(a)) == std::set<std::string>{"b"});
  const auto post = rt.postorder();
  CHECK(post.back() == rt.root());
  auto at = [&](VertexId v) { return std::find(post.begin(), post.end(), v) - post.begin(); };
  CHECK(at(a1) < at(a));
}

TEST_CASE("grow_leaves") {
  const RootedTree grown = grow_leaves(RootedTree(path3, *path3.find("b")));
  const Tree& g = grown.tree();
  CHECK(g.size() == 4);
  CHECK(g.degree(*g.find("b")) == 3);
  CHECK(degree_partition(g).nodes.size() == 1);

  const RootedTree same = grow_leaves(RootedTree(star3, *star3.find("c")));
  CHECK(same.tree().ids() == star3.ids());

  const Tree h = tree_of({"u", "v", "a", "b", "c", "d"}, {{"u", "v"}, {"u", "a"}, {"u", "b"}, {"v", "c"}, {"v", "d"}});
  CHECK(grow_leaves(RootedTree(h, 0)).tree().size() == h.size());

  CHECK_THROWS_AS(grow_leaves(RootedTree(tree_of({"a"}, {}), 0)), Error);
}

TEST_CASE("grow_leaves properties on random trees") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
    for (int i = 1; i < n; ++i) edges.emplace_back(ids[i], ids[rng() % i]);
    const Tree t = Tree::from_edges(ids, edges);
    const RootedTree g = grow_leaves(RootedTree(t, 0));
    for (VertexId v = 0; v < g.tree().size(); ++v)
      if (g.tree().degree(v) >= 2) CHECK(g.tree().degree(v) >= 3);
    // original vertices and edges survive
    for (auto [u, v] : t.edges()) CHECK(g.tree().adjacent(*g.tree().find(t.id(u)), *g.tree().find(t.id(v))));
    const RootedTree again = grow_leaves(g);
    CHECK(again.tree().ids() == g.tree().ids());
  }
}

TEST_CASE("linking matrix") {
  PlumbedGraph one{tree_of({"a"}, {}), {-3}, std::nullopt};
  CHECK(linking_matrix(one)(0, 0) == -3);

  PlumbedGraph e{tree_of({"a", "b"}, {{"a", "b"}}), {-1, -2}, std::nullopt};
  const IntMatrix w = linking_matrix(e);
  CHECK(w(0, 0) == -1);
  CHECK(w(0, 1) == 1);
  CHECK(w(1, 0) == 1);
  CHECK(w(1, 1) == -2);

  const PlumbedGraph s = load_plumbing(PLUMB_CORPUS_DIR "/sigma_2_3_7.plumb");
  const IntMatrix ws = linking_matrix(s);
  CHECK(ws.is_symmetric());
  const VertexId c = *s.tree.find("c");
  for (VertexId v = 0; v < 4; ++v) CHECK(ws(v, v) == s.weight(v));
  for (VertexId v = 0; v < 4; ++v)
    if (v != c) CHECK(ws(c, v) == 1);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(int_matrix({{-2}})));
  CHECK(is_negative_definite(int_matrix({{-1, 1}, {1, -2}})));
  CHECK_FALSE(is_negative_definite(int_matrix({{1}})));
  CHECK_THROWS_AS(is_negative_definite(int_matrix({{-2, 1}, {0, -2}})), Error);
  // leading minors of -W for the edge example are 1 and 1
  auto minors = leading_minors(int_matrix({{1, -1}, {-1, 2}}));
  CHECK(minors == std::vector<BigInt>{1, 1});
}

TEST_CASE("negative definiteness agrees with the characteristic polynomial oracle") {
  // exhaustive for n <= 3, entries in [-3, 1]
  for (int n = 1; n <= 3; ++n) {
    const int free = n * (n + 1) / 2;
    long total = 1;
    for (int i = 0; i < free; ++i) total *= 5;
    for (long code = 0; code < total; ++code) {
      oracle::Mat m(n, std::vector<std::int64_t>(n));
      long c = code;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          m[i][j] = m[j][i] = c % 5 - 3;
          c /= 5;
        }
      REQUIRE(is_negative_definite(int_matrix(m)) == oracle::negative_definite(m));
    }
  }
  // sampled for n = 5
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200000; ++trial) {
    oracle::Mat m(5, std::vector<std::int64_t>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) m[i][j] = m[j][i] = static_cast<std::int64_t>(rng() % 5) - 3;
    // bias toward definite matrices so both answers occur
    if (trial % 2 == 0)
      for (int i = 0; i < 5; ++i) m[i][i] = -3;
    REQUIRE(is_negative_definite(int_matrix(m)) == oracle::negative_definite(m));
  }
}

TEST_CASE("theta form") {
  PlumbedGraph e{tree_of({"a", "b"}, {{"a", "b"}}), {-1, -2}, std::nullopt};
  try {
    theta_form(e);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::no_internal_vertices);
  }

  PlumbedGraph p{path3, {-2, -2, -2}, std::nullopt};
  auto f = theta_form(p);
  REQUIRE(f.dimension() == 1);
  CHECK(f.matrix(0, 0) == Rational(1));
  CHECK(determinant(linking_matrix(p)) == -4);

  const auto s = theta_form(load_plumbing(PLUMB_CORPUS_DIR "/sigma_2_3_7.plumb"));
  REQUIRE(s.dimension() == 1);
  CHECK(s.matrix(0, 0) == Rational(42));

  const auto h = theta_form(load_plumbing(PLUMB_CORPUS_DIR "/htree.plumb"));
  REQUIRE(h.dimension() == 2);
  CHECK(h.matrix(0, 0) == Rational(78) / 31);
  CHECK(h.matrix(0, 1) == Rational(60) / 31);
  CHECK(h.matrix(1, 1) == Rational(70) / 31);

  try {
    theta_form(load_plumbing(PLUMB_CORPUS_DIR "/positive.plumb"));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::not_negative_definite);
  }
}

TEST_CASE("quad_eval") {
  const auto s = theta_form(load_plumbing(PLUMB_CORPUS_DIR "/sigma_2_3_7.plumb"));
  std::vector<Rational> zero{0}, one{1};
  CHECK(quad_eval(s, zero) == 0);
  CHECK(quad_eval(s, one) == s.matrix(0, 0));
  std::vector<Rational> wrong{1, 2};
  CHECK_THROWS_AS(quad_eval(s, wrong), Error);

  const auto h = theta_form(load_plumbing(PLUMB_CORPUS_DIR "/caterpillar.plumb"));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        std::vector<Rational> x{Rational(a) / 2, Rational(b) / 3, Rational(c)};
        CHECK(quad_eval(h, x) > 0);
      }
}

TEST_CASE("W times its inverse is the identity on the definite corpus") {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PLUMB_CORPUS_DIR)) {
    const PlumbedGraph pg = load_plumbing(entry.path().string());
    const IntMatrix w = linking_matrix(pg);
    CHECK(w.is_symmetric());
    if (!is_negative_definite(w)) continue;
    const RationalMatrix wr = to_rational(w), inv = inverse(wr);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) {
        Rational sum = 0;
        for (std::size_t k = 0; k < w.size(); ++k) sum += wr(i, k) * inv(k, j);
        CHECK(sum == Rational(i == j ? 1 : 0));
      }
    ++checked;
  }
  CHECK(checked >= 10);
}
