#include "plumb/graphio.hpp"

#include "plumb/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace plumb {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool valid_id(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

struct Site {
  std::size_t line, column;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PlumbedGraph parse_plumbing(std::string_view text) {
  std::vector<std::string> ids;
  std::map<std::string, std::pair<std::int64_t, std::size_t>, std::less<>> vertices;  // id -> weight, slot
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<Site> edge_sites;
  std::optional<std::pair<std::string, Site>> root;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;

    auto fail = [&](const Token& t, const std::string& msg) { throw ParseError(line_no, t.column, msg); };
    auto arity = [&](std::size_t n) {
      if (tok.size() < n) throw ParseError(line_no, line.size() + 1, "expected " + std::to_string(n - 1) + " fields after '" + std::string(tok[0].text) + "'");
      if (tok.size() > n) fail(tok[n], "unexpected token '" + std::string(tok[n].text) + "'");
    };
    auto id_at = [&](std::size_t i) {
      if (!valid_id(tok[i].text)) fail(tok[i], "invalid vertex id '" + std::string(tok[i].text) + "'");
      return std::string(tok[i].text);
    };
    auto known = [&](std::size_t i) {
      std::string id = id_at(i);
      if (!vertices.count(id)) fail(tok[i], "unknown vertex '" + id + "'");
      return id;
    };

    const std::string_view kw = tok[0].text;
    if (kw == "v") {
      arity(3);
      std::string id = id_at(1);
      if (vertices.count(id)) fail(tok[1], "duplicate vertex '" + id + "'");
      std::int64_t w = 0;
      const std::string_view ws = tok[2].text;
      const char* first = ws.data() + (!ws.empty() && ws.front() == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, ws.data() + ws.size(), w);
      if (ec != std::errc() || ptr != ws.data() + ws.size() || first == ws.data() + ws.size())
        fail(tok[2], "invalid integer weight '" + std::string(ws) + "'");
      vertices.emplace(id, std::make_pair(w, ids.size()));
      ids.push_back(std::move(id));
    } else if (kw == "e") {
      arity(3);
      std::string a = known(1), b = known(2);
      if (a == b) fail(tok[2], "self-loop at '" + a + "'");
      for (const auto& [x, y] : edges)
        if ((x == a && y == b) || (x == b && y == a)) fail(tok[1], "duplicate edge " + a + " " + b);
      edges.emplace_back(std::move(a), std::move(b));
      edge_sites.push_back({line_no, tok[1].column});
    } else if (kw == "root") {
      arity(2);
      std::string id = id_at(1);
      if (root) fail(tok[0], "duplicate root statement");
      root.emplace(std::move(id), Site{line_no, tok[1].column});
    } else {
      fail(tok[0], "unknown statement '" + std::string(kw) + "'");
    }
  }
  const std::size_t end_line = std::max<std::size_t>(line_no, 1);

  if (ids.empty()) throw ParseError(end_line, 1, "no vertices declared");
  UnionFind uf(ids.size());
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (!uf.unite(vertices.at(edges[k].first).second, vertices.at(edges[k].second).second))
      throw ParseError(edge_sites[k].line, edge_sites[k].column,
                       "edge " + edges[k].first + " " + edges[k].second + " closes a cycle");
  for (std::size_t k = 1; k < ids.size(); ++k)
    if (uf.find(k) != uf.find(0))
      throw ParseError(end_line, 1, "graph is disconnected: '" + ids[k] + "' is not connected to '" + ids[0] + "'");
  if (root && !vertices.count(root->first))
    throw ParseError(root->second.line, root->second.column, "unknown root vertex '" + root->first + "'");

  PlumbedGraph pg{Tree::from_edges(ids, edges), {}, std::nullopt};
  pg.weights.resize(pg.tree.size());
  for (VertexId v = 0; v < pg.tree.size(); ++v) pg.weights[v] = vertices.at(pg.tree.id(v)).first;
  if (root) pg.root = pg.tree.find(root->first);
  return pg;
}

PlumbedGraph load_plumbing(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_plumbing(buf.str());
}

std::string print_plumbing(const PlumbedGraph& pg) {
  std::ostringstream out;
  for (VertexId v = 0; v < pg.tree.size(); ++v) out << "v " << pg.tree.id(v) << ' ' << pg.weight(v) << '\n';
  for (auto [u, v] : pg.tree.edges()) out << "e " << pg.tree.id(u) << ' ' << pg.tree.id(v) << '\n';
  if (pg.root) out << "root " << pg.tree.id(*pg.root) << '\n';
  return out.str();
}

bool same_plumbing(const PlumbedGraph& a, const PlumbedGraph& b) {
  return a.tree.ids() == b.tree.ids() && a.tree.edges() == b.tree.edges() && a.weights == b.weights &&
         a.root == b.root;
}

std::string emit_dot(const Tree& tree, std::optional<VertexId> root) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& id : tree.ids()) out << "  \"" << id << "\";\n";
  std::vector<std::pair<VertexId, VertexId>> arcs = tree.edges();
  if (root) {
    const RootedTree rt(tree, *root);
    for (auto& [u, v] : arcs)
      if (rt.parent(u) == v) std::swap(u, v);
    std::sort(arcs.begin(), arcs.end());
  }
  for (auto [u, v] : arcs) out << "  \"" << tree.id(u) << "\" -> \"" << tree.id(v) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const dag::ColoredDag& q) {
  if (q.node_count() == 0) return "digraph { }\n";
  std::ostringstream out;
  out << "digraph {\n";
  for (std::size_t i = 0; i < q.node_count(); ++i)
    out << "  n" << i << " [label=\"" << dag::to_string(q.nodes()[i].color) << "\"];\n";
  for (auto [s, t] : q.edges()) out << "  n" << s << " -> n" << t << ";\n";
  out << "}\n";
  return out.str();
}

std::string serialize_series(const QSeries& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    nlohmann::ordered_json term;
    term["exponent"] = to_fraction_string(e);
    term["coefficient"] = c;
    arr.push_back(std::move(term));
  }
  return arr.dump();
}

QSeries deserialize_series(std::string_view text, std::optional<Rational> order) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed series JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::parse, "series JSON must be an array");
  std::map<Rational, std::int64_t> terms;
  for (const auto& t : doc) {
    if (!t.is_object() || !t.contains("exponent") || !t.contains("coefficient") || t.size() != 2)
      throw Error(ErrorCode::parse, "series term must have exactly 'exponent' and 'coefficient'");
    if (!t["exponent"].is_string() || !t["coefficient"].is_number_integer())
      throw Error(ErrorCode::parse, "series term has the wrong field types");
    Rational e;
    try {
      e = parse_rational(t["exponent"].get<std::string>());
    } catch (const Error&) {
      throw Error(ErrorCode::parse, "bad exponent '" + t["exponent"].get<std::string>() + "'");
    }
    if (!terms.emplace(e, t["coefficient"].get<std::int64_t>()).second)
      throw Error(ErrorCode::parse, "duplicate exponent " + to_fraction_string(e));
  }
  Rational top = terms.empty() ? Rational(0) : terms.rbegin()->first;
  if (order && *order < top) throw Error(ErrorCode::parse, "series has terms beyond the requested order");
  QSeries out(order ? *order : top);
  for (const auto& [e, c] : terms) out.add_term(e, c);
  return out;
}

}  // namespace plumb
