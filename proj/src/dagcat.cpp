#include "plumb/dagcat.hpp"

#include "plumb/error.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace plumb::dag {

// ---------------------------------------------------------------------------------------------
// Bits

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

Bits Bits::all_plus(std::size_t m) {
  if (m > 64) throw Error(ErrorCode::invalid_argument, "bit words are limited to 64 entries");
  Bits b;
  b.len_ = static_cast<std::uint8_t>(m);
  return b;
}

Bits Bits::all_minus(std::size_t m) {
  Bits b = all_plus(m);
  b.mask_ = low_mask(m);
  return b;
}

Bits Bits::parse(std::string_view text) {
  Bits b = all_plus(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-')
      b = b.with(i, Sign::minus);
    else if (text[i] != '+')
      throw Error(ErrorCode::invalid_argument, "bit words use '+' and '-' only: '" + std::string(text) + "'");
  }
  return b;
}

Sign Bits::operator[](std::size_t i) const {
  return (mask_ >> (len_ - 1 - i)) & 1U ? Sign::minus : Sign::plus;
}

Bits Bits::with(std::size_t i, Sign s) const {
  Bits b = *this;
  const std::uint64_t bit = std::uint64_t{1} << (len_ - 1 - i);
  b.mask_ = s == Sign::minus ? (mask_ | bit) : (mask_ & ~bit);
  return b;
}

std::size_t Bits::weight() const { return static_cast<std::size_t>(std::popcount(mask_)); }

Bits Bits::conj() const {
  Bits b = *this;
  b.mask_ = ~mask_ & low_mask(len_);
  return b;
}

Bits Bits::concat(const Bits& other) const {
  if (len_ + other.len_ > 64) throw Error(ErrorCode::invalid_argument, "bit words are limited to 64 entries");
  Bits b;
  b.len_ = static_cast<std::uint8_t>(len_ + other.len_);
  b.mask_ = other.len_ == 64 ? other.mask_ : (mask_ << other.len_) | other.mask_;
  return b;
}

Bits Bits::slice(std::size_t pos, std::size_t count) const {
  if (pos + count > len_) throw Error(ErrorCode::invalid_argument, "bit slice out of range");
  Bits b = all_plus(count);
  b.mask_ = (mask_ >> (len_ - pos - count)) & low_mask(count);
  return b;
}

bool Bits::leq(const Bits& mu) const {
  // λ_i = + (bit 0) must imply μ_i = + (bit 0): no position with λ bit 0 and μ bit 1
  return len_ == mu.len_ && (~mask_ & mu.mask_ & low_mask(len_)) == 0;
}

std::string Bits::str() const {
  std::string s(len_, '+');
  for (std::size_t i = 0; i < len_; ++i) s[i] = to_char((*this)[i]);
  return s;
}

Bits operator*(const Bits& a, const Bits& b) {
  if (a.len_ != b.len_)
    throw Error(ErrorCode::invalid_argument, "bit length mismatch: " + a.str() + " * " + b.str());
  Bits out = a;
  out.mask_ ^= b.mask_;
  return out;
}

std::size_t up_distance(const Bits& mu, const Bits& lambda) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] == Sign::minus && mu[i] == Sign::plus) ++n;
  return n;
}

std::vector<Bits> all_bits(std::size_t m) {
  if (m > 20) throw Error(ErrorCode::invalid_argument, "refusing to enumerate Z_2^m for m > 20");
  std::vector<Bits> out;
  out.reserve(std::size_t{1} << m);
  const Bits base = Bits::all_plus(m);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
    Bits b = base;
    for (std::size_t i = 0; i < m; ++i)
      if ((k >> (m - 1 - i)) & 1U) b = b.with(i, Sign::minus);
    out.push_back(b);
  }
  return out;
}

std::vector<Bits> expand_pattern(std::string_view pattern) {
  std::vector<char> symbols;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern.substr(i, 2) == "\xC2\xB1") {  // UTF-8 '±'
      symbols.push_back('*');
      ++i;
    } else if (pattern[i] == '+' || pattern[i] == '-' || pattern[i] == '*') {
      symbols.push_back(pattern[i]);
    } else {
      throw Error(ErrorCode::invalid_argument, "bad bit pattern '" + std::string(pattern) + "'");
    }
  }
  std::vector<Bits> out;
  for (const Bits& b : all_bits(symbols.size())) {
    bool ok = true;
    for (std::size_t i = 0; i < symbols.size() && ok; ++i)
      if (symbols[i] != '*') ok = to_char(b[i]) == symbols[i];
    if (ok) out.push_back(b);
  }
  return out;
}

std::string to_string(const Color& c) { return c.bits.str() + "," + std::to_string(c.depth); }

int depth_add(int a, int b) {
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  const long long s = static_cast<long long>(a) + b;
  if (s >= kUnbounded) return kUnbounded;
  if (s <= -kUnbounded) return -kUnbounded;
  return static_cast<int>(s);
}

// ---------------------------------------------------------------------------------------------
// ColoredDag

bool ColoredDag::Builder::add_node(NodeKey key, Color color) {
  if (color.depth > truncation_) return false;
  if (color.bits.size() != bit_length_)
    throw Error(ErrorCode::internal, "node color has " + std::to_string(color.bits.size()) +
                                         " bits, DAG expects " + std::to_string(bit_length_));
  auto [it, inserted] = nodes_.emplace(std::move(key), color);
  if (!inserted && !(it->second == color))
    throw Error(ErrorCode::internal, "node key reused with a different color");
  return true;
}

void ColoredDag::Builder::add_edge(const NodeKey& from, const NodeKey& to) {
  edges_.emplace_back(from, to);
}

ColoredDag ColoredDag::Builder::build() && {
  ColoredDag q;
  q.bit_length_ = bit_length_;
  q.truncation_ = truncation_;
  q.nodes_.reserve(nodes_.size());
  for (auto& [key, color] : nodes_) q.nodes_.push_back(Node{key, color});
  for (const auto& [from, to] : edges_) {
    auto s = q.find(from), t = q.find(to);
    if (s && t) q.edges_.emplace_back(*s, *t);
  }
  std::sort(q.edges_.begin(), q.edges_.end());
  q.edges_.erase(std::unique(q.edges_.begin(), q.edges_.end()), q.edges_.end());
  return q;
}

std::optional<std::size_t> ColoredDag::find(const NodeKey& key) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), key,
                             [](const Node& n, const NodeKey& k) { return n.key < k; });
  if (it == nodes_.end() || it->key != key) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool ColoredDag::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

int ColoredDag::min_depth() const {
  if (nodes_.empty()) return 0;
  int best = nodes_.front().color.depth;
  for (const Node& n : nodes_) best = std::min(best, n.color.depth);
  return best;
}

bool ColoredDag::is_labeled() const {
  std::set<Color> seen;
  for (const Node& n : nodes_)
    if (!seen.insert(n.color).second) return false;
  return true;
}

bool ColoredDag::is_acyclic() const {
  std::vector<std::size_t> indeg(nodes_.size(), 0);
  std::vector<std::vector<std::size_t>> out(nodes_.size());
  for (auto [s, t] : edges_) {
    ++indeg[t];
    out[s].push_back(t);
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t t : out[v])
      if (--indeg[t] == 0) ready.push_back(t);
  }
  return seen == nodes_.size();
}

ColoredDag ColoredDag::restricted(int t) const {
  ColoredDag q = induced([t](const Node& n) { return n.color.depth <= t; });
  q.truncation_ = std::min(truncation_, t);
  return q;
}

// ---------------------------------------------------------------------------------------------
// Constructors

namespace {

NodeKey append_pairs(NodeKey key, const Bits& left, const Bits& right) {
  for (std::size_t i = 0; i < left.size(); ++i) {
    key.push_back(static_cast<std::int32_t>(left[i]));
    key.push_back(static_cast<std::int32_t>(right[i]));
  }
  return key;
}

// Single-coordinate moves: λ -> λ' flips one '-' to '+', μ -> μ' flips one '+' to '-'.
std::vector<Bits> raise_moves(const Bits& lambda) {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] == Sign::minus) out.push_back(lambda.with(i, Sign::plus));
  return out;
}

std::vector<Bits> lower_moves(const Bits& mu) {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] == Sign::plus) out.push_back(mu.with(i, Sign::minus));
  return out;
}

std::size_t common_length(std::span<const Bits> d, std::span<const Bits> e) {
  std::optional<std::size_t> m;
  for (std::span<const Bits> s : {d, e})
    for (const Bits& b : s) {
      if (m && *m != b.size())
        throw Error(ErrorCode::invalid_argument, "bit-length mismatch between D and E");
      m = b.size();
    }
  return m.value_or(0);
}

}  // namespace

ColoredDag base_chain(int max_depth) {
  ColoredDag::Builder b(0, max_depth);
  for (int k = 0; 2 * k <= max_depth; ++k) b.add_node({k}, Color{Bits{}, 2 * k});
  return std::move(b).build();
}

ColoredDag unit() {
  ColoredDag::Builder b(0, kUnbounded);
  b.add_node({}, Color{Bits{}, 0});
  return std::move(b).build();
}

ColoredDag hypercube(std::span<const Bits> d, std::span<const Bits> e, int max_depth) {
  if (d.empty() || e.empty()) throw Error(ErrorCode::invalid_argument, "hypercube needs nonempty D and E");
  const std::size_t m = common_length(d, e);
  const std::set<Bits> dset(d.begin(), d.end()), eset(e.begin(), e.end());
  ColoredDag::Builder b(m, max_depth);
  for (const Bits& lam : dset)
    for (const Bits& mu : eset)
      b.add_node(append_pairs({}, lam, mu), Color{lam * mu, static_cast<int>(lam.weight() + mu.weight())});
  for (const Bits& lam : dset)
    for (const Bits& mu : eset) {
      const NodeKey from = append_pairs({}, lam, mu);
      for (const Bits& lam2 : raise_moves(lam))
        if (dset.count(lam2)) b.add_edge(from, append_pairs({}, lam2, mu));
      for (const Bits& mu2 : lower_moves(mu))
        if (eset.count(mu2)) b.add_edge(from, append_pairs({}, lam, mu2));
    }
  return std::move(b).build();
}

ColoredDag product(const ColoredDag& q, const ColoredDag& r) {
  int trunc = std::min(depth_add(q.truncation(), r.min_depth()), depth_add(r.truncation(), q.min_depth()));
  if (q.nodes().empty() || r.nodes().empty()) trunc = std::min(q.truncation(), r.truncation());
  ColoredDag::Builder b(q.bit_length() + r.bit_length(), trunc);
  auto key_of = [](const NodeKey& a, const NodeKey& c) {
    NodeKey k = a;
    k.insert(k.end(), c.begin(), c.end());
    return k;
  };
  for (const auto& x : q.nodes())
    for (const auto& y : r.nodes())
      b.add_node(key_of(x.key, y.key),
                 Color{x.color.bits.concat(y.color.bits), depth_add(x.color.depth, y.color.depth)});
  for (auto [s, t] : q.edges())
    for (const auto& y : r.nodes()) b.add_edge(key_of(q.nodes()[s].key, y.key), key_of(q.nodes()[t].key, y.key));
  for (const auto& x : q.nodes())
    for (auto [s, t] : r.edges()) b.add_edge(key_of(x.key, r.nodes()[s].key), key_of(x.key, r.nodes()[t].key));
  return std::move(b).build();
}

ColoredDag disjoint_union(std::span<const ColoredDag> parts) {
  if (parts.empty()) return ColoredDag::Builder(0, kUnbounded).build();
  int trunc = kUnbounded;
  for (const auto& p : parts) {
    if (p.bit_length() != parts.front().bit_length())
      throw Error(ErrorCode::invalid_argument, "disjoint union of DAGs with different bit lengths");
    trunc = std::min(trunc, p.truncation());
  }
  ColoredDag::Builder b(parts.front().bit_length(), trunc);
  for (const auto& p : parts)
    for (const auto& n : p.nodes())
      if (n.color.depth <= trunc) {
        if (b.contains(n.key)) throw Error(ErrorCode::invalid_argument, "disjoint union: node keys collide");
        b.add_node(n.key, n.color);
      }
  for (const auto& p : parts)
    for (auto [s, t] : p.edges()) b.add_edge(p.nodes()[s].key, p.nodes()[t].key);
  return std::move(b).build();
}

bool is_slim(const ColoredDag& q) {
  std::set<Color> colors;
  for (const auto& n : q.nodes())
    if (!colors.insert(n.color).second) return false;
  for (const Color& c : colors) {
    if (depth_add(c.depth, 2) > q.truncation()) continue;
    if (!colors.count(Color{c.bits, c.depth + 2})) return false;
  }
  return true;
}

ColoredDag fragment(const ColoredDag& q, Side side, const Bits& param, int max_depth) {
  if (!is_slim(q)) throw Error(ErrorCode::not_slim, "fragments require a slim DAG");
  const std::size_t m = param.size();
  const int trunc = std::min(max_depth, depth_add(q.truncation(), -2 * static_cast<int>(m)));

  std::map<Color, std::size_t> by_color;
  for (std::size_t i = 0; i < q.nodes().size(); ++i) by_color.emplace(q.nodes()[i].color, i);
  auto lookup = [&](const Bits& bits, int depth) -> std::optional<std::size_t> {
    auto it = by_color.find(Color{bits, depth});
    if (it == by_color.end()) return std::nullopt;
    return it->second;
  };

  // For the left fragment the free coordinate μ sits on the right: (x|λ|μ).
  // For the right fragment the free coordinate κ sits on the left: (x|κ|λ̄).
  auto key_of = [&](std::size_t x, const Bits& free) {
    return side == Side::left ? append_pairs(q.nodes()[x].key, param, free)
                              : append_pairs(q.nodes()[x].key, free, param);
  };
  auto weight = [&](const Bits& free) { return static_cast<int>(param.weight() + free.weight()); };

  const std::vector<Bits> frees = all_bits(m);
  ColoredDag::Builder b(q.bit_length() + m, trunc);
  for (std::size_t x = 0; x < q.nodes().size(); ++x) {
    const Color& cx = q.nodes()[x].color;
    for (const Bits& f : frees)
      b.add_node(key_of(x, f), Color{cx.bits.concat(param * f), cx.depth + weight(f)});
  }

  for (std::size_t x = 0; x < q.nodes().size(); ++x) {
    const Color& cx = q.nodes()[x].color;
    for (const Bits& f : frees) {
      const NodeKey from = key_of(x, f);
      if (!b.contains(from)) continue;
      // hypercube moves inside the slice
      for (const Bits& f2 : side == Side::left ? lower_moves(f) : raise_moves(f)) b.add_edge(from, key_of(x, f2));
      // moves pulled back from the opposite slice: the base node changes depth by -2 (left)
      // or +2 (right) so that both endpoints hit the same node of the opposite slice
      const int dz = side == Side::left ? -2 : 2;
      if (auto y = lookup(cx.bits, cx.depth + dz))
        for (const Bits& f2 : side == Side::left ? lower_moves(f) : raise_moves(f)) b.add_edge(from, key_of(*y, f2));
      // arrows of Q at the image node x' = x shifted by 2s, pulled back
      const int s2 = 2 * weight(f);
      if (auto xp = lookup(cx.bits, cx.depth + s2)) {
        for (auto [src, dst] : q.edges()) {
          if (src != *xp) continue;
          const Color& cz = q.nodes()[dst].color;
          if (auto z = lookup(cz.bits, cz.depth - s2)) b.add_edge(from, key_of(*z, f));
        }
      }
    }
  }
  // Cartesian lifts of the arrows of Q
  for (auto [s, t] : q.edges())
    for (const Bits& f : frees) b.add_edge(key_of(s, f), key_of(t, f));
  return std::move(b).build();
}

ColoredDag fragment_left(const ColoredDag& q, const Bits& lambda, int max_depth) {
  return fragment(q, Side::left, lambda, max_depth);
}

ColoredDag fragment_right(const ColoredDag& q, const Bits& lambda_bar, int max_depth) {
  return fragment(q, Side::right, lambda_bar, max_depth);
}

namespace {

// Reads the (left, right) pair of trailing coordinate `coord` out of `count` trailing pairs.
std::pair<Sign, Sign> trailing_pair(const NodeKey& key, std::size_t count, std::size_t coord) {
  const std::size_t base = key.size() - 2 * count + 2 * coord;
  return {static_cast<Sign>(key[base]), static_cast<Sign>(key[base + 1])};
}

Bits trailing_bits(const NodeKey& key, std::size_t count, bool right) {
  Bits b = Bits::all_plus(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto [l, r] = trailing_pair(key, count, i);
    b = b.with(i, right ? r : l);
  }
  return b;
}

}  // namespace

ColoredDag fragment_family(const ColoredDag& q, std::span<const Bits> d, std::span<const Bits> e,
                           int max_depth) {
  const std::size_t m = common_length(d, e);
  const std::set<Bits> eset(e.begin(), e.end());
  std::vector<ColoredDag> parts;
  for (const Bits& lam : std::set<Bits>(d.begin(), d.end())) {
    ColoredDag f = fragment_left(q, lam, max_depth);
    parts.push_back(f.induced([&](const ColoredDag::Node& n) { return eset.count(trailing_bits(n.key, m, true)) != 0; }));
  }
  if (parts.empty()) return ColoredDag::Builder(q.bit_length() + m, max_depth).build();
  return disjoint_union(parts);
}

ColoredDag fragment_family_right(const ColoredDag& q, std::span<const Bits> d, std::span<const Bits> e,
                                 int max_depth) {
  const std::size_t m = common_length(d, e);
  const std::set<Bits> dset(d.begin(), d.end());
  std::vector<ColoredDag> parts;
  for (const Bits& lam_bar : std::set<Bits>(e.begin(), e.end())) {
    ColoredDag f = fragment_right(q, lam_bar, max_depth);
    parts.push_back(f.induced([&](const ColoredDag::Node& n) { return dset.count(trailing_bits(n.key, m, false)) != 0; }));
  }
  if (parts.empty()) return ColoredDag::Builder(q.bit_length() + m, max_depth).build();
  return disjoint_union(parts);
}

ColoredDag shift(const ColoredDag& q, const Bits& lambda, int d) {
  if (lambda.size() != q.bit_length())
    throw Error(ErrorCode::invalid_argument, "bit shift length does not match the DAG");
  ColoredDag::Builder b(q.bit_length(), depth_add(q.truncation(), d));
  for (const auto& n : q.nodes()) b.add_node(n.key, Color{lambda * n.color.bits, n.color.depth + d});
  for (auto [s, t] : q.edges()) b.add_edge(q.nodes()[s].key, q.nodes()[t].key);
  return std::move(b).build();
}

ColoredDag shift_depth(const ColoredDag& q, int d) { return shift(q, Bits::all_plus(q.bit_length()), d); }

ColoredDag reverse(const ColoredDag& q) {
  ColoredDag::Builder b(q.bit_length(), q.truncation());
  for (const auto& n : q.nodes()) b.add_node(n.key, n.color);
  for (auto [s, t] : q.edges()) b.add_edge(q.nodes()[t].key, q.nodes()[s].key);
  return std::move(b).build();
}

bool same_structure(const ColoredDag& a, const ColoredDag& b) {
  if (a.bit_length() != b.bit_length()) return false;
  const int t = std::min(a.truncation(), b.truncation());
  const ColoredDag ra = a.restricted(t), rb = b.restricted(t);
  if (ra.node_count() != rb.node_count() || ra.edge_count() != rb.edge_count()) return false;
  for (std::size_t i = 0; i < ra.node_count(); ++i)
    if (ra.nodes()[i].key != rb.nodes()[i].key || !(ra.nodes()[i].color == rb.nodes()[i].color)) return false;
  return ra.edges() == rb.edges();
}

namespace {

void require_trailing(const ColoredDag& f, std::size_t count, const char* op) {
  if (f.bit_length() < count)
    throw Error(ErrorCode::invalid_argument, std::string(op) + ": family has too few coordinates");
  for (const auto& n : f.nodes())
    if (n.key.size() < 2 * count)
      throw Error(ErrorCode::invalid_argument, std::string(op) + ": node key too short for the stated shape");
}

}  // namespace

ColoredDag op_h0(const ColoredDag& family, Sign lambda1, std::size_t m) {
  require_trailing(family, m + 1, "H^0");
  for (const auto& n : family.nodes())
    if (trailing_pair(n.key, m + 1, 0).first != lambda1)
      throw Error(ErrorCode::invalid_argument, "H^0: first left coordinate differs from lambda1");
  return family.induced([m](const ColoredDag::Node& n) { return trailing_pair(n.key, m + 1, 0).second == Sign::plus; });
}

ColoredDag op_quot(const ColoredDag& family, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "quotient needs m >= 1");
  require_trailing(family, m, "quotient");
  return family.induced([m](const ColoredDag::Node& n) { return trailing_pair(n.key, m, 0).first == Sign::minus; });
}

OperationCheck check_h0(const ColoredDag& q, Sign lambda1, std::size_t m, int max_depth) {
  std::string pattern(1, to_char(lambda1));
  pattern.append(m, '*');
  const auto d = expand_pattern(pattern);
  const auto e = all_bits(m + 1);
  OperationCheck out;
  out.result = op_h0(fragment_family(q, d, e, max_depth), lambda1, m);
  const Bits l1 = Bits::single(lambda1), plus1 = Bits::all_plus(1);
  const ColoredDag slice = product(q, hypercube(std::span(&l1, 1), std::span(&plus1, 1)));
  const auto full = all_bits(m);
  out.expected = fragment_family(slice, full, full, max_depth);
  out.isomorphic = same_structure(out.result, out.expected);
  return out;
}

OperationCheck check_quot(const ColoredDag& q, std::size_t m, int max_depth) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "quotient needs m >= 1");
  const auto full = all_bits(m);
  OperationCheck out;
  out.result = op_quot(fragment_family(q, full, full, max_depth), m);
  const ColoredDag minus_fragment = fragment_left(q, Bits::all_minus(1), max_depth + 2 * static_cast<int>(m));
  const auto rest = all_bits(m - 1);
  out.expected = fragment_family(minus_fragment, rest, rest, max_depth);
  out.isomorphic = same_structure(out.result, out.expected);
  return out;
}

ColoredDag bilateral_component(Sign lambda1, int h, int max_depth, bool plus_only) {
  const int w = lambda1 == Sign::minus ? 1 : 0;
  if (((h - w) % 2 + 2) % 2 != 0)
    throw Error(ErrorCode::invalid_argument, "Cartan weight " + std::to_string(h) + " has the wrong parity");
  const Bits l1 = Bits::single(lambda1);
  const ColoredDag base = base_chain(max_depth + 4);
  if (h >= w) {
    const int s = h - w;
    ColoredDag f = fragment_left(base, l1, max_depth - s);
    if (plus_only)
      f = f.induced([](const ColoredDag::Node& n) { return trailing_pair(n.key, 1, 0).second == Sign::plus; });
    return shift_depth(f, s);
  }
  const int s = w - h - 2;
  ColoredDag f = fragment_right(base, l1.conj(), max_depth - s);
  if (plus_only)
    f = f.induced([](const ColoredDag::Node& n) { return trailing_pair(n.key, 1, 0).first == Sign::minus; });
  return shift_depth(f, s);
}

BilateralObject bilateral(Sign lambda1, int h_min, int h_max, int max_depth) {
  const int w = lambda1 == Sign::minus ? 1 : 0;
  auto odd = [w](int h) { return ((h - w) % 2 + 2) % 2 != 0; };
  if (odd(h_min) || odd(h_max))
    throw Error(ErrorCode::invalid_argument, "Cartan weight window must match the parity of |lambda1|");
  BilateralObject out;
  out.base = lambda1;
  for (int h = h_min; h <= h_max; h += 2) {
    out.components.emplace(h, bilateral_component(lambda1, h, max_depth, false));
    out.plus_part.emplace(h, bilateral_component(lambda1, h, max_depth, true));
  }
  return out;
}

}  // namespace plumb::dag
