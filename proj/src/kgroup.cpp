#include "plumb/kgroup.hpp"

#include "plumb/error.hpp"
#include "plumb/rational.hpp"

#include <algorithm>
#include <numeric>

namespace plumb::kgroup {

using dag::depth_add;

KElement KElement::unit() {
  KElement k(0, dag::kUnbounded);
  k.add(Color{Bits{}, 0}, 1);
  return k;
}

std::int64_t KElement::coefficient(const Color& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

int KElement::valuation() const {
  int v = depth_add(truncation_, 1);
  for (const auto& [c, k] : terms_) v = std::min(v, c.depth);
  return v;
}

void KElement::add(const Color& c, std::int64_t coefficient) {
  if (coefficient == 0 || c.depth > truncation_) return;
  if (c.bits.size() != bit_length_)
    throw Error(ErrorCode::invalid_argument, "color bit length does not match the K-element");
  auto [it, inserted] = terms_.try_emplace(c, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

KElement KElement::truncated(int t) const {
  KElement out(bit_length_, std::min(t, truncation_));
  for (const auto& [c, k] : terms_) out.add(c, k);
  return out;
}

KElement& KElement::operator+=(const KElement& other) {
  if (other.bit_length_ != bit_length_)
    throw Error(ErrorCode::invalid_argument, "adding K-elements with different bit lengths");
  if (other.truncation_ < truncation_) *this = truncated(other.truncation_);
  for (const auto& [c, k] : other.terms_) add(c, k);
  return *this;
}

KElement& KElement::operator-=(const KElement& other) { return *this += scaled(other, -1); }

KElement operator+(KElement a, const KElement& b) { return a += b; }
KElement operator-(KElement a, const KElement& b) { return a -= b; }

KElement scaled(const KElement& a, std::int64_t c) {
  KElement out(a.bit_length(), a.truncation());
  for (const auto& [col, k] : a.terms()) out.add(col, checked_mul(c, k));
  return out;
}

KElement character(const ColoredDag& q, int n) {
  if (q.truncation() < n)
    throw Error(ErrorCode::insufficient_truncation, "DAG is materialized to depth " + std::to_string(q.truncation()) +
                                                        ", character requested to depth " + std::to_string(n));
  KElement out(q.bit_length(), n);
  for (const auto& node : q.nodes()) out.add(node.color, 1);
  return out;
}

KElement kmul(const KElement& a, const KElement& b) {
  const int t = std::min(depth_add(a.truncation(), b.valuation()), depth_add(b.truncation(), a.valuation()));
  KElement out(a.bit_length() + b.bit_length(), t);
  for (const auto& [ca, ka] : a.terms())
    for (const auto& [cb, kb] : b.terms())
      out.add(Color{ca.bits.concat(cb.bits), ca.depth + cb.depth}, checked_mul(ka, kb));
  return out;
}

KElement shift(const KElement& a, const Bits& lambda, int depth) {
  KElement out(a.bit_length(), depth_add(a.truncation(), depth));
  for (const auto& [c, k] : a.terms()) out.add(Color{lambda * c.bits, c.depth + depth}, k);
  return out;
}

KElement permute_bits(const KElement& a, std::span<const std::size_t> perm) {
  if (perm.size() != a.bit_length()) throw Error(ErrorCode::invalid_argument, "permutation length mismatch");
  KElement out(a.bit_length(), a.truncation());
  for (const auto& [c, k] : a.terms()) {
    Bits b = Bits::all_plus(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) b = b.with(i, c.bits[perm[i]]);
    out.add(Color{b, c.depth}, k);
  }
  return out;
}

bool equal_to_depth(const KElement& a, const KElement& b, int n) {
  if (a.truncation() < n || b.truncation() < n)
    throw Error(ErrorCode::insufficient_truncation, "K-element compared beyond its truncation");
  if (a.bit_length() != b.bit_length()) return false;
  return a.truncated(n).terms() == b.truncated(n).terms();
}

bool dominates(const KElement& big, const KElement& small, int n) {
  if (big.truncation() < n || small.truncation() < n)
    throw Error(ErrorCode::insufficient_truncation, "K-element compared beyond its truncation");
  for (const auto& [c, k] : small.terms())
    if (c.depth <= n && big.coefficient(c) < k) return false;
  for (const auto& [c, k] : big.terms())
    if (c.depth <= n && k < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------------------------

ColoredDag star_block(std::size_t m, int depth) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "recursion number must be >= 1");
  const int pad = 2 * static_cast<int>(m) + 2;
  const ColoredDag base = dag::base_chain(depth + pad + 2);
  const ColoredDag outer = dag::reverse(dag::fragment_left(base, Bits::all_plus(1), depth + pad));
  const std::vector<Bits> d{Bits::all_plus(m - 1)};
  const std::vector<Bits> e = dag::all_bits(m - 1);
  return dag::fragment_family(outer, d, e, depth);
}

ColoredDag star_lhs_dag(Sign lambda1, std::size_t m, int depth, bool swapped) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "recursion number must be >= 1");
  const int pad = 2 * static_cast<int>(m) + 2;
  const ColoredDag base = dag::base_chain(depth + pad + 2);
  const std::vector<Bits> l1{Bits::single(lambda1)}, plus1{Bits::all_plus(1)};
  const ColoredDag outer = dag::reverse(dag::fragment_family(base, l1, plus1, depth + pad));
  std::vector<Bits> d{Bits::all_plus(m - 1)}, e{Bits::all_minus(m - 1)};
  if (swapped) std::swap(d, e);
  return dag::fragment_family(outer, d, e, depth);
}

SignedParts star_rhs_parts(Sign lambda1, std::size_t m, int n) {
  const KElement block = character(star_block(m, n), n);
  const int lam_bar = lambda1 == Sign::plus ? 1 : 0;  // |λ̄1|
  SignedParts out{KElement(m, n), KElement(m, n)};
  for (const Bits& nu : dag::all_bits(m)) {
    const Bits lead = Bits::single(lambda1 * nu[0]);
    const Bits bits = lead.concat(nu.slice(1, m - 1).conj());
    KElement& sink = nu.weight() % 2 == 0 ? out.positive : out.negative;
    for (int k = 0;; ++k) {
      const int s = 2 * k + static_cast<int>(m) + static_cast<int>(nu.weight()) - lam_bar;
      if (s > n) break;
      sink += scaled(shift(block, bits, s), binomial(k + static_cast<std::int64_t>(m) - 1, k));
    }
  }
  return out;
}

KElement star_rhs(Sign lambda1, std::size_t m, int n) { return star_rhs_parts(lambda1, m, n).total(); }

IdentityCheck verify_star_identity(Sign lambda1, std::size_t m, int n) {
  IdentityCheck out;
  out.lhs = character(star_lhs_dag(lambda1, m, n), n);
  out.rhs = star_rhs(lambda1, m, n);
  out.holds = equal_to_depth(out.lhs, out.rhs, n);
  return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

struct TermWalker {
  std::span<const std::size_t> m;
  const TermBounds& bounds;
  const std::function<void(const TreeTerm&)>& visit;
  std::vector<int> min_tail;  // Σ_{w >= v} m_w: the least depth the remaining nodes can add
  TreeTerm term;

  void walk(std::size_t v, int used) {
    if (v == m.size()) {
      visit(term);
      return;
    }
    const int mv = static_cast<int>(m[v]);
    std::vector<Bits> choices = bounds.nu ? std::vector<Bits>{(*bounds.nu)[v]} : dag::all_bits(m[v]);
    for (const Bits& nu : choices) {
      const int w = static_cast<int>(nu.weight());
      for (int k = 0;; ++k) {
        if (!bounds.max_n.empty() && k > bounds.max_n[v]) break;
        const int s = 2 * k + mv + w;
        if (bounds.total_depth && used + s + min_tail[v + 1] > *bounds.total_depth) break;
        const TreeTerm saved = term;
        term.nu[v] = nu;
        term.n[v] = k;
        term.depth_shift[v] = s;
        term.sign = w % 2 == 0 ? term.sign : -term.sign;
        term.multiplicity = checked_mul(term.multiplicity, binomial(k + mv - 1, k));
        walk(v + 1, used + s);
        term = saved;
      }
    }
  }
};

}  // namespace

void for_each_tree_term(std::span<const std::size_t> m, const TermBounds& bounds,
                        const std::function<void(const TreeTerm&)>& visit) {
  if (!bounds.total_depth && bounds.max_n.size() != m.size())
    throw Error(ErrorCode::invalid_argument, "tree terms need a depth budget or per-node n caps");
  if (!bounds.max_n.empty() && bounds.max_n.size() != m.size())
    throw Error(ErrorCode::invalid_argument, "per-node n caps do not match the node count");
  if (bounds.nu) {
    if (bounds.nu->size() != m.size()) throw Error(ErrorCode::invalid_argument, "fixed nu does not match the node count");
    for (std::size_t v = 0; v < m.size(); ++v)
      if ((*bounds.nu)[v].size() != m[v]) throw Error(ErrorCode::invalid_argument, "fixed nu has the wrong length");
  }
  for (std::size_t mv : m)
    if (mv == 0) throw Error(ErrorCode::invalid_argument, "recursion numbers must be >= 1");
  TermWalker walker{m, bounds, visit, std::vector<int>(m.size() + 1, 0), TreeTerm{}};
  for (std::size_t v = m.size(); v-- > 0;) walker.min_tail[v] = walker.min_tail[v + 1] + static_cast<int>(m[v]);
  walker.term.nu.assign(m.size(), Bits{});
  walker.term.n.assign(m.size(), 0);
  walker.term.depth_shift.assign(m.size(), 0);
  walker.walk(0, 0);
}

KElement tree_rhs(std::span<const std::size_t> m, int n) {
  if (m.empty()) throw Error(ErrorCode::invalid_argument, "tree formula needs at least one node");
  std::map<std::size_t, KElement> blocks;
  std::size_t total_bits = 0;
  for (std::size_t mv : m) {
    total_bits += mv;
    if (!blocks.count(mv)) blocks.emplace(mv, character(star_block(mv, n), n));
  }
  KElement out(total_bits, n);
  TermBounds bounds;
  bounds.total_depth = n;
  for_each_tree_term(m, bounds, [&](const TreeTerm& t) {
    KElement prod = KElement::unit();
    for (std::size_t v = 0; v < m.size(); ++v)
      prod = kmul(prod, shift(blocks.at(m[v]), t.nu[v].conj(), t.depth_shift[v]));
    out += scaled(prod, checked_mul(t.sign, t.multiplicity));
  });
  return out;
}

IdentityCheck verify_tree_identity(std::span<const std::size_t> m, int n) {
  if (m.empty()) throw Error(ErrorCode::invalid_argument, "tree formula needs at least one node");
  ColoredDag prod = dag::unit();
  for (std::size_t mv : m) prod = dag::product(prod, star_lhs_dag(Sign::minus, mv, n));
  IdentityCheck out;
  out.lhs = character(prod, n);
  out.rhs = tree_rhs(m, n);
  out.holds = equal_to_depth(out.lhs, out.rhs, n);
  return out;
}

// ---------------------------------------------------------------------------------------------

std::vector<FelderCheck> verify_felder(Sign lambda1, int h_min, int h_max, int n) {
  const int w = lambda1 == Sign::minus ? 1 : 0;
  std::vector<FelderCheck> out;
  for (int h = h_min; h <= h_max; ++h) {
    if (((h - w) % 2 + 2) % 2 != 0) continue;
    FelderCheck c;
    c.h = h;
    c.whole = character(dag::bilateral_component(lambda1, h, n, false), n);
    c.sub = character(dag::bilateral_component(lambda1, h, n, true), n);
    c.quotient = character(dag::bilateral_component(dag::flip(lambda1), h + 1, n, true), n);
    c.holds = equal_to_depth(c.whole, c.sub + c.quotient, n);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::vector<std::size_t> complement(std::size_t m, const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    if (std::find(coords.begin(), coords.end(), i) == coords.end()) out.push_back(i);
  return out;
}

void check_coords(std::size_t m, const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::invalid_argument, "repeated defragmentation coordinate");
  for (std::size_t c : coords)
    if (c >= m) throw Error(ErrorCode::invalid_argument, "defragmentation coordinate out of range");
}

// order lists, for each position in the built object, which natural coordinate it carries
KElement to_natural_order(const KElement& k, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  return permute_bits(k, perm);
}

ColoredDag fragmented_rest(std::size_t rest, int n, std::size_t m) {
  const ColoredDag base = dag::base_chain(n + 2 * static_cast<int>(m) + 4);
  const auto all = dag::all_bits(rest);
  return dag::fragment_family(base, all, all, n);
}

ColoredDag full_cube(std::size_t k) {
  const auto all = dag::all_bits(k);
  return dag::hypercube(all, all);
}

}  // namespace

KElement defragmented_character(std::size_t m, const std::vector<std::size_t>& coords, int n) {
  check_coords(m, coords);
  std::vector<std::size_t> joint = coords;
  std::sort(joint.begin(), joint.end());
  const std::vector<std::size_t> rest = complement(m, joint);
  const ColoredDag built = dag::product(full_cube(joint.size()), fragmented_rest(rest.size(), n, m));
  std::vector<std::size_t> order = joint;
  order.insert(order.end(), rest.begin(), rest.end());
  return to_natural_order(character(built, n), order);
}

KElement defragmented_character_sequential(std::size_t m, const std::vector<std::size_t>& first,
                                           const std::vector<std::size_t>& second, int n) {
  std::vector<std::size_t> both = first;
  both.insert(both.end(), second.begin(), second.end());
  check_coords(m, both);
  const std::vector<std::size_t> rest = complement(m, both);
  // ∫_first applied after ∫_second: the cube for `first` is the outermost factor
  const ColoredDag inner = dag::product(full_cube(second.size()), fragmented_rest(rest.size(), n, m));
  const ColoredDag built = dag::product(full_cube(first.size()), inner);
  std::vector<std::size_t> order = first;
  order.insert(order.end(), second.begin(), second.end());
  order.insert(order.end(), rest.begin(), rest.end());
  return to_natural_order(character(built, n), order);
}

DefragCheck verify_defrag(std::size_t m, const std::vector<std::size_t>& coords, int n) {
  DefragCheck out;
  const KElement full = character(fragmented_rest(m, n, m), n);
  const KElement joint = defragmented_character(m, coords, n);
  out.invariant = equal_to_depth(joint, full, n);
  const std::size_t k = coords.size();
  for (std::uint64_t mask = 1; k > 1 && mask + 1 < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> first, second;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1U ? first : second).push_back(coords[i]);
    if (!equal_to_depth(defragmented_character_sequential(m, first, second, n), joint, n)) out.fubini = false;
  }
  return out;
}

}  // namespace plumb::kgroup
