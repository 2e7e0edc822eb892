#include "assoc/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace assoc {

PlanarTree::PlanarTree() : encoding_("|") {}

PlanarTree::PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {
  if (children_.size() < 2) throw std::invalid_argument("internal vertex needs at least two children");
  arity_ = 0;
  vertices_ = 1;
  binary_ = children_.size() == 2;
  encoding_ = "(";
  for (const auto& c : children_) {
    arity_ += c.arity_;
    vertices_ += c.vertices_;
    binary_ = binary_ && c.binary_;
    encoding_ += c.encoding_;
  }
  encoding_ += ")";
}

PlanarTree PlanarTree::corolla(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arity must be positive");
  if (n == 1) return leaf();
  return PlanarTree(std::vector<PlanarTree>(n));
}

PlanarTree PlanarTree::left_comb(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arity must be positive");
  PlanarTree t;
  for (std::size_t k = 1; k < n; ++k) t = PlanarTree({t, leaf()});
  return t;
}

PlanarTree PlanarTree::right_comb(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arity must be positive");
  PlanarTree t;
  for (std::size_t k = 1; k < n; ++k) t = PlanarTree({leaf(), t});
  return t;
}

PlanarTree PlanarTree::parse(std::string_view text) {
  std::size_t pos = 0;
  std::function<PlanarTree()> rec = [&]() -> PlanarTree {
    if (pos >= text.size()) throw std::invalid_argument("truncated tree encoding");
    if (text[pos] == '|') {
      ++pos;
      return leaf();
    }
    if (text[pos] != '(') throw std::invalid_argument("unexpected character in tree encoding");
    ++pos;
    std::vector<PlanarTree> kids;
    while (pos < text.size() && text[pos] != ')') kids.push_back(rec());
    if (pos >= text.size()) throw std::invalid_argument("unbalanced tree encoding");
    ++pos;
    return PlanarTree(std::move(kids));
  };
  PlanarTree t = rec();
  if (pos != text.size()) throw std::invalid_argument("trailing characters in tree encoding");
  return t;
}

std::size_t Forest::arity() const {
  std::size_t n = 0;
  for (const auto& t : trees) n += t.arity();
  return n;
}

std::size_t Forest::dimension() const {
  std::size_t d = 0;
  for (const auto& t : trees) d += t.dimension();
  return d;
}

std::string Forest::encoding() const {
  std::string s;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0) s += ' ';
    s += trees[i].encoding();
  }
  return s;
}

namespace {

std::vector<PlanarTree> sorted(std::vector<PlanarTree> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_binary(const PlanarTree& t, const char* what) {
  if (!t.is_binary()) throw std::invalid_argument(std::string(what) + ": tree is not binary");
}

// All ordered sequences of at least `min_parts` trees from `pool[k]` with total arity n.
void sequences(std::size_t n, std::size_t min_parts, const std::vector<std::vector<PlanarTree>>& pool,
               std::vector<PlanarTree>& current, std::vector<std::vector<PlanarTree>>& out) {
  if (n == 0) {
    if (current.size() >= min_parts) out.push_back(current);
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (current.empty() && k == n && min_parts > 1) continue;
    for (const auto& t : pool[k]) {
      current.push_back(t);
      sequences(n - k, min_parts, pool, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<PlanarTree> enumerate_binary_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arity must be positive");
  std::vector<std::vector<PlanarTree>> table(n + 1);
  table[1] = {PlanarTree::leaf()};
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t a = 1; a < k; ++a) {
      for (const auto& l : table[a]) {
        for (const auto& r : table[k - a]) table[k].push_back(PlanarTree({l, r}));
      }
    }
  }
  return sorted(std::move(table[n]));
}

std::vector<PlanarTree> enumerate_planar_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arity must be positive");
  std::vector<std::vector<PlanarTree>> table(n + 1);
  table[1] = {PlanarTree::leaf()};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<std::vector<PlanarTree>> seqs;
    std::vector<PlanarTree> current;
    sequences(k, 2, table, current, seqs);
    for (auto& s : seqs) table[k].push_back(PlanarTree(std::move(s)));
  }
  return sorted(std::move(table[n]));
}

std::vector<std::size_t> bracketing_vector(const PlanarTree& t) {
  std::vector<std::size_t> out(t.arity(), 0);
  std::size_t next = 0;
  std::function<void(const PlanarTree&)> rec = [&](const PlanarTree& u) {
    const std::size_t first = next;
    out[first] = std::max(out[first], u.arity());
    if (u.is_leaf()) {
      ++next;
      return;
    }
    for (const auto& c : u.children()) rec(c);
  };
  rec(t);
  return out;
}

bool tamari_leq(const PlanarTree& s, const PlanarTree& t) {
  require_binary(s, "tamari_leq");
  require_binary(t, "tamari_leq");
  if (s.arity() != t.arity()) throw std::invalid_argument("tamari_leq: arity mismatch");
  auto a = bracketing_vector(s);
  auto b = bracketing_vector(t);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool tamari_leq_by_rotations(const PlanarTree& s, const PlanarTree& t) {
  require_binary(s, "tamari_leq");
  require_binary(t, "tamari_leq");
  if (s.arity() != t.arity()) throw std::invalid_argument("tamari_leq: arity mismatch");
  std::unordered_set<std::string> seen{s.encoding()};
  std::deque<PlanarTree> queue{s};
  while (!queue.empty()) {
    PlanarTree u = queue.front();
    queue.pop_front();
    if (u == t) return true;
    for (auto& c : covers(u)) {
      if (seen.insert(c.encoding()).second) queue.push_back(std::move(c));
    }
  }
  return false;
}

bool tamari_leq(const Forest& s, const Forest& t) {
  if (s.trees.size() != t.trees.size()) throw std::invalid_argument("tamari_leq: forest shapes differ");
  for (std::size_t i = 0; i < s.trees.size(); ++i) {
    if (!tamari_leq(s.trees[i], t.trees[i])) return false;
  }
  return true;
}

std::vector<PlanarTree> covers(const PlanarTree& t) {
  require_binary(t, "covers");
  std::vector<PlanarTree> out;
  if (t.is_leaf()) return out;
  const PlanarTree& l = t.children()[0];
  const PlanarTree& r = t.children()[1];
  if (!l.is_leaf()) {
    out.push_back(PlanarTree({l.children()[0], PlanarTree({l.children()[1], r})}));
  }
  for (auto& c : covers(l)) out.push_back(PlanarTree({c, r}));
  for (auto& c : covers(r)) out.push_back(PlanarTree({l, c}));
  return sorted(std::move(out));
}

PlanarTree graft(const PlanarTree& s, std::size_t i, const PlanarTree& t) {
  if (i < 1 || i > s.arity()) throw std::out_of_range("graft: leaf index out of range");
  if (s.is_leaf()) return t;
  std::vector<PlanarTree> kids;
  std::size_t offset = 0;
  for (const auto& c : s.children()) {
    if (i > offset && i <= offset + c.arity()) {
      kids.push_back(graft(c, i - offset, t));
    } else {
      kids.push_back(c);
    }
    offset += c.arity();
  }
  return PlanarTree(std::move(kids));
}

std::vector<int> leaf_vector(const PlanarTree& t) {
  require_binary(t, "leaf_vector");
  if (t.arity() < 2) throw std::invalid_argument("leaf_vector: arity must be at least 2");
  std::vector<int> lean;  // per leaf: 1 for a left child, 0 for a right child
  std::function<void(const PlanarTree&, int)> rec = [&](const PlanarTree& u, int is_left) {
    if (u.is_leaf()) {
      lean.push_back(is_left);
      return;
    }
    rec(u.children()[0], 1);
    rec(u.children()[1], 0);
  };
  rec(t, 0);
  return std::vector<int>(lean.begin() + 1, lean.end() - 1);
}

PlanarTree collapse_edges(const PlanarTree& t, ChildSide side) {
  require_binary(t, "collapse_edges");
  if (t.is_leaf()) return t;
  PlanarTree l = collapse_edges(t.children()[0], side);
  PlanarTree r = collapse_edges(t.children()[1], side);
  std::vector<PlanarTree> kids;
  auto append = [&](const PlanarTree& c, bool contract) {
    if (contract && !c.is_leaf()) {
      kids.insert(kids.end(), c.children().begin(), c.children().end());
    } else {
      kids.push_back(c);
    }
  };
  append(l, side == ChildSide::kLeft);
  append(r, side == ChildSide::kRight);
  return PlanarTree(std::move(kids));
}

std::vector<VertexSpan> internal_vertices(const PlanarTree& t) {
  std::vector<VertexSpan> out;
  std::function<void(const PlanarTree&, std::size_t)> rec = [&](const PlanarTree& u, std::size_t first) {
    if (u.is_leaf()) return;
    std::size_t slot = out.size();
    out.push_back({{first, first + u.arity() - 1}, {}});
    std::size_t offset = first;
    for (const auto& c : u.children()) {
      out[slot].children.push_back({offset, offset + c.arity() - 1});
      rec(c, offset);
      offset += c.arity();
    }
  };
  rec(t, 1);
  return out;
}

std::set<LeafSpan> brackets(const PlanarTree& t) {
  std::set<LeafSpan> out;
  auto vs = internal_vertices(t);
  for (std::size_t k = 1; k < vs.size(); ++k) out.insert(vs[k].span);
  return out;
}

PlanarTree tree_from_brackets(std::size_t n, const std::set<LeafSpan>& spans) {
  if (n == 0) throw std::invalid_argument("arity must be positive");
  if (n == 1) {
    if (!spans.empty()) throw std::invalid_argument("the trivial tree has no brackets");
    return PlanarTree::leaf();
  }
  std::vector<LeafSpan> order(spans.begin(), spans.end());
  for (const auto& [a, b] : order) {
    if (a < 1 || b > n || b <= a || (a == 1 && b == n)) throw std::invalid_argument("invalid bracket");
  }
  // Outer spans first among those sharing a left end.
  std::sort(order.begin(), order.end(), [](const LeafSpan& x, const LeafSpan& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
  std::size_t idx = 0;
  std::function<PlanarTree(std::size_t, std::size_t)> build = [&](std::size_t a, std::size_t b) {
    std::vector<PlanarTree> kids;
    std::size_t leaf = a;
    while (leaf <= b) {
      if (idx < order.size() && order[idx].first == leaf) {
        LeafSpan s = order[idx++];
        if (s.second > b) throw std::invalid_argument("brackets are not laminar");
        kids.push_back(build(s.first, s.second));
        leaf = s.second + 1;
      } else {
        if (idx < order.size() && order[idx].first < leaf) throw std::invalid_argument("brackets are not laminar");
        kids.push_back(PlanarTree::leaf());
        ++leaf;
      }
    }
    return PlanarTree(std::move(kids));
  };
  PlanarTree t = build(1, n);
  if (idx != order.size()) throw std::invalid_argument("brackets are not laminar");
  return t;
}

bool refines(const PlanarTree& s, const PlanarTree& t) {
  if (s.arity() != t.arity()) return false;
  auto bs = brackets(s);
  auto bt = brackets(t);
  return std::includes(bs.begin(), bs.end(), bt.begin(), bt.end());
}

PlanarTree substitute_leaves(const PlanarTree& shape, const std::vector<PlanarTree>& subtrees) {
  if (subtrees.size() != shape.arity()) throw std::invalid_argument("substitute_leaves: wrong number of subtrees");
  std::size_t next = 0;
  std::function<PlanarTree(const PlanarTree&)> rec = [&](const PlanarTree& u) {
    if (u.is_leaf()) return subtrees[next++];
    std::vector<PlanarTree> kids;
    for (const auto& c : u.children()) kids.push_back(rec(c));
    return PlanarTree(std::move(kids));
  };
  return rec(shape);
}

std::vector<PlanarTree> binary_refinements(const PlanarTree& t) {
  if (t.is_leaf()) return {t};
  std::vector<std::vector<PlanarTree>> options;
  for (const auto& c : t.children()) options.push_back(binary_refinements(c));
  std::vector<PlanarTree> out;
  std::vector<PlanarTree> pick(options.size());
  std::function<void(std::size_t, const PlanarTree&)> rec = [&](std::size_t k, const PlanarTree& shape) {
    if (k == options.size()) {
      out.push_back(substitute_leaves(shape, pick));
      return;
    }
    for (const auto& o : options[k]) {
      pick[k] = o;
      rec(k + 1, shape);
    }
  };
  for (const auto& shape : enumerate_binary_trees(t.children().size())) rec(0, shape);
  return sorted(std::move(out));
}

namespace {

PlanarTree resolve(const PlanarTree& t, bool left) {
  if (t.is_leaf()) return t;
  std::vector<PlanarTree> kids;
  for (const auto& c : t.children()) kids.push_back(resolve(c, left));
  std::size_t k = kids.size();
  return substitute_leaves(left ? PlanarTree::left_comb(k) : PlanarTree::right_comb(k), kids);
}

}  // namespace

PlanarTree bottom_resolution(const PlanarTree& t) { return resolve(t, true); }
PlanarTree top_resolution(const PlanarTree& t) { return resolve(t, false); }

PlanarTree two_vertex_tree(std::size_t p, std::size_t q, std::size_t r) {
  if (q < 2 || p + r < 1) throw std::out_of_range("two_vertex_tree: need q >= 2 and p + r >= 1");
  return graft(PlanarTree::corolla(p + 1 + r), p + 1, PlanarTree::corolla(q));
}

}  // namespace assoc
