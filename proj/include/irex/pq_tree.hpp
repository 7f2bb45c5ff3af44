#pragma once
// PQ-tree over elements 0..n-1 (Booth & Lueker). Represents the set of
// orderings of the elements reachable by permuting children of P-nodes and
// reversing children of Q-nodes. reduce(S) restricts the represented set to
// orderings where S is consecutive, restructuring with the classic templates
// (P1-P6, Q1-Q3), or reports that no such ordering exists.
//
// Storage is an index arena with intrusive child lists and eager parent
// pointers. Pertinent nodes are found by a lockstep climb from the leaves of
// S that stops early once all climbers have merged, so a reduction touches
// the pertinent subtree plus a bounded overshoot above it, not the whole
// tree. Per-reduction scratch (labels, pertinent-children lists, node
// aliases, orientation bits) is epoch-stamped, never cleared wholesale.
// Deleted nodes are tombstoned; ids are not reused.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irex {

class PQTree {
 public:
  enum class Type : std::uint8_t { Leaf, P, Q };

  // Tree with a single P-node over n leaves: all n! orderings.
  static PQTree universal(int n) {
    if (n < 0) throw std::invalid_argument("universal: negative n");
    PQTree t;
    t.n_ = n;
    t.leaf_of_.resize(n);
    if (n == 0) return t;
    if (n == 1) {
      t.root_ = t.new_leaf(0);
      return t;
    }
    t.root_ = t.new_node(Type::P);
    for (int e = 0; e < n; ++e) t.link_back(t.root_, t.new_leaf(e));
    return t;
  }

  int n() const { return n_; }
  int root() const { return root_; }
  bool valid() const { return !poisoned_; }
  // Upper bound (exclusive) on node ids; ids of deleted nodes are not reused.
  int arena_size() const { return int(nodes_.size()); }

  Type type(int v) const { return at(v).type; }
  int parent(int v) const { return at(v).parent; }
  int child_count(int v) const { return at(v).child_count; }
  int first_child(int v) const { return at(v).first_child; }
  int last_child(int v) const { return at(v).last_child; }
  int next_sibling(int v) const { return at(v).next_sib; }
  int prev_sibling(int v) const { return at(v).prev_sib; }
  int leaf_node(int element) const {
    if (element < 0 || element >= n_) throw std::out_of_range("leaf_node");
    return leaf_of_[element];
  }
  int leaf_element(int v) const {
    if (at(v).type != Type::Leaf) throw std::invalid_argument("leaf_element: not a leaf");
    return at(v).element;
  }

  std::vector<int> children(int v) const {
    std::vector<int> out;
    out.reserve(at(v).child_count);
    for (int c = at(v).first_child; c != -1; c = nodes_[c].next_sib) out.push_back(c);
    return out;
  }

  // Restricts the tree to orderings where the elements of S are consecutive.
  // Returns false when impossible; the tree is then invalid and only
  // copy/assign may be used afterwards.
  bool reduce(const std::vector<int>& S) {
    require_valid();
    for (int e : S)
      if (e < 0 || e >= n_) throw std::invalid_argument("reduce: element out of range");
    if (int(S.size()) <= 1) {
      // Still reject duplicates-by-definition: a size<=1 set is always consecutive.
      return true;
    }
    bump_epoch();
    pedge_c_.clear();
    pedge_p_.clear();
    pparents_.clear();

    // Phase A: lockstep climb from the pertinent leaves. Each walker steps
    // one edge per round; stepping onto an already-stamped node merges the
    // walker into that path and kills it. Once a single walker remains, its
    // position is a common ancestor of all pertinent leaves, every touched
    // node lies on a stamped chain below it, and each step was recorded as a
    // (child -> parent) pertinence edge. Lockstep keeps the overshoot above
    // the least common ancestor no larger than the deepest climb below it.
    std::vector<int>*active = &walk_a_, *next = &walk_b_;
    active->clear();
    active->reserve(S.size());
    for (int e : S) {
      int leaf = leaf_of_[e];
      if (scratch_[leaf].stamp == epoch_) throw std::invalid_argument("reduce: duplicate element");
      touch(leaf);
      active->push_back(leaf);
    }
    int remaining = int(active->size());
    while (remaining > 1) {
      next->clear();
      std::size_t i = 0;
      for (; i < active->size() && remaining > 1; ++i) {
        int w = (*active)[i];
        int p = nodes_[w].parent;
        if (p == -1) {
          next->push_back(w);  // waiting at the tree root; others merge into it
          continue;
        }
        record_pert_edge(w, p);
        if (scratch_[p].stamp == epoch_) {
          --remaining;
        } else {
          touch(p);
          next->push_back(p);
        }
      }
      for (; i < active->size(); ++i) next->push_back((*active)[i]);
      std::swap(active, next);
    }
    int survivor = active->front();
    pack_pert_edges();

    // Nodes strictly above the least common ancestor of the pertinent leaves
    // were reached by a single walker, so they have exactly one recorded
    // pertinent child; the LCA itself has at least two. Descend accordingly.
    int pert_root = survivor;
    while (pert_children(pert_root).size() == 1)
      pert_root = pert_children(pert_root)[0];

    // Phase B: apply templates bottom-up over the pertinent subtree.
    if (!apply_templates(pert_root)) {
      poisoned_ = true;
      return false;
    }
    return true;
  }

  // Leaf elements left to right.
  std::vector<int> frontier() const {
    require_valid();
    std::vector<int> out;
    out.reserve(n_);
    if (root_ == -1) return out;
    std::vector<int> stack{root_};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (nodes_[v].type == Type::Leaf) {
        out.push_back(nodes_[v].element);
        continue;
      }
      // push children reversed so the first child is processed first
      for (int c = nodes_[v].last_child; c != -1; c = nodes_[c].prev_sib)
        stack.push_back(c);
    }
    return out;
  }

  // All frontiers of equivalent trees, or nullopt if more than `limit`.
  std::optional<std::vector<std::vector<int>>> enumerate_orderings(std::size_t limit) const {
    require_valid();
    if (root_ == -1) return std::vector<std::vector<int>>{{}};
    std::vector<std::vector<int>> out;
    if (!enum_node(root_, limit, out)) return std::nullopt;
    return out;
  }

  // True when `order` is a frontier of some equivalent tree, i.e. every
  // reduction applied so far keeps its set consecutive in `order`.
  bool admits(const std::vector<int>& order) const {
    require_valid();
    if (int(order.size()) != n_) return false;
    std::vector<int> pos(n_, -1);
    for (int i = 0; i < int(order.size()); ++i) {
      if (order[i] < 0 || order[i] >= n_ || pos[order[i]] != -1) return false;
      pos[order[i]] = i;
    }
    if (root_ == -1) return true;
    return admits_node(root_, pos).has_value();
  }

  // Bracket form: P-node children in parentheses, Q-node children in square
  // brackets, leaves as element ids (or names when given).
  std::string to_bracket() const { return to_bracket(nullptr); }
  std::string to_bracket(const std::vector<std::string>& names) const {
    if (int(names.size()) != n_) throw std::invalid_argument("to_bracket: names size");
    return to_bracket(&names);
  }

  // Parses the bracket form. Leaf tokens are either all decimal ids or all
  // single letters a,b,... (mapped to 0,1,...). The leaf set must be exactly
  // 0..n-1. Returns nullopt on malformed input.
  static std::optional<PQTree> from_bracket(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : text) {
      if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
        if (!cur.empty()) toks.push_back(cur), cur.clear();
        toks.push_back(std::string(1, ch));
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) toks.push_back(cur), cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) toks.push_back(cur);
    if (toks.empty()) return std::nullopt;
    if (toks.size() == 2 && toks[0] == "(" && toks[1] == ")") return universal(0);
    PQTree t;
    std::size_t pos = 0;
    std::vector<int> elems;
    int root = t.parse_bracket(toks, pos, elems);
    if (root == -2 || pos != toks.size()) return std::nullopt;
    t.root_ = root;
    t.n_ = int(elems.size());
    std::vector<int> seen(t.n_, 0);
    t.leaf_of_.assign(t.n_, -1);
    for (int v = 0; v < int(t.nodes_.size()); ++v) {
      if (!t.nodes_[v].alive || t.nodes_[v].type != Type::Leaf) continue;
      int e = t.nodes_[v].element;
      if (e < 0 || e >= t.n_ || seen[e]++) return std::nullopt;
      t.leaf_of_[e] = v;
    }
    std::string why;
    if (!t.validate(&why)) return std::nullopt;
    return t;
  }

  // Structural invariants: reachability, link symmetry, child counts,
  // node degrees (P and Q need at least two children), leaf bijection.
  bool validate(std::string* why = nullptr) const {
    auto fail = [&](const std::string& msg) {
      if (why) *why = msg;
      return false;
    };
    if (poisoned_) return fail("tree was invalidated by a failed reduction");
    if (n_ == 0) return root_ == -1 ? true : fail("empty tree must have no root");
    if (root_ == -1 || !nodes_[root_].alive) return fail("missing root");
    if (nodes_[root_].parent != -1) return fail("root has a parent");
    std::vector<bool> seen_node(nodes_.size(), false);
    std::vector<int> seen_elem(n_, 0);
    std::vector<int> stack{root_};
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (seen_node[v]) return fail("node reached twice");
      seen_node[v] = true;
      ++reached;
      const Node& nd = nodes_[v];
      if (!nd.alive) return fail("reached a deleted node");
      if (nd.type == Type::Leaf) {
        if (nd.child_count != 0 || nd.first_child != -1) return fail("leaf with children");
        if (nd.element < 0 || nd.element >= n_) return fail("leaf element out of range");
        if (seen_elem[nd.element]++) return fail("duplicate leaf element");
        if (leaf_of_[nd.element] != v) return fail("leaf index out of date");
        continue;
      }
      if (nd.child_count < 2) return fail("internal node with fewer than two children");
      int cnt = 0, prev = -1;
      for (int c = nd.first_child; c != -1; c = nodes_[c].next_sib) {
        if (nodes_[c].parent != v) return fail("child with wrong parent");
        if (nodes_[c].prev_sib != prev) return fail("broken sibling links");
        prev = c;
        ++cnt;
        stack.push_back(c);
      }
      if (prev != nd.last_child) return fail("last_child out of date");
      if (cnt != nd.child_count) return fail("child_count out of date");
    }
    int alive = 0;
    for (const Node& nd : nodes_) alive += nd.alive ? 1 : 0;
    if (alive != reached) return fail("unreachable live nodes");
    for (int e = 0; e < n_; ++e)
      if (!seen_elem[e]) return fail("missing leaf element");
    return true;
  }

  // Reorders the children of v; `order` must be a permutation of them.
  // For Q-nodes only the current order and its reversal are allowed.
  void set_children_order(int v, const std::vector<int>& order) {
    require_valid();
    Node& nd = at(v);
    if (nd.type == Type::Leaf) throw std::invalid_argument("set_children_order: leaf");
    if (int(order.size()) != nd.child_count)
      throw std::invalid_argument("set_children_order: wrong arity");
    auto cur = children(v);
    auto sorted_cur = cur, sorted_new = order;
    std::sort(sorted_cur.begin(), sorted_cur.end());
    std::sort(sorted_new.begin(), sorted_new.end());
    if (sorted_cur != sorted_new)
      throw std::invalid_argument("set_children_order: not a permutation of the children");
    if (nd.type == Type::Q && order != cur) {
      auto rev = cur;
      std::reverse(rev.begin(), rev.end());
      if (order != rev)
        throw std::invalid_argument("set_children_order: Q-node children may only be reversed");
    }
    relink_children(v, order);
  }

  void reverse_children(int v) {
    require_valid();
    if (at(v).type == Type::Leaf) throw std::invalid_argument("reverse_children: leaf");
    auto cur = children(v);
    std::reverse(cur.begin(), cur.end());
    relink_children(v, cur);
  }

 private:
  struct Node {
    Type type = Type::Leaf;
    bool alive = true;
    int parent = -1;
    int first_child = -1;
    int last_child = -1;
    int prev_sib = -1;
    int next_sib = -1;
    int child_count = 0;
    int element = -1;
  };

  enum class Label : std::uint8_t { Empty, Full, Partial };

  int n_ = 0;
  int root_ = -1;
  bool poisoned_ = false;
  std::vector<Node> nodes_;
  std::vector<int> leaf_of_;

  // Epoch-stamped per-reduction scratch, indexed by node id. Packed into one
  // record per node so a touched node costs one cache line, not several.
  struct Scratch {
    std::uint32_t stamp = 0;       // touched this reduction
    std::uint32_t mark_stamp = 0;  // local block marks (Q templates)
    std::uint32_t alias_stamp = 0;
    std::uint32_t pc_stamp = 0;
    int mark_orig = -1;            // original pert-child id behind a mark
    int alias = -1;                // node now occupying this node's place
    Label label = Label::Empty;    // keyed by original pert-child id
    std::uint8_t full_at_back = 0; // orientation of Partial nodes
    int pc_cnt = 0;                // pertinent children: count and slab start
    int pc_off = 0;
  };
  std::uint32_t epoch_ = 0;
  std::vector<Scratch> scratch_;
  // Pertinent-children storage for the current reduction: Phase A records
  // flat (child, parent) edges, then one stable counting-sort scatter packs
  // them into pert_dat_ slabs addressed via Scratch::pc_off / pc_cnt. Flat
  // slabs, not per-node vectors, so walking them doesn't chase heap pointers.
  std::vector<int> pedge_c_, pedge_p_, pparents_, pert_dat_;

  // Reusable hot-path buffers (cleared per use; capacity persists). None of
  // these are per-node, so node creation cannot invalidate them, and the
  // template routines never nest.
  std::vector<int> walk_a_, walk_b_, post_stack_, post_, fulls_, partials_,
      qs_block_, seq_;
  std::vector<Label> qs_label_;

  const Node& at(int v) const {
    if (v < 0 || v >= int(nodes_.size()) || !nodes_[v].alive)
      throw std::out_of_range("bad node id");
    return nodes_[v];
  }
  Node& at(int v) { return const_cast<Node&>(static_cast<const PQTree*>(this)->at(v)); }

  void require_valid() const {
    if (poisoned_) throw std::logic_error("PQ-tree invalidated by a failed reduction");
  }

  int new_node(Type t) {
    nodes_.push_back({});
    nodes_.back().type = t;
    grow_scratch();
    return int(nodes_.size()) - 1;
  }
  int new_leaf(int element) {
    int v = new_node(Type::Leaf);
    nodes_[v].element = element;
    leaf_of_[element] = v;
    return v;
  }
  void grow_scratch() {
    scratch_.emplace_back();
  }
  void bump_epoch() { ++epoch_; }
  void touch(int v) { scratch_[v].stamp = epoch_; }
  void record_pert_edge(int child, int parent) {
    pedge_c_.push_back(child);
    pedge_p_.push_back(parent);
    Scratch& s = scratch_[parent];
    if (s.pc_stamp != epoch_) {
      s.pc_stamp = epoch_;
      s.pc_cnt = 0;
      pparents_.push_back(parent);
    }
    ++s.pc_cnt;
  }
  // Packs the recorded edges into per-parent slabs; per-parent child order is
  // the recording order (the scatter is stable).
  void pack_pert_edges() {
    int off = 0;
    for (int p : pparents_) {
      scratch_[p].pc_off = off;
      off += scratch_[p].pc_cnt;
    }
    pert_dat_.resize(off);
    for (std::size_t i = 0; i < pedge_c_.size(); ++i)
      pert_dat_[scratch_[pedge_p_[i]].pc_off++] = pedge_c_[i];
    for (int p : pparents_) scratch_[p].pc_off -= scratch_[p].pc_cnt;
  }
  std::span<const int> pert_children(int v) const {
    const Scratch& s = scratch_[v];
    if (s.pc_stamp != epoch_) return {};
    return {pert_dat_.data() + s.pc_off, std::size_t(s.pc_cnt)};
  }
  int alias_or_self(int v) const { return scratch_[v].alias_stamp == epoch_ ? scratch_[v].alias : v; }
  void set_alias(int orig, int now) {
    scratch_[orig].alias_stamp = epoch_;
    scratch_[orig].alias = now;
  }

  void tombstone(int v) { nodes_[v].alive = false; }

  void link_back(int p, int c) {
    Node& pn = nodes_[p];
    Node& cn = nodes_[c];
    cn.parent = p;
    cn.prev_sib = pn.last_child;
    cn.next_sib = -1;
    if (pn.last_child != -1)
      nodes_[pn.last_child].next_sib = c;
    else
      pn.first_child = c;
    pn.last_child = c;
    ++pn.child_count;
  }
  void link_front(int p, int c) {
    Node& pn = nodes_[p];
    Node& cn = nodes_[c];
    cn.parent = p;
    cn.next_sib = pn.first_child;
    cn.prev_sib = -1;
    if (pn.first_child != -1)
      nodes_[pn.first_child].prev_sib = c;
    else
      pn.last_child = c;
    pn.first_child = c;
    ++pn.child_count;
  }
  void unlink(int c) {
    Node& cn = nodes_[c];
    Node& pn = nodes_[cn.parent];
    if (cn.prev_sib != -1)
      nodes_[cn.prev_sib].next_sib = cn.next_sib;
    else
      pn.first_child = cn.next_sib;
    if (cn.next_sib != -1)
      nodes_[cn.next_sib].prev_sib = cn.prev_sib;
    else
      pn.last_child = cn.prev_sib;
    --pn.child_count;
    cn.parent = cn.prev_sib = cn.next_sib = -1;
  }

  // `now` takes over `was`'s position among its siblings (or as root).
  void replace_node(int was, int now) {
    Node& w = nodes_[was];
    Node& m = nodes_[now];
    m.parent = w.parent;
    m.prev_sib = w.prev_sib;
    m.next_sib = w.next_sib;
    if (w.prev_sib != -1)
      nodes_[w.prev_sib].next_sib = now;
    else if (w.parent != -1)
      nodes_[w.parent].first_child = now;
    if (w.next_sib != -1)
      nodes_[w.next_sib].prev_sib = now;
    else if (w.parent != -1)
      nodes_[w.parent].last_child = now;
    if (root_ == was) root_ = now;
    w.parent = w.prev_sib = w.next_sib = -1;
  }

  // Replaces child y of x by y's own children, reversed when `flip`.
  void splice_child(int x, int y, bool flip) {
    std::vector<int> seq;
    seq.reserve(nodes_[y].child_count);
    for (int c = nodes_[y].first_child; c != -1; c = nodes_[c].next_sib) seq.push_back(c);
    if (flip) std::reverse(seq.begin(), seq.end());
    int L = nodes_[y].prev_sib, R = nodes_[y].next_sib;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      Node& cn = nodes_[seq[i]];
      cn.parent = x;
      cn.prev_sib = i == 0 ? L : seq[i - 1];
      cn.next_sib = i + 1 == seq.size() ? R : seq[i + 1];
    }
    if (L != -1)
      nodes_[L].next_sib = seq.front();
    else
      nodes_[x].first_child = seq.front();
    if (R != -1)
      nodes_[R].prev_sib = seq.back();
    else
      nodes_[x].last_child = seq.back();
    nodes_[x].child_count += int(seq.size()) - 1;
    tombstone(y);
  }

  void relink_children(int v, const std::vector<int>& order) {
    Node& nd = nodes_[v];
    nd.first_child = order.front();
    nd.last_child = order.back();
    for (std::size_t i = 0; i < order.size(); ++i) {
      Node& cn = nodes_[order[i]];
      cn.prev_sib = i == 0 ? -1 : order[i - 1];
      cn.next_sib = i + 1 == order.size() ? -1 : order[i + 1];
    }
  }

  // ---- template machinery ----------------------------------------------

  bool apply_templates(int pert_root) {
    // Postorder over the pertinent subtree.
    post_stack_.clear();
    post_.clear();
    post_stack_.push_back(pert_root);
    while (!post_stack_.empty()) {
      int v = post_stack_.back();
      post_stack_.pop_back();
      post_.push_back(v);
      for (int c : pert_children(v)) post_stack_.push_back(c);
    }
    for (auto it = post_.rbegin(); it != post_.rend(); ++it)
      if (!apply_one(*it, *it == pert_root)) return false;
    return true;
  }

  bool apply_one(int x, bool is_root) {
    Node& nd = nodes_[x];
    if (nd.type == Type::Leaf) {
      scratch_[x].label = Label::Full;
      return true;
    }
    auto pc = pert_children(x);
    fulls_.clear();
    partials_.clear();
    for (int c : pc) {
      if (scratch_[c].label == Label::Full)
        fulls_.push_back(alias_or_self(c));
      else
        partials_.push_back(c);  // original id: label/orientation live here
    }
    int ec = nd.child_count - int(pc.size());

    if (nd.type == Type::P)
      return is_root ? p_root(x, fulls_, partials_, ec) : p_inner(x, fulls_, partials_, ec);
    return is_root ? q_root(x, pc, partials_.size()) : q_inner(x, pc, partials_.size());
  }

  // Groups nodes under a fresh P-node when there are two or more; returns
  // -1 for none, the node itself for one.
  int group_under_p(const std::vector<int>& members) {
    if (members.empty()) return -1;
    if (members.size() == 1) {
      unlink(members[0]);
      return members[0];
    }
    for (int c : members) unlink(c);
    int g = new_node(Type::P);
    for (int c : members) link_back(g, c);
    return g;
  }

  bool p_inner(int x, const std::vector<int>& fulls, const std::vector<int>& partials, int ec) {
    if (partials.size() >= 2) return false;
    if (partials.empty()) {
      if (ec == 0) {  // P1
        scratch_[x].label = Label::Full;
        return true;
      }
      // P3: x splits into a two-sided Q-node; x itself keeps the empty
      // children so they are never re-linked.
      int f = group_under_p(fulls);
      int z = new_node(Type::Q);
      replace_node(x, z);
      int e_side;
      if (ec == 1) {
        e_side = nodes_[x].first_child;
        unlink(e_side);
        tombstone(x);
      } else {
        e_side = x;
      }
      link_back(z, e_side);
      link_back(z, f);
      set_alias(x, z);
      scratch_[x].label = Label::Partial;
      scratch_[x].full_at_back = 1;
      return true;
    }
    // P5: the single partial child absorbs the rest and takes x's place.
    int y_orig = partials[0];
    int y = alias_or_self(y_orig);
    bool y_full_back = scratch_[y_orig].full_at_back != 0;
    unlink(y);
    int f = group_under_p(fulls);
    replace_node(x, y);
    if (f != -1) {
      if (y_full_back)
        link_back(y, f);
      else
        link_front(y, f);
    }
    if (ec == 1) {
      int e = nodes_[x].first_child;
      unlink(e);
      tombstone(x);
      if (y_full_back)
        link_front(y, e);
      else
        link_back(y, e);
    } else if (ec >= 2) {
      if (y_full_back)
        link_front(y, x);
      else
        link_back(y, x);
    } else {
      tombstone(x);
    }
    set_alias(x, y);
    scratch_[x].label = Label::Partial;
    scratch_[x].full_at_back = y_full_back ? 1 : 0;
    return true;
  }

  bool p_root(int x, const std::vector<int>& fulls, const std::vector<int>& partials, int ec) {
    if (partials.size() >= 3) return false;
    if (partials.empty()) {  // P1 / P2
      if (ec == 0 || fulls.size() <= 1) return true;
      int f = group_under_p(fulls);
      link_back(x, f);
      return true;
    }
    if (partials.size() == 1) {  // P4
      int y_orig = partials[0];
      int y = alias_or_self(y_orig);
      bool y_full_back = scratch_[y_orig].full_at_back != 0;
      int f = group_under_p(fulls);
      if (f != -1) {
        if (y_full_back)
          link_back(y, f);
        else
          link_front(y, f);
      }
      if (nodes_[x].child_count == 1) {
        unlink(y);
        replace_node(x, y);
        tombstone(x);
      }
      return true;
    }
    // P6: merge the two partial children end to end, full sides inward.
    int y1_orig = partials[0], y2_orig = partials[1];
    int y1 = alias_or_self(y1_orig), y2 = alias_or_self(y2_orig);
    bool b1 = scratch_[y1_orig].full_at_back != 0, b2 = scratch_[y2_orig].full_at_back != 0;
    int f = group_under_p(fulls);
    if (f != -1) {
      if (b1)
        link_back(y1, f);
      else
        link_front(y1, f);
    }
    // Append y2's children onto y1's full end, y2's full side first.
    seq_.clear();
    seq_.reserve(nodes_[y2].child_count);
    for (int c = nodes_[y2].first_child; c != -1; c = nodes_[c].next_sib) seq_.push_back(c);
    if (b1 == b2) std::reverse(seq_.begin(), seq_.end());
    // now seq_ starts with y2's full side when appending at y1's back, and
    // ends with it when prepending at y1's front
    unlink(y2);
    tombstone(y2);
    if (b1) {
      for (int c : seq_) link_back(y1, c);
    } else {
      for (auto it = seq_.rbegin(); it != seq_.rend(); ++it) link_front(y1, *it);
    }
    if (nodes_[x].child_count == 1) {
      unlink(y1);
      replace_node(x, y1);
      tombstone(x);
    }
    return true;
  }

  struct QScan {
    bool ok = false;
    bool at_front = false;  // block touches first child
    bool at_back = false;   // block touches last child
  };

  // Locates the pertinent children of Q-node x as one contiguous block of
  // siblings; empty children are never visited. The block (resolved ids,
  // left to right) and its parallel labels land in qs_block_ / qs_label_.
  QScan q_scan(int x, std::span<const int> pc) {
    QScan s;
    qs_block_.clear();
    qs_label_.clear();
    for (int c : pc) {
      int r = alias_or_self(c);
      scratch_[r].mark_stamp = epoch_;
      scratch_[r].mark_orig = c;
    }
    int l = alias_or_self(pc[0]);
    while (nodes_[l].prev_sib != -1 && scratch_[nodes_[l].prev_sib].mark_stamp == epoch_)
      l = nodes_[l].prev_sib;
    std::size_t seen = 0;
    for (int c = l; c != -1 && scratch_[c].mark_stamp == epoch_; c = nodes_[c].next_sib) {
      qs_block_.push_back(c);
      qs_label_.push_back(scratch_[scratch_[c].mark_orig].label);
      ++seen;
    }
    if (seen != pc.size()) return s;  // not contiguous
    s.at_front = nodes_[qs_block_.front()].prev_sib == -1;
    s.at_back = nodes_[qs_block_.back()].next_sib == -1;
    s.ok = true;
    return s;
  }

  // Splices partial child `r` (resolved id) of x so that its full side faces
  // `full_side_back ? rightward : leftward`... orientation given by whether
  // the full side must end up toward the back of x.
  void splice_oriented(int x, int r, bool want_full_back) {
    bool has_full_back = scratch_[scratch_[r].mark_orig].full_at_back != 0;
    splice_child(x, r, has_full_back != want_full_back);
  }

  bool q_inner(int x, std::span<const int> pc, std::size_t n_partial) {
    if (n_partial > 1) return false;
    QScan s = q_scan(x, pc);
    if (!s.ok) return false;
    const std::size_t b = qs_block_.size();
    // Identify where the partial child sits (if any): must be at one block
    // end; everything else in the block must be full.
    int partial_pos = -1;
    for (std::size_t i = 0; i < b; ++i)
      if (qs_label_[i] == Label::Partial) partial_pos = int(i);
    if (partial_pos != -1 && partial_pos != 0 && partial_pos + 1 != int(b)) return false;

    if (s.at_front && s.at_back) {  // no empty children
      if (partial_pos == -1) {  // Q1
        scratch_[x].label = Label::Full;
        return true;
      }
      bool partial_at_left = partial_pos == 0;
      // full block sits opposite the partial child
      splice_oriented(x, qs_block_[partial_pos], partial_at_left);
      scratch_[x].label = Label::Partial;
      scratch_[x].full_at_back = partial_at_left ? 1 : 0;
      return true;
    }

    // Q2 with empty children: the block must reach exactly one end, with the
    // partial child (if any) on the inner side of the block.
    bool block_at_back = s.at_back;
    if (!s.at_front && !s.at_back) return false;
    if (block_at_back) {
      if (partial_pos == int(b) - 1 && b > 1) return false;
      if (partial_pos > 0) return false;
    } else {
      if (partial_pos == 0 && b > 1) return false;
      if (partial_pos != -1 && partial_pos + 1 != int(b)) return false;
    }
    if (partial_pos != -1)
      splice_oriented(x, qs_block_[partial_pos], block_at_back);
    scratch_[x].label = Label::Partial;
    scratch_[x].full_at_back = block_at_back ? 1 : 0;
    return true;
  }

  bool q_root(int x, std::span<const int> pc, std::size_t n_partial) {
    if (n_partial > 2) return false;
    QScan s = q_scan(x, pc);
    if (!s.ok) return false;
    const std::size_t b = qs_block_.size();
    for (std::size_t i = 0; i < b; ++i) {
      if (qs_label_[i] != Label::Partial) continue;
      if (i != 0 && i + 1 != b) return false;  // partial child inside the block
    }
    // Splice the end partials, full sides pointing into the block. A lone
    // partial block member may face either way.
    if (b == 1) {
      if (qs_label_.front() == Label::Partial)
        splice_oriented(x, qs_block_.front(), true);
      return true;
    }
    if (qs_label_.front() == Label::Partial)
      splice_oriented(x, qs_block_.front(), true);
    if (qs_label_.back() == Label::Partial)
      splice_oriented(x, qs_block_.back(), false);
    return true;
  }

  // ---- enumeration / bracket I/O ----------------------------------------

  bool enum_node(int v, std::size_t limit, std::vector<std::vector<int>>& out) const {
    const Node& nd = nodes_[v];
    if (nd.type == Type::Leaf) {
      out = {{nd.element}};
      return true;
    }
    auto kids = children(v);
    std::vector<std::vector<std::vector<int>>> per_child(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i)
      if (!enum_node(kids[i], limit, per_child[i])) return false;

    std::vector<std::vector<std::size_t>> child_orders;
    if (nd.type == Type::P) {
      std::vector<std::size_t> idx(kids.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      do {
        child_orders.push_back(idx);
      } while (std::next_permutation(idx.begin(), idx.end()) &&
               child_orders.size() <= limit);
      if (child_orders.size() > limit) return false;
    } else {
      std::vector<std::size_t> fwd(kids.size()), rev(kids.size());
      for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = i, rev[i] = kids.size() - 1 - i;
      child_orders = {fwd, rev};
    }

    out.clear();
    for (const auto& co : child_orders) {
      // cartesian product over the chosen child order
      std::vector<std::size_t> pick(kids.size(), 0);
      while (true) {
        std::vector<int> seq;
        for (std::size_t i = 0; i < co.size(); ++i) {
          const auto& part = per_child[co[i]][pick[co[i]]];
          seq.insert(seq.end(), part.begin(), part.end());
        }
        out.push_back(std::move(seq));
        if (out.size() > limit) return false;
        std::size_t j = 0;
        for (; j < kids.size(); ++j) {
          if (++pick[j] < per_child[j].size()) break;
          pick[j] = 0;
        }
        if (j == kids.size()) break;
      }
    }
    return true;
  }

  // Returns the [lo,hi) span of node v in `pos` order if v's subtree occupies
  // consecutive positions (in some equivalent ordering), nullopt otherwise.
  std::optional<std::pair<int, int>> admits_node(int v, const std::vector<int>& pos) const {
    const Node& nd = nodes_[v];
    if (nd.type == Type::Leaf) {
      int p = pos[nd.element];
      return std::make_pair(p, p + 1);
    }
    std::vector<std::pair<int, int>> spans;
    for (int c = nd.first_child; c != -1; c = nodes_[c].next_sib) {
      auto s = admits_node(c, pos);
      if (!s) return std::nullopt;
      spans.push_back(*s);
    }
    if (nd.type == Type::Q) {
      bool fwd = std::is_sorted(spans.begin(), spans.end());
      bool bwd = std::is_sorted(spans.rbegin(), spans.rend());
      if (!fwd && !bwd) return std::nullopt;
    }
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i)
      if (spans[i].first != spans[i - 1].second) return std::nullopt;
    return std::make_pair(spans.front().first, spans.back().second);
  }

  void bracket_rec(int v, const std::vector<std::string>* names, std::string& out) const {
    const Node& nd = nodes_[v];
    if (nd.type == Type::Leaf) {
      out += names ? (*names)[nd.element] : std::to_string(nd.element);
      return;
    }
    out += nd.type == Type::P ? '(' : '[';
    bool first = true;
    for (int c = nd.first_child; c != -1; c = nodes_[c].next_sib) {
      if (!first) out += ' ';
      first = false;
      bracket_rec(c, names, out);
    }
    out += nd.type == Type::P ? ')' : ']';
  }

  std::string to_bracket(const std::vector<std::string>* names) const {
    require_valid();
    if (root_ == -1) return "()";
    std::string out;
    bracket_rec(root_, names, out);
    return out;
  }

  // Returns node id, or -2 on parse failure.
  int parse_bracket(const std::vector<std::string>& toks, std::size_t& pos,
                    std::vector<int>& elems) {
    if (pos >= toks.size()) return -2;
    const std::string& t = toks[pos];
    if (t == "(" || t == "[") {
      Type ty = t == "(" ? Type::P : Type::Q;
      const std::string close = t == "(" ? ")" : "]";
      ++pos;
      int v = new_node(ty);
      while (pos < toks.size() && toks[pos] != ")" && toks[pos] != "]") {
        int c = parse_bracket(toks, pos, elems);
        if (c == -2) return -2;
        link_back(v, c);
      }
      if (pos >= toks.size() || toks[pos] != close) return -2;
      ++pos;
      if (nodes_[v].child_count < 2) return -2;
      return v;
    }
    if (t == ")" || t == "]") return -2;
    ++pos;
    int e = -1;
    if (t.size() == 1 && std::islower(static_cast<unsigned char>(t[0])) &&
        !std::isdigit(static_cast<unsigned char>(t[0]))) {
      e = t[0] - 'a';
    } else {
      try {
        std::size_t used = 0;
        e = std::stoi(t, &used);
        if (used != t.size() || e < 0) return -2;
      } catch (...) {
        return -2;
      }
    }
    elems.push_back(e);
    int v = new_node(Type::Leaf);
    nodes_[v].element = e;
    return v;
  }
};

}  // namespace irex
