#pragma once
#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphknit/errors.hpp"
#include "graphknit/graph.hpp"

namespace graphknit {

// One edge record of a DFS code: timestamps of both endpoints plus node and
// edge labels. Forward edges have t_u < t_v, backward edges t_u > t_v.
struct FiveTuple {
  int t_u = 0;
  int t_v = 0;
  int l_u = 0;
  int l_e = 0;
  int l_v = 0;

  bool forward() const { return t_u < t_v; }
  bool operator==(const FiveTuple&) const = default;
};

using DfsCode = std::vector<FiveTuple>;

// gSpan edge order. At matching positions of two equal-prefix codes this
// reduces to: backward edges sort before forward ones, backward targets
// ascend, forward sources descend (deeper extension first), then labels
// ascend. Returns <0, 0, >0.
inline int tuple_compare(const FiveTuple& a, const FiveTuple& b) {
  const bool af = a.forward();
  const bool bf = b.forward();
  if (af != bf) {
    if (!af) return a.t_u < b.t_v ? -1 : 1;  // a backward, b forward
    return a.t_v <= b.t_u ? -1 : 1;          // a forward, b backward
  }
  if (af) {
    if (a.t_v != b.t_v) return a.t_v < b.t_v ? -1 : 1;
    if (a.t_u != b.t_u) return a.t_u > b.t_u ? -1 : 1;
  } else {
    if (a.t_u != b.t_u) return a.t_u < b.t_u ? -1 : 1;
    if (a.t_v != b.t_v) return a.t_v < b.t_v ? -1 : 1;
  }
  if (a.l_u != b.l_u) return a.l_u < b.l_u ? -1 : 1;
  if (a.l_e != b.l_e) return a.l_e < b.l_e ? -1 : 1;
  if (a.l_v != b.l_v) return a.l_v < b.l_v ? -1 : 1;
  return 0;
}

// Total order on codes: tuple-by-tuple, shorter code wins on equal prefix.
inline int dfs_code_compare(const DfsCode& a, const DfsCode& b) {
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (int c = tuple_compare(a[i], b[i]); c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

struct EncodeResult {
  DfsCode code;
  std::vector<int> node_to_timestamp;  // witness of the minimal traversal
};

namespace detail {

// Partial DFS traversal. `stack` is the chain of the DFS tree from the root
// to the newest node; exhausted tops are popped lazily.
struct TraversalState {
  std::vector<int> ts;      // node -> timestamp, -1 if undiscovered
  std::vector<int> order;   // timestamp -> node
  std::vector<int> stack;
  std::vector<char> used;   // edge id -> emitted
};

struct Move {
  FiveTuple tuple;
  int kind;  // 0 = backward (close edge `edge`), 1 = forward to `node` via `edge`
  int node = -1;
  int edge = -1;
};

// Adjacency annotated with edge ids into g.edges().
inline std::vector<std::vector<std::pair<int, int>>> adjacency_with_ids(
    const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(g.node_count()));
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& [u, v] = g.edges()[e];
    adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
    adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
  }
  return adj;
}

// All legal next emissions from a state. A just-discovered node first closes
// its backward edges in ascending target-timestamp order (one per step, so
// every state advances by exactly one tuple); only then may the traversal
// take a forward edge from the deepest unexhausted node on the stack.
inline std::vector<Move> next_moves(
    TraversalState& s, const std::vector<std::vector<std::pair<int, int>>>& adj,
    const std::vector<int>& node_labels, const std::vector<int>& edge_labels) {
  std::vector<Move> moves;
  const int cur = s.order.back();
  int best_w = -1, best_e = -1;
  for (const auto& [w, e] : adj[static_cast<std::size_t>(cur)]) {
    if (s.ts[static_cast<std::size_t>(w)] >= 0 && !s.used[static_cast<std::size_t>(e)]) {
      if (best_w < 0 || s.ts[static_cast<std::size_t>(w)] < s.ts[static_cast<std::size_t>(best_w)]) {
        best_w = w;
        best_e = e;
      }
    }
  }
  if (best_w >= 0) {
    Move m;
    m.kind = 0;
    m.node = best_w;
    m.edge = best_e;
    m.tuple = {s.ts[static_cast<std::size_t>(cur)], s.ts[static_cast<std::size_t>(best_w)],
               node_labels[static_cast<std::size_t>(cur)], edge_labels[static_cast<std::size_t>(best_e)],
               node_labels[static_cast<std::size_t>(best_w)]};
    moves.push_back(m);
    return moves;
  }
  while (!s.stack.empty()) {
    const int r = s.stack.back();
    bool any = false;
    for (const auto& [w, e] : adj[static_cast<std::size_t>(r)]) {
      if (s.ts[static_cast<std::size_t>(w)] < 0) {
        Move m;
        m.kind = 1;
        m.node = w;
        m.edge = e;
        m.tuple = {s.ts[static_cast<std::size_t>(r)], static_cast<int>(s.order.size()),
                   node_labels[static_cast<std::size_t>(r)], edge_labels[static_cast<std::size_t>(e)],
                   node_labels[static_cast<std::size_t>(w)]};
        moves.push_back(m);
        any = true;
      }
    }
    if (any) return moves;
    s.stack.pop_back();
  }
  return moves;  // traversal complete
}

inline TraversalState apply_move(const TraversalState& s, const Move& m) {
  TraversalState t = s;
  t.used[static_cast<std::size_t>(m.edge)] = 1;
  if (m.kind == 1) {
    t.ts[static_cast<std::size_t>(m.node)] = static_cast<int>(t.order.size());
    t.order.push_back(m.node);
    t.stack.push_back(m.node);
  }
  return t;
}

}  // namespace detail

// Minimum DFS code over all depth-first traversals from all start nodes,
// computed by synchronized branch-and-bound: every surviving state shares the
// emitted prefix, each level appends the smallest extension any state can
// produce and discards the rest. States are deduplicated by their timestamp
// assignment (which determines the DFS tree and the used edge set).
inline EncodeResult encode_min_dfs_labeled(const Graph& g,
                                           const std::vector<int>& node_labels,
                                           const std::vector<int>& edge_labels) {
  const int n = g.node_count();
  if (n < 2 || g.edge_count() == 0)
    throw ValidationError("encode_min_dfs: graph has no edges to encode");
  if (!is_connected(g))
    throw ValidationError("encode_min_dfs: graph is not connected");
  if (node_labels.size() != static_cast<std::size_t>(n) ||
      edge_labels.size() != g.edge_count())
    throw ValidationError("encode_min_dfs: label vector size mismatch");

  const auto adj = detail::adjacency_with_ids(g);
  const std::size_t m = g.edge_count();

  std::vector<detail::TraversalState> states;
  DfsCode code;
  {
    FiveTuple best{};
    bool have = false;
    for (int u = 0; u < n; ++u) {
      for (const auto& [v, e] : adj[static_cast<std::size_t>(u)]) {
        FiveTuple t{0, 1, node_labels[static_cast<std::size_t>(u)],
                    edge_labels[static_cast<std::size_t>(e)], node_labels[static_cast<std::size_t>(v)]};
        if (!have || tuple_compare(t, best) < 0) {
          best = t;
          have = true;
        }
      }
    }
    code.push_back(best);
    for (int u = 0; u < n; ++u) {
      for (const auto& [v, e] : adj[static_cast<std::size_t>(u)]) {
        FiveTuple t{0, 1, node_labels[static_cast<std::size_t>(u)],
                    edge_labels[static_cast<std::size_t>(e)], node_labels[static_cast<std::size_t>(v)]};
        if (tuple_compare(t, best) == 0) {
          detail::TraversalState s;
          s.ts.assign(static_cast<std::size_t>(n), -1);
          s.ts[static_cast<std::size_t>(u)] = 0;
          s.ts[static_cast<std::size_t>(v)] = 1;
          s.order = {u, v};
          s.stack = {u, v};
          s.used.assign(m, 0);
          s.used[static_cast<std::size_t>(e)] = 1;
          states.push_back(std::move(s));
        }
      }
    }
  }

  for (std::size_t level = 1; level < m; ++level) {
    std::vector<std::vector<detail::Move>> all_moves(states.size());
    const detail::Move* best = nullptr;
    for (std::size_t i = 0; i < states.size(); ++i) {
      all_moves[i] = detail::next_moves(states[i], adj, node_labels, edge_labels);
      for (const auto& mv : all_moves[i]) {
        if (!best || tuple_compare(mv.tuple, best->tuple) < 0) best = &mv;
      }
    }
    code.push_back(best->tuple);
    std::vector<detail::TraversalState> next;
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (const auto& mv : all_moves[i]) {
        if (tuple_compare(mv.tuple, best->tuple) != 0) continue;
        auto t = detail::apply_move(states[i], mv);
        if (seen.insert(t.ts).second) next.push_back(std::move(t));
      }
    }
    states = std::move(next);
  }

  EncodeResult result;
  result.code = std::move(code);
  result.node_to_timestamp = states.front().ts;
  return result;
}

// GraphTune labeling convention: node label = degree, edge label = 0.
inline EncodeResult encode_min_dfs_full(const Graph& g) {
  std::vector<int> nl(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) nl[static_cast<std::size_t>(v)] = g.degree(v);
  return encode_min_dfs_labeled(g, nl, std::vector<int>(g.edge_count(), 0));
}

inline DfsCode encode_min_dfs(const Graph& g) { return encode_min_dfs_full(g).code; }

// Strict reconstruction: tuples are applied in order, a forward tuple must
// introduce exactly the next timestamp, a backward tuple must close a new
// pair of existing timestamps. Labels are ignored (unlabeled pipeline).
inline Graph decode(const DfsCode& code) {
  if (code.empty()) throw ValidationError("decode: empty code");
  int m = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& t = code[i];
    const auto pos = std::to_string(i);
    if (t.t_u == t.t_v)
      throw ValidationError("decode: self-loop tuple at position " + pos);
    const int lo = std::min(t.t_u, t.t_v);
    const int hi = std::max(t.t_u, t.t_v);
    if (m == 0) {
      if (lo != 0 || hi != 1)
        throw ValidationError("decode: code must start with timestamps (0, 1)");
      m = 2;
    } else if (hi == m) {
      if (lo >= m)
        throw ValidationError("decode: dangling timestamps at position " + pos);
      ++m;
    } else if (hi < m) {
      if (std::find(edges.begin(), edges.end(), Edge{lo, hi}) != edges.end())
        throw ValidationError("decode: duplicate edge at position " + pos);
    } else {
      throw ValidationError("decode: timestamp " + std::to_string(hi) +
                            " skips ahead at position " + pos);
    }
    edges.emplace_back(lo, hi);
  }
  return Graph(m, std::move(edges));
}

// Lenient reconstruction for model output: skips tuples that self-loop,
// duplicate an existing timestamp pair, or reference a timestamp beyond the
// next constructible one. Surviving tuples are applied as in decode.
inline Graph repair_decode(const DfsCode& code) {
  int m = 0;
  std::vector<Edge> edges;
  for (const auto& t : code) {
    if (t.t_u == t.t_v) continue;
    const int lo = std::min(t.t_u, t.t_v);
    const int hi = std::max(t.t_u, t.t_v);
    if (m == 0) {
      if (lo == 0 && hi == 1) {
        edges.emplace_back(lo, hi);
        m = 2;
      }
      continue;
    }
    if (hi > m) continue;
    if (hi == m) {
      edges.emplace_back(lo, hi);
      ++m;
      continue;
    }
    if (std::find(edges.begin(), edges.end(), Edge{lo, hi}) == edges.end())
      edges.emplace_back(lo, hi);
  }
  if (edges.empty())
    throw EmptyGenerationError("repair_decode: no usable tuples in code");
  return Graph(m, std::move(edges));
}

// Component-wise one-hot alphabets. Sizes include one EOS slot each; the
// edge alphabet is {0, EOS=1}.
struct Vocabulary {
  int t_size = 0;
  int l_size = 0;
  int e_size = 2;

  int eos_t() const { return t_size - 1; }
  int eos_l() const { return l_size - 1; }
  static constexpr int eos_e() { return 1; }
  int width() const { return 2 * t_size + 2 * l_size + e_size; }

  // Block offsets in the order (t_u, t_v, L_u, L_e, L_v).
  int off_tu() const { return 0; }
  int off_tv() const { return t_size; }
  int off_lu() const { return 2 * t_size; }
  int off_le() const { return 2 * t_size + l_size; }
  int off_lv() const { return 2 * t_size + l_size + e_size; }

  // max_nodes: largest node count over the dataset; max_label: largest node
  // label (degree) over the dataset.
  static Vocabulary from_limits(int max_nodes, int max_label) {
    Vocabulary v;
    v.t_size = max_nodes + 1;
    v.l_size = max_label + 2;
    v.e_size = 2;
    return v;
  }

  bool operator==(const Vocabulary&) const = default;
};

struct OneHotSequence {
  int width = 0;
  std::vector<std::vector<double>> rows;  // one per tuple plus the EOS row
};

inline OneHotSequence to_one_hot(const DfsCode& code, const Vocabulary& vocab) {
  OneHotSequence seq;
  seq.width = vocab.width();
  seq.rows.reserve(code.size() + 1);
  auto emit = [&](int tu, int tv, int lu, int le, int lv) {
    std::vector<double> row(static_cast<std::size_t>(seq.width), 0.0);
    row[static_cast<std::size_t>(vocab.off_tu() + tu)] = 1.0;
    row[static_cast<std::size_t>(vocab.off_tv() + tv)] = 1.0;
    row[static_cast<std::size_t>(vocab.off_lu() + lu)] = 1.0;
    row[static_cast<std::size_t>(vocab.off_le() + le)] = 1.0;
    row[static_cast<std::size_t>(vocab.off_lv() + lv)] = 1.0;
    seq.rows.push_back(std::move(row));
  };
  for (const auto& t : code) {
    if (t.t_u >= vocab.eos_t() || t.t_v >= vocab.eos_t() || t.t_u < 0 || t.t_v < 0 ||
        t.l_u >= vocab.eos_l() || t.l_v >= vocab.eos_l() || t.l_u < 0 || t.l_v < 0 ||
        t.l_e != 0)
      throw VocabOverflowError(
          "to_one_hot: tuple component outside the dataset vocabulary");
    emit(t.t_u, t.t_v, t.l_u, t.l_e, t.l_v);
  }
  emit(vocab.eos_t(), vocab.eos_t(), vocab.eos_l(), Vocabulary::eos_e(), vocab.eos_l());
  return seq;
}

// Debug text form: one "t_u t_v l_u l_e l_v" line per tuple, then "EOS".
inline std::string dfs_code_to_text(const DfsCode& code) {
  std::ostringstream out;
  for (const auto& t : code)
    out << t.t_u << ' ' << t.t_v << ' ' << t.l_u << ' ' << t.l_e << ' ' << t.l_v << '\n';
  out << "EOS\n";
  return out.str();
}

inline DfsCode dfs_code_from_text(const std::string& text) {
  DfsCode code;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line == "EOS") break;
    std::istringstream ls(line);
    FiveTuple t;
    if (!(ls >> t.t_u >> t.t_v >> t.l_u >> t.l_e >> t.l_v))
      throw ParseError("dfs code line " + std::to_string(line_no) +
                       ": expected five integers or EOS");
    code.push_back(t);
  }
  return code;
}

}  // namespace graphknit
