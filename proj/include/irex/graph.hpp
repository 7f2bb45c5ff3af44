#pragma once
// Simple undirected graphs on dense vertex ids, plus the text loader.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irex {

class parse_error : public std::runtime_error {
 public:
  enum class Kind {
    MalformedLine,
    SelfLoop,
    DuplicateEdge,
    IdOutOfRange,
    BadRational,
    DuplicateVertex,
    UnsortedInput,
    BadHeader,
    BadInterval,
  };

  parse_error(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finish();
    return g;
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }

  // Sorts adjacency lists; must be called after the last add_edge.
  void finish() {
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
        throw std::invalid_argument("duplicate edge");
    }
  }

  int n() const { return int(adj_.size()); }
  std::size_t m() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = &nb == &adj_[u] ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace detail

// Format: first significant line "n m", then m lines "u v".
// '#' starts a comment; blank lines are skipped.
inline Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> seen;  // lazily sized below

  auto parse_two = [&](const std::string& text, long long& a, long long& b) {
    std::istringstream ss(text);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank_or_comment(line)) continue;
    std::string body = detail::strip_comment(line);
    long long a = 0, b = 0;
    if (!parse_two(body, a, b))
      throw parse_error(parse_error::Kind::MalformedLine, lineno,
                        "expected two integers, got '" + body + "'");
    if (!have_header) {
      if (a < 0 || b < 0)
        throw parse_error(parse_error::Kind::BadHeader, lineno,
                          "vertex/edge counts must be non-negative");
      n = int(a);
      m = std::size_t(b);
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw parse_error(parse_error::Kind::IdOutOfRange, lineno,
                        "vertex id out of range [0," + std::to_string(n) + ")");
    if (a == b)
      throw parse_error(parse_error::Kind::SelfLoop, lineno,
                        "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(int(a), int(b));
    if (edges.size() > m)
      throw parse_error(parse_error::Kind::BadHeader, lineno,
                        "more edges than declared");
  }
  if (!have_header)
    throw parse_error(parse_error::Kind::BadHeader, lineno, "missing 'n m' header");
  if (edges.size() != m)
    throw parse_error(parse_error::Kind::BadHeader, lineno,
                      "declared " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));

  // Duplicate detection independent of adjacency order.
  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) canon.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(canon.begin(), canon.end());
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end()) {
    auto it = std::adjacent_find(canon.begin(), canon.end());
    throw parse_error(parse_error::Kind::DuplicateEdge, lineno,
                      "duplicate edge " + std::to_string(it->first) + " " +
                          std::to_string(it->second));
  }
  return Graph::from_edges(n, edges);
}

inline Graph load_graph(const std::string& text) {
  std::istringstream ss(text);
  return load_graph(ss);
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace irex
