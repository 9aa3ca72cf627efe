#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ccenum/compact_graph.hpp"
#include "ccenum/errors.hpp"

namespace ccenum {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  if (value >= kNoVertex) throw ParseError(line, "vertex id too large");
  return value;
}

struct RawPair {
  VertexId a;
  VertexId b;
  std::size_t line;
};

struct RawList {
  std::optional<std::size_t> header_n;
  std::vector<RawPair> pairs;
};

RawList read_pairs(std::istream& in) {
  RawList out;
  std::string line;
  std::size_t lineno = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "p") {
      if (seen_data || out.header_n) throw ParseError(lineno, "header must precede all edges");
      if (tokens.size() != 3) throw ParseError(lineno, "header must read 'p n m'");
      out.header_n = parse_id(tokens[1], lineno);
      parse_id(tokens[2], lineno);
      seen_data = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected two vertex ids, got " + std::to_string(tokens.size()) +
                                   " tokens");
    }
    const auto a = static_cast<VertexId>(parse_id(tokens[0], lineno));
    const auto b = static_cast<VertexId>(parse_id(tokens[1], lineno));
    if (out.header_n && (a >= *out.header_n || b >= *out.header_n)) {
      throw ParseError(lineno, "vertex id exceeds header vertex count");
    }
    out.pairs.push_back({a, b, lineno});
    seen_data = true;
  }
  return out;
}

std::size_t vertex_count_of(const RawList& raw) {
  if (raw.header_n) return *raw.header_n;
  std::size_t n = 0;
  for (const auto& p : raw.pairs) n = std::max<std::size_t>({n, p.a + 1U, p.b + 1U});
  return n;
}

}  // namespace

EdgeList read_edge_list(std::istream& in) {
  const RawList raw = read_pairs(in);
  EdgeList out;
  out.vertex_count = vertex_count_of(raw);
  out.edges.reserve(raw.pairs.size());
  for (const auto& p : raw.pairs) {
    if (p.a == p.b) throw SelfLoopRejected(p.line, "self-loop on vertex " + std::to_string(p.a));
    out.edges.push_back({p.a, p.b});
  }
  return out;
}

CompactGraph load_edge_list(std::istream& in) { return build_compact(read_edge_list(in)); }

void write_edge_list(std::ostream& out, const EdgeList& list) {
  std::size_t implied = 0;
  for (const Edge& e : list.edges) implied = std::max<std::size_t>({implied, e.u + 1U, e.v + 1U});
  if (implied != list.vertex_count) {
    out << "p " << list.vertex_count << ' ' << list.edges.size() << '\n';
  }
  for (const Edge& e : list.edges) out << e.u << ' ' << e.v << '\n';
}

DirectedEdgeList read_arc_list(std::istream& in) {
  const RawList raw = read_pairs(in);
  DirectedEdgeList out;
  out.vertex_count = vertex_count_of(raw);
  out.arcs.reserve(raw.pairs.size());
  for (const auto& p : raw.pairs) out.arcs.push_back({p.a, p.b});
  return out;
}

CompactGraph niche_overlap(const DirectedEdgeList& food_web) {
  const std::size_t n = food_web.vertex_count;
  std::vector<std::vector<VertexId>> predators_of(n);
  for (const Arc& a : food_web.arcs) {
    if (a.predator >= n || a.prey >= n) {
      throw InvalidVertex("arc endpoint out of range (n = " + std::to_string(n) + ")");
    }
    predators_of[a.prey].push_back(a.predator);
  }
  std::vector<Edge> edges;
  for (auto& preds : predators_of) {
    std::sort(preds.begin(), preds.end());
    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
    for (std::size_t i = 0; i < preds.size(); ++i) {
      for (std::size_t j = i + 1; j < preds.size(); ++j) edges.push_back({preds[i], preds[j]});
    }
  }
  return build_compact(n, edges);
}

}  // namespace ccenum
