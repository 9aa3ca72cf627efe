#include <charconv>
#include <random>
#include <string>

#include "ccenum/compact_graph.hpp"
#include "ccenum/errors.hpp"

namespace ccenum {

namespace {

std::size_t parse_count(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidParameter("bad graph family spec '" + std::string(spec) + "'");
  }
  return value;
}

std::pair<std::size_t, std::size_t> parse_pair(std::string_view text, std::string_view spec) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) {
    throw InvalidParameter("expected AxB in graph family spec '" + std::string(spec) + "'");
  }
  return {parse_count(text.substr(0, x), spec), parse_count(text.substr(x + 1), spec)};
}

void validate(const GraphFamily& f) {
  using K = GraphFamily::Kind;
  switch (f.kind) {
    case K::Cycle:
    case K::Wheel:
      if (f.a < 3) throw InvalidParameter("cycle and wheel need k >= 3");
      break;
    case K::CompleteBipartite:
      if (f.a < 1 || f.b < 1) throw InvalidParameter("complete bipartite needs a, b >= 1");
      break;
    case K::Grid:
      if (f.a < 1 || f.b < 1) throw InvalidParameter("grid needs r, c >= 1");
      break;
  }
}

VertexId vid(std::size_t i) { return static_cast<VertexId>(i); }

}  // namespace

GraphFamily parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidParameter("graph family spec '" + std::string(spec) + "' lacks ':'");
  }
  const auto name = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);
  GraphFamily f;
  if (name == "cycle") {
    f = GraphFamily::cycle(parse_count(args, spec));
  } else if (name == "wheel") {
    f = GraphFamily::wheel(parse_count(args, spec));
  } else if (name == "bipartite") {
    auto [a, b] = parse_pair(args, spec);
    f = GraphFamily::complete_bipartite(a, b);
  } else if (name == "grid") {
    auto [r, c] = parse_pair(args, spec);
    f = GraphFamily::grid(r, c);
  } else {
    throw InvalidParameter("unknown graph family '" + std::string(name) + "'");
  }
  validate(f);
  return f;
}

std::string to_string(const GraphFamily& f) {
  using K = GraphFamily::Kind;
  switch (f.kind) {
    case K::Cycle: return "cycle:" + std::to_string(f.a);
    case K::Wheel: return "wheel:" + std::to_string(f.a);
    case K::CompleteBipartite:
      return "bipartite:" + std::to_string(f.a) + "x" + std::to_string(f.b);
    case K::Grid: return "grid:" + std::to_string(f.a) + "x" + std::to_string(f.b);
  }
  return {};
}

EdgeList generate_edges(const GraphFamily& f) {
  validate(f);
  using K = GraphFamily::Kind;
  EdgeList out;
  switch (f.kind) {
    case K::Cycle:
      out.vertex_count = f.a;
      for (std::size_t i = 0; i < f.a; ++i) out.edges.push_back({vid(i), vid((i + 1) % f.a)});
      break;
    case K::Wheel:
      out.vertex_count = f.a + 1;
      for (std::size_t i = 0; i < f.a; ++i) out.edges.push_back({vid(i), vid((i + 1) % f.a)});
      for (std::size_t i = 0; i < f.a; ++i) out.edges.push_back({vid(i), vid(f.a)});
      break;
    case K::CompleteBipartite:
      out.vertex_count = f.a + f.b;
      for (std::size_t i = 0; i < f.a; ++i) {
        for (std::size_t j = 0; j < f.b; ++j) out.edges.push_back({vid(i), vid(f.a + j)});
      }
      break;
    case K::Grid:
      out.vertex_count = f.a * f.b;
      for (std::size_t i = 0; i < f.a; ++i) {
        for (std::size_t j = 0; j < f.b; ++j) {
          const std::size_t v = i * f.b + j;
          if (j + 1 < f.b) out.edges.push_back({vid(v), vid(v + 1)});
          if (i + 1 < f.a) out.edges.push_back({vid(v), vid(v + f.b)});
        }
      }
      break;
  }
  return out;
}

CompactGraph generate(const GraphFamily& family) { return build_compact(generate_edges(family)); }

EdgeList random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidParameter("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList out;
  out.vertex_count = n;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) out.edges.push_back({vid(u), vid(v)});
    }
  }
  return out;
}

}  // namespace ccenum
