#include "bei/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "bei/errors.hpp"

namespace bei {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

SimpleGraph parse_edge_list(std::istream& in) {
  std::string raw;
  int line = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view view(raw);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto tok = split_ws(view);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n" || !to_int(tok[1], n) || n < 0) {
        fail(line, "expected header 'n <count>'");
      }
      if (n > SimpleGraph::kMaxVertices) {
        fail(line, "at most " + std::to_string(SimpleGraph::kMaxVertices) + " vertices supported");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    if (tok.size() != 2 || !to_int(tok[0], u) || !to_int(tok[1], v)) {
      fail(line, "expected an edge 'u v'");
    }
    if (u == v) fail(line, "loop at vertex " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n) {
      fail(line, "vertex out of range 1.." + std::to_string(n));
    }
    edges.emplace_back(u, v);
    edge_lines.push_back(line);
  }
  if (n < 0) fail(line + 1, "missing header 'n <count>'");
  try {
    return SimpleGraph(n, edges);
  } catch (const InputError& e) {
    // Only duplicates can still fail here; find the offending line.
    std::vector<std::vector<bool>> seen(n + 1, std::vector<bool>(n + 1, false));
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [u, v] = edges[k];
      if (seen[u][v]) fail(edge_lines[k], e.what());
      seen[u][v] = seen[v][u] = true;
    }
    throw;
  }
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

SimpleGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_edge_list(in);
}

std::string format_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

SimpleGraph parse_inline_graph(std::string_view spec) {
  auto colon = spec.find(':');
  int n = 0;
  if (colon == std::string_view::npos || !to_int(spec.substr(0, colon), n) || n < 0) {
    throw InputError("inline graph must look like 'n:u-v,u-v'");
  }
  std::vector<Edge> edges;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto dash = item.find('-');
    int u = 0;
    int v = 0;
    if (dash == std::string_view::npos || !to_int(item.substr(0, dash), u) ||
        !to_int(item.substr(dash + 1), v)) {
      throw InputError("bad inline edge '" + std::string(item) + "'");
    }
    edges.emplace_back(u, v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return SimpleGraph(n, edges);
}

std::string format_inline_graph(const SimpleGraph& g) {
  std::string out = std::to_string(g.n()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace bei
