#include "uleq/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace uleq {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 1) throw ParseError(line_no, "expected a positive vertex count");
      std::string rest;
      if (fields >> rest) throw ParseError(line_no, "trailing text after vertex count");
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u >> v)) throw ParseError(line_no, "expected an edge 'i j'");
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, "trailing text after edge");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line_no, "endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    edge_lines.push_back(line_no);
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count header");

  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ParseError(edge_lines[i], "repeated edge");
    }
  }
  return Graph(n, edges);
}

Graph load_edge_list(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), file.string());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_edge_list(const std::filesystem::path& file, const Graph& g) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  write_edge_list(out, g);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph parse_graph_shorthand(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("graph shorthand must look like path:k, cycle:k, star:k or file:PATH, got '" + text +
                                "'");
  }
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "file") return load_edge_list(arg);

  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(arg, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != arg.size() || k < 1) {
    throw std::invalid_argument("bad vertex count in '" + text + "'");
  }
  if (kind == "path") return Graph::path(k);
  if (kind == "cycle") return Graph::cycle(k);
  if (kind == "star") return Graph::star(k);
  throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad integer '" + item + "' in '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace uleq
