#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "uleq/graph.hpp"

namespace uleq {

/// Malformed graph text; the message carries the offending line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail, const std::string& source = "")
      : std::runtime_error((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " +
                           detail),
        line_(line),
        detail_(detail) {}
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

// Edge-list text format:
//
//   n
//   i j
//   ...
//
// One header line with the vertex count, then one 1-based edge per line.
// Blank lines and lines starting with '#' are skipped.

Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& file);

/// Edges are written in sorted order, so output is deterministic.
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::filesystem::path& file, const Graph& g);

std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g, const std::string& name = "G");

/// Building-block shorthand: "path:k", "cycle:k", "star:k" (k vertices each,
/// star center labeled 1) or "file:PATH" for an edge-list file.
Graph parse_graph_shorthand(const std::string& text);

/// "2,2,1" -> {2, 2, 1}.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace uleq
