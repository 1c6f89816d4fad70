#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "copgame/graph.hpp"

namespace copgame {

// Edge-list text format:
//
//   # comment
//   n
//   u v
//   ...
//
// '#' starts a comment anywhere on a line; blank lines are ignored. The writer
// emits "n" then one "u v" line per edge with u < v, sorted lexicographically.
class GraphParseError : public std::runtime_error {
public:
  GraphParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

// `labels`, when non-empty, must have one entry per vertex and is written as
// "# v <label>" comment lines ahead of the vertex count.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& labels = {});
std::string to_edge_list(const Graph& g);

}  // namespace copgame
