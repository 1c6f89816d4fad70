#include "copgame/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace copgame {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on blanks and parses every token as an unsigned integer.
bool parse_numbers(std::string_view s, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) return false;
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::uint64_t> nums;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!parse_numbers(line, nums)) throw GraphParseError(line_no, "expected non-negative integers");
    if (!n) {
      if (nums.size() != 1) throw GraphParseError(line_no, "expected vertex count");
      if (nums[0] > 10'000'000) throw GraphParseError(line_no, "vertex count too large");
      n = nums[0];
      continue;
    }
    if (nums.size() != 2) throw GraphParseError(line_no, "expected 'u v'");
    const std::uint64_t u = nums[0];
    const std::uint64_t v = nums[1];
    if (u >= *n || v >= *n) throw GraphParseError(line_no, "vertex out of range");
    if (u == v) throw GraphParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw GraphParseError(line_no, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    }
    edges.push_back(e);
  }
  if (!n) throw GraphParseError(line_no, "missing vertex count");
  return Graph(*n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& labels) {
  if (!labels.empty()) {
    if (labels.size() != g.vertex_count()) throw std::invalid_argument("write_graph: label count mismatch");
    for (std::size_t v = 0; v < labels.size(); ++v) out << "# " << v << ' ' << labels[v] << '\n';
  }
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace copgame
