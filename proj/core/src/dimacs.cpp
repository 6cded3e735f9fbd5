#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "gcolor/error.hpp"
#include "gcolor/instance.hpp"

namespace gcolor {

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_dimacs(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dimacs(out, g);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t edge_lines = 0;
  std::size_t last_edge_line = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;

  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;
    if (fields[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col")) {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      n = parse_count(fields[2], line_no);
      m = parse_count(fields[3], line_no);
      have_header = true;
    } else if (fields[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before 'p edge' header");
      if (fields.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const std::size_t u = parse_count(fields[1], line_no);
      const std::size_t v = parse_count(fields[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "edge endpoint out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      pairs.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      ++edge_lines;
      last_edge_line = line_no;
    } else {
      throw ParseError(line_no, "unrecognized line type '" + std::string(fields[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 0 : line_no, "missing 'p edge' header");
  if (edge_lines != m) {
    throw ParseError(edge_lines > m ? last_edge_line : line_no,
                     "edge count mismatch: header declares " + std::to_string(m) + ", found " +
                         std::to_string(edge_lines));
  }
  return Graph(n, pairs);
}

Graph read_dimacs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_dimacs(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

}  // namespace gcolor
