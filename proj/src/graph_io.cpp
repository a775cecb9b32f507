#include "mmds/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_set>

#include "mmds/error.hpp"

namespace mmds {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

ParsedGraph parse_graph_annotated(std::string_view text) {
  ParsedGraph result;
  bool have_header = false;
  long long n = 0, m = 0, k = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t last_line = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (eol == text.size() && line.empty()) break;

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      std::string_view body = line.substr(line.find('#') + 1);
      while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
      while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.remove_suffix(1);
      result.comments.emplace_back(body);
      continue;
    }
    last_line = line_no;
    if (!have_header) {
      if (toks.size() != 4 || toks[0] != "mmds") throw ParseError(line_no, "expected header 'mmds <n> <m> <k>'");
      if (!to_int(toks[1], n) || !to_int(toks[2], m) || !to_int(toks[3], k) || n < 0 || m < 0) {
        throw ParseError(line_no, "malformed header numbers");
      }
      if (k < 1) throw ParseError(line_no, "membership bound k must be at least 1");
      if (n > (1LL << 31)) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(line_no, "more edge lines than declared m");
    long long u = 0, v = 0;
    if (toks.size() != 2 || !to_int(toks[0], u) || !to_int(toks[1], v)) {
      throw ParseError(line_no, "expected edge line '<u> <v>'");
    }
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    auto key = static_cast<std::uint64_t>(std::min(u, v)) << 32 | static_cast<std::uint64_t>(std::max(u, v));
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (!have_header) throw ParseError(line_no, "missing header 'mmds <n> <m> <k>'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(last_line, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  result.instance.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
  result.instance.k = static_cast<int>(k);
  return result;
}

Instance parse_graph(std::string_view text) { return parse_graph_annotated(text).instance; }

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

Instance read_graph_file(const std::string& path) { return parse_graph(read_text(path)); }

void write_graph(std::ostream& out, const Instance& inst, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "mmds " << inst.graph.order() << ' ' << inst.graph.size() << ' ' << inst.k << '\n';
  for (auto [u, v] : inst.graph.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

std::string serialize(const Instance& inst) {
  std::ostringstream out;
  write_graph(out, inst);
  return out.str();
}

VertexSet parse_vertex_set(std::string_view text, std::size_t n) {
  std::vector<Vertex> ids;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto toks = split_ws(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (!toks.empty() && toks[0][0] == '#') continue;
    for (auto tok : toks) {
      long long v = 0;
      if (!to_int(tok, v)) throw ParseError(line_no, "expected vertex id, got '" + std::string(tok) + "'");
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      }
      ids.push_back(static_cast<Vertex>(v - 1));
    }
  }
  try {
    return VertexSet(n, ids);
  } catch (const PreconditionError& e) {
    throw ParseError(line_no, e.what());
  }
}

VertexSet read_vertex_set_file(const std::string& path, std::size_t n) { return parse_vertex_set(read_text(path), n); }

std::string format_vertex_set(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace mmds
