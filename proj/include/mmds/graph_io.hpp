#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

// Edge-list format:
//
//   # optional comment lines
//   mmds <n> <m> <k>
//   <u> <v>        (exactly m lines, 1 <= u,v <= n, u != v)
//
// Comment lines may appear anywhere; blank lines are ignored.

struct ParsedGraph {
  Instance instance;
  // Comment lines with the leading '#' and following blanks stripped,
  // in file order. Used by the gadget-role and kernel-map annotations.
  std::vector<std::string> comments;
};

/// Throws ParseError (with line number) on malformed input.
ParsedGraph parse_graph_annotated(std::string_view text);
Instance parse_graph(std::string_view text);
Instance read_graph_file(const std::string& path);  // "-" reads stdin

/// Header plus edges sorted with u < v, 1-based.
std::string serialize(const Instance& inst);
void write_graph(std::ostream& out, const Instance& inst, const std::vector<std::string>& comments = {});

/// Set file: whitespace-separated 1-based vertex ids (one line conventionally).
VertexSet parse_vertex_set(std::string_view text, std::size_t n);
VertexSet read_vertex_set_file(const std::string& path, std::size_t n);
std::string format_vertex_set(const VertexSet& s);  // "1 4", no newline

std::string read_text(const std::string& path);  // "-" reads stdin

}  // namespace mmds
