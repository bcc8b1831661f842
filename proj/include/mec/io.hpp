#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mec/coloring.hpp"
#include "mec/graph.hpp"

namespace mec {

// Graph documents:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>          (m lines, 1-based, rendered with u < v)
//
// Coloring documents:
//   s coloring <k>
//   l <u> <v> <color>  (one line per edge, colors 1..k)
//
// Annotated graphs append "f <vertex> <1|2>" lines to a graph document; an
// optional "c threshold <l>" comment carries the target color count.

Graph load_graph(std::string_view text);
std::string render_graph(const Graph& g, std::string_view comment = {});

EdgeColoring load_coloring(const Graph& g, std::string_view text);
std::string render_coloring(const Graph& g, const EdgeColoring& c);

struct AnnotatedGraph {
    Graph graph;
    std::optional<std::vector<int>> f;
    std::optional<int> threshold;
};

/// Accepts plain graph documents too (f and threshold then stay empty).
AnnotatedGraph load_annotated(std::string_view text);
std::string render_annotated(const AnnotatedGraph& a);

namespace detail {

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

/// Splits a document into whitespace-tokenized lines, dropping blank lines.
/// Comment lines are kept; callers decide whether to skip them.
std::vector<Line> tokenize(std::string_view text);

int parse_int(const Line& line, std::size_t index);
void expect_tokens(const Line& line, std::size_t count);
bool is_comment(const Line& line);

} // namespace detail

} // namespace mec
