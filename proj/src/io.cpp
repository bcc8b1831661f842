#include "mec/io.hpp"

#include <charconv>
#include <sstream>

namespace mec {

namespace detail {

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r')
                ++j;
            if (j > i)
                line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty())
            out.push_back(std::move(line));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return out;
}

int parse_int(const Line& line, std::size_t index)
{
    const std::string_view tok = line.tokens.at(index);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

void expect_tokens(const Line& line, std::size_t count)
{
    if (line.tokens.size() != count)
        throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                          std::to_string(line.tokens.size()));
}

bool is_comment(const Line& line)
{
    return line.tokens.front() == "c";
}

} // namespace detail

namespace {

using detail::Line;

std::optional<int> threshold_comment(const Line& line)
{
    if (line.tokens.size() == 3 && line.tokens[1] == "threshold")
        return detail::parse_int(line, 2);
    return std::nullopt;
}

AnnotatedGraph parse_graph(std::string_view text, bool allow_annotations)
{
    AnnotatedGraph out;
    bool have_header = false;
    int declared_edges = 0;
    int last_line = 0;
    for (const Line& line : detail::tokenize(text)) {
        last_line = line.number;
        const std::string_view kind = line.tokens.front();
        if (kind == "c") {
            if (allow_annotations)
                if (auto t = threshold_comment(line))
                    out.threshold = t;
            continue;
        }
        if (kind == "p") {
            if (have_header)
                throw ParseError(line.number, "second header line");
            detail::expect_tokens(line, 4);
            if (line.tokens[1] != "edge")
                throw ParseError(line.number, "expected 'p edge <n> <m>'");
            const int n = detail::parse_int(line, 2);
            declared_edges = detail::parse_int(line, 3);
            if (n < 0 || declared_edges < 0)
                throw ParseError(line.number, "negative size in header");
            out.graph = Graph(n);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line.number, "data before 'p edge' header");
        if (kind == "e") {
            detail::expect_tokens(line, 3);
            const int u = detail::parse_int(line, 1);
            const int v = detail::parse_int(line, 2);
            const int n = out.graph.num_vertices();
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(line.number, "vertex id out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
            if (out.graph.has_edge(u - 1, v - 1))
                throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            out.graph.add_edge(u - 1, v - 1);
            continue;
        }
        if (kind == "f" && allow_annotations) {
            detail::expect_tokens(line, 3);
            const int v = detail::parse_int(line, 1);
            const int fv = detail::parse_int(line, 2);
            const int n = out.graph.num_vertices();
            if (v < 1 || v > n)
                throw ParseError(line.number, "vertex id out of range 1.." + std::to_string(n));
            if (fv != 1 && fv != 2)
                throw ParseError(line.number, "f-value must be 1 or 2");
            if (!out.f)
                out.f.emplace(static_cast<std::size_t>(n), 0);
            if ((*out.f)[static_cast<std::size_t>(v - 1)] != 0)
                throw ParseError(line.number, "repeated f-value for vertex " + std::to_string(v));
            (*out.f)[static_cast<std::size_t>(v - 1)] = fv;
            continue;
        }
        throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
    }
    if (!have_header)
        throw ParseError(last_line, "missing 'p edge' header");
    if (out.graph.num_edges() != declared_edges)
        throw ParseError(last_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                        std::to_string(out.graph.num_edges()));
    if (out.f) {
        for (std::size_t v = 0; v < out.f->size(); ++v)
            if ((*out.f)[v] == 0)
                throw ParseError(last_line, "missing f-value for vertex " + std::to_string(v + 1));
    }
    return out;
}

} // namespace

Graph load_graph(std::string_view text)
{
    return parse_graph(text, false).graph;
}

std::string render_graph(const Graph& g, std::string_view comment)
{
    std::ostringstream os;
    if (!comment.empty())
        os << "c " << comment << '\n';
    os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges())
        os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

EdgeColoring load_coloring(const Graph& g, std::string_view text)
{
    std::vector<Color> colors(static_cast<std::size_t>(g.num_edges()), -1);
    bool have_header = false;
    int k = 0;
    int seen = 0;
    int last_line = 0;
    for (const Line& line : detail::tokenize(text)) {
        last_line = line.number;
        const std::string_view kind = line.tokens.front();
        if (kind == "c")
            continue;
        if (kind == "s") {
            if (have_header)
                throw ParseError(line.number, "second header line");
            detail::expect_tokens(line, 3);
            if (line.tokens[1] != "coloring")
                throw ParseError(line.number, "expected 's coloring <k>'");
            k = detail::parse_int(line, 2);
            if (k < 0)
                throw ParseError(line.number, "negative color count");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line.number, "data before 's coloring' header");
        if (kind != "l")
            throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
        detail::expect_tokens(line, 4);
        const int u = detail::parse_int(line, 1);
        const int v = detail::parse_int(line, 2);
        const int color = detail::parse_int(line, 3);
        if (color < 1 || color > k)
            throw ParseError(line.number, "color " + std::to_string(color) + " outside 1.." + std::to_string(k));
        const int n = g.num_vertices();
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError(line.number, "vertex id out of range 1.." + std::to_string(n));
        const auto e = g.find_edge(u - 1, v - 1);
        if (!e)
            throw ParseError(line.number, "no edge " + std::to_string(u) + " " + std::to_string(v) + " in graph");
        Color& slot = colors[static_cast<std::size_t>(*e)];
        if (slot >= 0)
            throw ParseError(line.number, "edge " + std::to_string(u) + " " + std::to_string(v) + " colored twice");
        slot = color - 1;
        ++seen;
    }
    if (!have_header)
        throw ParseError(last_line, "missing 's coloring' header");
    if (seen != g.num_edges())
        throw InvalidInput("coloring covers " + std::to_string(seen) + " of " + std::to_string(g.num_edges()) +
                           " edges");
    return EdgeColoring(std::move(colors));
}

std::string render_coloring(const Graph& g, const EdgeColoring& c)
{
    if (c.size() != g.num_edges())
        throw InvalidInput("coloring does not match the graph's edge count");
    const EdgeColoring norm = c.normalized();
    std::ostringstream os;
    os << "s coloring " << norm.colors_used() << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        os << "l " << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1 << ' ' << norm[e] + 1 << '\n';
    return os.str();
}

AnnotatedGraph load_annotated(std::string_view text)
{
    return parse_graph(text, true);
}

std::string render_annotated(const AnnotatedGraph& a)
{
    std::ostringstream os;
    if (a.threshold)
        os << "c threshold " << *a.threshold << '\n';
    os << render_graph(a.graph);
    if (a.f)
        for (std::size_t v = 0; v < a.f->size(); ++v)
            os << "f " << v + 1 << ' ' << (*a.f)[v] << '\n';
    return os.str();
}

} // namespace mec
