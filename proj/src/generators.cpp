#include "mec/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace mec {

void MCISInstance::validate() const
{
    if (k < 1)
        throw InvalidInput("MCIS instance needs at least one class");
    if (static_cast<int>(part.size()) != graph.num_vertices())
        throw InvalidInput("every vertex needs a class");
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int c : part) {
        if (c < 0 || c >= k)
            throw InvalidInput("class index out of range");
        ++sizes[static_cast<std::size_t>(c)];
    }
    for (int i = 0; i < k; ++i)
        if (sizes[static_cast<std::size_t>(i)] == 0)
            throw InvalidInput("class " + std::to_string(i + 1) + " is empty");
}

std::vector<std::vector<Vertex>> MCISInstance::classes() const
{
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k));
    for (Vertex v = 0; v < static_cast<Vertex>(part.size()); ++v)
        out.at(static_cast<std::size_t>(part[static_cast<std::size_t>(v)])).push_back(v);
    return out;
}

MCISInstance load_mcis(std::string_view text)
{
    MCISInstance inst;
    bool have_header = false;
    int declared_edges = 0;
    int last_line = 0;
    for (const detail::Line& line : detail::tokenize(text)) {
        last_line = line.number;
        if (detail::is_comment(line))
            continue;
        const std::string_view kind = line.tokens.front();
        if (kind == "p") {
            if (have_header)
                throw ParseError(line.number, "second header line");
            detail::expect_tokens(line, 5);
            if (line.tokens[1] != "mcis")
                throw ParseError(line.number, "expected 'p mcis <n> <m> <k>'");
            const int n = detail::parse_int(line, 2);
            declared_edges = detail::parse_int(line, 3);
            inst.k = detail::parse_int(line, 4);
            if (n < 0 || declared_edges < 0 || inst.k < 1)
                throw ParseError(line.number, "invalid sizes in header");
            inst.graph = Graph(n);
            inst.part.assign(static_cast<std::size_t>(n), -1);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line.number, "data before 'p mcis' header");
        const int n = inst.graph.num_vertices();
        auto vertex = [&](std::size_t i) {
            const int x = detail::parse_int(line, i);
            if (x < 1 || x > n)
                throw ParseError(line.number, "vertex id out of range 1.." + std::to_string(n));
            return x - 1;
        };
        if (kind == "v") {
            detail::expect_tokens(line, 3);
            const Vertex v = vertex(1);
            const int c = detail::parse_int(line, 2);
            if (c < 1 || c > inst.k)
                throw ParseError(line.number, "class out of range 1.." + std::to_string(inst.k));
            if (inst.part[static_cast<std::size_t>(v)] >= 0)
                throw ParseError(line.number, "vertex assigned twice");
            inst.part[static_cast<std::size_t>(v)] = c - 1;
        } else if (kind == "e") {
            detail::expect_tokens(line, 3);
            const Vertex a = vertex(1);
            const Vertex b = vertex(2);
            try {
                inst.graph.add_edge(a, b);
            } catch (const InvalidInput& err) {
                throw ParseError(line.number, err.what());
            }
        } else {
            throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (!have_header)
        throw ParseError(last_line, "missing 'p mcis' header");
    if (inst.graph.num_edges() != declared_edges)
        throw ParseError(last_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                        std::to_string(inst.graph.num_edges()));
    try {
        inst.validate();
    } catch (const InvalidInput& err) {
        throw ParseError(last_line, err.what());
    }
    return inst;
}

std::string render_mcis(const MCISInstance& inst)
{
    std::ostringstream os;
    os << "p mcis " << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << ' ' << inst.k << '\n';
    for (Vertex v = 0; v < inst.graph.num_vertices(); ++v)
        os << "v " << v + 1 << ' ' << inst.part[static_cast<std::size_t>(v)] + 1 << '\n';
    for (const Edge& e : inst.graph.edges())
        os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

AnnotatedGraph reduce_mcis(const MCISInstance& inst)
{
    inst.validate();
    const int n = inst.graph.num_vertices();
    const int k = inst.k;
    const int m = inst.graph.num_edges();
    const Vertex apex = n + k;
    Graph h(n + k + 1 + 5 * m);
    std::vector<int> f(static_cast<std::size_t>(h.num_vertices()), 1);

    const auto classes = inst.classes();
    for (int i = 0; i < k; ++i) {
        const Vertex gate = n + i;
        f[static_cast<std::size_t>(gate)] = 2;
        for (Vertex v : classes[static_cast<std::size_t>(i)])
            h.add_edge(gate, v);
    }
    for (int i = 0; i < k; ++i)
        h.add_edge(apex, n + i);
    for (EdgeId e = 0; e < m; ++e) {
        const Vertex base = apex + 1 + 5 * e;
        const Vertex eu = base, eu2 = base + 1, e3 = base + 2, ev2 = base + 3, ev = base + 4;
        const Edge& orig = inst.graph.edge(e);
        f[static_cast<std::size_t>(e3)] = 2;
        h.add_edge(orig.u, eu);
        h.add_edge(apex, e3);
        h.add_edge(orig.v, ev);
        h.add_edge(eu, eu2);
        h.add_edge(eu2, e3);
        h.add_edge(e3, ev2);
        h.add_edge(ev2, ev);
    }
    return {std::move(h), std::move(f), k + 1};
}

PendantResult pendant_transform(const AnnotatedGraph& inst)
{
    const int n = inst.graph.num_vertices();
    std::vector<Vertex> ones;
    if (inst.f) {
        if (static_cast<int>(inst.f->size()) != n)
            throw InvalidInput("capacity map does not cover every vertex");
        for (Vertex v = 0; v < n; ++v)
            if ((*inst.f)[static_cast<std::size_t>(v)] == 1)
                ones.push_back(v);
    }
    PendantResult out;
    out.graph = Graph(n + static_cast<int>(ones.size()));
    for (const Edge& e : inst.graph.edges())
        out.graph.add_edge(e.u, e.v);
    for (std::size_t i = 0; i < ones.size(); ++i)
        out.graph.add_edge(ones[i], n + static_cast<Vertex>(i));
    out.pendants = static_cast<int>(ones.size());
    out.threshold = inst.threshold.value_or(0) + out.pendants;
    return out;
}

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

Graph gen_random(int n, double p, std::uint64_t seed)
{
    if (n < 0)
        throw InvalidInput("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidInput("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform01(rng) < p)
                g.add_edge(u, v);
    return g;
}

Graph gen_two_factor(int n, std::uint64_t seed)
{
    if (n < 3)
        throw InvalidInput("a two-factor needs at least 3 vertices");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Graph g(n);
    int start = 0;
    while (start < n) {
        const int left = n - start;
        int len = left;
        if (left >= 6) {
            // Any length that leaves either nothing or room for another cycle.
            do
                len = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(left - 2));
            while (left - len == 1 || left - len == 2);
        }
        for (int i = 0; i < len; ++i)
            g.add_edge(order[static_cast<std::size_t>(start + i)],
                       order[static_cast<std::size_t>(start + (i + 1) % len)]);
        start += len;
    }
    return g;
}

} // namespace mec
