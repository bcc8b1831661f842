#include "mec/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "mec/matching.hpp"

namespace mec {

std::vector<Color> colors_of(ColorSet s)
{
    std::vector<Color> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

void SolverStats::merge(const SolverStats& other)
{
    palettes += other.palettes;
    x_guesses += other.x_guesses;
    top_calls += other.top_calls;
    top_branches += other.top_branches;
    across_calls += other.across_calls;
    across_branches += other.across_branches;
    max_top_width = std::max(max_top_width, other.max_top_width);
    max_across_width = std::max(max_across_width, other.max_across_width);
}

namespace {

int size_of(ColorSet s) { return std::popcount(s); }
ColorSet lowest(ColorSet s) { return s & (~s + 1); }

// ---------------------------------------------------------------------------
// Palette enumeration

struct PrefixState {
    std::vector<ColorSet> sets;
    int top = 0;         // colors introduced so far
    ColorSet twins = 0;  // bit t: colors t and t+1 are still interchangeable
};

class PaletteSearch {
public:
    PaletteSearch(const Graph& g, std::span<const Vertex> cover, int k, bool cap_by_degree)
        : g_(g), cover_(cover.begin(), cover.end()), k_(k), earlier_(cover.size()), cap_(cover.size(), 2)
    {
        std::vector<int> position(static_cast<std::size_t>(g.num_vertices()), -1);
        for (std::size_t i = 0; i < cover_.size(); ++i) {
            const Vertex v = cover_[i];
            if (v < 0 || v >= g.num_vertices() || position[static_cast<std::size_t>(v)] >= 0)
                throw InvalidInput("cover lists an invalid or repeated vertex");
            position[static_cast<std::size_t>(v)] = static_cast<int>(i);
            if (cap_by_degree)
                cap_[i] = std::min(2, g.degree(v));
        }
        for (std::size_t i = 0; i < cover_.size(); ++i)
            for (Vertex w : g.neighbors(cover_[i])) {
                const int j = position[static_cast<std::size_t>(w)];
                if (j >= 0 && static_cast<std::size_t>(j) < i)
                    earlier_[i].push_back(static_cast<std::size_t>(j));
            }
    }

    std::size_t size() const { return cover_.size(); }

    PaletteAssignment assignment(const std::vector<ColorSet>& sets) const
    {
        PaletteAssignment a;
        a.cover = cover_;
        a.tau.assign(static_cast<std::size_t>(g_.num_vertices()), 0);
        for (std::size_t i = 0; i < cover_.size(); ++i)
            a.tau[static_cast<std::size_t>(cover_[i])] = sets[i];
        return a;
    }

    // Extends `state` from position state.sets.size(). Calls visit(state) at
    // depth `stop` (full assignments only count when all k colors appear).
    // Returns true when visit asked to stop.
    template <class Visit>
    bool extend(PrefixState& state, std::size_t stop, Visit& visit) const
    {
        const std::size_t pos = state.sets.size();
        if (pos == stop) {
            if (pos == cover_.size() && state.top != k_)
                return false;
            return visit(state);
        }
        const int top = state.top;
        const ColorSet twins = state.twins;
        const int left = static_cast<int>(cover_.size() - pos - 1);
        auto attempt = [&](ColorSet y) {
            int new_top = top;
            ColorSet new_twins = twins;
            const int high = 63 - std::countl_zero(y);
            if (high >= top)
                new_top = high + 1;
            if (new_top > k_ || new_top + 2 * left < k_)
                return false;
            for (ColorSet t = twins; t; t &= t - 1) {
                const int c = std::countr_zero(t);
                const bool has_low = (y >> c) & 1;
                const bool has_high = (y >> (c + 1)) & 1;
                if (has_high && !has_low)
                    return false;
                if (has_low && !has_high)
                    new_twins &= ~color_bit(c);
            }
            if (high == top + 1 && size_of(y) == 2 && ((y >> top) & 1))
                new_twins |= color_bit(top);
            for (std::size_t j : earlier_[pos])
                if ((state.sets[j] & y) == 0)
                    return false;
            state.sets.push_back(y);
            state.top = new_top;
            state.twins = new_twins;
            const bool stop_now = extend(state, stop, visit);
            state.sets.pop_back();
            state.top = top;
            state.twins = twins;
            return stop_now;
        };
        const int limit = std::min(top, k_ - 1);
        for (int c = 0; c <= limit; ++c)
            if (attempt(color_bit(c)))
                return true;
        if (cap_[pos] < 2)
            return false;
        for (int b = 1; b <= std::min(top + 1, k_ - 1); ++b) {
            if (b == top + 1) {
                if (attempt(color_bit(top) | color_bit(b)))
                    return true;
                continue;
            }
            for (int a = 0; a < b; ++a)
                if (attempt(color_bit(a) | color_bit(b)))
                    return true;
        }
        return false;
    }

private:
    const Graph& g_;
    std::vector<Vertex> cover_;
    int k_;
    std::vector<std::vector<std::size_t>> earlier_;
    std::vector<int> cap_;
};

// ---------------------------------------------------------------------------
// CheckTop

struct TopSearch {
    const Graph& g;
    std::span<const EdgeId> edges;
    std::vector<ColorSet> options; // per entry of `edges`, already restricted to x
    SolverStats* stats;

    bool run(std::vector<Color>& colors, ColorSet unused)
    {
        // Forced edges first, until only genuine two-way choices are left.
        bool changed = true;
        std::size_t open = 0;
        while (changed) {
            changed = false;
            open = 0;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                Color& slot = colors[static_cast<std::size_t>(edges[i])];
                if (slot >= 0)
                    continue;
                const ColorSet o = options[i];
                const ColorSet fresh = o & unused;
                ColorSet pick = 0;
                if (size_of(o) == 1)
                    pick = o;
                else if (fresh == 0)
                    pick = lowest(o);
                else if (size_of(fresh) == 1)
                    pick = fresh;
                if (pick) {
                    slot = std::countr_zero(pick);
                    unused &= ~pick;
                    changed = true;
                } else {
                    ++open;
                }
            }
        }
        if (open == 0)
            return unused == 0;
        if (static_cast<std::size_t>(size_of(unused)) > open)
            return false;
        std::size_t branch = 0;
        while (colors[static_cast<std::size_t>(edges[branch])] >= 0)
            ++branch;
        if (stats) {
            ++stats->top_branches;
            stats->max_top_width = std::max(stats->max_top_width, size_of(options[branch]));
        }
        for (Color c : colors_of(options[branch])) {
            std::vector<Color> next = colors;
            next[static_cast<std::size_t>(edges[branch])] = c;
            if (run(next, unused & ~color_bit(c))) {
                colors = std::move(next);
                return true;
            }
        }
        return false;
    }
};

std::vector<EdgeId> cover_edges(const Graph& g, const PaletteAssignment& tau)
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (tau.of(g.edge(e).u) && tau.of(g.edge(e).v))
            out.push_back(e);
    return out;
}

std::optional<std::vector<Color>> top_for(const Graph& g, const PaletteAssignment& tau, std::span<const EdgeId> edges,
                                          ColorSet x, SolverStats* stats)
{
    if (stats)
        ++stats->top_calls;
    TopSearch search{g, edges, {}, stats};
    search.options.reserve(edges.size());
    for (EdgeId e : edges) {
        const ColorSet o = tau.of(g.edge(e).u) & tau.of(g.edge(e).v) & x;
        if (o == 0)
            return std::nullopt; // the edge's color would fall outside x
        search.options.push_back(o);
    }
    std::vector<Color> colors(static_cast<std::size_t>(g.num_edges()), -1);
    if (!search.run(colors, x))
        return std::nullopt;
    return colors;
}

// ---------------------------------------------------------------------------
// CheckAcross

class AcrossSearch {
public:
    AcrossSearch(std::span<const FeasibilityList> lists, SolverStats* stats)
        : lists_(lists), stats_(stats), chosen_(lists.size(), 0)
    {
    }

    std::optional<std::vector<ColorSet>> run(ColorSet remaining)
    {
        if (stats_)
            ++stats_->across_calls;
        for (std::size_t i = 0; i < lists_.size(); ++i) {
            const auto& cands = lists_[i].candidates;
            if (cands.empty())
                return std::nullopt;
            if (cands.size() == 1) {
                chosen_[i] = cands.front();
                remaining &= ~cands.front();
                continue;
            }
            ColorSet common = ~ColorSet{0};
            for (ColorSet y : cands)
                common &= y;
            if (common) {
                // Every candidate realizes this color.
                remaining &= ~common;
                good_.push_back(i);
                common_.push_back(common);
            } else {
                bad_.push_back(i);
            }
        }
        if (!branch(0, remaining))
            return std::nullopt;
        return chosen_;
    }

private:
    bool branch(std::size_t at, ColorSet remaining)
    {
        if (at == bad_.size())
            return finish(remaining);
        const std::size_t i = bad_[at];
        const auto& cands = lists_[i].candidates;
        std::vector<ColorSet> useful;
        for (ColorSet y : cands)
            if (y & remaining)
                useful.push_back(y);
        if (useful.empty()) {
            chosen_[i] = cands.front();
            return branch(at + 1, remaining);
        }
        if (useful.size() == 1) {
            chosen_[i] = useful.front();
            return branch(at + 1, remaining & ~useful.front());
        }
        if (useful.size() > 10)
            throw std::logic_error("feasibility list without a common color has more than 10 useful sets");
        if (stats_) {
            ++stats_->across_branches;
            stats_->max_across_width = std::max(stats_->max_across_width, static_cast<int>(useful.size()));
        }
        for (ColorSet y : useful) {
            chosen_[i] = y;
            if (branch(at + 1, remaining & ~y))
                return true;
        }
        return false;
    }

    // What is left must come from the vertices with a common color, each of
    // which adds at most one further color: a matching question.
    bool finish(ColorSet remaining)
    {
        for (std::size_t j = 0; j < good_.size(); ++j)
            chosen_[good_[j]] = lists_[good_[j]].candidates.front();
        if (remaining == 0)
            return true;
        const std::vector<Color> colors = colors_of(remaining);
        BipartiteGraph h;
        h.left = static_cast<int>(colors.size());
        h.right = static_cast<int>(good_.size());
        for (std::size_t c = 0; c < colors.size(); ++c)
            for (std::size_t j = 0; j < good_.size(); ++j)
                if (has_candidate(good_[j], common_[j] | color_bit(colors[c])))
                    h.edges.emplace_back(static_cast<int>(c), static_cast<int>(j));
        const BipartiteMatching mm = max_bipartite_matching(h);
        if (mm.size() < static_cast<int>(colors.size()))
            return false;
        for (std::size_t c = 0; c < colors.size(); ++c) {
            const std::size_t j = static_cast<std::size_t>(mm.left_mate[c]);
            chosen_[good_[j]] = common_[j] | color_bit(colors[c]);
        }
        return true;
    }

    bool has_candidate(std::size_t i, ColorSet y) const
    {
        const auto& cands = lists_[i].candidates;
        return std::find(cands.begin(), cands.end(), y) != cands.end();
    }

    std::span<const FeasibilityList> lists_;
    SolverStats* stats_;
    std::vector<ColorSet> chosen_;
    std::vector<std::size_t> good_;
    std::vector<ColorSet> common_;
    std::vector<std::size_t> bad_;
};

// ---------------------------------------------------------------------------
// Driver

struct Witness {
    std::vector<Color> colors;
};

class Guesser {
public:
    Guesser(const Graph& g, int k) : g_(g), k_(k), full_(k >= 64 ? ~ColorSet{0} : color_bit(k) - 1) {}

    bool evaluate(const PaletteAssignment& tau, Witness& out, SolverStats& stats) const
    {
        ++stats.palettes;
        std::vector<FeasibilityList> lists;
        ColorSet across_colors = 0;
        for (Vertex u = 0; u < g_.num_vertices(); ++u) {
            if (tau.of(u) || g_.degree(u) == 0)
                continue;
            lists.push_back(feasibility_list(g_, tau, u));
            if (lists.back().candidates.empty())
                return false;
            for (ColorSet y : lists.back().candidates)
                across_colors |= y;
        }
        const std::vector<EdgeId> edges = cover_edges(g_, tau);
        // Colors no cut edge can carry must appear inside the cover; colors
        // no cover edge can carry cannot.
        ColorSet lower = full_ & ~across_colors;
        ColorSet upper = 0;
        for (EdgeId e : edges) {
            const ColorSet inter = tau.of(g_.edge(e).u) & tau.of(g_.edge(e).v);
            upper |= inter;
            if (size_of(inter) == 1)
                lower |= inter;
        }
        if (lower & ~upper)
            return false;
        const ColorSet free = upper & ~lower;
        std::unordered_map<ColorSet, std::optional<std::vector<ColorSet>>> across_cache;
        for (ColorSet sub = free;; sub = (sub - 1) & free) {
            const ColorSet x = lower | sub;
            ++stats.x_guesses;
            if (auto top = top_for(g_, tau, edges, x, &stats)) {
                const ColorSet remaining = full_ & ~x;
                auto it = across_cache.find(remaining);
                if (it == across_cache.end())
                    it = across_cache.emplace(remaining, check_across(lists, remaining, &stats)).first;
                if (it->second) {
                    out.colors = std::move(*top);
                    for (std::size_t i = 0; i < lists.size(); ++i)
                        color_cut_edges(g_, tau, lists[i].owner, (*it->second)[i], out.colors);
                    return true;
                }
            }
            if (sub == 0)
                break;
        }
        return false;
    }

private:
    const Graph& g_;
    int k_;
    ColorSet full_;
};

EdgeColoring finalize(const Graph& g, int k, Witness&& w)
{
    for (Color c : w.colors)
        if (c < 0)
            throw std::logic_error("solver left an edge uncolored");
    EdgeColoring coloring(std::move(w.colors));
    const VerifyReport report = verify_coloring(g, coloring);
    if (!report.valid || report.colors_used != k)
        throw std::logic_error("solver witness failed verification");
    return coloring;
}

} // namespace

void enumerate_palettes(const Graph& g, std::span<const Vertex> cover, int k, bool cap_by_degree,
                        const std::function<bool(const PaletteAssignment&)>& visit)
{
    if (k < 1 || k > kMaxSolverColors)
        throw InvalidInput("palette enumeration needs 1 <= k <= " + std::to_string(kMaxSolverColors));
    PaletteSearch search(g, cover, k, cap_by_degree);
    PrefixState state;
    auto at_leaf = [&](const PrefixState& s) { return visit(search.assignment(s.sets)); };
    search.extend(state, search.size(), at_leaf);
}

std::vector<PaletteAssignment> enumerate_palettes(const Graph& g, std::span<const Vertex> cover, int k,
                                                  bool cap_by_degree)
{
    std::vector<PaletteAssignment> out;
    enumerate_palettes(g, cover, k, cap_by_degree, [&](const PaletteAssignment& a) {
        out.push_back(a);
        return false;
    });
    return out;
}

std::optional<std::vector<Color>> check_top(const Graph& g, const PaletteAssignment& tau, ColorSet x,
                                            SolverStats* stats)
{
    const std::vector<EdgeId> edges = cover_edges(g, tau);
    return top_for(g, tau, edges, x, stats);
}

FeasibilityList feasibility_list(const Graph& g, const PaletteAssignment& tau, Vertex u)
{
    FeasibilityList list;
    list.owner = u;
    std::vector<ColorSet> around;
    ColorSet all = 0;
    ColorSet every = ~ColorSet{0};
    for (Vertex v : g.neighbors(u)) {
        const ColorSet t = tau.of(v);
        if (t == 0)
            throw InvalidInput("feasibility lists need every neighbor in the cover");
        around.push_back(t);
        all |= t;
        every &= t;
    }
    if (around.empty())
        return list;
    for (Color c : colors_of(every))
        list.candidates.push_back(color_bit(c));
    const std::vector<Color> pool = colors_of(all);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            const ColorSet y = color_bit(pool[i]) | color_bit(pool[j]);
            bool hits = true;
            for (ColorSet t : around)
                hits = hits && (t & y) != 0;
            if (!hits)
                continue;
            // Both colors need their own neighbor.
            bool realized = false;
            for (std::size_t a = 0; a < around.size() && !realized; ++a) {
                if (!((around[a] >> pool[i]) & 1))
                    continue;
                for (std::size_t b = 0; b < around.size() && !realized; ++b)
                    realized = b != a && ((around[b] >> pool[j]) & 1);
            }
            if (realized)
                list.candidates.push_back(y);
        }
    return list;
}

std::optional<std::vector<ColorSet>> check_across(std::span<const FeasibilityList> lists, ColorSet remaining,
                                                  SolverStats* stats)
{
    return AcrossSearch(lists, stats).run(remaining);
}

void color_cut_edges(const Graph& g, const PaletteAssignment& tau, Vertex u, ColorSet y, std::vector<Color>& colors)
{
    const auto incident = g.incident(u);
    std::vector<char> done(incident.size(), 0);
    if (size_of(y) == 2) {
        const Color a = std::countr_zero(y);
        const Color b = 63 - std::countl_zero(y);
        bool placed = false;
        for (std::size_t i = 0; i < incident.size() && !placed; ++i) {
            if (!((tau.of(g.edge(incident[i]).other(u)) >> a) & 1))
                continue;
            for (std::size_t j = 0; j < incident.size() && !placed; ++j) {
                if (j == i || !((tau.of(g.edge(incident[j]).other(u)) >> b) & 1))
                    continue;
                colors[static_cast<std::size_t>(incident[i])] = a;
                colors[static_cast<std::size_t>(incident[j])] = b;
                done[i] = done[j] = 1;
                placed = true;
            }
        }
        if (!placed)
            throw std::logic_error("palette pair is not realizable at vertex " + std::to_string(u));
    }
    for (std::size_t i = 0; i < incident.size(); ++i) {
        if (done[i])
            continue;
        const ColorSet allowed = y & tau.of(g.edge(incident[i]).other(u));
        if (allowed == 0)
            throw std::logic_error("palette misses a neighbor of vertex " + std::to_string(u));
        colors[static_cast<std::size_t>(incident[i])] = std::countr_zero(allowed);
    }
}

SolveResult solve_exact(const Graph& g, int k, const SolveOptions& options)
{
    PreprocessResult pre = matching_preprocess(g, k);
    if (std::holds_alternative<preprocess::ForcedNo>(pre))
        return {};
    if (auto* yes = std::get_if<preprocess::ForcedYes>(&pre))
        return {true, std::move(yes->witness)};
    // A character subgraph has maximum degree 2, so no coloring beats n colors.
    if (k > g.num_vertices())
        return {};
    if (k > kMaxSolverColors)
        throw Refusal("target " + std::to_string(k) + " exceeds the exact solver's color limit");

    const std::vector<Vertex> cover = std::get<preprocess::Continue>(pre).cover;
    const Guesser guesser(g, k);
    PaletteSearch search(g, cover, k, true);
    SolverStats total;

    const int threads = std::max(1, options.threads);
    std::optional<Witness> found;
    if (threads == 1) {
        Witness w;
        auto at_leaf = [&](const PrefixState& s) { return guesser.evaluate(search.assignment(s.sets), w, total); };
        PrefixState state;
        if (search.extend(state, search.size(), at_leaf))
            found = std::move(w);
    } else {
        // Hand out prefixes of the enumeration; each worker finishes its own.
        std::vector<PrefixState> prefixes;
        for (std::size_t depth = 1;; ++depth) {
            prefixes.clear();
            const std::size_t stop = std::min(depth, search.size());
            auto collect = [&](const PrefixState& s) {
                prefixes.push_back(s);
                return false;
            };
            PrefixState state;
            search.extend(state, stop, collect);
            if (stop == search.size() || prefixes.size() >= static_cast<std::size_t>(8 * threads))
                break;
        }
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex mu;
        auto worker = [&] {
            SolverStats local;
            Witness w;
            auto at_leaf = [&](const PrefixState& s) {
                if (stop.load(std::memory_order_relaxed))
                    return true;
                return guesser.evaluate(search.assignment(s.sets), w, local);
            };
            for (std::size_t i; !stop.load() && (i = next.fetch_add(1)) < prefixes.size();) {
                PrefixState state = prefixes[i];
                if (search.extend(state, search.size(), at_leaf) && !stop.exchange(true)) {
                    std::lock_guard lock(mu);
                    found = std::move(w);
                }
            }
            std::lock_guard lock(mu);
            total.merge(local);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (options.stats)
        options.stats->merge(total);
    if (!found)
        return {};
    return {true, finalize(g, k, std::move(*found))};
}

} // namespace mec
