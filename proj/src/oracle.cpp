#include "mec/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

namespace mec {

EdgeLimitExceeded::EdgeLimitExceeded(int edges, int limit)
    : Refusal("graph has " + std::to_string(edges) + " edges, oracle edge limit is " + std::to_string(limit)),
      edges_(edges), limit_(limit)
{
}

namespace {

// Greedy edge order keeping the set of partially processed vertices small:
// prefer edges whose endpoints are already touched, then edges that finish
// a vertex.
std::vector<EdgeId> sweep_order(const Graph& g)
{
    const int m = g.num_edges();
    std::vector<int> remaining(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        remaining[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<char> touched(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<char> done(static_cast<std::size_t>(m), 0);
    std::vector<EdgeId> order;
    order.reserve(static_cast<std::size_t>(m));
    for (int step = 0; step < m; ++step) {
        EdgeId pick = -1;
        int pick_score = 0;
        for (EdgeId e = 0; e < m; ++e) {
            if (done[static_cast<std::size_t>(e)])
                continue;
            int score = 0;
            for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
                if (!touched[static_cast<std::size_t>(x)])
                    score += 4;
                if (remaining[static_cast<std::size_t>(x)] == 1)
                    score -= 3;
                score += std::min(remaining[static_cast<std::size_t>(x)], 8) / 4;
            }
            if (pick < 0 || score < pick_score) {
                pick = e;
                pick_score = score;
            }
        }
        done[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
        for (Vertex x : {g.edge(pick).u, g.edge(pick).v}) {
            touched[static_cast<std::size_t>(x)] = 1;
            --remaining[static_cast<std::size_t>(x)];
        }
    }
    return order;
}

int capacity_bound(const Graph& g, const ValidityProfile& profile)
{
    long long slots = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        slots += std::min(profile.capacity(v), g.degree(v));
    return static_cast<int>(std::min<long long>(g.num_edges(), slots / 2));
}

void check_result(const Graph& g, const ValidityProfile& profile, const SigmaResult& r)
{
    const VerifyReport report = verify_coloring(g, r.witness, profile);
    if (!report.valid || report.colors_used != r.sigma)
        throw std::logic_error("oracle witness failed verification");
    bool at_most_two = true;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        at_most_two = at_most_two && profile.capacity(v) <= 2;
    if (at_most_two && r.sigma > g.num_vertices())
        throw std::logic_error("oracle exceeded the |V| upper bound");
}

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, const ValidityProfile& profile)
        : g_(g), profile_(profile), order_(sweep_order(g)), palettes_(static_cast<std::size_t>(g.num_vertices())),
          assign_(order_.size(), -1)
    {
    }

    // Searches for a coloring with more than `floor` colors, stopping once
    // `goal` is reached.
    void run(int floor, int goal)
    {
        best_ = floor;
        goal_ = goal;
        dfs(0, 0);
    }

    int best() const noexcept { return best_; }
    bool found() const noexcept { return !best_assign_.empty() || order_.empty(); }

    EdgeColoring witness() const
    {
        std::vector<Color> colors(order_.size(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i)
            colors[static_cast<std::size_t>(order_[i])] = best_assign_[i];
        return EdgeColoring(std::move(colors));
    }

private:
    bool push(Vertex x, Color c)
    {
        auto& pal = palettes_[static_cast<std::size_t>(x)];
        for (auto& [color, mult] : pal)
            if (color == c) {
                ++mult;
                return true;
            }
        if (static_cast<int>(pal.size()) >= profile_.capacity(x))
            return false;
        pal.emplace_back(c, 1);
        return true;
    }

    void pop(Vertex x, Color c)
    {
        auto& pal = palettes_[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < pal.size(); ++i)
            if (pal[i].first == c) {
                if (--pal[i].second == 0)
                    pal.erase(pal.begin() + static_cast<std::ptrdiff_t>(i));
                return;
            }
    }

    void dfs(std::size_t pos, int used)
    {
        if (best_ >= goal_)
            return;
        const int left = static_cast<int>(order_.size() - pos);
        if (used + left <= best_)
            return;
        if (left == 0) {
            best_ = used;
            best_assign_ = assign_;
            return;
        }
        const Edge& e = g_.edge(order_[pos]);
        // New class first, then existing ones.
        for (int step = 0; step <= used; ++step) {
            const Color c = step == 0 ? used : step - 1;
            if (!push(e.u, c))
                continue;
            if (push(e.v, c)) {
                assign_[pos] = c;
                dfs(pos + 1, c == used ? used + 1 : used);
                pop(e.v, c);
            }
            pop(e.u, c);
            if (best_ >= goal_)
                return;
        }
    }

    const Graph& g_;
    const ValidityProfile& profile_;
    std::vector<EdgeId> order_;
    std::vector<std::vector<std::pair<Color, int>>> palettes_;
    std::vector<Color> assign_;
    std::vector<Color> best_assign_;
    int best_ = 0;
    int goal_ = 0;
};

void check_limit(const Graph& g, int edge_limit)
{
    if (g.num_edges() > edge_limit)
        throw EdgeLimitExceeded(g.num_edges(), edge_limit);
}

} // namespace

SigmaResult sigma_exact(const Graph& g, const ValidityProfile& profile, int edge_limit)
{
    check_limit(g, edge_limit);
    profile.check_covers(g.num_vertices());
    SigmaResult result;
    if (g.num_edges() == 0)
        return result;
    PartitionSearch search(g, profile);
    search.run(0, capacity_bound(g, profile));
    result.sigma = search.best();
    result.witness = search.witness();
    check_result(g, profile, result);
    return result;
}

bool sigma_threshold(const Graph& g, int k, const ValidityProfile& profile, int edge_limit)
{
    check_limit(g, edge_limit);
    profile.check_covers(g.num_vertices());
    if (k <= 0)
        return true;
    if (k > capacity_bound(g, profile))
        return false;
    PartitionSearch search(g, profile);
    search.run(k - 1, k);
    return search.best() >= k;
}

// ---------------------------------------------------------------------------
// Frontier sweep.
//
// After processing a prefix of the edge order, only the palettes of vertices
// that still have unprocessed edges can influence the rest. A color that no
// such vertex carries is never worth reusing (renaming its future uses to a
// fresh color keeps validity and adds a color), so the state is the tuple of
// those palettes up to relabeling, and the value is the best color count.

namespace {

constexpr unsigned char kSep = 0xFF;
constexpr int kMaxLabels = 250;

struct Child {
    std::string key;
    std::array<int, kMaxLabels + 1> relabel{}; // old label -> new label
};

class FrontierSweep {
public:
    FrontierSweep(const Graph& g, const ValidityProfile& profile, std::size_t state_limit)
        : g_(g), profile_(profile), order_(sweep_order(g)), state_limit_(state_limit)
    {
        const int n = g.num_vertices();
        std::vector<int> remaining(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            remaining[static_cast<std::size_t>(v)] = g.degree(v);
        std::vector<char> touched(static_cast<std::size_t>(n), 0);
        active_.emplace_back(); // before the first edge
        for (EdgeId e : order_) {
            for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
                touched[static_cast<std::size_t>(x)] = 1;
                --remaining[static_cast<std::size_t>(x)];
            }
            std::vector<Vertex> act;
            for (Vertex v = 0; v < n; ++v)
                if (touched[static_cast<std::size_t>(v)] && remaining[static_cast<std::size_t>(v)] > 0)
                    act.push_back(v);
            active_.push_back(std::move(act));
        }
    }

    SigmaResult run()
    {
        const std::size_t m = order_.size();
        layers_.assign(m + 1, Layer{});
        layers_[0].keys.emplace_back();
        layers_[0].count.push_back(0);
        layers_[0].parent.push_back(-1);
        layers_[0].choice.push_back(-1);
        std::size_t total = 1;
        for (std::size_t j = 0; j < m; ++j) {
            Layer& next = layers_[j + 1];
            std::unordered_map<std::string, int> index;
            const Layer& cur = layers_[j];
            for (int s = 0; s < static_cast<int>(cur.keys.size()); ++s) {
                const Decoded parent = decode(cur.keys[static_cast<std::size_t>(s)]);
                for (int c = 0; c <= parent.labels; ++c) {
                    Child child;
                    if (!transition(parent, j, c, child))
                        continue;
                    const int value = cur.count[static_cast<std::size_t>(s)] + (c == parent.labels ? 1 : 0);
                    auto [it, inserted] = index.emplace(child.key, static_cast<int>(next.keys.size()));
                    if (inserted) {
                        next.keys.push_back(std::move(child.key));
                        next.count.push_back(value);
                        next.parent.push_back(s);
                        next.choice.push_back(c);
                        if (++total > state_limit_)
                            throw Refusal("frontier sweep exceeded its state limit of " +
                                          std::to_string(state_limit_));
                    } else if (value > next.count[static_cast<std::size_t>(it->second)]) {
                        next.count[static_cast<std::size_t>(it->second)] = value;
                        next.parent[static_cast<std::size_t>(it->second)] = s;
                        next.choice[static_cast<std::size_t>(it->second)] = c;
                    }
                }
            }
            if (next.keys.empty())
                throw std::logic_error("frontier sweep lost every state");
        }
        return reconstruct();
    }

private:
    struct Layer {
        std::vector<std::string> keys;
        std::vector<int> count;
        std::vector<int> parent;
        std::vector<int> choice;
    };

    struct Decoded {
        std::vector<std::vector<int>> palettes; // aligned with the active list
        int labels = 0;                         // labels are 0..labels-1
    };

    static Decoded decode(const std::string& key)
    {
        Decoded d;
        d.palettes.emplace_back();
        for (unsigned char ch : key) {
            if (ch == kSep) {
                d.palettes.emplace_back();
                continue;
            }
            d.palettes.back().push_back(ch);
            d.labels = std::max(d.labels, static_cast<int>(ch) + 1);
        }
        d.palettes.pop_back();
        return d;
    }

    // Colors edge order_[j] with label `c` (c == parent.labels means fresh).
    bool transition(const Decoded& parent, std::size_t j, int c, Child& child) const
    {
        const Edge& e = g_.edge(order_[j]);
        const std::vector<Vertex>& before = active_[j];
        const std::vector<Vertex>& after = active_[j + 1];
        auto palette_before = [&](Vertex x) -> std::vector<int> {
            const auto it = std::lower_bound(before.begin(), before.end(), x);
            if (it != before.end() && *it == x)
                return parent.palettes[static_cast<std::size_t>(it - before.begin())];
            return {};
        };
        std::vector<int> pu = palette_before(e.u);
        std::vector<int> pv = palette_before(e.v);
        for (auto* p : {&pu, &pv})
            if (std::find(p->begin(), p->end(), c) == p->end()) {
                p->push_back(c);
                std::sort(p->begin(), p->end());
            }
        if (static_cast<int>(pu.size()) > profile_.capacity(e.u) ||
            static_cast<int>(pv.size()) > profile_.capacity(e.v))
            return false;

        child.relabel.fill(-1);
        int next_label = 0;
        child.key.clear();
        std::size_t bi = 0;
        std::vector<int> labels;
        for (Vertex x : after) {
            const std::vector<int>* pal = nullptr;
            if (x == e.u)
                pal = &pu;
            else if (x == e.v)
                pal = &pv;
            else {
                while (before[bi] != x)
                    ++bi;
                pal = &parent.palettes[bi];
            }
            labels.clear();
            for (int old : *pal) {
                int& slot = child.relabel[static_cast<std::size_t>(old)];
                if (slot < 0) {
                    if (next_label >= kMaxLabels)
                        throw Refusal("frontier sweep ran out of color labels");
                    slot = next_label++;
                }
                labels.push_back(slot);
            }
            std::sort(labels.begin(), labels.end());
            for (int l : labels)
                child.key.push_back(static_cast<char>(l));
            child.key.push_back(static_cast<char>(kSep));
        }
        return true;
    }

    SigmaResult reconstruct() const
    {
        const std::size_t m = order_.size();
        SigmaResult result;
        result.sigma = layers_[m].count.front();
        std::vector<int> state_at(m + 1, 0);
        for (std::size_t j = m; j > 0; --j)
            state_at[j - 1] = layers_[j].parent[static_cast<std::size_t>(state_at[j])];
        std::vector<Color> colors(m, 0);
        std::vector<int> real; // label -> actual color, for the current layer
        int next_color = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const Decoded parent = decode(layers_[j].keys[static_cast<std::size_t>(state_at[j])]);
            const int c = layers_[j + 1].choice[static_cast<std::size_t>(state_at[j + 1])];
            const int actual = c < parent.labels ? real[static_cast<std::size_t>(c)] : next_color++;
            colors[static_cast<std::size_t>(order_[j])] = actual;
            Child child;
            transition(parent, j, c, child);
            std::vector<int> next_real;
            for (int old = 0; old <= parent.labels; ++old) {
                const int nl = child.relabel[static_cast<std::size_t>(old)];
                if (nl < 0)
                    continue;
                if (static_cast<int>(next_real.size()) <= nl)
                    next_real.resize(static_cast<std::size_t>(nl) + 1, -1);
                next_real[static_cast<std::size_t>(nl)] =
                    old < parent.labels ? real[static_cast<std::size_t>(old)] : actual;
            }
            real = std::move(next_real);
        }
        result.witness = EdgeColoring(std::move(colors)).normalized();
        return result;
    }

    const Graph& g_;
    const ValidityProfile& profile_;
    std::vector<EdgeId> order_;
    std::vector<std::vector<Vertex>> active_;
    std::vector<Layer> layers_;
    std::size_t state_limit_;
};

} // namespace

SigmaResult sigma_frontier(const Graph& g, const ValidityProfile& profile, std::size_t state_limit)
{
    profile.check_covers(g.num_vertices());
    if (g.num_edges() == 0)
        return {};
    FrontierSweep sweep(g, profile, state_limit);
    SigmaResult result = sweep.run();
    check_result(g, profile, result);
    return result;
}

} // namespace mec
