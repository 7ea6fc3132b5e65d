#pragma once

// Fixtures and naive reference computations shared by the test binaries.
// Nothing here calls into the library's algorithms.

#include <algorithm>
#include <deque>
#include <numeric>
#include <vector>

#include "tristar/bipartite.hpp"
#include "tristar/colouring.hpp"
#include "tristar/random.hpp"

namespace tristar::testing {

/// Three perfect matchings {01,23}, {02,13}, {03,12} coloured 1, 2, 3.
inline EdgeColouring proper_k4()
{
    EdgeColouring c(4, 3);
    c.set_colour(0, 1, 1);
    c.set_colour(2, 3, 1);
    c.set_colour(0, 2, 2);
    c.set_colour(1, 3, 2);
    c.set_colour(0, 3, 3);
    c.set_colour(1, 2, 3);
    return c;
}

/// Red (1) perfect matching {01, 23}; every other edge blue (2).
inline EdgeColouring red_matching_k4()
{
    EdgeColouring c(4, 2);
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j)
            c.set_colour(i, j, 2);
    c.set_colour(0, 1, 1);
    c.set_colour(2, 3, 1);
    return c;
}

/// Colour 1 on the given edges, colour 2 everywhere else.
inline EdgeColouring with_class(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    EdgeColouring c(n, 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            c.set_colour(i, j, 2);
    for (auto [u, v] : edges)
        c.set_colour(u, v, 1);
    return c;
}

/// Union-find component sizes of colour c, isolated vertices dropped, sorted descending.
inline std::vector<int> naive_component_sizes(const EdgeColouring& col, int c)
{
    const int n = col.n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (col.colour(i, j) == c) {
                parent[static_cast<std::size_t>(find(i))] = find(j);
                touched[static_cast<std::size_t>(i)] = touched[static_cast<std::size_t>(j)] = 1;
            }
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        if (touched[static_cast<std::size_t>(v)])
            ++count[static_cast<std::size_t>(find(v))];
    std::vector<int> sizes;
    for (int k : count)
        if (k > 0)
            sizes.push_back(k);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

inline int naive_max_component(const EdgeColouring& col)
{
    int best = 0;
    for (int c = 1; c <= col.m(); ++c)
        for (int s : naive_component_sizes(col, c))
            best = std::max(best, s);
    return best;
}

/// Tree diameter by the double sweep: farthest vertex from any start, then
/// the farthest distance from it. `adj` must describe a tree.
inline int double_sweep_diameter(const std::vector<std::vector<int>>& adj)
{
    auto bfs = [&](int s) {
        std::vector<int> dist(adj.size(), -1);
        std::deque<int> q{s};
        dist[static_cast<std::size_t>(s)] = 0;
        int far = s;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(far)])
                far = v;
            for (int u : adj[static_cast<std::size_t>(v)])
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    q.push_back(u);
                }
        }
        return std::pair{far, dist[static_cast<std::size_t>(far)]};
    };
    return bfs(bfs(0).first).second;
}

/// Relabels vertices: out.colour(perm[u], perm[v]) == in.colour(u, v).
inline EdgeColouring relabel(const EdgeColouring& in, const std::vector<Vertex>& perm)
{
    EdgeColouring out(in.n(), in.m());
    for (Vertex i = 0; i < in.n(); ++i)
        for (Vertex j = i + 1; j < in.n(); ++j)
            out.set_colour(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)], in.colour(i, j));
    return out;
}

inline std::vector<Vertex> random_permutation(int n, SplitMix64& rng)
{
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

/// Random bipartite graph with sides of 1..max_side vertices and a random
/// edge density. Edges are uncoloured.
inline BipartiteColouredGraph random_bipartite(SplitMix64& rng, int max_side)
{
    const int na = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side)));
    const int nb = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side)));
    const double density = rng.unit();
    std::vector<BipartiteEdge> edges;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            if (rng.unit() < density)
                edges.push_back({a, b, 0});
    return BipartiteColouredGraph::unlabelled(na, nb, std::move(edges), 0);
}

struct LimitedBipartite {
    BipartiteColouredGraph graph;
    int r = 1;
    int t = 1;
};

/// Random coloured bipartite graph where every A vertex sees at most r
/// colours and every B vertex at most t. Each vertex draws a palette of that
/// size; an edge may only use a colour in both palettes.
inline LimitedBipartite random_limited_bipartite(SplitMix64& rng, int max_side, int max_limit, int max_colours)
{
    const int na = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side)));
    const int nb = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side)));
    const int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_limit)));
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_limit)));
    const int colours = std::max({r, t, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_colours)))});
    auto palette = [&](int size) {
        std::vector<Colour> all(static_cast<std::size_t>(colours));
        std::iota(all.begin(), all.end(), Colour{1});
        for (std::size_t i = all.size(); i > 1; --i)
            std::swap(all[i - 1], all[rng.below(i)]);
        all.resize(static_cast<std::size_t>(size));
        return all;
    };
    std::vector<std::vector<Colour>> pa, pb;
    for (int a = 0; a < na; ++a)
        pa.push_back(palette(r));
    for (int b = 0; b < nb; ++b)
        pb.push_back(palette(t));
    const double density = rng.unit();
    std::vector<BipartiteEdge> edges;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
            if (rng.unit() >= density)
                continue;
            std::vector<Colour> shared;
            for (Colour k : pa[static_cast<std::size_t>(a)])
                if (std::find(pb[static_cast<std::size_t>(b)].begin(), pb[static_cast<std::size_t>(b)].end(), k) !=
                    pb[static_cast<std::size_t>(b)].end())
                    shared.push_back(k);
            if (!shared.empty())
                edges.push_back({a, b, shared[rng.below(shared.size())]});
        }
    return {BipartiteColouredGraph::unlabelled(na, nb, std::move(edges), colours), r, t};
}

/// Largest d(a)+d(b) over edges, recounting degrees from the edge list.
inline int naive_bipartite_max(const BipartiteColouredGraph& g, bool by_colour)
{
    int best = 0;
    for (const auto& e : g.edges()) {
        int value = 0;
        for (const auto& f : g.edges())
            if ((f.a == e.a || f.b == e.b) && (!by_colour || f.colour == e.colour))
                ++value;
        // the edge itself was counted at both ends
        best = std::max(best, value + 1);
    }
    return best;
}

} // namespace tristar::testing
