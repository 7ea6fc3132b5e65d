#include "tristar/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace tristar {

BipartiteColouredGraph::BipartiteColouredGraph(std::vector<Vertex> labels_a, std::vector<Vertex> labels_b,
                                               std::vector<BipartiteEdge> edges, int max_colour)
    : labels_a_(std::move(labels_a)), labels_b_(std::move(labels_b)), edges_(std::move(edges)),
      max_colour_(max_colour)
{
    if (max_colour_ < 0)
        throw std::invalid_argument("bipartite graph: negative colour count");
    degree_a_.assign(labels_a_.size(), 0);
    degree_b_.assign(labels_b_.size(), 0);
    table_a_.assign(labels_a_.size() * static_cast<std::size_t>(max_colour_ + 1), 0);
    table_b_.assign(labels_b_.size() * static_cast<std::size_t>(max_colour_ + 1), 0);

    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        if (e.a < 0 || e.a >= size_a() || e.b < 0 || e.b >= size_b())
            throw std::invalid_argument("bipartite graph: edge endpoint out of range");
        if (static_cast<int>(e.colour) > max_colour_)
            throw std::invalid_argument("bipartite graph: edge colour above max_colour");
        if (!seen.emplace(e.a, e.b).second)
            throw std::invalid_argument("bipartite graph: repeated edge (" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + ")");
        ++degree_a_[static_cast<std::size_t>(e.a)];
        ++degree_b_[static_cast<std::size_t>(e.b)];
        ++table_a_[slot(e.a, e.colour)];
        ++table_b_[slot(e.b, e.colour)];
    }
}

BipartiteColouredGraph BipartiteColouredGraph::unlabelled(int size_a, int size_b, std::vector<BipartiteEdge> edges,
                                                          int max_colour)
{
    std::vector<Vertex> a(static_cast<std::size_t>(size_a));
    std::vector<Vertex> b(static_cast<std::size_t>(size_b));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    return {std::move(a), std::move(b), std::move(edges), max_colour};
}

std::vector<Colour> BipartiteColouredGraph::colours_at_a(int a) const
{
    std::vector<Colour> out;
    for (int k = 1; k <= max_colour_; ++k)
        if (table_a_[slot(a, static_cast<Colour>(k))] > 0)
            out.push_back(static_cast<Colour>(k));
    return out;
}

std::vector<Colour> BipartiteColouredGraph::colours_at_b(int b) const
{
    std::vector<Colour> out;
    for (int k = 1; k <= max_colour_; ++k)
        if (table_b_[slot(b, static_cast<Colour>(k))] > 0)
            out.push_back(static_cast<Colour>(k));
    return out;
}

Rational lemma1_bound(std::int64_t size_a, std::int64_t size_b, std::int64_t edges)
{
    if (size_a < 1 || size_b < 1)
        throw std::invalid_argument("lemma1_bound: side sizes must be at least 1");
    return (Rational(1, size_a) + Rational(1, size_b)) * Rational(edges);
}

Rational lemma2_bound(std::int64_t size_a, std::int64_t size_b, std::int64_t r, std::int64_t t, std::int64_t edges)
{
    if (size_a < 1 || size_b < 1 || r < 1 || t < 1)
        throw std::invalid_argument("lemma2_bound: sizes and colour limits must be at least 1");
    return (Rational(1, detail::checked_mul(size_a, r)) + Rational(1, detail::checked_mul(size_b, t))) *
           Rational(edges);
}

BipartiteDoubleStar max_double_star_bipartite(const BipartiteColouredGraph& g, bool ignore_colours)
{
    if (g.edges().empty())
        throw std::invalid_argument("max_double_star_bipartite: empty edge set");
    BipartiteDoubleStar best{{}, -1};
    for (const auto& e : g.edges()) {
        const int value = ignore_colours ? g.degree_a(e.a) + g.degree_b(e.b)
                                         : g.colour_degree_a(e.a, e.colour) + g.colour_degree_b(e.b, e.colour);
        if (value > best.value)
            best = {e, value};
    }
    return best;
}

BipartiteDoubleStar max_mono_double_star_bipartite(const BipartiteColouredGraph& g, int r, int t)
{
    if (r < 1 || t < 1)
        throw std::invalid_argument("max_mono_double_star_bipartite: colour limits must be at least 1");
    for (int a = 0; a < g.size_a(); ++a) {
        auto seen = g.colours_at_a(a).size() + (g.colour_degree_a(a, 0) > 0 ? 1 : 0);
        if (static_cast<int>(seen) > r)
            throw PreconditionError("colour limit violated: side-A vertex " + std::to_string(g.labels_a()[a]) +
                                    " sees " + std::to_string(seen) + " colours, limit " + std::to_string(r));
    }
    for (int b = 0; b < g.size_b(); ++b) {
        auto seen = g.colours_at_b(b).size() + (g.colour_degree_b(b, 0) > 0 ? 1 : 0);
        if (static_cast<int>(seen) > t)
            throw PreconditionError("colour limit violated: side-B vertex " + std::to_string(g.labels_b()[b]) +
                                    " sees " + std::to_string(seen) + " colours, limit " + std::to_string(t));
    }
    return max_double_star_bipartite(g, false);
}

G2Result build_g2(const ColourClassView& view, const DoubleStar& star)
{
    const int n = view.n();
    const Colour excluded = star.colour;
    view.check_colour(excluded);
    // re-derive the vertex set rather than trusting the caller's copy
    const DoubleStar actual = make_double_star(view, excluded, star.x, star.y);
    if (actual.vertices != star.vertices)
        throw PreconditionError("build_g2: vertex set does not match the double star on its centres");
    if (star.order() >= n)
        throw PreconditionError("build_g2: empty complement (double star spans all vertices)");

    VertexSet in_u(n);
    for (Vertex v : star.vertices)
        in_u.insert(v);
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (!in_u.contains(v))
            outside.push_back(v);

    std::vector<BipartiteEdge> edges;
    std::vector<int> outward(star.vertices.size(), 0);
    for (std::size_t i = 0; i < star.vertices.size(); ++i) {
        const Vertex u = star.vertices[i];
        // each member must see the excluded colour inside U, so it keeps at most r-1 colours in G2
        VertexSet inside = view.neighbours(excluded, u) & in_u;
        if (inside.empty())
            throw PreconditionError("build_g2: vertex " + std::to_string(u) + " has no colour-" +
                                    std::to_string(excluded) + " edge inside U");
        for (std::size_t j = 0; j < outside.size(); ++j) {
            const Colour c = view.colour(u, outside[j]);
            if (c == excluded)
                ++outward[i];
            else
                edges.push_back({static_cast<int>(i), static_cast<int>(j), c});
        }
    }
    return {BipartiteColouredGraph(star.vertices, std::move(outside), std::move(edges), view.m()), excluded,
            std::move(outward)};
}

G2Result build_g2(const EdgeColouring& colouring, const DoubleStar& star)
{
    return build_g2(ColourClassView(colouring), star);
}

} // namespace tristar
