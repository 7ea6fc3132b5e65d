#include "tristar/stars.hpp"

#include <string>
#include <tuple>

namespace tristar {

namespace {

std::string edge_name(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

void check_vertex(const ColourClassView& view, Vertex v)
{
    if (v < 0 || v >= view.n())
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

} // namespace

int double_star_order(const ColourClassView& view, int c, Vertex x, Vertex y)
{
    view.check_colour(c);
    check_vertex(view, x);
    check_vertex(view, y);
    if (x == y || view.colour(x, y) != c)
        throw PreconditionError("centre edge not in colour: " + edge_name(x, y) + " is not colour " +
                                std::to_string(c));
    const auto col = static_cast<Colour>(c);
    return VertexSet::union_count(view.neighbours(col, x), view.neighbours(col, y));
}

int double_star_order(const EdgeColouring& colouring, int c, Vertex x, Vertex y)
{
    return double_star_order(ColourClassView(colouring), c, x, y);
}

DoubleStar make_double_star(const ColourClassView& view, int c, Vertex x, Vertex y)
{
    double_star_order(view, c, x, y);
    const auto col = static_cast<Colour>(c);
    return {col, x, y, (view.neighbours(col, x) | view.neighbours(col, y)).members()};
}

DoubleStar max_double_star(const ColourClassView& view)
{
    const int n = view.n();
    int best = 0;
    Colour best_c = 0;
    Vertex best_x = 0;
    Vertex best_y = 0;
    // iteration order is already (colour, x, y) ascending; strict > keeps the tie-break
    for (int c = 1; c <= view.m(); ++c) {
        const auto col = static_cast<Colour>(c);
        for (Vertex x = 0; x < n; ++x) {
            const VertexSet& nx = view.neighbours(col, x);
            for (Vertex y : nx.members()) {
                if (y <= x)
                    continue;
                int order = VertexSet::union_count(nx, view.neighbours(col, y));
                if (order > best) {
                    best = order;
                    best_c = col;
                    best_x = x;
                    best_y = y;
                }
            }
        }
    }
    return make_double_star(view, best_c, best_x, best_y);
}

DoubleStar max_double_star(const EdgeColouring& colouring) { return max_double_star(ColourClassView(colouring)); }

int triple_star_order(const ColourClassView& view, int c, Vertex u, Vertex x, Vertex w)
{
    view.check_colour(c);
    check_vertex(view, u);
    check_vertex(view, x);
    check_vertex(view, w);
    if (u == w)
        throw PreconditionError("outer centres coincide: u = w = " + std::to_string(u));
    if (u == x || view.colour(x, u) != c)
        throw PreconditionError("centre edge not in colour: " + edge_name(x, u) + " is not colour " +
                                std::to_string(c));
    if (w == x || view.colour(x, w) != c)
        throw PreconditionError("centre edge not in colour: " + edge_name(x, w) + " is not colour " +
                                std::to_string(c));
    const auto col = static_cast<Colour>(c);
    return VertexSet::union_count(view.neighbours(col, u), view.neighbours(col, x), view.neighbours(col, w));
}

int triple_star_order(const EdgeColouring& colouring, int c, Vertex u, Vertex x, Vertex w)
{
    return triple_star_order(ColourClassView(colouring), c, u, x, w);
}

TripleStar make_triple_star(const ColourClassView& view, int c, Vertex u, Vertex x, Vertex w)
{
    triple_star_order(view, c, u, x, w);
    const auto col = static_cast<Colour>(c);
    VertexSet all = view.neighbours(col, u);
    all |= view.neighbours(col, x);
    all |= view.neighbours(col, w);
    return {col, {u, x, w}, all.members(), false};
}

std::optional<TripleStar> max_triple_star(const ColourClassView& view)
{
    const int n = view.n();
    int best = 0;
    Colour best_c = 0;
    std::tuple<Vertex, Vertex, Vertex> best_centres{};
    for (int c = 1; c <= view.m(); ++c) {
        const auto col = static_cast<Colour>(c);
        for (Vertex x = 0; x < n; ++x) {
            if (view.degree(col, x) < 2)
                continue;
            const VertexSet& nx = view.neighbours(col, x);
            const std::vector<Vertex> arms = nx.members();
            for (std::size_t i = 0; i < arms.size(); ++i) {
                const VertexSet partial = nx | view.neighbours(col, arms[i]);
                for (std::size_t j = i + 1; j < arms.size(); ++j) {
                    int order = VertexSet::union_count(partial, view.neighbours(col, arms[j]));
                    if (order < best)
                        continue;
                    std::tuple<Vertex, Vertex, Vertex> centres{arms[i], x, arms[j]};
                    if (order > best || (col == best_c && centres < best_centres)) {
                        best = order;
                        best_c = col;
                        best_centres = centres;
                    }
                }
            }
        }
    }
    if (best == 0)
        return std::nullopt;
    auto [u, x, w] = best_centres;
    return make_triple_star(view, best_c, u, x, w);
}

std::optional<TripleStar> max_triple_star(const EdgeColouring& colouring)
{
    return max_triple_star(ColourClassView(colouring));
}

} // namespace tristar
