#pragma once

#include <vector>

#include "tristar/colouring.hpp"
#include "tristar/rational.hpp"
#include "tristar/stars.hpp"

namespace tristar {

/// Edge between side-A index `a` and side-B index `b`. colour 0 means the
/// edge carries no colour.
struct BipartiteEdge {
    int a = 0;
    int b = 0;
    Colour colour = 0;
};

/// Simple bipartite graph with optionally coloured edges and per-vertex,
/// per-colour degree tables. Vertices are addressed by side index; the
/// labels map them back to an ambient vertex numbering.
class BipartiteColouredGraph {
public:
    /// Throws std::invalid_argument on an out-of-range endpoint, a colour
    /// above max_colour, or a repeated edge.
    BipartiteColouredGraph(std::vector<Vertex> labels_a, std::vector<Vertex> labels_b,
                           std::vector<BipartiteEdge> edges, int max_colour);

    /// Unlabelled sides: labels are 0..size-1 on both sides.
    static BipartiteColouredGraph unlabelled(int size_a, int size_b, std::vector<BipartiteEdge> edges,
                                             int max_colour);

    int size_a() const { return static_cast<int>(labels_a_.size()); }
    int size_b() const { return static_cast<int>(labels_b_.size()); }
    int max_colour() const { return max_colour_; }
    const std::vector<Vertex>& labels_a() const { return labels_a_; }
    const std::vector<Vertex>& labels_b() const { return labels_b_; }
    const std::vector<BipartiteEdge>& edges() const { return edges_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    int degree_a(int a) const { return degree_a_[static_cast<std::size_t>(a)]; }
    int degree_b(int b) const { return degree_b_[static_cast<std::size_t>(b)]; }
    int colour_degree_a(int a, Colour k) const { return table_a_[slot(a, k)]; }
    int colour_degree_b(int b, Colour k) const { return table_b_[slot(b, k)]; }
    /// I(v): colours on edges at v, ascending (uncoloured edges excluded).
    std::vector<Colour> colours_at_a(int a) const;
    std::vector<Colour> colours_at_b(int b) const;

private:
    std::size_t slot(int v, Colour k) const
    {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(max_colour_ + 1) + k;
    }

    std::vector<Vertex> labels_a_;
    std::vector<Vertex> labels_b_;
    std::vector<BipartiteEdge> edges_;
    int max_colour_ = 0;
    std::vector<int> degree_a_;
    std::vector<int> degree_b_;
    std::vector<int> table_a_;
    std::vector<int> table_b_;
};

struct BipartiteDoubleStar {
    BipartiteEdge edge;
    /// d(a)+d(b), or d_k(a)+d_k(b) in the monochromatic variants.
    int value = 0;
};

/// (1/|A| + 1/|B|)|E|.
Rational lemma1_bound(std::int64_t size_a, std::int64_t size_b, std::int64_t edges);

/// (1/(|A|r) + 1/(|B|t))|E|.
Rational lemma2_bound(std::int64_t size_a, std::int64_t size_b, std::int64_t r, std::int64_t t,
                      std::int64_t edges);

/// Edge maximizing d(a)+d(b) (ignore_colours) or d_k(a)+d_k(b) over edges of
/// colour k. First maximum in edge-list order wins. Throws on an empty graph.
BipartiteDoubleStar max_double_star_bipartite(const BipartiteColouredGraph& g, bool ignore_colours);

/// Monochromatic maximum under per-side colour limits. Throws
/// PreconditionError naming the first vertex seeing more than r (side A) or
/// t (side B) colours.
BipartiteDoubleStar max_mono_double_star_bipartite(const BipartiteColouredGraph& g, int r, int t);

struct G2Result {
    BipartiteColouredGraph graph;
    Colour excluded = 0;
    /// outward[i] = |N_excluded(U[i]) \ U| for the i-th member of U (side A order).
    std::vector<int> outward;
};

/// Bipartite graph between U's vertex set (side A) and its complement (side
/// B) holding every cross edge whose colour differs from U's colour.
G2Result build_g2(const ColourClassView& view, const DoubleStar& star);
G2Result build_g2(const EdgeColouring& colouring, const DoubleStar& star);

} // namespace tristar
