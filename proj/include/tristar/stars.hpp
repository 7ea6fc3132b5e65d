#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tristar/colouring.hpp"

namespace tristar {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two colour-c stars centred at x and y, joined by the edge {x, y}.
/// vertices = N_c(x) ∪ N_c(y), sorted.
struct DoubleStar {
    Colour colour = 0;
    Vertex x = 0;
    Vertex y = 0;
    std::vector<Vertex> vertices;

    int order() const { return static_cast<int>(vertices.size()); }
};

/// Three colour-c stars centred at u, x, w with x adjacent to both u and w.
/// vertices = N_c(u) ∪ N_c(x) ∪ N_c(w), sorted.
///
/// When `degenerate` is set the witness is a single colour-c edge and
/// `centres` holds its two endpoints; this form only ever stands in for a
/// bound of at most 2.
struct TripleStar {
    Colour colour = 0;
    std::vector<Vertex> centres;
    std::vector<Vertex> vertices;
    bool degenerate = false;

    int order() const { return static_cast<int>(vertices.size()); }
};

/// |N_c(x) ∪ N_c(y)|; throws PreconditionError if {x,y} is not colour c.
int double_star_order(const ColourClassView& view, int c, Vertex x, Vertex y);
int double_star_order(const EdgeColouring& colouring, int c, Vertex x, Vertex y);

DoubleStar make_double_star(const ColourClassView& view, int c, Vertex x, Vertex y);

/// Largest monochromatic double star. Ties: smallest colour, then the
/// lexicographically smallest centre pair (x < y).
DoubleStar max_double_star(const ColourClassView& view);
DoubleStar max_double_star(const EdgeColouring& colouring);

/// |N_c(u) ∪ N_c(x) ∪ N_c(w)|; each violated precondition is reported by name.
int triple_star_order(const ColourClassView& view, int c, Vertex u, Vertex x, Vertex w);
int triple_star_order(const EdgeColouring& colouring, int c, Vertex u, Vertex x, Vertex w);

TripleStar make_triple_star(const ColourClassView& view, int c, Vertex u, Vertex x, Vertex w);

/// Largest monochromatic triple star, or nullopt when no colour class has a
/// path on two edges. Centres are reported with u < w; ties go to the
/// smallest colour, then the lexicographically smallest (u, x, w).
std::optional<TripleStar> max_triple_star(const ColourClassView& view);
std::optional<TripleStar> max_triple_star(const EdgeColouring& colouring);

} // namespace tristar
