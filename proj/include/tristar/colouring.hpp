#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tristar/rational.hpp"
#include "tristar/vertex_set.hpp"

namespace tristar {

/// Colour labels are 1..m; 0 is reserved as the "no colour" sentinel.
using Colour = std::uint16_t;

class InvalidColouring : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ColourOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Number of edges of K_n.
constexpr std::int64_t edge_count(std::int64_t n) { return n * (n - 1) / 2; }

/// Position of edge {i, j}, i < j, in row-major upper-triangular order.
constexpr std::size_t edge_index(int n, Vertex i, Vertex j)
{
    auto ii = static_cast<std::size_t>(i);
    auto nn = static_cast<std::size_t>(n);
    return ii * nn - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

struct Violation {
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// A colour on every edge of K_n. Storage is the flat upper triangle in the
/// same order the text format uses. Construction does not validate: use
/// validate() or require_valid() before handing a colouring to algorithms.
class EdgeColouring {
public:
    EdgeColouring() = default;
    EdgeColouring(int n, int m, std::vector<Colour> colours) : n_(n), m_(m), colours_(std::move(colours)) {}
    /// All edges uncoloured (sentinel 0).
    EdgeColouring(int n, int m) : n_(n), m_(m), colours_(static_cast<std::size_t>(edge_count(n > 0 ? n : 0)), 0) {}

    int n() const { return n_; }
    int m() const { return m_; }

    Colour colour(Vertex u, Vertex v) const
    {
        return u < v ? colours_[edge_index(n_, u, v)] : colours_[edge_index(n_, v, u)];
    }
    void set_colour(Vertex u, Vertex v, Colour c)
    {
        (u < v ? colours_[edge_index(n_, u, v)] : colours_[edge_index(n_, v, u)]) = c;
    }

    const std::vector<Colour>& colours() const { return colours_; }
    std::vector<Colour>& colours() { return colours_; }

    /// Number of distinct labels actually present.
    int colours_used() const;

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Colour> colours_;
};

ValidationReport validate(const EdgeColouring& colouring);

/// Throws InvalidColouring carrying the first violation.
void require_valid(const EdgeColouring& colouring);

/// Per-colour adjacency of a valid colouring: N_c(v) as bit-vectors.
class ColourClassView {
public:
    explicit ColourClassView(EdgeColouring colouring);

    int n() const { return colouring_.n(); }
    int m() const { return colouring_.m(); }
    const EdgeColouring& colouring() const { return colouring_; }
    Colour colour(Vertex u, Vertex v) const { return colouring_.colour(u, v); }

    const VertexSet& neighbours(Colour c, Vertex v) const { return adjacency_[slot(c, v)]; }
    int degree(Colour c, Vertex v) const { return degrees_[slot(c, v)]; }

    /// Throws ColourOutOfRange unless 1 <= c <= m.
    void check_colour(int c) const;

private:
    std::size_t slot(Colour c, Vertex v) const
    {
        return (static_cast<std::size_t>(c) - 1) * static_cast<std::size_t>(colouring_.n()) +
               static_cast<std::size_t>(v);
    }

    EdgeColouring colouring_;
    std::vector<VertexSet> adjacency_;
    std::vector<int> degrees_;
};

struct LocalityReport {
    /// incident[v] = sorted colours on edges at v.
    std::vector<std::vector<Colour>> incident;
    int locality = 0;

    bool is_local(int r) const { return locality <= r; }
    /// First vertex seeing more than r colours, if any.
    std::optional<Vertex> first_exceeding(int r) const;
};

LocalityReport locality(const EdgeColouring& colouring);

using Component = std::vector<Vertex>;

/// Connected components of colour c, isolated vertices excluded. Each
/// component is sorted; components are ordered by their smallest vertex.
std::vector<Component> colour_components(const ColourClassView& view, int c);
std::vector<Component> colour_components(const EdgeColouring& colouring, int c);

struct MaxComponent {
    Colour colour = 0;
    int size = 0;
    Component vertices;
};

/// Largest monochromatic component. Ties: smallest colour, then smallest
/// minimum vertex.
MaxComponent max_component(const ColourClassView& view);
MaxComponent max_component(const EdgeColouring& colouring);

/// Diameter of the colour-c subgraph induced on `subset`; nullopt when that
/// subgraph is disconnected.
std::optional<int> subgraph_diameter(const EdgeColouring& colouring, int c, const std::vector<Vertex>& subset);

struct KnownBound {
    std::string name;
    Rational value;
    std::string note;
};

struct BoundRegistry {
    int n = 0;
    int r = 0;
    bool local = false;
    std::vector<KnownBound> bounds;

    const KnownBound* find(const std::string& name) const;
};

/// Published lower bounds that apply to (n, r, local). Informational only.
BoundRegistry known_bounds(int n, int r, bool local);

/// n/(r-1), the global triple-star / component bound.
Rational global_bound(int n, int r);
/// rn/(r^2-r+1), the local triple-star / component bound.
Rational local_bound(int n, int r);

} // namespace tristar
