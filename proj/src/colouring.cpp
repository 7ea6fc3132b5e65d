#include "tristar/colouring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace tristar {

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0)
            os << "; ";
        os << violations[i].message;
    }
    return os.str();
}

int EdgeColouring::colours_used() const
{
    std::set<Colour> seen(colours_.begin(), colours_.end());
    seen.erase(0);
    return static_cast<int>(seen.size());
}

ValidationReport validate(const EdgeColouring& colouring)
{
    ValidationReport report;
    const int n = colouring.n();
    const int m = colouring.m();
    if (n < 2)
        report.violations.push_back({"n >= 2 required (got " + std::to_string(n) + ")"});
    if (m < 1)
        report.violations.push_back({"m >= 1 required (got " + std::to_string(m) + ")"});
    if (n < 0)
        return report;

    const auto expected = static_cast<std::size_t>(edge_count(n));
    const auto& colours = colouring.colours();
    if (colours.size() != expected) {
        report.violations.push_back({"expected " + std::to_string(expected) + " edge colours, got " +
                                     std::to_string(colours.size())});
        return report;
    }

    std::size_t k = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++k) {
            const Colour c = colours[k];
            const std::string edge = "{" + std::to_string(i) + "," + std::to_string(j) + "}";
            if (c == 0)
                report.violations.push_back({"missing edge colour on " + edge});
            else if (static_cast<int>(c) > m)
                report.violations.push_back({"label out of range on " + edge + ": " + std::to_string(c) +
                                             " not in 1.." + std::to_string(m)});
        }
    }
    return report;
}

void require_valid(const EdgeColouring& colouring)
{
    auto report = validate(colouring);
    if (!report.ok())
        throw InvalidColouring("invalid colouring: " + report.violations.front().message);
}

ColourClassView::ColourClassView(EdgeColouring colouring) : colouring_(std::move(colouring))
{
    require_valid(colouring_);
    const int n = colouring_.n();
    const auto slots = static_cast<std::size_t>(colouring_.m()) * static_cast<std::size_t>(n);
    adjacency_.assign(slots, VertexSet(n));
    degrees_.assign(slots, 0);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const Colour c = colouring_.colour(i, j);
            adjacency_[slot(c, i)].insert(j);
            adjacency_[slot(c, j)].insert(i);
            ++degrees_[slot(c, i)];
            ++degrees_[slot(c, j)];
        }
    }
}

void ColourClassView::check_colour(int c) const
{
    if (c < 1 || c > m())
        throw ColourOutOfRange("colour " + std::to_string(c) + " out of range 1.." + std::to_string(m()));
}

std::optional<Vertex> LocalityReport::first_exceeding(int r) const
{
    for (std::size_t v = 0; v < incident.size(); ++v)
        if (static_cast<int>(incident[v].size()) > r)
            return static_cast<Vertex>(v);
    return std::nullopt;
}

LocalityReport locality(const EdgeColouring& colouring)
{
    require_valid(colouring);
    const int n = colouring.n();
    LocalityReport report;
    report.incident.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        std::set<Colour> seen;
        for (Vertex u = 0; u < n; ++u)
            if (u != v)
                seen.insert(colouring.colour(u, v));
        report.incident[static_cast<std::size_t>(v)].assign(seen.begin(), seen.end());
        report.locality = std::max(report.locality, static_cast<int>(seen.size()));
    }
    return report;
}

std::vector<Component> colour_components(const ColourClassView& view, int c)
{
    view.check_colour(c);
    const auto colour = static_cast<Colour>(c);
    const int n = view.n();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Component> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)] || view.degree(colour, s) == 0)
            continue;
        Component comp;
        std::deque<Vertex> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Vertex u : view.neighbours(colour, v).members()) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    queue.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Component> colour_components(const EdgeColouring& colouring, int c)
{
    return colour_components(ColourClassView(colouring), c);
}

MaxComponent max_component(const ColourClassView& view)
{
    MaxComponent best;
    for (int c = 1; c <= view.m(); ++c) {
        // components arrive ordered by minimum vertex, so strict > keeps the tie-break
        for (auto& comp : colour_components(view, c)) {
            if (static_cast<int>(comp.size()) > best.size) {
                best.colour = static_cast<Colour>(c);
                best.size = static_cast<int>(comp.size());
                best.vertices = comp;
            }
        }
    }
    return best;
}

MaxComponent max_component(const EdgeColouring& colouring) { return max_component(ColourClassView(colouring)); }

std::optional<int> subgraph_diameter(const EdgeColouring& colouring, int c, const std::vector<Vertex>& subset)
{
    if (c < 1 || c > colouring.m())
        throw ColourOutOfRange("colour " + std::to_string(c) + " out of range 1.." + std::to_string(colouring.m()));
    if (subset.empty())
        throw std::invalid_argument("subgraph_diameter: empty vertex set");

    std::vector<Vertex> nodes(subset);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const std::size_t k = nodes.size();
    const auto colour = static_cast<Colour>(c);

    int diameter = 0;
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<int> dist(k, -1);
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        std::size_t reached = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t u = 0; u < k; ++u) {
                if (dist[u] < 0 && colouring.colour(nodes[v], nodes[u]) == colour) {
                    dist[u] = dist[v] + 1;
                    diameter = std::max(diameter, dist[u]);
                    ++reached;
                    queue.push_back(u);
                }
            }
        }
        if (reached != k)
            return std::nullopt;
    }
    return diameter;
}

const KnownBound* BoundRegistry::find(const std::string& name) const
{
    for (const auto& b : bounds)
        if (b.name == name)
            return &b;
    return nullptr;
}

Rational global_bound(int n, int r)
{
    if (r < 2)
        throw std::invalid_argument("global bound needs r >= 2");
    return {n, r - 1};
}

Rational local_bound(int n, int r)
{
    if (r < 1)
        throw std::invalid_argument("local bound needs r >= 1");
    return {static_cast<std::int64_t>(r) * n, static_cast<std::int64_t>(r) * r - r + 1};
}

BoundRegistry known_bounds(int n, int r, bool local)
{
    if (n < 2 || r < 1)
        throw std::invalid_argument("known_bounds needs n >= 2 and r >= 1");
    BoundRegistry reg{n, r, local, {}};
    const std::int64_t N = n;
    const std::int64_t R = r;
    if (!local) {
        if (r == 1) {
            reg.bounds.push_back({"component", Rational(N), "single colour: the whole graph"});
            return reg;
        }
        reg.bounds.push_back({"component", global_bound(n, r), "tight when an affine plane of order r-1 exists"});
        if (r == 2) {
            reg.bounds.push_back({"double_star", Rational(3 * N, 4), "two colours; asymptotically tight"});
            reg.bounds.push_back({"triple_star", Rational(7 * N, 8), "two colours; asymptotically tight"});
        } else {
            reg.bounds.push_back({"component_no_affine_plane", Rational(N * (R - 1), R * (R - 2)),
                                  "only when no affine plane of order r-1 exists"});
            reg.bounds.push_back({"double_star", Rational(N * (R + 1) + R - 1, R * R), "r >= 3"});
            reg.bounds.push_back({"triple_star", global_bound(n, r), "r >= 3; equals the component bound"});
        }
    } else {
        reg.bounds.push_back(
            {"component", local_bound(n, r), "tight when a projective plane of order r-1 exists"});
        reg.bounds.push_back({"double_star", Rational((R + 1) * N + R - 1, R * R + 1), "local colourings"});
        if (r == 2)
            reg.bounds.push_back({"double_star_two_colour", Rational(2 * N, 3), "local 2-colourings; sharp"});
        if (r >= 3)
            reg.bounds.push_back({"triple_star", local_bound(n, r), "r >= 3; equals the component bound"});
    }
    return reg;
}

} // namespace tristar
