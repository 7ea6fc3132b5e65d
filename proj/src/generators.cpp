#include "tristar/generators.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "tristar/random.hpp"

namespace tristar {

namespace {

void check_prime(int q)
{
    if (!is_prime(q))
        throw std::invalid_argument("plane order must be prime (got " + std::to_string(q) + ")");
}

int checked_vertex_count(std::int64_t points, int mult)
{
    if (mult < 1)
        throw std::invalid_argument("mult must be at least 1");
    const std::int64_t n = points * mult;
    if (n > kMaxGeneratedVertices)
        throw std::overflow_error("vertex count " + std::to_string(n) + " exceeds " +
                                  std::to_string(kMaxGeneratedVertices));
    return static_cast<int>(n);
}

using Triple = std::array<int, 3>;

/// Normalized nonzero triples over Z_q in lexicographic order.
std::vector<Triple> projective_points(int q)
{
    std::vector<Triple> out;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                const int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead == 1)
                    out.push_back({a, b, c});
            }
    return out;
}

} // namespace

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

int PlaneSpec::vertex_count() const
{
    return kind == PlaneKind::affine ? mult * q * q : mult * (q * q + q + 1);
}

int PlaneSpec::colour_count() const { return kind == PlaneKind::affine ? q + 1 : q * q + q + 1; }

EdgeColouring affine_colouring(int q, int mult)
{
    check_prime(q);
    const int n = checked_vertex_count(static_cast<std::int64_t>(q) * q, mult);
    EdgeColouring out(n, q + 1);

    const int points = q * q;
    std::vector<Colour> line_class(static_cast<std::size_t>(points) * static_cast<std::size_t>(points), 0);
    for (int p1 = 0; p1 < points; ++p1) {
        const int x1 = p1 / q;
        const int y1 = p1 % q;
        for (int p2 = p1 + 1; p2 < points; ++p2) {
            const int x2 = p2 / q;
            const int y2 = p2 % q;
            // the pair must share an intercept in exactly one parallel class
            int hits = 0;
            Colour found = 0;
            for (int s = 0; s < q; ++s) {
                if (((y1 - s * x1) % q + q) % q == ((y2 - s * x2) % q + q) % q) {
                    ++hits;
                    found = static_cast<Colour>(s + 1);
                }
            }
            if (x1 == x2) {
                ++hits;
                found = static_cast<Colour>(q + 1);
            }
            if (hits != 1)
                throw std::logic_error("affine plane: points do not determine a unique line");
            line_class[static_cast<std::size_t>(p1) * points + p2] = found;
        }
    }

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const int pu = u / mult;
            const int pv = v / mult;
            out.set_colour(u, v, pu == pv ? Colour{1} : line_class[static_cast<std::size_t>(pu) * points + pv]);
        }
    return out;
}

EdgeColouring projective_local_colouring(int q, int mult)
{
    check_prime(q);
    const int points = q * q + q + 1;
    const int n = checked_vertex_count(points, mult);
    if (points > 65535)
        throw std::overflow_error("projective plane: too many colours");
    const std::vector<Triple> elems = projective_points(q);

    auto incident = [&](int line, int point) {
        const Triple& l = elems[static_cast<std::size_t>(line)];
        const Triple& p = elems[static_cast<std::size_t>(point)];
        return (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0;
    };

    std::vector<Colour> first_line(static_cast<std::size_t>(points), 0);
    for (int p = 0; p < points; ++p)
        for (int l = 0; l < points; ++l)
            if (incident(l, p)) {
                first_line[static_cast<std::size_t>(p)] = static_cast<Colour>(l + 1);
                break;
            }

    std::vector<Colour> common(static_cast<std::size_t>(points) * static_cast<std::size_t>(points), 0);
    for (int p1 = 0; p1 < points; ++p1)
        for (int p2 = p1 + 1; p2 < points; ++p2) {
            int hits = 0;
            for (int l = 0; l < points; ++l)
                if (incident(l, p1) && incident(l, p2)) {
                    ++hits;
                    common[static_cast<std::size_t>(p1) * points + p2] = static_cast<Colour>(l + 1);
                }
            if (hits != 1)
                throw std::logic_error("projective plane: points do not determine a unique line");
        }

    EdgeColouring out(n, points);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const int pu = u / mult;
            const int pv = v / mult;
            out.set_colour(u, v,
                           pu == pv ? first_line[static_cast<std::size_t>(pu)]
                                    : common[static_cast<std::size_t>(pu) * points + pv]);
        }
    return out;
}

EdgeColouring random_colouring(int n, int r, std::uint64_t seed)
{
    if (n < 2 || r < 1)
        throw std::invalid_argument("random_colouring needs n >= 2 and r >= 1");
    if (n > kMaxGeneratedVertices)
        throw std::overflow_error("vertex count exceeds " + std::to_string(kMaxGeneratedVertices));
    if (r > 65535)
        throw std::invalid_argument("random_colouring: too many colours");
    SplitMix64 rng(seed);
    EdgeColouring out(n, r);
    for (auto& c : out.colours())
        c = static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(r)));
    return out;
}

EdgeColouring constant_colouring(int n, int r)
{
    if (n < 2 || r < 1)
        throw std::invalid_argument("constant_colouring needs n >= 2 and r >= 1");
    if (n > kMaxGeneratedVertices)
        throw std::overflow_error("vertex count exceeds " + std::to_string(kMaxGeneratedVertices));
    EdgeColouring out(n, r);
    for (auto& c : out.colours())
        c = 1;
    return out;
}

EdgeColouring generate(const PlaneSpec& spec)
{
    return spec.kind == PlaneKind::affine ? affine_colouring(spec.q, spec.mult)
                                          : projective_local_colouring(spec.q, spec.mult);
}

} // namespace tristar
