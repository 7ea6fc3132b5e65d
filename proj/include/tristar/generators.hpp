#pragma once

#include <cstdint>

#include "tristar/colouring.hpp"

namespace tristar {

/// Largest vertex count the generators will produce.
inline constexpr std::int64_t kMaxGeneratedVertices = 20000;

enum class PlaneKind { affine, projective };

struct PlaneSpec {
    int q = 2;
    int mult = 1;
    PlaneKind kind = PlaneKind::affine;

    int vertex_count() const;
    int colour_count() const;
};

bool is_prime(int q);

/// Colouring from the affine plane AG(2, q), q prime.
///
/// Point p (0 <= p < q^2) is (p / q, p % q); vertex v sits on point v / mult.
/// Colours 1..q are the slope classes y = s*x + b with s = colour - 1, colour
/// q+1 is the vertical class x = b. An edge between distinct points gets the
/// class of the line through them, an edge inside a point gets colour 1. Each
/// colour class splits into q components (one per line), each on
/// mult*q = n/(r-1) vertices.
EdgeColouring affine_colouring(int q, int mult);

/// Local colouring from the projective plane PG(2, q), q prime.
///
/// Points and lines are the normalized nonzero triples over Z_q (first
/// nonzero coordinate 1) in lexicographic order; line L contains point P iff
/// L.P = 0 mod q, and line i carries colour i+1. Vertex v sits on point
/// v / mult. Edges between distinct points take the colour of their unique
/// common line; edges inside a point take the smallest line through it.
EdgeColouring projective_local_colouring(int q, int mult);

/// i.i.d. uniform colours in 1..r, edges in row-major order, each drawn as
/// 1 + SplitMix64(seed).below(r).
EdgeColouring random_colouring(int n, int r, std::uint64_t seed);

/// Every edge colour 1, with m = r declared labels.
EdgeColouring constant_colouring(int n, int r);

EdgeColouring generate(const PlaneSpec& spec);

} // namespace tristar
