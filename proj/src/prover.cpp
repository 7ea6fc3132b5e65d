#include "tristar/prover.hpp"

#include <algorithm>
#include <set>

namespace tristar {

std::string to_string(ProofMode mode) { return mode == ProofMode::global ? "global" : "local"; }

std::string to_string(RejectReason reason)
{
    switch (reason) {
    case RejectReason::format_version: return "unsupported format version";
    case RejectReason::size_mismatch: return "vertex count mismatch";
    case RejectReason::r_too_small: return "r below 3";
    case RejectReason::bound_mismatch: return "bound formula mismatch";
    case RejectReason::mode_precondition: return "colouring does not satisfy mode precondition";
    case RejectReason::colour_out_of_range: return "colour out of range";
    case RejectReason::malformed_vertices: return "malformed vertex list";
    case RejectReason::order_field_mismatch: return "order field mismatch";
    case RejectReason::malformed_centres: return "malformed centres";
    case RejectReason::edge_colour_mismatch: return "edge colour mismatch";
    case RejectReason::degenerate_not_allowed: return "degenerate witness not allowed";
    case RejectReason::order_below_bound: return "order below bound";
    case RejectReason::diameter_exceeded: return "diameter exceeds 4";
    }
    return "unknown";
}

Rational theorem_bound(ProofMode mode, int n, int r)
{
    return mode == ProofMode::global ? global_bound(n, r) : local_bound(n, r);
}

namespace {

void check_r(int r)
{
    if (r < 3)
        throw std::invalid_argument("theorem requires r >= 3 (got r = " + std::to_string(r) + ")");
}

TripleStarCertificate run_proof(const ColourClassView& view, ProofMode mode, int r)
{
    const int n = view.n();
    TripleStarCertificate cert;
    cert.mode = mode;
    cert.n = n;
    cert.r = r;
    cert.bound = theorem_bound(mode, n, r);
    const std::int64_t target = cert.bound.ceil();

    const DoubleStar u_star = max_double_star(view);
    const Colour c = u_star.colour;
    cert.trace.centres_u = {u_star.x, u_star.y};
    cert.trace.order_u = u_star.order();
    cert.a = cert.bound - Rational(u_star.order());
    cert.witness.colour = c;

    if (u_star.order() >= target) {
        if (u_star.order() == 2) {
            cert.witness.centres = {u_star.x, u_star.y};
            cert.witness.vertices = {u_star.x, u_star.y};
            cert.witness.degenerate = true;
        } else {
            // grow the first leaf into the third centre; the union only gets larger
            Vertex leaf = -1;
            for (Vertex v : u_star.vertices)
                if (v != u_star.x && v != u_star.y) {
                    leaf = v;
                    break;
                }
            const bool on_x = view.colour(u_star.x, leaf) == c;
            cert.witness = on_x ? make_triple_star(view, c, u_star.y, u_star.x, leaf)
                                : make_triple_star(view, c, u_star.x, u_star.y, leaf);
        }
    } else {
        VertexSet in_u(n);
        for (Vertex v : u_star.vertices)
            in_u.insert(v);
        auto outward = [&](Vertex v) {
            VertexSet out = view.neighbours(c, v);
            out.subtract(in_u);
            return out.count();
        };

        // U is N_c(x) ∪ N_c(y), so the centres cannot reach outside it
        if (outward(u_star.x) != 0 || outward(u_star.y) != 0)
            throw std::logic_error("prover: centre of the maximum double star has an outward edge");

        Vertex best_leaf = -1;
        int best_delta = -1;
        for (Vertex v : u_star.vertices) {
            if (v == u_star.x || v == u_star.y)
                continue;
            const int delta = outward(v);
            if (delta > best_delta) {
                best_delta = delta;
                best_leaf = v;
            }
        }
        if (best_leaf < 0 || Rational(best_delta) < cert.a)
            throw TheoremViolation("no leaf of the maximum double star extends it to " + cert.bound.str() +
                                       " vertices (|U| = " + std::to_string(u_star.order()) + ")",
                                   view.colouring());

        cert.trace.leaf_u = best_leaf;
        cert.trace.delta = best_delta;
        const bool on_x = view.colour(u_star.x, best_leaf) == c;
        const Vertex middle = on_x ? u_star.x : u_star.y;
        const Vertex other = on_x ? u_star.y : u_star.x;
        cert.witness = make_triple_star(view, c, other, middle, best_leaf);
        if (cert.witness.order() != u_star.order() + best_delta)
            throw std::logic_error("prover: witness order differs from |U| + delta");
    }

    if (cert.witness.order() < target)
        throw TheoremViolation("witness of order " + std::to_string(cert.witness.order()) + " below bound " +
                                   cert.bound.str(),
                               view.colouring());
    return cert;
}

} // namespace

TripleStarCertificate prove(const ColourClassView& view, ProofMode mode, int r)
{
    check_r(r);
    if (mode == ProofMode::global) {
        const int used = view.colouring().colours_used();
        if (used > r)
            throw std::invalid_argument("colouring uses " + std::to_string(used) + " colours, more than r = " +
                                        std::to_string(r));
    } else {
        const auto report = locality(view.colouring());
        if (auto v = report.first_exceeding(r))
            throw std::invalid_argument("locality violated: vertex " + std::to_string(*v) + " sees " +
                                        std::to_string(report.incident[static_cast<std::size_t>(*v)].size()) +
                                        " colours, more than r = " + std::to_string(r));
    }
    return run_proof(view, mode, r);
}

TripleStarCertificate prove_global(const ColourClassView& view, int r) { return prove(view, ProofMode::global, r); }
TripleStarCertificate prove_global(const EdgeColouring& colouring, int r)
{
    return prove_global(ColourClassView(colouring), r);
}
TripleStarCertificate prove_local(const ColourClassView& view, int r) { return prove(view, ProofMode::local, r); }
TripleStarCertificate prove_local(const EdgeColouring& colouring, int r)
{
    return prove_local(ColourClassView(colouring), r);
}

Verdict verify_certificate(const EdgeColouring& colouring, const TripleStarCertificate& cert,
                           std::optional<int> order_field)
{
    using R = RejectReason;
    if (cert.format_version != TripleStarCertificate::kFormatVersion)
        return Verdict::reject(R::format_version, "format_version " + std::to_string(cert.format_version));
    if (!validate(colouring).ok())
        return Verdict::reject(R::size_mismatch, "colouring is invalid: " + validate(colouring).summary());
    const int n = colouring.n();
    if (cert.n != n)
        return Verdict::reject(R::size_mismatch,
                               "certificate n = " + std::to_string(cert.n) + ", colouring n = " + std::to_string(n));
    if (cert.r < 3)
        return Verdict::reject(R::r_too_small, "r = " + std::to_string(cert.r));
    const Rational expected = theorem_bound(cert.mode, n, cert.r);
    if (cert.bound != expected)
        return Verdict::reject(R::bound_mismatch, "bound " + cert.bound.str() + ", expected " + expected.str());

    if (cert.mode == ProofMode::global) {
        if (colouring.colours_used() > cert.r)
            return Verdict::reject(R::mode_precondition, "colouring uses more than r colours");
    } else if (locality(colouring).locality > cert.r) {
        return Verdict::reject(R::mode_precondition, "colouring is not locally r-coloured");
    }

    const TripleStar& w = cert.witness;
    if (w.colour < 1 || static_cast<int>(w.colour) > colouring.m())
        return Verdict::reject(R::colour_out_of_range, "colour " + std::to_string(w.colour));

    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (w.vertices[i] < 0 || w.vertices[i] >= n)
            return Verdict::reject(R::malformed_vertices, "vertex " + std::to_string(w.vertices[i]) + " out of range");
        if (i > 0 && w.vertices[i] <= w.vertices[i - 1])
            return Verdict::reject(R::malformed_vertices, "vertices not strictly increasing");
    }
    const int order = static_cast<int>(w.vertices.size());
    if (order_field && *order_field != order)
        return Verdict::reject(R::order_field_mismatch, "order field " + std::to_string(*order_field) +
                                                             ", vertex list has " + std::to_string(order));

    const std::size_t want_centres = w.degenerate ? 2 : 3;
    if (w.centres.size() != want_centres)
        return Verdict::reject(R::malformed_centres, "expected " + std::to_string(want_centres) + " centres");
    std::set<Vertex> distinct(w.centres.begin(), w.centres.end());
    if (distinct.size() != want_centres)
        return Verdict::reject(R::malformed_centres, "centres not distinct");
    for (Vertex c : w.centres)
        if (!std::binary_search(w.vertices.begin(), w.vertices.end(), c))
            return Verdict::reject(R::malformed_centres, "centre " + std::to_string(c) + " not in vertex set");

    // the path of centres: u - x - w, or the single edge when degenerate
    const Vertex middle = w.centres[w.degenerate ? 0 : 1];
    for (Vertex c : w.centres) {
        if (c == middle)
            continue;
        if (colouring.colour(middle, c) != w.colour)
            return Verdict::reject(R::edge_colour_mismatch, "centre edge {" + std::to_string(middle) + "," +
                                                                std::to_string(c) + "} is not colour " +
                                                                std::to_string(w.colour));
    }
    for (Vertex v : w.vertices) {
        if (distinct.count(v))
            continue;
        bool attached = false;
        for (Vertex c : w.centres)
            attached = attached || colouring.colour(v, c) == w.colour;
        if (!attached)
            return Verdict::reject(R::edge_colour_mismatch,
                                   "vertex " + std::to_string(v) + " has no colour-" + std::to_string(w.colour) +
                                       " edge to a centre");
    }

    if (w.degenerate && expected.ceil() > 2)
        return Verdict::reject(R::degenerate_not_allowed, "degenerate witness used for bound " + expected.str());
    if (order < expected.ceil())
        return Verdict::reject(R::order_below_bound,
                               "order " + std::to_string(order) + " < ceil(" + expected.str() + ")");

    const auto diameter = subgraph_diameter(colouring, w.colour, w.vertices);
    if (!diameter || *diameter > 4)
        return Verdict::reject(R::diameter_exceeded,
                               diameter ? "diameter " + std::to_string(*diameter) : "witness disconnected");
    return Verdict::accept();
}

} // namespace tristar
