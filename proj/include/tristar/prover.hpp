#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tristar/colouring.hpp"
#include "tristar/rational.hpp"
#include "tristar/stars.hpp"

namespace tristar {

enum class ProofMode { global, local };

std::string to_string(ProofMode mode);

/// Thrown when a run produces a triple star below the guaranteed bound.
/// Carries the offending colouring so the case can be replayed.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(const std::string& what, EdgeColouring colouring)
        : std::runtime_error(what), colouring_(std::move(colouring))
    {
    }
    const EdgeColouring& colouring() const { return colouring_; }

private:
    EdgeColouring colouring_;
};

/// How the witness was obtained: the maximum double star U and, when U was
/// too small on its own, the leaf whose outward colour-c edges extend it.
struct ProofTrace {
    std::vector<Vertex> centres_u;
    int order_u = 0;
    std::optional<Vertex> leaf_u;
    std::optional<int> delta;
};

struct TripleStarCertificate {
    static constexpr int kFormatVersion = 1;

    int format_version = kFormatVersion;
    ProofMode mode = ProofMode::global;
    int n = 0;
    int r = 0;
    Rational bound;
    TripleStar witness;
    /// bound - |U|; positive exactly when the extension step ran.
    Rational a;
    ProofTrace trace;

    int order() const { return witness.order(); }
    std::int64_t target() const { return bound.ceil(); }
};

/// n/(r-1) for global mode, rn/(r^2-r+1) for local mode.
Rational theorem_bound(ProofMode mode, int n, int r);

/// Triple star on at least n/(r-1) vertices in an r-colouring, r >= 3.
TripleStarCertificate prove_global(const EdgeColouring& colouring, int r);
TripleStarCertificate prove_global(const ColourClassView& view, int r);

/// Triple star on at least rn/(r^2-r+1) vertices in a local r-colouring, r >= 3.
TripleStarCertificate prove_local(const EdgeColouring& colouring, int r);
TripleStarCertificate prove_local(const ColourClassView& view, int r);

TripleStarCertificate prove(const ColourClassView& view, ProofMode mode, int r);

enum class RejectReason {
    format_version,
    size_mismatch,
    r_too_small,
    bound_mismatch,
    mode_precondition,
    colour_out_of_range,
    malformed_vertices,
    order_field_mismatch,
    malformed_centres,
    edge_colour_mismatch,
    degenerate_not_allowed,
    order_below_bound,
    diameter_exceeded,
};

std::string to_string(RejectReason reason);

struct Verdict {
    bool accepted = true;
    std::optional<RejectReason> reason;
    std::string detail;

    static Verdict accept() { return {}; }
    static Verdict reject(RejectReason why, std::string detail) { return {false, why, std::move(detail)}; }
    explicit operator bool() const { return accepted; }
};

/// Re-checks a certificate against the colouring from scratch. The trace is
/// never consulted. `order_field` is the order recorded in a serialized
/// certificate; when absent, the vertex count is used.
Verdict verify_certificate(const EdgeColouring& colouring, const TripleStarCertificate& cert,
                           std::optional<int> order_field = std::nullopt);

} // namespace tristar
