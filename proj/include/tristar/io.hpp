#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tristar/colouring.hpp"
#include "tristar/prover.hpp"

namespace tristar {

/// Malformed input, with 1-based line/column of the offending token
/// (0 when the problem is not tied to a position, e.g. premature EOF).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Colouring text format:
///
///   # optional comment lines, first character '#'
///   n m
///   c(0,1) c(0,2) ... c(0,n-1) c(1,2) ... c(n-2,n-1)
///
/// C(n,2) whitespace-separated integers in 1..m, row-major upper triangle.
/// Line breaks between tokens are free; trailing whitespace is ignored.
EdgeColouring read_colouring(std::istream& in, const std::string& source = "<input>");
EdgeColouring parse_colouring(const std::string& text, const std::string& source = "<input>");

/// Writes comment lines (each prefixed "# "), the header, then one line per
/// row i holding the colours of {i, i+1}..{i, n-1}.
void write_colouring(std::ostream& out, const EdgeColouring& colouring,
                     const std::vector<std::string>& comments = {});
std::string format_colouring(const EdgeColouring& colouring, const std::vector<std::string>& comments = {});

/// Certificate as one JSON object with fields in canonical order:
/// format_version, mode, n, r, bound{num,den}, colour, centres, vertices,
/// order, degenerate, trace{centres_U, order_U, leaf_u, delta}. leaf_u and
/// delta are null when U already met the bound.
std::string format_certificate(const TripleStarCertificate& cert);

struct ParsedCertificate {
    TripleStarCertificate cert;
    /// The serialized "order" field, checked against the vertex list on verify.
    int order_field = 0;
};

ParsedCertificate parse_certificate(const std::string& text, const std::string& source = "<certificate>");

} // namespace tristar
