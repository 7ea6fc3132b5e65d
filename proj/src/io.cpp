#include "tristar/io.hpp"

#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace tristar {

ParseError::ParseError(const std::string& source, int line, int column, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) + ":" + std::to_string(column) : "") + ": " +
                         message),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

/// Splits into whitespace-separated tokens, skipping lines whose first
/// character is '#'.
std::vector<Token> tokenize(const std::string& text)
{
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    bool line_start = true;
    bool in_comment = false;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            column = 1;
            line_start = true;
            in_comment = false;
            ++i;
            continue;
        }
        if (line_start && ch == '#')
            in_comment = true;
        line_start = false;
        if (in_comment || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v') {
            ++column;
            ++i;
            continue;
        }
        Token tok{{}, line, column};
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            tok.text.push_back(text[i]);
            ++i;
            ++column;
        }
        out.push_back(std::move(tok));
    }
    return out;
}

std::int64_t parse_int(const Token& tok, const std::string& source, const char* what)
{
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(source, tok.line, tok.column, std::string("expected ") + what + ", got '" + tok.text + "'");
    return value;
}

} // namespace

EdgeColouring parse_colouring(const std::string& text, const std::string& source)
{
    const auto tokens = tokenize(text);
    if (tokens.size() < 2)
        throw ParseError(source, 0, 0, "missing header line \"n m\"");
    const Token& tn = tokens[0];
    const Token& tm = tokens[1];
    if (tm.line != tn.line)
        throw ParseError(source, tn.line, tn.column, "header must hold both n and m on one line");
    if (tokens.size() > 2 && tokens[2].line == tn.line)
        throw ParseError(source, tokens[2].line, tokens[2].column, "unexpected token after header \"n m\"");

    const std::int64_t n = parse_int(tn, source, "vertex count n");
    const std::int64_t m = parse_int(tm, source, "colour count m");
    if (n < 2 || n > 1'000'000)
        throw ParseError(source, tn.line, tn.column, "n >= 2 required (got " + tn.text + ")");
    if (m < 1 || m > 65535)
        throw ParseError(source, tm.line, tm.column, "m must lie in 1..65535 (got " + tm.text + ")");

    const auto expected = static_cast<std::size_t>(edge_count(n));
    const std::size_t given = tokens.size() - 2;
    if (given < expected)
        throw ParseError(source, 0, 0,
                         "expected " + std::to_string(expected) + " edge colours, found " + std::to_string(given));
    if (given > expected) {
        const Token& extra = tokens[2 + expected];
        throw ParseError(source, extra.line, extra.column,
                         "unexpected token '" + extra.text + "' after " + std::to_string(expected) + " edge colours");
    }

    std::vector<Colour> colours(expected);
    for (std::size_t k = 0; k < expected; ++k) {
        const Token& tok = tokens[2 + k];
        const std::int64_t c = parse_int(tok, source, "edge colour");
        if (c < 1 || c > m)
            throw ParseError(source, tok.line, tok.column,
                             "label out of range: " + tok.text + " not in 1.." + std::to_string(m));
        colours[k] = static_cast<Colour>(c);
    }
    return {static_cast<int>(n), static_cast<int>(m), std::move(colours)};
}

EdgeColouring read_colouring(std::istream& in, const std::string& source)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_colouring(text, source);
}

void write_colouring(std::ostream& out, const EdgeColouring& colouring, const std::vector<std::string>& comments)
{
    for (const auto& line : comments)
        out << "# " << line << '\n';
    const int n = colouring.n();
    out << n << ' ' << colouring.m() << '\n';
    for (Vertex i = 0; i + 1 < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (j > i + 1)
                out << ' ';
            out << colouring.colour(i, j);
        }
        out << '\n';
    }
}

std::string format_colouring(const EdgeColouring& colouring, const std::vector<std::string>& comments)
{
    std::ostringstream os;
    write_colouring(os, colouring, comments);
    return os.str();
}

std::string format_certificate(const TripleStarCertificate& cert)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["format_version"] = cert.format_version;
    j["mode"] = to_string(cert.mode);
    j["n"] = cert.n;
    j["r"] = cert.r;
    j["bound"] = {{"num", cert.bound.num()}, {"den", cert.bound.den()}};
    j["colour"] = cert.witness.colour;
    j["centres"] = cert.witness.centres;
    j["vertices"] = cert.witness.vertices;
    j["order"] = cert.witness.order();
    j["degenerate"] = cert.witness.degenerate;
    ordered_json trace;
    trace["centres_U"] = cert.trace.centres_u;
    trace["order_U"] = cert.trace.order_u;
    trace["leaf_u"] = cert.trace.leaf_u ? ordered_json(*cert.trace.leaf_u) : ordered_json(nullptr);
    trace["delta"] = cert.trace.delta ? ordered_json(*cert.trace.delta) : ordered_json(nullptr);
    j["trace"] = std::move(trace);
    return j.dump() + "\n";
}

ParsedCertificate parse_certificate(const std::string& text, const std::string& source)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source, 0, 0, std::string("malformed JSON: ") + e.what());
    }
    try {
        ParsedCertificate out;
        auto& c = out.cert;
        c.format_version = j.at("format_version").get<int>();
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "global")
            c.mode = ProofMode::global;
        else if (mode == "local")
            c.mode = ProofMode::local;
        else
            throw ParseError(source, 0, 0, "unknown mode '" + mode + "'");
        c.n = j.at("n").get<int>();
        c.r = j.at("r").get<int>();
        c.bound = Rational(j.at("bound").at("num").get<std::int64_t>(), j.at("bound").at("den").get<std::int64_t>());
        const int colour = j.at("colour").get<int>();
        if (colour < 0 || colour > 65535)
            throw ParseError(source, 0, 0, "colour field out of range");
        c.witness.colour = static_cast<Colour>(colour);
        c.witness.centres = j.at("centres").get<std::vector<Vertex>>();
        c.witness.vertices = j.at("vertices").get<std::vector<Vertex>>();
        out.order_field = j.at("order").get<int>();
        c.witness.degenerate = j.at("degenerate").get<bool>();
        const auto& t = j.at("trace");
        c.trace.centres_u = t.at("centres_U").get<std::vector<Vertex>>();
        c.trace.order_u = t.at("order_U").get<int>();
        if (!t.at("leaf_u").is_null())
            c.trace.leaf_u = t.at("leaf_u").get<Vertex>();
        if (!t.at("delta").is_null())
            c.trace.delta = t.at("delta").get<int>();
        if (c.n >= 2 && c.r >= 1)
            c.a = c.bound - Rational(c.trace.order_u);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source, 0, 0, std::string("bad certificate field: ") + e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(source, 0, 0, std::string("bad certificate bound: ") + e.what());
    }
}

} // namespace tristar
