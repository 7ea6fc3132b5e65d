#include "tristar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tristar/analysis.hpp"
#include "tristar/explorer.hpp"
#include "tristar/generators.hpp"
#include "tristar/io.hpp"
#include "tristar/oracle.hpp"
#include "tristar/prover.hpp"

namespace tristar::cli {

namespace {

/// Bad input that should end the process with kUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string slurp(const std::string& path, Streams& io)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void emit(const std::string& path, const std::string& text, Streams& io)
{
    if (path == "-") {
        io.out << text;
        io.out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + path + "' for writing");
    file << text;
}

EdgeColouring load_colouring(const std::string& path, Streams& io)
{
    return parse_colouring(slurp(path, io), path == "-" ? "<stdin>" : path);
}

struct GenOptions {
    int q = 2;
    int mult = 1;
    int n = 2;
    int r = 1;
    std::uint64_t seed = 0;
    std::string out = "-";
};

struct AnalyzeOptions {
    std::string path;
    bool json = false;
    bool no_triple = false;
};

struct ProveOptions {
    std::string path;
    bool local = false;
    int r = 0;
    std::string cert;
};

struct VerifyOptions {
    std::string cert;
    std::string path;
};

struct ExhaustOptions {
    int n = 0;
    int r = 0;
    std::string mode = "triple";
    bool prove = false;
    int threads = 1;
    std::uint64_t budget = 100'000'000;
    bool json = false;
};

struct SearchOptions {
    int n = 0;
    int r = 0;
    std::string objective = "triple";
    std::int64_t iters = 100'000;
    std::uint64_t seed = 1;
    int restarts = 8;
    int threads = 1;
    bool json = false;
};

int cmd_gen(const std::string& kind, const GenOptions& o, Streams& io)
{
    EdgeColouring colouring;
    std::vector<std::string> comments;
    if (kind == "affine") {
        colouring = affine_colouring(o.q, o.mult);
        comments.push_back("affine plane q=" + std::to_string(o.q) + " mult=" + std::to_string(o.mult));
    } else if (kind == "projective") {
        colouring = projective_local_colouring(o.q, o.mult);
        comments.push_back("projective plane q=" + std::to_string(o.q) + " mult=" + std::to_string(o.mult) +
                           " locality=" + std::to_string(o.q + 1));
    } else if (kind == "random") {
        colouring = random_colouring(o.n, o.r, o.seed);
        comments.push_back("random splitmix64 n=" + std::to_string(o.n) + " r=" + std::to_string(o.r) +
                           " seed=" + std::to_string(o.seed));
    } else {
        colouring = constant_colouring(o.n, o.r);
        comments.push_back("constant n=" + std::to_string(o.n) + " r=" + std::to_string(o.r));
    }
    emit(o.out, format_colouring(colouring, comments), io);
    return kSuccess;
}

int cmd_analyze(const AnalyzeOptions& o, Streams& io)
{
    const auto colouring = load_colouring(o.path, io);
    const auto report = analyze(colouring, {!o.no_triple});
    io.out << (o.json ? to_json(report) : to_text(report));
    return kSuccess;
}

int cmd_prove(const ProveOptions& o, Streams& io)
{
    const auto colouring = load_colouring(o.path, io);
    if (o.local && o.r == 0)
        throw UsageError("--local requires --r R");
    const int r = o.r != 0 ? o.r : colouring.m();
    const ProofMode mode = o.local ? ProofMode::local : ProofMode::global;
    try {
        const auto cert = prove(ColourClassView(colouring), mode, r);
        emit(o.cert, format_certificate(cert), io);
        io.err << "triple star of order " << cert.order() << " >= " << cert.bound << " (colour " << cert.witness.colour
               << ")\n";
        return kSuccess;
    } catch (const TheoremViolation& e) {
        io.err << "THEOREM VIOLATION: " << e.what() << "\n" << format_colouring(e.colouring());
        return kFailure;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_verify(const VerifyOptions& o, Streams& io)
{
    if (o.cert == "-" && o.path == "-")
        throw UsageError("certificate and colouring cannot both be read from standard input");
    const auto parsed = parse_certificate(slurp(o.cert, io), o.cert == "-" ? "<stdin>" : o.cert);
    const auto colouring = load_colouring(o.path, io);
    const auto verdict = verify_certificate(colouring, parsed.cert, parsed.order_field);
    if (verdict) {
        io.out << "accept\n";
        return kSuccess;
    }
    io.out << "reject: " << to_string(*verdict.reason) << " (" << verdict.detail << ")\n";
    return kFailure;
}

int cmd_exhaust(const ExhaustOptions& o, Streams& io)
{
    const auto mode = oracle::parse_check_mode(o.mode);
    if (!mode)
        throw UsageError("unknown mode '" + o.mode + "'");
    oracle::ExhaustReport report;
    try {
        report = oracle::exhaustive_theorem_check(o.n, o.r, *mode, o.prove, o.threads, o.budget);
    } catch (const oracle::BudgetExceeded& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    io.out << (o.json ? to_json(report) : to_text(report));
    if (!o.json && !report.ok())
        for (const auto& v : report.violations)
            io.out << "violation: " << v;
    return report.ok() ? kSuccess : kFailure;
}

int cmd_search(const SearchOptions& o, Streams& io)
{
    const auto objective = explorer::parse_objective(o.objective);
    if (!objective)
        throw UsageError("unknown objective '" + o.objective + "'");
    explorer::SearchConfig config;
    config.n = o.n;
    config.r = o.r;
    config.objective = *objective;
    config.iterations = o.iters;
    config.seed = o.seed;
    config.restarts = o.restarts;
    config.threads = o.threads;
    try {
        explorer::validate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    explorer::SearchResult result;
    try {
        result = explorer::anneal(config);
    } catch (const TheoremViolation& e) {
        io.err << "THEOREM VIOLATION: " << e.what() << "\n" << format_colouring(e.colouring());
        return kFailure;
    }

    if (o.json) {
        nlohmann::ordered_json j;
        j["n"] = o.n;
        j["r"] = o.r;
        j["objective"] = o.objective;
        j["iterations"] = o.iters;
        j["seed"] = o.seed;
        j["restarts"] = o.restarts;
        j["best_objective"] = result.best_objective;
        j["best_restart"] = result.best_restart;
        j["ratio"] = {{"num", result.ratio.num()}, {"den", result.ratio.den()}};
        nlohmann::ordered_json log = nlohmann::ordered_json::array();
        for (const auto& e : result.log)
            log.push_back({{"restart", e.restart}, {"iteration", e.iteration}, {"best", e.best}});
        j["log"] = log;
        j["colouring"] = format_colouring(result.best_colouring);
        io.out << j.dump(2) << "\n";
        return kSuccess;
    }

    std::vector<std::string> summary{
        "search objective=" + o.objective + " n=" + std::to_string(o.n) + " r=" + std::to_string(o.r) +
            " iters=" + std::to_string(o.iters) + " seed=" + std::to_string(o.seed) +
            " restarts=" + std::to_string(o.restarts),
        "best objective " + std::to_string(result.best_objective) + " (restart " +
            std::to_string(result.best_restart) + "), ratio objective*(r-1)/n = " + result.ratio.str()};
    for (const auto& e : result.log)
        summary.push_back("log restart=" + std::to_string(e.restart) + " iteration=" + std::to_string(e.iteration) +
                          " best=" + std::to_string(e.best));
    io.out << format_colouring(result.best_colouring, summary);
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Streams io{in, out, err};
    CLI::App app{"Monochromatic double/triple stars in edge-coloured complete graphs", "tristar"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a colouring");
    gen->require_subcommand(1);
    GenOptions g;
    std::string gen_kind;
    auto* gen_affine = gen->add_subcommand("affine", "Affine-plane colouring (tight for the global bound)");
    gen_affine->add_option("--q", g.q, "Prime plane order")->required();
    gen_affine->add_option("--mult", g.mult, "Vertices per point")->required();
    gen_affine->add_option("--out", g.out, "Output path ('-' for stdout)");
    auto* gen_proj = gen->add_subcommand("projective", "Projective-plane local colouring");
    gen_proj->add_option("--q", g.q, "Prime plane order")->required();
    gen_proj->add_option("--mult", g.mult, "Vertices per point")->required();
    gen_proj->add_option("--out", g.out, "Output path ('-' for stdout)");
    auto* gen_random = gen->add_subcommand("random", "Uniform random colouring (SplitMix64)");
    gen_random->add_option("--n", g.n, "Vertex count")->required();
    gen_random->add_option("--r", g.r, "Colour count")->required();
    gen_random->add_option("--seed", g.seed, "Seed")->required();
    gen_random->add_option("--out", g.out, "Output path ('-' for stdout)");
    auto* gen_const = gen->add_subcommand("constant", "Every edge colour 1");
    gen_const->add_option("--n", g.n, "Vertex count")->required();
    gen_const->add_option("--r", g.r, "Declared colour count")->required();
    gen_const->add_option("--out", g.out, "Output path ('-' for stdout)");
    for (auto* sub : {gen_affine, gen_proj, gen_random, gen_const})
        sub->callback([&gen_kind, sub] { gen_kind = sub->get_name(); });

    AnalyzeOptions a;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report components, stars and known bounds");
    analyze_cmd->add_option("path", a.path, "Colouring file ('-' for stdin)")->required();
    analyze_cmd->add_flag("--json", a.json, "Structured output");
    analyze_cmd->add_flag("--no-triple", a.no_triple, "Skip the triple-star search");

    ProveOptions p;
    auto* prove_cmd = app.add_subcommand("prove", "Produce a triple-star certificate");
    prove_cmd->add_option("path", p.path, "Colouring file ('-' for stdin)")->required();
    prove_cmd->add_flag("--local", p.local, "Local mode (requires --r)");
    prove_cmd->add_option("--r", p.r, "Colour count (global) or locality (local); default m");
    prove_cmd->add_option("--cert", p.cert, "Certificate output path ('-' for stdout)")->required();

    VerifyOptions v;
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a colouring");
    verify_cmd->add_option("--cert", v.cert, "Certificate path ('-' for stdin)")->required();
    verify_cmd->add_option("path", v.path, "Colouring file ('-' for stdin)")->required();

    ExhaustOptions x;
    auto* exhaust_cmd = app.add_subcommand("exhaust", "Check every colouring of K_n up to relabelling");
    exhaust_cmd->add_option("--n", x.n, "Vertex count")->required();
    exhaust_cmd->add_option("--r", x.r, "Colour count")->required();
    exhaust_cmd->add_option("--mode", x.mode, "triple|double|component")->required();
    exhaust_cmd->add_flag("--prove", x.prove, "Prove and verify a certificate per colouring");
    exhaust_cmd->add_option("--threads", x.threads, "Worker threads");
    exhaust_cmd->add_option("--budget", x.budget, "Maximum number of colourings");
    exhaust_cmd->add_flag("--json", x.json, "Structured output");

    SearchOptions s;
    auto* search_cmd = app.add_subcommand("search", "Simulated annealing towards small monochromatic objects");
    search_cmd->add_option("--n", s.n, "Vertex count")->required();
    search_cmd->add_option("--r", s.r, "Colour count")->required();
    search_cmd->add_option("--objective", s.objective, "double|triple|component")->required();
    search_cmd->add_option("--iters", s.iters, "Iterations per restart")->required();
    search_cmd->add_option("--seed", s.seed, "Seed")->required();
    search_cmd->add_option("--restarts", s.restarts, "Independent restarts");
    search_cmd->add_option("--threads", s.threads, "Worker threads");
    search_cmd->add_flag("--json", s.json, "Structured output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, g, io);
        if (analyze_cmd->parsed())
            return cmd_analyze(a, io);
        if (prove_cmd->parsed())
            return cmd_prove(p, io);
        if (verify_cmd->parsed())
            return cmd_verify(v, io);
        if (exhaust_cmd->parsed())
            return cmd_exhaust(x, io);
        if (search_cmd->parsed())
            return cmd_search(s, io);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

} // namespace tristar::cli
